#include "tlteach/semantics.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace tlteach {

Evaluator::Evaluator(const StateDomain& d, const Formula& f) {
  compile(d, is_normalized(f) ? f : normalize(f));
}

int Evaluator::compile(const StateDomain& d, const Formula& f) {
  Node n{f.op()};
  switch (f.op()) {
    case Op::True:
      n.op = Op::Atom;
      n.mask = d.all_states();
      break;
    case Op::Atom:
      n.mask = d.atom_mask(f.predicate());
      break;
    case Op::Not:
      n.a = compile(d, f.child());
      break;
    case Op::And:
      n.a = compile(d, f.lhs());
      n.b = compile(d, f.rhs());
      break;
    case Op::Eventually:
    case Op::Always:
      n.tau = f.tau();
      n.a = compile(d, f.child());
      break;
    case Op::Or:
    case Op::Implies:
      throw std::logic_error("evaluator received a non-normalized formula");
  }
  nodes_.push_back(n);
  return static_cast<int>(nodes_.size()) - 1;
}

void Evaluator::table(const Trajectory& rho, std::vector<std::uint8_t>& s,
                      std::vector<std::uint8_t>& w) const {
  const std::size_t L = rho.size();
  const std::size_t width = L + 1;  // slot L stands for every t >= L
  s.assign(nodes_.size() * width, 0);
  w.assign(nodes_.size() * width, 0);
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const Node& n = nodes_[k];
    std::uint8_t* S = &s[k * width];
    std::uint8_t* W = &w[k * width];
    for (std::size_t t = 0; t <= L; ++t) {
      switch (n.op) {
        case Op::Atom:
          if (t < L) {
            S[t] = W[t] = static_cast<std::uint8_t>((n.mask >> rho[t]) & 1U);
          } else {
            S[t] = 0;
            W[t] = 1;
          }
          break;
        case Op::Not:
          S[t] = !w[static_cast<std::size_t>(n.a) * width + t];
          W[t] = !s[static_cast<std::size_t>(n.a) * width + t];
          break;
        case Op::And:
          S[t] = s[n.a * width + t] && s[n.b * width + t];
          W[t] = w[n.a * width + t] && w[n.b * width + t];
          break;
        case Op::Eventually:
        case Op::Always: {
          const std::size_t end = n.tau >= L - t ? L : t + n.tau;
          const std::uint8_t* cs = &s[n.a * width];
          const std::uint8_t* cw = &w[n.a * width];
          const bool any = n.op == Op::Eventually;
          bool vs = !any, vw = !any;
          for (std::size_t u = t; u <= end; ++u) {
            if (any) {
              vs = vs || cs[u];
              vw = vw || cw[u];
            } else {
              vs = vs && cs[u];
              vw = vw && cw[u];
            }
          }
          S[t] = vs;
          W[t] = vw;
          break;
        }
        default:
          break;
      }
    }
  }
}

bool Evaluator::strong(const Trajectory& rho, std::uint64_t t) const {
  std::vector<std::uint8_t> s, w;
  table(rho, s, w);
  const std::size_t width = rho.size() + 1;
  return s[(nodes_.size() - 1) * width + std::min<std::uint64_t>(t, rho.size())];
}

bool Evaluator::weak(const Trajectory& rho, std::uint64_t t) const {
  std::vector<std::uint8_t> s, w;
  table(rho, s, w);
  const std::size_t width = rho.size() + 1;
  return w[(nodes_.size() - 1) * width + std::min<std::uint64_t>(t, rho.size())];
}

Verdict Evaluator::verdict(const Trajectory& rho) const {
  std::vector<std::uint8_t> s, w;
  table(rho, s, w);
  const std::size_t root = (nodes_.size() - 1) * (rho.size() + 1);
  if (s[root]) return Verdict::Satisfied;
  if (!w[root]) return Verdict::Violated;
  return Verdict::Undetermined;
}

bool strong_sat(const StateDomain& d, const Trajectory& rho, std::uint64_t t, const Formula& f) {
  return Evaluator(d, f).strong(rho, t);
}

bool weak_sat(const StateDomain& d, const Trajectory& rho, std::uint64_t t, const Formula& f) {
  return Evaluator(d, f).weak(rho, t);
}

Verdict verdict(const StateDomain& d, const Formula& f, const Trajectory& rho) {
  return Evaluator(d, f).verdict(rho);
}

void require_valid(const StateDomain& d, const Demonstration& demo, const Formula& target) {
  const Verdict want = demo.label == DemoLabel::Positive ? Verdict::Satisfied : Verdict::Violated;
  if (verdict(d, target, demo.trajectory) != want) {
    throw MalformedDemonstration("demonstration " + format_trajectory(demo.trajectory, d) +
                                 " with label " + std::to_string(to_int(demo.label)) +
                                 " does not match target " + render(target));
  }
}

bool strongly_inconsistent(const StateDomain& d, const Demonstration& demo, const Formula& target,
                           const Formula& f) {
  require_valid(d, demo, target);
  const Verdict v = verdict(d, f, demo.trajectory);
  return demo.label == DemoLabel::Positive ? v == Verdict::Violated : v == Verdict::Satisfied;
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct FlatShape {
  bool eventually;
  std::uint64_t tau;
  std::size_t atom;  // index into the distinct-mask table
};

}  // namespace

std::vector<std::vector<bool>> implies_matrix(const std::vector<Formula>& fs, const StateDomain& d,
                                              std::uint64_t l_bound, std::uint64_t node_limit) {
  const std::size_t n = fs.size();
  std::vector<StateMask> masks;
  std::vector<std::optional<FlatShape>> flat(n);
  std::vector<std::optional<Evaluator>> generic(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (auto g = grid_shape(fs[i])) {
      const StateMask m = d.atom_mask(g->atom);
      auto it = std::find(masks.begin(), masks.end(), m);
      const auto idx = static_cast<std::size_t>(it - masks.begin());
      if (it == masks.end()) masks.push_back(m);
      flat[i] = FlatShape{g->op == Op::Eventually, g->tau, idx};
    } else {
      generic[i].emplace(d, fs[i]);
    }
  }
  // States that no formula can tell apart are enumerated once.
  std::vector<State> reps;
  const bool any_generic =
      std::any_of(generic.begin(), generic.end(), [](const auto& g) { return g.has_value(); });
  std::set<std::vector<bool>> seen;
  for (std::size_t s = 0; s < d.size(); ++s) {
    std::vector<bool> sig;
    for (StateMask m : masks) sig.push_back((m >> s) & 1U);
    if (any_generic || seen.insert(sig).second) reps.push_back(static_cast<State>(s));
  }

  const std::size_t words = (n + 63) / 64;
  std::set<std::vector<std::uint64_t>> patterns;
  std::uint64_t nodes = 0;
  Trajectory rho;
  std::vector<std::vector<std::uint64_t>> first_true(l_bound + 1, std::vector<std::uint64_t>(masks.size(), kNone));
  std::vector<std::vector<std::uint64_t>> first_false = first_true;

  auto record = [&](std::size_t L) {
    std::vector<std::uint64_t> bits(words, 0);
    for (std::size_t i = 0; i < n; ++i) {
      bool sat;
      if (flat[i]) {
        const auto& f = *flat[i];
        if (f.eventually) {
          sat = first_true[L][f.atom] <= f.tau;
        } else {
          sat = L - 1 >= f.tau && first_false[L][f.atom] > f.tau;
        }
      } else {
        sat = generic[i]->strong(rho, 0);
      }
      if (sat) bits[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    patterns.insert(std::move(bits));
  };

  auto dfs = [&](auto&& self, std::size_t depth) -> void {
    if (depth == l_bound) return;
    for (State s : reps) {
      if (++nodes > node_limit) throw BudgetExceeded("implication enumeration exceeded node limit");
      rho.push_back(s);
      for (std::size_t m = 0; m < masks.size(); ++m) {
        const bool in = (masks[m] >> s) & 1U;
        first_true[depth + 1][m] = first_true[depth][m] != kNone ? first_true[depth][m] : (in ? depth : kNone);
        first_false[depth + 1][m] =
            first_false[depth][m] != kNone ? first_false[depth][m] : (in ? kNone : depth);
      }
      record(depth + 1);
      self(self, depth + 1);
      rho.pop_back();
    }
  };
  dfs(dfs, 0);

  std::vector<std::vector<bool>> out(n, std::vector<bool>(n, true));
  for (const auto& p : patterns) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!((p[i / 64] >> (i % 64)) & 1U)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!((p[j / 64] >> (j % 64)) & 1U)) out[i][j] = false;
      }
    }
  }
  return out;
}

bool implies_bruteforce(const Formula& f1, const Formula& f2, const StateDomain& d,
                        std::uint64_t l_bound, std::uint64_t node_limit) {
  if (f1 == f2) return true;
  return implies_matrix({f1, f2}, d, l_bound, node_limit)[0][1];
}

}  // namespace tlteach
