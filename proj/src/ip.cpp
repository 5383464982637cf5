#include "tlteach/ip.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "tlteach/semantics.hpp"

namespace tlteach {

IpInstance build_ip(IpVariant variant, const IdList& preferred, const Problem& p, const Formula& target,
                    std::uint64_t length) {
  const DemoLabel l = label_of(variant);
  const std::uint64_t need = minimal_length(target, l);
  if (length < 1 || length < need) {
    throw InfeasibleByLength("length " + std::to_string(length) + " is below the minimal length " +
                             std::to_string(need) + " of " + render(target));
  }
  IpInstance inst;
  inst.variant = variant;
  inst.target = target;
  inst.length = length;
  inst.domain = p.domain();
  for (std::size_t id : preferred) {
    if (id == p.target_id() || p.formula(id) == target) continue;
    inst.candidates.push_back({id, p.formula(id)});
  }
  return inst;
}

IpInstance inject_constraints(IpInstance inst, const StateDomain& d) {
  inst.transitions = d.relation();
  return inst;
}

bool check_solution(const IpInstance& inst, const Trajectory& rho, IdList* eliminated) {
  if (rho.size() != inst.length) return false;
  for (std::size_t t = 0; t < rho.size(); ++t) {
    if (rho[t] >= inst.domain.size()) return false;
    if (t == 0 && inst.start_states && !((inst.start_states >> rho[0]) & 1U)) return false;
    if (t > 0 && !inst.transitions.empty() && !((inst.transitions[rho[t - 1]] >> rho[t]) & 1U)) {
      return false;
    }
  }
  const bool pos = inst.variant == IpVariant::Pos;
  const Verdict want = pos ? Verdict::Satisfied : Verdict::Violated;
  const Verdict kill = pos ? Verdict::Violated : Verdict::Satisfied;
  if (verdict(inst.domain, inst.target, rho) != want) return false;
  for (const auto& f : inst.protect) {
    if (verdict(inst.domain, f, rho) == kill) return false;
  }
  if (eliminated) {
    eliminated->clear();
    for (const auto& c : inst.candidates) {
      if (verdict(inst.domain, c.formula, rho) == kill) eliminated->push_back(c.id);
    }
  }
  return true;
}

namespace {

// Kleene values.
constexpr std::uint8_t KF = 0, KT = 1, KU = 2;
inline std::uint8_t knot(std::uint8_t a) { return a == KU ? KU : static_cast<std::uint8_t>(a ^ 1U); }
inline std::uint8_t kand(std::uint8_t a, std::uint8_t b) {
  if (a == KF || b == KF) return KF;
  return (a == KT && b == KT) ? KT : KU;
}
inline std::uint8_t kor(std::uint8_t a, std::uint8_t b) {
  if (a == KT || b == KT) return KT;
  return (a == KF && b == KF) ? KF : KU;
}

constexpr int kNeg = -(1 << 30);

bool temporal_free(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::Atom:
      return true;
    case Op::Not:
      return temporal_free(f.child());
    case Op::And:
      return temporal_free(f.lhs()) && temporal_free(f.rhs());
    default:
      return false;
  }
}

StateMask state_mask(const StateDomain& d, const Formula& f) {
  switch (f.op()) {
    case Op::True:
      return d.all_states();
    case Op::Atom:
      return d.atom_mask(f.predicate());
    case Op::Not:
      return d.all_states() & ~state_mask(d, f.child());
    case Op::And:
      return state_mask(d, f.lhs()) & state_mask(d, f.rhs());
    default:
      throw std::logic_error("state_mask on a temporal formula");
  }
}

// Value of a temporal-free formula at a position past the end of the trajectory.
bool beyond_value(const Formula& f, bool strong) {
  switch (f.op()) {
    case Op::True:
    case Op::Atom:
      return !strong;
    case Op::Not:
      return !beyond_value(f.child(), !strong);
    case Op::And:
      return beyond_value(f.lhs(), strong) && beyond_value(f.rhs(), strong);
    default:
      throw std::logic_error("beyond_value on a temporal formula");
  }
}

// F/G over a state predicate, evaluated at t = 0. `hit` records a witness in the
// known part of the window: a satisfying state for F, a violating one for G.
struct Item {
  bool exists;
  std::uint64_t tau;
  StateMask beta;
  bool beyond_s;
  bool beyond_w;

  auto key() const { return std::tie(exists, tau, beta, beyond_s, beyond_w); }
  bool operator<(const Item& o) const { return key() < o.key(); }
};

struct KNode {
  Op op;
  StateMask mask = 0;
  std::uint64_t tau = 0;
  int a = -1;
  int b = -1;
};

// Full three-valued evaluation of a formula with nested temporal operators.
struct KProgram {
  std::vector<KNode> nodes;

  int compile(const StateDomain& d, const Formula& f) {
    KNode n{f.op()};
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
      default:
        break;
    }
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }

  // Root values (strong, weak) at t = 0 for a prefix of length k out of L.
  std::pair<std::uint8_t, std::uint8_t> eval(const State* prefix, std::size_t k, std::size_t L,
                                             StateMask all, std::vector<std::uint8_t>& s,
                                             std::vector<std::uint8_t>& w) const {
    const std::size_t width = L + 1;
    s.assign(nodes.size() * width, KF);
    w.assign(nodes.size() * width, KF);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const KNode& n = nodes[i];
      std::uint8_t* S = &s[i * width];
      std::uint8_t* W = &w[i * width];
      for (std::size_t t = 0; t <= L; ++t) {
        switch (n.op) {
          case Op::Atom:
            if (t < k) {
              S[t] = W[t] = ((n.mask >> prefix[t]) & 1U) ? KT : KF;
            } else if (t < L) {
              const std::uint8_t v = (n.mask & all) == all ? KT : (n.mask & all) == 0 ? KF : KU;
              S[t] = W[t] = v;
            } else {
              S[t] = KF;
              W[t] = KT;
            }
            break;
          case Op::Not:
            S[t] = knot(w[n.a * width + t]);
            W[t] = knot(s[n.a * width + t]);
            break;
          case Op::And:
            S[t] = kand(s[n.a * width + t], s[n.b * width + t]);
            W[t] = kand(w[n.a * width + t], w[n.b * width + t]);
            break;
          case Op::Eventually:
          case Op::Always: {
            const std::size_t end = n.tau >= L - t ? L : t + n.tau;
            const bool any = n.op == Op::Eventually;
            std::uint8_t vs = any ? KF : KT, vw = vs;
            for (std::size_t u = t; u <= end; ++u) {
              vs = any ? kor(vs, s[n.a * width + u]) : kand(vs, s[n.a * width + u]);
              vw = any ? kor(vw, w[n.a * width + u]) : kand(vw, w[n.a * width + u]);
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
    const std::size_t root = (nodes.size() - 1) * width;
    return {s[root], w[root]};
  }
};

struct CNode {
  enum class Kind : std::uint8_t { True, Not, And, Item, Generic } kind;
  int a = -1;
  int b = -1;
};

struct Tracked {
  enum class Role : std::uint8_t { Candidate, Target, Protect } role;
  std::size_t candidate = 0;
  std::vector<CNode> circuit;  // root last
  bool strong_view = true;     // which view decides this formula
  std::uint8_t decisive = KT;  // candidate: value that eliminates; others: required value
  std::vector<std::size_t> items;
};

using Key = std::vector<std::uint64_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : k) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct MemoEntry {
  bool exact;
  int value;
  std::vector<State> suffix;
};

class Search {
 public:
  Search(const IpInstance& inst, const SolverBudget& budget) : inst_(inst), budget_(budget) {
    L_ = inst.length;
    all_ = inst.domain.all_states();
    const bool pos = inst.variant == IpVariant::Pos;
    const DemoLabel l = label_of(inst.variant);

    auto add = [&](const Formula& raw, Tracked::Role role, std::size_t cand) {
      Tracked t;
      t.role = role;
      t.candidate = cand;
      switch (role) {
        case Tracked::Role::Candidate:
          t.strong_view = !pos;
          t.decisive = pos ? KF : KT;
          break;
        case Tracked::Role::Target:
          t.strong_view = pos;
          t.decisive = pos ? KT : KF;
          break;
        case Tracked::Role::Protect:
          t.strong_view = !pos;
          t.decisive = pos ? KT : KF;
          break;
      }
      const Formula f = normalize(raw);
      compile(f, t);
      tracked_.push_back(std::move(t));
    };
    add(inst.target, Tracked::Role::Target, 0);
    for (const auto& f : inst.protect) add(f, Tracked::Role::Protect, 0);
    for (std::size_t c = 0; c < inst.candidates.size(); ++c) {
      // A candidate that needs more than L steps for the opposite verdict stays alive.
      if (minimal_length(inst.candidates[c].formula, -l) > L_) continue;
      add(inst.candidates[c].formula, Tracked::Role::Candidate, c);
    }
    item_words_ = (items_.size() + 63) / 64;
    open_words_ = (tracked_.size() + 63) / 64;
    item_masks_.assign(tracked_.size(), std::vector<std::uint64_t>(item_words_, 0));
    for (std::size_t i = 0; i < tracked_.size(); ++i) {
      for (auto it : tracked_[i].items) item_masks_[i][it / 64] |= std::uint64_t{1} << (it % 64);
    }
    use_memo_ = generics_.empty();
    choose_branch_states();

    hits_.assign(L_ + 1, std::vector<std::uint64_t>(item_words_, 0));
    open_.assign(L_ + 1, std::vector<std::uint64_t>(open_words_, 0));
    gain_to_.assign(L_ + 1, 0);
    path_.assign(L_, 0);
    suffix_.assign(L_ + 1, {});
    for (std::size_t i = 0; i < tracked_.size(); ++i) open_[0][i / 64] |= std::uint64_t{1} << (i % 64);
    start_ = std::chrono::steady_clock::now();
  }

  IpSolution run(std::optional<std::int64_t> beat) {
    IpSolution sol;
    const int need = beat ? static_cast<int>(std::max<std::int64_t>(*beat, kNeg / 2)) : -1;
    const int root_gain = advance(0);
    if (root_gain == kNeg) {
      sol.nodes = nodes_;
      return sol;
    }
    gain_to_[0] = root_gain;
    incumbent_value_ = need;
    bool exact = false;
    int v = explore(0, need - root_gain, exact);
    sol.nodes = nodes_;
    sol.budget_exhausted = aborted_;
    Trajectory rho;
    if (!aborted_ && exact) {
      rho = suffix_[0];
      (void)v;
    } else if (aborted_ && !incumbent_.empty()) {
      rho = incumbent_;
    } else {
      return sol;
    }
    IdList elim;
    if (!check_solution(inst_, rho, &elim)) throw std::logic_error("solver produced an invalid trajectory");
    sol.feasible = true;
    sol.improved = true;
    sol.trajectory = std::move(rho);
    sol.eliminated = std::move(elim);
    sol.kappa = sol.eliminated.size();
    return sol;
  }

 private:
  const IpInstance& inst_;
  SolverBudget budget_;
  std::size_t L_ = 0;
  StateMask all_ = 0;
  std::vector<Tracked> tracked_;
  std::vector<Item> items_;
  std::map<Item, std::size_t> item_index_;
  std::vector<KProgram> generics_;
  std::vector<std::size_t> items_by_tau_;  // item ids sorted by decreasing tau
  std::size_t item_words_ = 0, open_words_ = 0;
  std::vector<std::vector<std::uint64_t>> item_masks_;
  std::vector<State> branch_;  // class representatives, ascending
  bool use_memo_ = true;

  std::vector<std::vector<std::uint64_t>> hits_, open_;
  std::vector<int> gain_to_;  // cumulative gain of the prefix
  std::vector<State> path_;
  std::vector<std::vector<State>> suffix_;
  std::unordered_map<Key, MemoEntry, KeyHash> memo_;
  std::vector<std::uint8_t> scratch_s_, scratch_w_;

  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::chrono::steady_clock::time_point start_;
  int incumbent_value_ = -1;
  Trajectory incumbent_;

  int compile_node(const Formula& f, Tracked& t) {
    CNode n{CNode::Kind::True};
    if (temporal_free(f) || (f.is_temporal() && temporal_free(f.child()))) {
      const bool top = temporal_free(f);
      const Formula& body = top ? f : f.child();
      Item it{top || f.op() == Op::Eventually, top ? 0 : f.tau(), state_mask(inst_.domain, body),
              beyond_value(body, true), beyond_value(body, false)};
      auto [pos, inserted] = item_index_.emplace(it, items_.size());
      if (inserted) items_.push_back(it);
      n.kind = CNode::Kind::Item;
      n.a = static_cast<int>(pos->second);
      t.items.push_back(pos->second);
    } else if (f.op() == Op::Not) {
      n.kind = CNode::Kind::Not;
      n.a = compile_node(f.child(), t);
    } else if (f.op() == Op::And) {
      n.kind = CNode::Kind::And;
      n.a = compile_node(f.lhs(), t);
      n.b = compile_node(f.rhs(), t);
    } else {
      KProgram prog;
      prog.compile(inst_.domain, f);
      generics_.push_back(std::move(prog));
      n.kind = CNode::Kind::Generic;
      n.a = static_cast<int>(generics_.size()) - 1;
    }
    t.circuit.push_back(n);
    return static_cast<int>(t.circuit.size()) - 1;
  }

  void compile(const Formula& f, Tracked& t) { compile_node(f, t); }

  void choose_branch_states() {
    const std::size_t n = inst_.domain.size();
    std::vector<StateMask> masks;
    for (const auto& it : items_) masks.push_back(it.beta);
    for (const auto& g : generics_) {
      for (const auto& node : g.nodes) {
        if (node.op == Op::Atom) masks.push_back(node.mask);
      }
    }
    std::set<std::vector<std::uint64_t>> seen;
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::uint64_t> sig;
      std::uint64_t bits = 0;
      for (std::size_t m = 0; m < masks.size(); ++m) {
        if ((masks[m] >> s) & 1U) bits |= std::uint64_t{1} << (m % 64);
        if (m % 64 == 63) sig.push_back(std::exchange(bits, 0));
      }
      sig.push_back(bits);
      if (!inst_.transitions.empty()) {
        sig.push_back(inst_.transitions[s]);
        std::uint64_t col = 0;
        for (std::size_t r = 0; r < n; ++r) col |= ((inst_.transitions[r] >> s) & 1U) << r;
        sig.push_back(col);
      }
      sig.push_back(inst_.start_states ? ((inst_.start_states >> s) & 1U) : 1U);
      if (seen.insert(sig).second) branch_.push_back(static_cast<State>(s));
    }
  }

  std::uint8_t item_value(std::size_t idx, bool strong, std::size_t k, const std::vector<std::uint64_t>& hits) const {
    const Item& it = items_[idx];
    const bool hit = (hits[idx / 64] >> (idx % 64)) & 1U;
    const bool unk = k <= it.tau && k < L_;
    const bool reach = it.tau >= L_;
    const bool full = (it.beta & all_) == all_;
    const bool empty = (it.beta & all_) == 0;
    const bool bval = strong ? it.beyond_s : it.beyond_w;
    if (it.exists) {
      if (hit || (unk && full) || (reach && bval)) return KT;
      return unk && !empty ? KU : KF;
    }
    if (hit || (unk && empty) || (reach && !bval)) return KF;
    return unk && !full ? KU : KT;
  }

  std::uint8_t evaluate(const Tracked& t, std::size_t k) {
    // Both views of every circuit node, bottom-up.
    std::uint8_t vs[64], vw[64];
    std::vector<std::uint8_t> big_s, big_w;
    std::uint8_t* S = vs;
    std::uint8_t* W = vw;
    if (t.circuit.size() > 64) {
      big_s.resize(t.circuit.size());
      big_w.resize(t.circuit.size());
      S = big_s.data();
      W = big_w.data();
    }
    for (std::size_t i = 0; i < t.circuit.size(); ++i) {
      const CNode& c = t.circuit[i];
      switch (c.kind) {
        case CNode::Kind::True:
          S[i] = W[i] = KT;
          break;
        case CNode::Kind::Not:
          S[i] = knot(W[c.a]);
          W[i] = knot(S[c.a]);
          break;
        case CNode::Kind::And:
          S[i] = kand(S[c.a], S[c.b]);
          W[i] = kand(W[c.a], W[c.b]);
          break;
        case CNode::Kind::Item:
          S[i] = item_value(static_cast<std::size_t>(c.a), true, k, hits_[k]);
          W[i] = item_value(static_cast<std::size_t>(c.a), false, k, hits_[k]);
          break;
        case CNode::Kind::Generic: {
          auto [gs, gw] = generics_[c.a].eval(path_.data(), k, L_, all_, scratch_s_, scratch_w_);
          S[i] = gs;
          W[i] = gw;
          break;
        }
      }
    }
    const std::size_t root = t.circuit.size() - 1;
    return t.strong_view ? S[root] : W[root];
  }

  // Closes every tracked formula whose decisive view became determined at depth k.
  // Returns the number of candidates eliminated, or kNeg when a constraint broke.
  int advance(std::size_t k) {
    int gain = 0;
    auto& open = open_[k];
    for (std::size_t w = 0; w < open_words_; ++w) {
      std::uint64_t bits = open[w];
      while (bits) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        const Tracked& t = tracked_[i];
        const std::uint8_t v = evaluate(t, k);
        if (v == KU) continue;
        open[w] &= ~(std::uint64_t{1} << (i % 64));
        if (t.role == Tracked::Role::Candidate) {
          if (v == t.decisive) ++gain;
        } else if (v != t.decisive) {
          return kNeg;
        }
      }
    }
    return gain;
  }

  int open_candidates(std::size_t k) const {
    int c = 0;
    for (std::size_t w = 0; w < open_words_; ++w) c += __builtin_popcountll(open_[k][w]);
    // target and protected formulas never count
    for (std::size_t i = 0; i < tracked_.size() && tracked_[i].role != Tracked::Role::Candidate; ++i) {
      if ((open_[k][i / 64] >> (i % 64)) & 1U) --c;
    }
    return c;
  }

  Key make_key(std::size_t k) const {
    Key key;
    key.reserve(1 + open_words_ + item_words_);
    const std::uint64_t last = (k > 0 && !inst_.transitions.empty()) ? path_[k - 1] + 1 : 0;
    key.push_back((static_cast<std::uint64_t>(k) << 32) | last);
    std::vector<std::uint64_t> relevant(item_words_, 0);
    for (std::size_t w = 0; w < open_words_; ++w) {
      key.push_back(open_[k][w]);
      std::uint64_t bits = open_[k][w];
      while (bits) {
        const std::size_t i = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        for (std::size_t q = 0; q < item_words_; ++q) relevant[q] |= item_masks_[i][q];
      }
    }
    for (std::size_t q = 0; q < item_words_; ++q) key.push_back(hits_[k][q] & relevant[q]);
    return key;
  }

  bool out_of_budget() {
    if (aborted_) return true;
    if (nodes_ >= budget_.node_limit) aborted_ = true;
    if ((nodes_ & 0x3FF) == 0 && std::chrono::steady_clock::now() - start_ > budget_.wall) aborted_ = true;
    return aborted_;
  }

  void offer_incumbent(std::size_t k, int suffix_value, const std::vector<State>& suffix) {
    const int total = gain_to_[k] + suffix_value;
    if (total <= incumbent_value_) return;
    incumbent_value_ = total;
    incumbent_.assign(path_.begin(), path_.begin() + static_cast<std::ptrdiff_t>(k));
    incumbent_.insert(incumbent_.end(), suffix.begin(), suffix.end());
  }

  void push(std::size_t k, State s) {
    path_[k] = s;
    hits_[k + 1] = hits_[k];
    for (std::size_t idx : items_by_tau_) {
      const Item& it = items_[idx];
      if (it.tau < k) break;
      const bool in = (it.beta >> s) & 1U;
      if (in == it.exists) hits_[k + 1][idx / 64] |= std::uint64_t{1} << (idx % 64);
    }
    open_[k + 1] = open_[k];
  }

 public:
  void prepare() {
    items_by_tau_.resize(items_.size());
    for (std::size_t i = 0; i < items_.size(); ++i) items_by_tau_[i] = i;
    std::sort(items_by_tau_.begin(), items_by_tau_.end(),
              [&](std::size_t a, std::size_t b) { return items_[a].tau > items_[b].tau; });
  }

 private:
  // Best additional gain from depth k. Exact (with suffix_[k]) when it beats `need`;
  // otherwise an upper bound that is <= need.
  int explore(std::size_t k, int need, bool& exact) {
    exact = false;
    ++nodes_;
    if (out_of_budget()) return kNeg;
    if (k == L_) {
      suffix_[k].clear();
      offer_incumbent(k, 0, suffix_[k]);
      if (0 > need) {
        exact = true;
        return 0;
      }
      return 0;
    }
    const int ub = open_candidates(k);
    if (ub <= need) return ub;

    Key key;
    if (use_memo_) {
      key = make_key(k);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        const MemoEntry& e = it->second;
        if (e.exact) {
          offer_incumbent(k, e.value, e.suffix);
          if (e.value > need) {
            suffix_[k] = e.suffix;
            exact = true;
          }
          return e.value;
        }
        if (e.value <= need) return e.value;
      }
    }

    int best = kNeg;
    int bound = kNeg;
    std::vector<State> best_suffix;
    const StateMask allowed = k == 0 ? (inst_.start_states ? inst_.start_states : all_)
                                     : (inst_.transitions.empty() ? all_ : inst_.transitions[path_[k - 1]]);
    for (State s : branch_) {
      if (!((allowed >> s) & 1U)) continue;
      push(k, s);
      const int gain = advance(k + 1);
      if (gain == kNeg) continue;
      gain_to_[k + 1] = gain_to_[k] + gain;
      bool child_exact = false;
      const int floor = std::max(need, best);
      const int r = explore(k + 1, floor - gain, child_exact);
      if (aborted_) return kNeg;
      if (child_exact) {
        best = gain + r;
        best_suffix.clear();
        best_suffix.push_back(s);
        best_suffix.insert(best_suffix.end(), suffix_[k + 1].begin(), suffix_[k + 1].end());
        if (best >= ub) break;
      } else if (r != kNeg) {
        bound = std::max(bound, gain + r);
      }
    }
    if (best != kNeg) {
      exact = true;
      suffix_[k] = best_suffix;
      if (use_memo_ && memo_.size() < kMemoCap) memo_[std::move(key)] = MemoEntry{true, best, best_suffix};
      return best;
    }
    if (use_memo_ && memo_.size() < kMemoCap) {
      auto [it, inserted] = memo_.try_emplace(std::move(key), MemoEntry{false, bound, {}});
      if (!inserted && !it->second.exact) it->second.value = std::min(it->second.value, bound);
    }
    return bound;
  }

  static constexpr std::size_t kMemoCap = 4'000'000;
};

}  // namespace

IpSolution solve_ip(const IpInstance& inst, const SolverBudget& budget, std::optional<std::int64_t> beat) {
  if (inst.length < 1) throw InfeasibleByLength("length must be at least 1");
  Search search(inst, budget);
  search.prepare();
  return search.run(beat);
}

IpSolution solve_ip_exhaustive(const IpInstance& inst, const SolverBudget& budget) {
  IpSolution best;
  const std::size_t n = inst.domain.size();
  const std::size_t L = inst.length;
  const auto start = std::chrono::steady_clock::now();
  const bool pos = inst.variant == IpVariant::Pos;
  const Verdict want = pos ? Verdict::Satisfied : Verdict::Violated;
  const Verdict kill = pos ? Verdict::Violated : Verdict::Satisfied;
  const Evaluator target(inst.domain, inst.target);
  std::vector<Evaluator> protect, cands;
  for (const auto& f : inst.protect) protect.emplace_back(inst.domain, f);
  for (const auto& c : inst.candidates) cands.emplace_back(inst.domain, c.formula);
  auto allowed = [&](const Trajectory& rho) {
    if (inst.start_states && !((inst.start_states >> rho[0]) & 1U)) return false;
    if (inst.transitions.empty()) return true;
    for (std::size_t t = 1; t < rho.size(); ++t) {
      if (!((inst.transitions[rho[t - 1]] >> rho[t]) & 1U)) return false;
    }
    return true;
  };
  Trajectory rho(L, 0);
  IdList elim;
  if (L == 0) return best;
  // Odometer over all n^L trajectories in lexicographic order.
  while (true) {
    if (++best.nodes > budget.node_limit ||
        ((best.nodes & 0xFF) == 0 && std::chrono::steady_clock::now() - start > budget.wall)) {
      best.budget_exhausted = true;
      return best;
    }
    bool ok = allowed(rho) && target.verdict(rho) == want;
    for (std::size_t i = 0; ok && i < protect.size(); ++i) ok = protect[i].verdict(rho) != kill;
    if (ok) {
      elim.clear();
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (cands[i].verdict(rho) == kill) elim.push_back(inst.candidates[i].id);
      }
      if (!best.feasible || elim.size() > best.kappa) {
        best.feasible = true;
        best.improved = true;
        best.trajectory = rho;
        best.eliminated = elim;
        best.kappa = elim.size();
      }
    }
    std::size_t p = L;
    while (true) {
      --p;
      if (++rho[p] < n) break;
      rho[p] = 0;
      if (p == 0) return best;
    }
  }
}

}  // namespace tlteach
