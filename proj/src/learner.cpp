#include "tlteach/learner.hpp"

#include <algorithm>
#include <unordered_set>

namespace tlteach {

Problem::Problem(StateDomain domain, HypothesisSet hyps) : domain_(std::move(domain)), hyps_(std::move(hyps)) {
  if (hyps_.formulas.empty()) throw std::invalid_argument("hypothesis set is empty");
  if (hyps_.target_id >= hyps_.size()) throw std::invalid_argument("target id out of range");
  std::unordered_set<Formula> seen;
  evals_.reserve(hyps_.size());
  for (const auto& f : hyps_.formulas) {
    if (!seen.insert(f).second) throw std::invalid_argument("duplicate hypothesis " + render(f));
    evals_.emplace_back(domain_, f);
  }
}

Problem Problem::with_target(std::size_t target_id) const {
  if (target_id >= size()) throw std::invalid_argument("target id out of range");
  Problem q = *this;
  q.hyps_.target_id = target_id;
  return q;
}

std::size_t VersionSpace::count() const { return static_cast<std::size_t>(std::count(alive_.begin(), alive_.end(), true)); }

IdList VersionSpace::ids() const {
  IdList out;
  for (std::size_t i = 0; i < alive_.size(); ++i) {
    if (alive_[i]) out.push_back(i);
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

IdList eliminated_by(const Problem& p, const IdList& candidates, const Demonstration& demo) {
  const Verdict kill = demo.label == DemoLabel::Positive ? Verdict::Violated : Verdict::Satisfied;
  IdList out;
  for (std::size_t id : candidates) {
    if (p.verdict(id, demo.trajectory) == kill) out.push_back(id);
  }
  return out;
}

PruneResult prune(const Problem& p, const VersionSpace& space, const Demonstration& demo,
                  const Formula& target) {
  require_valid(p.domain(), demo, target);
  PruneResult r{space, eliminated_by(p, space.ids(), demo)};
  for (std::size_t id : r.eliminated) r.space.remove(id);
  return r;
}

IdList preferred_set(const VersionSpace& space, const PreferenceModel& pref, std::size_t target) {
  const IdList alive = space.ids();
  IdList out;
  if (pref.is_global()) {
    const std::size_t any = 0;
    for (std::size_t id : alive) {
      if (pref.sigma(id, any) <= pref.sigma(target, any)) out.push_back(id);
    }
    return out;
  }
  for (std::size_t id : alive) {
    for (std::size_t from : alive) {
      if (pref.sigma(id, from) <= pref.sigma(target, from)) {
        out.push_back(id);
        break;
      }
    }
  }
  return out;
}

IdList preferred_version_space(std::size_t current, const VersionSpace& space,
                               const PreferenceModel& pref, std::size_t target) {
  IdList out;
  const double bar = pref.sigma(target, current);
  for (std::size_t id : space.ids()) {
    if (pref.sigma(id, current) <= bar) out.push_back(id);
  }
  return out;
}

IdList tie_set(std::size_t current, const VersionSpace& space, const PreferenceModel& pref) {
  const IdList alive = space.ids();
  if (alive.empty()) return {};
  double best = pref.sigma(alive.front(), current);
  for (std::size_t id : alive) best = std::min(best, pref.sigma(id, current));
  IdList ties;
  for (std::size_t id : alive) {
    if (pref.sigma(id, current) == best) ties.push_back(id);
  }
  if (pref.kind() == PreferenceKind::NoisyLocal) {
    const IdList minimisers = ties;
    for (std::size_t m : minimisers) {
      for (std::size_t nb : pref.neighbours(m)) {
        if (space.contains(nb)) ties.push_back(nb);
      }
    }
    std::sort(ties.begin(), ties.end());
    ties.erase(std::unique(ties.begin(), ties.end()), ties.end());
  }
  return ties;
}

std::size_t pick_tie(const IdList& ties, const VersionSpace& space, const PreferenceModel& pref,
                     std::size_t target, const TiePolicy& theta, std::uint64_t& rng) {
  if (ties.empty()) throw std::logic_error("empty tie set");
  switch (theta.kind) {
    case TiePolicy::Kind::FirstIndex:
      return ties.front();
    case TiePolicy::Kind::Random:
      return ties[splitmix64(rng) % ties.size()];
    case TiePolicy::Kind::Scripted:
      return theta.choose(ties);
    case TiePolicy::Kind::Adversarial: {
      std::size_t best = ties.front();
      std::size_t best_effort = 0;
      bool best_is_target = true;
      bool first = true;
      for (std::size_t id : ties) {
        const bool is_target = id == target;
        const std::size_t effort = preferred_version_space(id, space, pref, target).size();
        const bool better = first || (best_is_target && !is_target) ||
                            (best_is_target == is_target && effort > best_effort);
        if (better) {
          best = id;
          best_effort = effort;
          best_is_target = is_target;
          first = false;
        }
      }
      return best;
    }
  }
  return ties.front();
}

LearnerState learner_step(const Problem& p, const LearnerState& state, const Demonstration& demo,
                          const PreferenceModel& pref, const TiePolicy& theta) {
  LearnerState next = state;
  next.space = prune(p, state.space, demo, p.target()).space;
  if (next.space.contains(state.current)) return next;
  const IdList ties = tie_set(state.current, next.space, pref);
  next.current = pick_tie(ties, next.space, pref, p.target_id(), theta, next.rng);
  return next;
}

Condition1Result check_condition1(const PreferenceModel& pref, std::size_t target) {
  const std::size_t n = pref.size();
  // Distinct triples first; repeated hypotheses only when no distinct witness exists.
  for (bool distinct : {true, false}) {
    for (std::size_t cur = 0; cur < n; ++cur) {
      const double bar = pref.sigma(target, cur);
      for (std::size_t a = 0; a < n; ++a) {
        const double sa = pref.sigma(a, cur);
        if (sa > bar || (distinct && a == cur)) continue;
        const double bar_a = pref.sigma(target, a);
        for (std::size_t b = 0; b < n; ++b) {
          if (distinct && (b == cur || b == a)) continue;
          const double sb = pref.sigma(b, cur);
          if (sa <= sb && sb <= bar && pref.sigma(b, a) > bar_a) {
            return {false, std::array<std::size_t, 3>{cur, a, b}};
          }
        }
      }
    }
  }
  return {};
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 0;
    for (auto w : b) h = h * 0x100000001b3ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }
};

}  // namespace

Condition2Result check_condition2(const Problem& p, const std::vector<Demonstration>& pool,
                                  std::size_t max_subset_bits) {
  Condition2Result r;
  r.scope = "explicit pool of " + std::to_string(pool.size()) + " demonstrations";
  const std::size_t n = p.size();
  const std::size_t words = (n + 63) / 64;
  IdList all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;

  std::vector<IdList> elim;
  std::unordered_set<Bits, BitsHash> present;
  for (const auto& d : pool) {
    elim.push_back(eliminated_by(p, all, d));
    Bits b(words, 0);
    for (auto id : elim.back()) b[id / 64] |= std::uint64_t{1} << (id % 64);
    present.insert(b);
  }
  r.empty_set_reachable = present.count(Bits(words, 0)) > 0;

  for (std::size_t k = 0; k < pool.size(); ++k) {
    const IdList& e = elim[k];
    if (e.size() > max_subset_bits) {
      throw BudgetExceeded("elimination set of size " + std::to_string(e.size()) +
                           " is too large for subset enumeration");
    }
    const std::uint64_t subsets = std::uint64_t{1} << e.size();
    for (std::uint64_t s = 1; s < subsets; ++s) {
      Bits b(words, 0);
      for (std::size_t q = 0; q < e.size(); ++q) {
        if ((s >> q) & 1U) b[e[q] / 64] |= std::uint64_t{1} << (e[q] % 64);
      }
      if (!present.count(b)) {
        r.holds = false;
        r.demo_index = k;
        for (std::size_t q = 0; q < e.size(); ++q) {
          if ((s >> q) & 1U) r.missing_subset.push_back(e[q]);
        }
        return r;
      }
    }
  }
  return r;
}

}  // namespace tlteach
