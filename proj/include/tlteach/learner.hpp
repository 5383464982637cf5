#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tlteach/domain.hpp"
#include "tlteach/preference.hpp"
#include "tlteach/semantics.hpp"

namespace tlteach {

using IdList = std::vector<std::size_t>;

/// A domain, a hypothesis set and one compiled evaluator per hypothesis.
class Problem {
 public:
  Problem(StateDomain domain, HypothesisSet hyps);

  const StateDomain& domain() const { return domain_; }
  const HypothesisSet& hyps() const { return hyps_; }
  std::size_t size() const { return hyps_.size(); }
  std::size_t target_id() const { return hyps_.target_id; }
  const Formula& formula(std::size_t id) const { return hyps_.formulas.at(id); }
  const Formula& target() const { return hyps_.target(); }
  Verdict verdict(std::size_t id, const Trajectory& rho) const { return evals_.at(id).verdict(rho); }

  /// Same domain and hypotheses, different target.
  Problem with_target(std::size_t target_id) const;

 private:
  StateDomain domain_;
  HypothesisSet hyps_;
  std::vector<Evaluator> evals_;
};

class VersionSpace {
 public:
  VersionSpace() = default;
  static VersionSpace full(std::size_t n) { return VersionSpace(std::vector<bool>(n, true)); }
  explicit VersionSpace(std::vector<bool> alive) : alive_(std::move(alive)) {}

  bool contains(std::size_t id) const { return id < alive_.size() && alive_[id]; }
  std::size_t universe() const { return alive_.size(); }
  std::size_t count() const;
  IdList ids() const;
  void remove(std::size_t id) { alive_.at(id) = false; }

  friend bool operator==(const VersionSpace&, const VersionSpace&) = default;

 private:
  std::vector<bool> alive_;
};

/// How the learner picks among equally preferred hypotheses.
struct TiePolicy {
  enum class Kind : std::uint8_t { Random, Adversarial, FirstIndex, Scripted };
  Kind kind = Kind::Random;
  /// Scripted only: receives the sorted tie set and returns the chosen id.
  std::function<std::size_t(const IdList&)> choose;

  static TiePolicy random() { return {Kind::Random, {}}; }
  static TiePolicy adversarial() { return {Kind::Adversarial, {}}; }
  static TiePolicy first_index() { return {Kind::FirstIndex, {}}; }
  static TiePolicy scripted(std::function<std::size_t(const IdList&)> f) { return {Kind::Scripted, std::move(f)}; }
};

struct LearnerState {
  std::size_t current = 0;
  VersionSpace space;
  std::uint64_t rng = 0;  // advanced on every random draw
};

/// splitmix64 step; returns the next output and advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

struct PruneResult {
  VersionSpace space;
  IdList eliminated;
};

/// Removes every alive hypothesis that is strongly inconsistent with `demo`. `target`
/// is the formula the demonstration was labelled against.
PruneResult prune(const Problem& p, const VersionSpace& space, const Demonstration& demo,
                  const Formula& target);

/// Elimination set of a demonstration over `candidates` (no validity check).
IdList eliminated_by(const Problem& p, const IdList& candidates, const Demonstration& demo);

/// Global: alive ids with sigma(id;.) <= sigma(target;.). Local: alive ids beating the
/// target from at least one alive vantage point. Always contains the target if alive.
IdList preferred_set(const VersionSpace& space, const PreferenceModel& pref, std::size_t target);

/// Alive ids with sigma(id; current) <= sigma(target; current).
IdList preferred_version_space(std::size_t current, const VersionSpace& space,
                               const PreferenceModel& pref, std::size_t target);

/// Minimisers of sigma(.; current) over the alive set, widened by noisy neighbours.
IdList tie_set(std::size_t current, const VersionSpace& space, const PreferenceModel& pref);

/// Stay if consistent, else move to a tie-set member chosen by `theta`.
LearnerState learner_step(const Problem& p, const LearnerState& state, const Demonstration& demo,
                          const PreferenceModel& pref, const TiePolicy& theta);

/// Applies the tie policy to a nonempty tie set.
std::size_t pick_tie(const IdList& ties, const VersionSpace& space, const PreferenceModel& pref,
                     std::size_t target, const TiePolicy& theta, std::uint64_t& rng);

struct Condition1Result {
  bool holds = true;
  /// (current, first, second) with sigma(first;cur) <= sigma(second;cur) <= sigma(target;cur)
  /// but sigma(second;first) > sigma(target;first). Distinct triples are reported first.
  std::optional<std::array<std::size_t, 3>> counterexample;
};
Condition1Result check_condition1(const PreferenceModel& pref, std::size_t target);

struct Condition2Result {
  bool holds = true;
  bool empty_set_reachable = true;
  std::optional<std::size_t> demo_index;  // pool member whose subset is missing
  IdList missing_subset;
  std::string scope;
};
/// Every subset of every pool member's elimination set must itself be the elimination
/// set of some pool member. Eliminations are taken over the whole hypothesis set. The
/// empty subset is reported separately in `empty_set_reachable`.
Condition2Result check_condition2(const Problem& p, const std::vector<Demonstration>& pool,
                                  std::size_t max_subset_bits = 20);

}  // namespace tlteach
