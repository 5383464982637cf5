#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlteach/ip.hpp"
#include "tlteach/learner.hpp"
#include "tlteach/preference.hpp"
#include "tlteach/setcover.hpp"

namespace tlteach {

enum class Objective : std::uint8_t { AN, AL };
enum class Method : std::uint8_t { TLIP, ESMT, RandomizedGreedy };

struct TeacherConfig {
  Objective objective = Objective::AN;
  Method method = Method::TLIP;
  bool adaptive = false;
  /// false means oracle-guided; an oracle must then be supplied.
  bool myopic = true;
  bool positive_only = false;
  std::uint64_t l_max = 6;
  SolverBudget budget;
  /// Wall-clock allowance for one exhaustive step (ESMT).
  std::chrono::milliseconds esmt_budget{std::chrono::seconds(60)};
  std::size_t sample_size = 64;
  /// Learner model the non-adaptive teacher simulates.
  TiePolicy simulated = TiePolicy::adversarial();
  std::size_t iteration_cap = 0;  // 0 means 10 * |hypotheses|
  /// When set, every chosen instance is written here as an LP file.
  std::string export_lp_dir;
  std::string export_lp_prefix = "step";
};

/// Intermediate target chooser: (current, space, target) -> hypothesis id.
using Oracle = std::function<std::size_t(std::size_t, const VersionSpace&, std::size_t)>;

struct DemoChoice {
  bool found = false;
  Demonstration demo;
  IdList eliminated;            // over the whole version space
  IdList eliminated_preferred;  // the part counted by the objective
  std::size_t kappa = 0;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
  double solver_ms = 0;
  std::optional<IpInstance> instance;  // the winning instance (TLIP only)
};

struct StepRecord {
  Demonstration demo;
  IdList eliminated;
  std::size_t kappa = 0;
  std::size_t preferred_size = 0;
  std::size_t hypothesis_before = 0;
  std::size_t hypothesis_after = 0;
  std::size_t intermediate = 0;
  std::uint64_t lower_bound = 0;
  double solver_ms = 0;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

enum class SessionStatus : std::uint8_t { Reached, NoProgress, IterationCap, Budget };
const char* status_name(SessionStatus s);
SessionStatus status_from_name(const std::string& s);

struct TeachingTranscript {
  std::size_t initial = 0;
  std::size_t target = 0;
  std::vector<Demonstration> demos;
  std::vector<std::size_t> hypothesis_path;  // learner hypothesis before the first and after each demo
  std::size_t an_cost = 0;
  std::size_t al_cost = 0;
  bool reached_target = false;
  SessionStatus status = SessionStatus::Reached;
  std::vector<StepRecord> steps;
  double solver_ms = 0;
  friend bool operator==(const TeachingTranscript&, const TeachingTranscript&) = default;
};

struct Costs {
  std::size_t an = 0;
  std::size_t al = 0;
  friend bool operator==(const Costs&, const Costs&) = default;
};

Costs cost_metrics(const TeachingTranscript& t);

/// Audit counters shared by every teacher in the process.
struct EmissionAudit {
  std::atomic<std::uint64_t> demos{0};
  std::atomic<std::uint64_t> theorem1_violations{0};
  std::atomic<std::uint64_t> invalid_label{0};
  std::atomic<std::uint64_t> invalid_transition{0};
  void reset();
};
EmissionAudit& emission_audit();

/// Counts one emitted demonstration in the audit and fills rec.lower_bound.
void audit_emission(const Problem& p, const VersionSpace& before, const Demonstration& demo, StepRecord& rec);

/// max{zeta(target, l), max over eliminated of zeta(f, -l)}.
std::uint64_t theorem1_lower_bound(const Formula& target, const std::vector<Formula>& eliminated, DemoLabel l);

class Teacher {
 public:
  Teacher(const Problem& p, const PreferenceModel& pref, TeacherConfig cfg, Oracle oracle = {});

  const TeacherConfig& config() const { return cfg_; }

  /// One greedy step. `intermediate` is the hypothesis the preferred set was computed
  /// for; when it differs from the problem's target it is protected from elimination.
  DemoChoice compute_demonstration(const VersionSpace& space, const IdList& preferred,
                                   std::size_t intermediate, std::uint64_t& rng);

  /// Preferred set the teacher targets in the given situation.
  IdList preferred_for(const VersionSpace& space, std::size_t current_view, std::size_t intermediate) const;

  TeachingTranscript teach(std::size_t initial, const TiePolicy& theta, std::uint64_t seed);

 private:
  const Problem& p_;
  const PreferenceModel& pref_;
  TeacherConfig cfg_;
  Oracle oracle_;
  std::map<std::vector<std::uint64_t>, DemoChoice> cache_;
  std::size_t lp_counter_ = 0;

  DemoChoice solve_tlip(const VersionSpace& space, const IdList& preferred, std::size_t intermediate);
  DemoChoice solve_random(const VersionSpace& space, const IdList& preferred, std::size_t intermediate,
                          std::uint64_t& rng);
};

TeachingTranscript tlip_teach(const Problem& p, std::size_t initial, const PreferenceModel& pref,
                              TeacherConfig cfg, const TiePolicy& theta, std::uint64_t seed,
                              Oracle oracle = {});
TeachingTranscript esmt_teach(const Problem& p, std::size_t initial, const PreferenceModel& pref,
                              TeacherConfig cfg, const TiePolicy& theta, std::uint64_t seed);
TeachingTranscript randomized_greedy_teach(std::size_t sample_size, const Problem& p, std::size_t initial,
                                           const PreferenceModel& pref, TeacherConfig cfg,
                                           const TiePolicy& theta, std::uint64_t seed);
TeachingTranscript positive_only_teach(const Problem& p, std::size_t initial, const PreferenceModel& pref,
                                       TeacherConfig cfg, const TiePolicy& theta, std::uint64_t seed);

/// Every valid demonstration of length 1..l_max (both labels), in length then
/// lexicographic order.
std::vector<Demonstration> demonstration_pool(const Problem& p, std::uint64_t l_max,
                                              std::size_t limit = 2'000'000);

/// Minimum-cost subset of the pool whose eliminations cover preferred minus the target.
/// Throws std::runtime_error when some hypothesis is eliminated by no pool member.
std::vector<Demonstration> optimal_teach_setcover(const Problem& p, const std::vector<Demonstration>& pool,
                                                  const IdList& preferred, Objective objective);

/// Set of hypotheses any teacher must remove before the worst-case learner settles on the
/// target: the preferred version space of the initial hypothesis plus the initial itself,
/// without the target.
IdList teaching_universe(const Problem& p, const PreferenceModel& pref, std::size_t initial);

/// Optimal AN and AL over the pool (each minimised separately).
Costs teaching_complexity(const Problem& p, const PreferenceModel& pref, std::size_t initial,
                          const std::vector<Demonstration>& pool);

/// Maximum AN and AL over every tie-break realisation of the learner.
Costs worst_case_costs(const Problem& p, std::size_t initial, const PreferenceModel& pref,
                       const TeacherConfig& cfg, std::size_t max_runs = 100'000);

struct TeachabilityReport {
  bool positive_length_ok = true;    // max demo length >= max zeta(phi, -1) over preferred
  bool no_preferred_implied = true;  // no preferred formula is implied by the target
  bool mixed_length_ok = true;       // max demo length >= max min{zeta(phi,1), zeta(phi,-1)}
  std::uint64_t max_length = 0;
  std::uint64_t positive_bound = 0;
  std::uint64_t mixed_bound = 0;
  std::optional<std::size_t> implied_witness;
  bool positive_teachable() const { return positive_length_ok && no_preferred_implied; }
};
TeachabilityReport teachability_checks(const Problem& p, const PreferenceModel& pref,
                                       const std::vector<Demonstration>& demos);
/// Same checks against a hypothetical maximum length.
TeachabilityReport teachability_checks(const Problem& p, const PreferenceModel& pref, std::uint64_t max_length);

/// F[<=1](x<=10) while the learner holds a non-boundary F-formula and the target is a
/// G-formula; the target otherwise (or when the boundary formula is absent or eliminated).
std::size_t oracle_boundary(const Problem& p, std::size_t current, const VersionSpace& space, std::size_t target);

}  // namespace tlteach
