#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tlteach/domain.hpp"
#include "tlteach/formula.hpp"
#include "tlteach/learner.hpp"

namespace tlteach {

enum class IpVariant : std::uint8_t { Pos, Neg };

constexpr DemoLabel label_of(IpVariant v) {
  return v == IpVariant::Pos ? DemoLabel::Positive : DemoLabel::Negative;
}

/// L is below the target's minimal length for the variant's label.
class InfeasibleByLength : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IpCandidate {
  std::size_t id;  // hypothesis id, reported back in solutions
  Formula formula;
};

/// One greedy synthesis problem: choose a length-L trajectory that gives the target
/// the variant's strong verdict and eliminates as many candidates as possible.
struct IpInstance {
  IpVariant variant = IpVariant::Pos;
  Formula target;
  std::vector<IpCandidate> candidates;
  /// Formulas the trajectory must not eliminate.
  std::vector<Formula> protect;
  std::uint64_t length = 1;
  StateDomain domain;
  /// Successor relation enforced by the solver; empty means unconstrained.
  std::vector<StateMask> transitions;
  /// States allowed at t = 0; zero means any.
  StateMask start_states = 0;
};

struct SolverBudget {
  std::uint64_t node_limit = 500'000'000;
  std::chrono::milliseconds wall{std::chrono::minutes(10)};
};

struct IpSolution {
  bool feasible = false;
  Trajectory trajectory;
  IdList eliminated;  // candidate ids eliminated by the trajectory
  std::size_t kappa = 0;
  bool budget_exhausted = false;
  /// False when the search proved that no trajectory beats the caller's threshold.
  bool improved = false;
  std::uint64_t nodes = 0;
};

/// Candidates are `preferred` minus the problem's target. Throws InfeasibleByLength
/// when L < minimal_length(target, label).
IpInstance build_ip(IpVariant variant, const IdList& preferred, const Problem& p, const Formula& target,
                    std::uint64_t length);

/// Adds the domain's successor relation to the instance.
IpInstance inject_constraints(IpInstance inst, const StateDomain& d);

/// Branch-and-bound over per-step state choices. Maximises kappa, breaking ties by the
/// lexicographically smallest trajectory. With `beat`, only solutions with kappa > *beat
/// are sought; `improved` reports whether one exists.
IpSolution solve_ip(const IpInstance& inst, const SolverBudget& budget = {},
                    std::optional<std::int64_t> beat = std::nullopt);

/// Enumerates every trajectory of the instance's length. Same tie rule as solve_ip.
IpSolution solve_ip_exhaustive(const IpInstance& inst, const SolverBudget& budget = {});

/// True when `rho` meets every constraint of the instance (length, domain, target verdict,
/// protected formulas). Also reports the eliminated candidate ids.
bool check_solution(const IpInstance& inst, const Trajectory& rho, IdList* eliminated = nullptr);

}  // namespace tlteach
