#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tlteach/domain.hpp"
#include "tlteach/formula.hpp"

namespace tlteach {

enum class Verdict : std::int8_t { Violated = -1, Undetermined = 0, Satisfied = 1 };

struct Demonstration {
  Trajectory trajectory;
  DemoLabel label = DemoLabel::Positive;

  std::size_t length() const { return trajectory.size(); }
  friend bool operator==(const Demonstration&, const Demonstration&) = default;
};

/// The demonstration's label contradicts the target's strong verdict.
class MalformedDemonstration : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formula compiled against a domain. Evaluation fills a (node, t) table, so one
/// call costs O(|f| * L * max tau). Positions at or past L share one "beyond" slot.
class Evaluator {
 public:
  Evaluator(const StateDomain& d, const Formula& f);

  bool strong(const Trajectory& rho, std::uint64_t t = 0) const;
  bool weak(const Trajectory& rho, std::uint64_t t = 0) const;
  Verdict verdict(const Trajectory& rho) const;

 private:
  struct Node {
    Op op;
    StateMask mask = 0;
    std::uint64_t tau = 0;
    int a = -1;
    int b = -1;
  };
  std::vector<Node> nodes_;  // children precede parents; root is last

  int compile(const StateDomain& d, const Formula& f);
  void table(const Trajectory& rho, std::vector<std::uint8_t>& s, std::vector<std::uint8_t>& w) const;
};

bool strong_sat(const StateDomain& d, const Trajectory& rho, std::uint64_t t, const Formula& f);
bool weak_sat(const StateDomain& d, const Trajectory& rho, std::uint64_t t, const Formula& f);
Verdict verdict(const StateDomain& d, const Formula& f, const Trajectory& rho);

/// Throws MalformedDemonstration unless the target's verdict matches the label.
void require_valid(const StateDomain& d, const Demonstration& demo, const Formula& target);

/// True when f's strong verdict on the trajectory opposes the label.
bool strongly_inconsistent(const StateDomain& d, const Demonstration& demo, const Formula& target,
                           const Formula& f);

/// f1 strongly satisfied implies f2 strongly satisfied, for every trajectory of
/// length 1..l_bound over the domain's alphabet.
bool implies_bruteforce(const Formula& f1, const Formula& f2, const StateDomain& d,
                        std::uint64_t l_bound, std::uint64_t node_limit = 50'000'000);

/// Pairwise version: result[i][j] = implies_bruteforce(fs[i], fs[j]).
std::vector<std::vector<bool>> implies_matrix(const std::vector<Formula>& fs, const StateDomain& d,
                                              std::uint64_t l_bound,
                                              std::uint64_t node_limit = 50'000'000);

}  // namespace tlteach
