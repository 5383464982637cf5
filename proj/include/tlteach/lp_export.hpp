#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tlteach/ip.hpp"

namespace tlteach {

enum class Sense : std::uint8_t { Le, Ge, Eq };

struct LinearTerm {
  std::size_t var;
  double coef;
};

struct LinearConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense = Sense::Le;
  double rhs = 0;
};

/// 0-1 program: maximise the objective subject to linear constraints.
struct LinearModel {
  std::vector<std::string> vars;
  std::vector<LinearTerm> objective;
  std::vector<LinearConstraint> constraints;
  std::unordered_map<std::string, std::size_t> index;

  std::size_t var(const std::string& name);
  bool satisfied_by(const std::vector<int>& values, std::string* violated = nullptr) const;
  double objective_value(const std::vector<int>& values) const;
};

/// Encodes an instance with state indicators `s_t_v`, elimination flags `b_j` (j is the
/// hypothesis id) and one strong/weak indicator pair per formula node and time step.
LinearModel to_linear_model(const IpInstance& inst);

/// Assignment induced by a trajectory; b_j is set exactly for eliminated candidates.
std::vector<int> assignment_for(const LinearModel& model, const IpInstance& inst, const Trajectory& rho);

/// CPLEX LP text format.
std::string write_lp(const LinearModel& model);
void write_lp_file(const LinearModel& model, const std::string& path);

}  // namespace tlteach
