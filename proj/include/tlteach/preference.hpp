#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tlteach/domain.hpp"

namespace tlteach {

enum class PreferenceKind : std::uint8_t { Uniform, GlobalRanked, Local, NoisyLocal };

/// Dense sigma(candidate; current) table over one hypothesis set. Lower is preferred.
class PreferenceModel {
 public:
  PreferenceKind kind() const { return kind_; }
  bool is_global() const { return kind_ == PreferenceKind::Uniform || kind_ == PreferenceKind::GlobalRanked; }
  std::size_t size() const { return n_; }
  const std::string& name() const { return name_; }

  double sigma(std::size_t candidate, std::size_t current) const { return table_[current * n_ + candidate]; }

  /// Perturbation neighbours used by noisy_local; empty for other kinds.
  const std::vector<std::size_t>& neighbours(std::size_t id) const;
  unsigned radius() const { return radius_; }

  static PreferenceModel uniform(std::size_t n);
  /// sigma(candidate; any) = rank[candidate].
  static PreferenceModel ranked(std::vector<double> rank, std::string name = "global_ranked");
  /// Arbitrary table, indexed [current][candidate]. Global when every row is equal.
  static PreferenceModel from_table(std::vector<std::vector<double>> rows, std::string name = "local");

 private:
  PreferenceKind kind_ = PreferenceKind::Uniform;
  std::size_t n_ = 0;
  std::vector<double> table_;  // row = current
  std::vector<std::vector<std::size_t>> neighbours_;
  unsigned radius_ = 0;
  std::string name_ = "uniform";

  friend PreferenceModel noisy_local_preference(const PreferenceModel&, const HypothesisSet&, unsigned);
};

/// F-formulas before G-formulas; within one operator, a formula is preferred over
/// every formula it implies (syntactic implication on the grid).
PreferenceModel implication_preference(const HypothesisSet& hyps);

/// 1 + |i1-i2| + |v1-v2| + penalty * [operator differs]. Values are threshold bounds or
/// color ranks. With `boundary_switch`, a current F[<=i](x<=0) or F[<=i](x<=10) makes
/// every F-formula pay the penalty instead. penalty = 0 picks 2*(a+9)+1.
PreferenceModel manhattan_preference(const HypothesisSet& hyps, double penalty = 0,
                                     bool boundary_switch = true);

/// Same sigma as `base`; ties extend to same-operator formulas at Manhattan distance
/// up to `radius` from a minimiser.
PreferenceModel noisy_local_preference(const PreferenceModel& base, const HypothesisSet& hyps,
                                       unsigned radius = 1);

/// Distance between two grid-shaped formulas ignoring the operator.
std::uint64_t grid_distance(const Formula& a, const Formula& b);
/// True for F[<=i](x<=0) and F[<=i](x<=10).
bool is_boundary_formula(const Formula& f);

}  // namespace tlteach
