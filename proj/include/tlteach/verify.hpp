#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tlteach/ip.hpp"

namespace tlteach {

/// Random formula over the domain's atoms: threshold bounds for numeric domains, labels
/// otherwise. Depth counts operator nesting; depth 0 is an atom or True.
Formula random_formula(std::uint64_t& rng, const StateDomain& d, unsigned depth, std::uint64_t max_tau);
Trajectory random_trajectory(std::uint64_t& rng, const StateDomain& d, std::size_t length);

/// Random synthesis instance over a symbolic alphabet: |S| in [2, max_states], L in
/// [1, max_length], up to max_candidates candidates and an optional transition relation.
IpInstance random_instance(std::uint64_t& rng, std::size_t max_states, std::uint64_t max_length,
                           std::size_t max_candidates);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, or a short summary
};

/// Negation duality, strong implies weak, prefix persistence and verdict/negation
/// consistency on fuzzed (trajectory, formula) pairs.
CheckResult check_semantics_battery(std::size_t pairs, std::uint64_t seed);
/// No trajectory shorter than minimal_length(f, l) gets the strong verdict l; exhaustive
/// over the alphabet up to `max_length`.
CheckResult check_minimal_length_bound(std::size_t formulas, std::size_t states, std::uint64_t max_length,
                                       std::uint64_t seed);
/// solve_ip against solve_ip_exhaustive on random instances, both labels.
CheckResult check_solver_equivalence(std::size_t instances, std::uint64_t seed);
/// LP export: every solver optimum yields a feasible 0-1 assignment with objective kappa.
CheckResult check_lp_export(std::size_t instances, std::uint64_t seed);
/// Parse/render round trip on fuzzed formulas.
CheckResult check_parser_round_trip(std::size_t formulas, std::uint64_t seed);
/// Worked suit example: AN-TLIP transcript and set-cover complexities.
CheckResult check_worked_example();

std::vector<CheckResult> run_check_battery(bool quick, std::uint64_t seed = 1);

}  // namespace tlteach
