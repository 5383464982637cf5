#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlteach/teacher.hpp"

namespace tlteach {

/// Parsed experiment file. Keys are documented in configs/README.md.
struct ExperimentConfig {
  std::string domain = "numeric";  // numeric | gridworld
  std::vector<std::uint64_t> grid_sizes;  // key `a`; a comma list runs each size
  std::string preference = "uniform";  // uniform | global_implication | local_manhattan | noisy_local
  unsigned perturb_radius = 1;
  double operator_penalty = 0;  // 0 picks the automatic penalty
  bool boundary_formulas = false;
  std::string objective = "AN";
  std::string method = "tlip";  // tlip | esmt | rg
  bool adaptive = false;
  std::string oracle = "none";  // none | boundary
  bool positive_only = false;
  std::uint64_t l_max = 0;  // 0 means a + 1
  std::size_t sample_size = 64;
  std::size_t sessions = 10;
  std::uint64_t seed = 1;
  std::string learner_ties = "random";  // random | adversarial | first
  std::string simulated_ties = "adversarial";
  std::string initial_op = "any";  // any | F | G
  std::string target_op = "any";
  /// Draw only pairs a positive-only teacher can finish: the target passes the
  /// positive-only necessary conditions and does not imply the initial hypothesis.
  bool teachable_pairs = false;
  std::optional<std::string> initial;  // fixed formulas, parsed
  std::optional<std::string> target;
  std::string map_file;
  std::uint64_t map_seed = 7;
  std::string relation = "default";  // default | map
  double step_timeout_s = 600;
  double esmt_timeout_s = 18000;  // 300 minutes
  bool short_mode = false;
  std::size_t iteration_cap = 0;
  std::string out = "results";
  std::string format = "csv";
  std::string export_lp;
  std::vector<std::string> warnings;
};

ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

struct SessionRecord {
  std::string suite;
  std::string method;
  std::uint64_t a = 0;
  std::size_t session = 0;
  std::uint64_t seed = 0;
  std::size_t initial_id = 0;
  std::size_t target_id = 0;
  std::string initial;
  std::string target;
  TeachingTranscript transcript;
  bool completed = false;
  bool timeout = false;
  std::string note;
  friend bool operator==(const SessionRecord&, const SessionRecord&) = default;
};

struct MethodSummary {
  std::string method;
  std::uint64_t a = 0;
  std::size_t sessions = 0;
  std::size_t completed = 0;
  double mean_an = 0;
  double mean_al = 0;
  std::size_t min_an = 0, max_an = 0;
  std::size_t min_al = 0, max_al = 0;
  double mean_step_ms = 0;
  friend bool operator==(const MethodSummary&, const MethodSummary&) = default;
};

/// other versus base on one metric; relative = (other - base) / base.
struct Delta {
  std::uint64_t a = 0;
  std::string metric;
  std::string base;
  std::string other;
  double base_mean = 0;
  double other_mean = 0;
  double relative = 0;
  friend bool operator==(const Delta&, const Delta&) = default;
};

struct ExperimentReport {
  std::string suite;
  std::string domain = "numeric";
  std::vector<SessionRecord> sessions;
  std::vector<MethodSummary> summaries;
  std::vector<Delta> deltas;
  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

/// Aggregates over completed sessions, one row per (method, a) in first-seen order.
std::vector<MethodSummary> summarize(const std::vector<SessionRecord>& sessions);
const MethodSummary* find_summary(const ExperimentReport& r, const std::string& method, std::uint64_t a);
/// Appends AN and AL deltas of `other` against `base` for every grid size present.
void add_deltas(ExperimentReport& r, const std::string& base, const std::string& other);

/// Label such as "Ada-AL-TLIP-pos" built from the teacher settings.
std::string method_label(const ExperimentConfig& cfg);

/// Session seed for (master, a, session); shared by every method in a suite.
std::uint64_t session_seed(std::uint64_t master, std::uint64_t a, std::size_t session);

/// Worker count: TEACH_THREADS when set, hardware concurrency otherwise.
std::size_t worker_count();

ExperimentReport run_experiment(const ExperimentConfig& cfg);

const std::vector<std::string>& suite_names();
/// Runs a named method matrix over every grid size in `base.grid_sizes` (the suites use
/// {5, 10, 15} when the config leaves `a` unset). Throws std::invalid_argument on an
/// unknown name.
ExperimentReport run_suite(const std::string& suite, const ExperimentConfig& base);

}  // namespace tlteach
