// teach: run experiments, verification checks and the suit walkthrough.
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tlteach/harness.hpp"
#include "tlteach/report_io.hpp"
#include "tlteach/verify.hpp"

using namespace tlteach;

namespace {

int cmd_run(const std::string& config_path, const std::string& suite, const std::optional<std::uint64_t>& seed,
            const std::string& out, const std::string& format, const std::string& export_lp, bool short_mode) {
  ExperimentConfig cfg = load_config(config_path);
  if (seed) cfg.seed = *seed;
  if (!out.empty()) cfg.out = out;
  if (!format.empty()) cfg.format = format;
  if (!export_lp.empty()) cfg.export_lp = export_lp;
  if (short_mode) cfg.short_mode = true;
  for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << "\n";
  const ExperimentReport r = suite.empty() ? run_experiment(cfg) : run_suite(suite, cfg);
  const auto paths = emit(r, cfg.format == "json" ? ReportFormat::Json : ReportFormat::Csv, cfg.out);
  for (const auto& m : r.summaries) {
    std::cout << m.method << " a=" << m.a << " completed " << m.completed << "/" << m.sessions
              << " mean AN " << m.mean_an << " mean AL " << m.mean_al << " mean step " << m.mean_step_ms
              << " ms\n";
  }
  for (const auto& d : r.deltas) {
    std::cout << "a=" << d.a << " " << d.metric << ": " << d.other << " vs " << d.base << " "
              << (d.relative * 100.0) << "%\n";
  }
  for (const auto& p : paths) std::cout << "wrote " << p << "\n";
  return 0;
}

int cmd_check(bool full, std::uint64_t seed) {
  bool ok = true;
  for (const auto& c : run_check_battery(!full, seed)) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.detail << ")\n";
    ok = ok && c.passed;
  }
  return ok ? 0 : 1;
}

int cmd_demo(const std::string& objective) {
  const Problem p(suit_domain(), suit_example_hypotheses());
  const PreferenceModel pref = PreferenceModel::uniform(p.size());
  TeacherConfig cfg;
  cfg.l_max = 5;
  cfg.objective = objective == "AL" ? Objective::AL : Objective::AN;
  const std::size_t initial = 0;
  const auto t = tlip_teach(p, initial, pref, cfg, TiePolicy::adversarial(), 1);
  std::cout << "hypotheses: F[<=i] s for i in 0..4, s in {club, spade, diamond}; uniform preference\n";
  std::cout << "target:  " << render(p.target()) << "\n";
  std::cout << "initial: " << render(p.formula(initial)) << "\n";
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& s = t.steps[k];
    std::cout << "demo " << (k + 1) << ": " << (s.demo.label == DemoLabel::Positive ? "+ " : "- ")
              << format_trajectory(s.demo.trajectory, p.domain()) << "  (L=" << s.demo.length()
              << ", eliminates " << s.eliminated.size() << ", learner -> " << render(p.formula(s.hypothesis_after))
              << ")\n";
  }
  std::cout << "AN = " << t.an_cost << ", AL = " << t.al_cost << ", status " << status_name(t.status) << "\n";
  const Costs c = teaching_complexity(p, pref, initial, demonstration_pool(p, 5));
  std::cout << "optimal over all demonstrations of length <= 5: AN = " << c.an << ", AL = " << c.al << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Teaching bounded temporal logic formulas to a simulated learner"};
  app.require_subcommand(1);

  std::string config, suite, out, format, export_lp;
  std::optional<std::uint64_t> seed;
  bool short_mode = false;
  auto* run = app.add_subcommand("run", "Run an experiment or a named suite");
  run->add_option("--config", config, "Config file")->required()->check(CLI::ExistingFile);
  run->add_option("--suite", suite, "global_uniform | positive_only | adaptive_vs_nonadaptive | oracle_vs_plain | timing");
  run->add_option("--seed", seed, "Master seed (overrides the config)");
  run->add_option("--out", out, "Output directory");
  run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--export-lp", export_lp, "Write every chosen synthesis instance as an LP file here");
  run->add_flag("--short", short_mode, "60 s budget for the exhaustive baseline");

  bool full = false;
  std::uint64_t check_seed = 1;
  auto* check = app.add_subcommand("check", "Run the verification battery");
  check->add_flag("--full", full, "Ten times the quick case counts");
  check->add_option("--seed", check_seed, "Fuzzer seed");

  std::string demo_objective = "AN";
  auto* demo = app.add_subcommand("demo", "Replay the card-suit walkthrough");
  demo->add_option("--objective", demo_objective, "AN or AL")->check(CLI::IsMember({"AN", "AL"}));

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return cmd_run(config, suite, seed, out, format, export_lp, short_mode);
    if (*check) return cmd_check(full, check_seed);
    if (*demo) return cmd_demo(demo_objective);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
