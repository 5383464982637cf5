#include "tlteach/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tlteach/parser.hpp"

namespace tlteach {

namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

bool parse_bool(const std::string& v, const std::string& key) {
  if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
  if (v == "false" || v == "no" || v == "0" || v == "off") return false;
  throw std::invalid_argument("config key '" + key + "': expected a boolean, got '" + v + "'");
}

std::uint64_t parse_uint(const std::string& v, const std::string& key) {
  std::size_t used = 0;
  unsigned long long x = 0;
  try {
    x = std::stoull(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty() || v[0] == '-') {
    throw std::invalid_argument("config key '" + key + "': expected a non-negative integer, got '" + v + "'");
  }
  return x;
}

double parse_double(const std::string& v, const std::string& key) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) {
    throw std::invalid_argument("config key '" + key + "': expected a number, got '" + v + "'");
  }
  return x;
}

void require_one_of(const std::string& v, const std::string& key, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (v == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw std::invalid_argument("config key '" + key + "': '" + v + "' is not one of {" + list + "}");
}

void validate(ExperimentConfig& c) {
  require_one_of(c.domain, "domain", {"numeric", "gridworld"});
  require_one_of(c.preference, "preference", {"uniform", "global_implication", "local_manhattan", "noisy_local"});
  require_one_of(c.objective, "objective", {"AN", "AL"});
  require_one_of(c.method, "method", {"tlip", "esmt", "rg"});
  require_one_of(c.oracle, "oracle", {"none", "boundary"});
  require_one_of(c.learner_ties, "learner_ties", {"random", "adversarial", "first"});
  require_one_of(c.simulated_ties, "simulated_ties", {"random", "adversarial", "first"});
  require_one_of(c.initial_op, "initial_op", {"any", "F", "G"});
  require_one_of(c.target_op, "target_op", {"any", "F", "G"});
  require_one_of(c.relation, "relation", {"default", "map"});
  require_one_of(c.format, "format", {"csv", "json"});
  if (c.sessions < 1) throw std::invalid_argument("config key 'sessions' must be at least 1");
  if (c.sample_size < 1) throw std::invalid_argument("config key 'sample_size' must be at least 1");
  for (auto a : c.grid_sizes) {
    if (a < 1) throw std::invalid_argument("config key 'a' must be at least 1");
  }
  if (c.boundary_formulas && c.domain != "numeric") {
    throw std::invalid_argument("boundary formulas need the numeric domain");
  }
  if (c.oracle == "boundary" && !c.boundary_formulas) {
    throw std::invalid_argument("oracle 'boundary' needs boundary_formulas = true");
  }
  for (const auto* f : {&c.initial, &c.target}) {
    if (*f) parse(**f);
  }
  for (auto a : c.grid_sizes) {
    if (c.l_max && c.l_max < a) {
      c.warnings.push_back("l_max " + std::to_string(c.l_max) + " is below a = " + std::to_string(a) +
                           "; some hypotheses may be impossible to eliminate");
    }
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig c;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::map<std::string, std::function<void(const std::string&)>> setters{
      {"domain", [&](const std::string& v) { c.domain = v; }},
      {"a",
       [&](const std::string& v) {
         c.grid_sizes.clear();
         std::stringstream ss(v);
         std::string item;
         while (std::getline(ss, item, ',')) c.grid_sizes.push_back(parse_uint(trim(item), "a"));
       }},
      {"preference", [&](const std::string& v) { c.preference = v; }},
      {"perturb_radius", [&](const std::string& v) { c.perturb_radius = static_cast<unsigned>(parse_uint(v, "perturb_radius")); }},
      {"operator_penalty", [&](const std::string& v) { c.operator_penalty = parse_double(v, "operator_penalty"); }},
      {"boundary_formulas", [&](const std::string& v) { c.boundary_formulas = parse_bool(v, "boundary_formulas"); }},
      {"objective", [&](const std::string& v) { c.objective = v; }},
      {"method", [&](const std::string& v) { c.method = v; }},
      {"adaptive", [&](const std::string& v) { c.adaptive = parse_bool(v, "adaptive"); }},
      {"oracle", [&](const std::string& v) { c.oracle = v; }},
      {"positive_only", [&](const std::string& v) { c.positive_only = parse_bool(v, "positive_only"); }},
      {"l_max", [&](const std::string& v) { c.l_max = parse_uint(v, "l_max"); }},
      {"sample_size", [&](const std::string& v) { c.sample_size = parse_uint(v, "sample_size"); }},
      {"sessions", [&](const std::string& v) { c.sessions = parse_uint(v, "sessions"); }},
      {"seed", [&](const std::string& v) { c.seed = parse_uint(v, "seed"); }},
      {"learner_ties", [&](const std::string& v) { c.learner_ties = v; }},
      {"simulated_ties", [&](const std::string& v) { c.simulated_ties = v; }},
      {"initial_op", [&](const std::string& v) { c.initial_op = v; }},
      {"target_op", [&](const std::string& v) { c.target_op = v; }},
      {"teachable_pairs", [&](const std::string& v) { c.teachable_pairs = parse_bool(v, "teachable_pairs"); }},
      {"initial", [&](const std::string& v) { c.initial = v; }},
      {"target", [&](const std::string& v) { c.target = v; }},
      {"map", [&](const std::string& v) { c.map_file = v; }},
      {"map_seed", [&](const std::string& v) { c.map_seed = parse_uint(v, "map_seed"); }},
      {"relation", [&](const std::string& v) { c.relation = v; }},
      {"step_timeout_s", [&](const std::string& v) { c.step_timeout_s = parse_double(v, "step_timeout_s"); }},
      {"esmt_timeout_s", [&](const std::string& v) { c.esmt_timeout_s = parse_double(v, "esmt_timeout_s"); }},
      {"short", [&](const std::string& v) { c.short_mode = parse_bool(v, "short"); }},
      {"iteration_cap", [&](const std::string& v) { c.iteration_cap = parse_uint(v, "iteration_cap"); }},
      {"out", [&](const std::string& v) { c.out = v; }},
      {"format", [&](const std::string& v) { c.format = v; }},
      {"export_lp", [&](const std::string& v) { c.export_lp = v; }},
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto it = setters.find(key);
    if (it == setters.end()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    it->second(value);
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_config(ss.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::vector<MethodSummary> summarize(const std::vector<SessionRecord>& sessions) {
  std::vector<MethodSummary> out;
  std::vector<std::size_t> demo_steps;
  for (const auto& s : sessions) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const MethodSummary& m) { return m.method == s.method && m.a == s.a; });
    if (it == out.end()) {
      out.push_back(MethodSummary{s.method, s.a});
      demo_steps.push_back(0);
      it = out.end() - 1;
    }
    const std::size_t idx = static_cast<std::size_t>(it - out.begin());
    MethodSummary& m = *it;
    ++m.sessions;
    m.mean_step_ms += s.transcript.solver_ms;
    demo_steps[idx] += s.transcript.steps.size();
    if (!s.completed) continue;
    const std::size_t an = s.transcript.an_cost, al = s.transcript.al_cost;
    if (m.completed == 0) {
      m.min_an = m.max_an = an;
      m.min_al = m.max_al = al;
    }
    ++m.completed;
    m.mean_an += static_cast<double>(an);
    m.mean_al += static_cast<double>(al);
    m.min_an = std::min(m.min_an, an);
    m.max_an = std::max(m.max_an, an);
    m.min_al = std::min(m.min_al, al);
    m.max_al = std::max(m.max_al, al);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    MethodSummary& m = out[i];
    if (m.completed) {
      m.mean_an /= static_cast<double>(m.completed);
      m.mean_al /= static_cast<double>(m.completed);
    }
    m.mean_step_ms = demo_steps[i] ? m.mean_step_ms / static_cast<double>(demo_steps[i]) : 0;
  }
  return out;
}

const MethodSummary* find_summary(const ExperimentReport& r, const std::string& method, std::uint64_t a) {
  for (const auto& m : r.summaries) {
    if (m.method == method && m.a == a) return &m;
  }
  return nullptr;
}

void add_deltas(ExperimentReport& r, const std::string& base, const std::string& other) {
  std::vector<std::uint64_t> sizes;
  for (const auto& m : r.summaries) {
    if (std::find(sizes.begin(), sizes.end(), m.a) == sizes.end()) sizes.push_back(m.a);
  }
  for (auto a : sizes) {
    const MethodSummary* b = find_summary(r, base, a);
    const MethodSummary* o = find_summary(r, other, a);
    if (!b || !o || b->completed == 0 || o->completed == 0) continue;
    for (const char* metric : {"an", "al"}) {
      Delta d;
      d.a = a;
      d.metric = metric;
      d.base = base;
      d.other = other;
      d.base_mean = d.metric == "an" ? b->mean_an : b->mean_al;
      d.other_mean = d.metric == "an" ? o->mean_an : o->mean_al;
      d.relative = d.base_mean != 0 ? (d.other_mean - d.base_mean) / d.base_mean : 0;
      r.deltas.push_back(std::move(d));
    }
  }
}

std::string method_label(const ExperimentConfig& cfg) {
  std::string s;
  if (cfg.oracle != "none") s += "Oracle-";
  if (cfg.preference == "local_manhattan" || cfg.preference == "noisy_local") s += cfg.adaptive ? "Ada-" : "NAda-";
  s += cfg.objective + "-";
  s += cfg.method == "tlip" ? "TLIP" : cfg.method == "esmt" ? "ESMT" : "RG";
  if (cfg.positive_only) s += "-pos";
  return s;
}

std::uint64_t session_seed(std::uint64_t master, std::uint64_t a, std::size_t session) {
  std::uint64_t s = master;
  std::uint64_t x = splitmix64(s);
  s = x ^ (a * 0x9e3779b97f4a7c15ULL);
  x = splitmix64(s);
  s = x ^ (static_cast<std::uint64_t>(session) + 1) * 0xbf58476d1ce4e5b9ULL;
  return splitmix64(s);
}

std::size_t worker_count() {
  if (const char* env = std::getenv("TEACH_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

struct GridContext {
  std::uint64_t a = 0;
  StateDomain domain;
  HypothesisSet hyps;
  PreferenceModel pref;
  std::size_t core_size = 0;  // formulas before the boundary extension
};

StateDomain make_domain(const ExperimentConfig& cfg) {
  if (cfg.domain == "numeric") return numeric_domain(10);
  const ColorMap map = cfg.map_file.empty() ? generate_color_map(cfg.map_seed) : load_color_map(cfg.map_file);
  return gridworld_domain(map, cfg.relation == "map");
}

GridContext make_context(const ExperimentConfig& cfg, std::uint64_t a) {
  GridContext g;
  g.a = a;
  g.domain = make_domain(cfg);
  g.core_size = generate_hypothesis_grid(g.domain, a, false).size();
  g.hyps = generate_hypothesis_grid(g.domain, a, cfg.boundary_formulas);
  const std::size_t n = g.hyps.size();
  if (cfg.preference == "uniform") {
    g.pref = PreferenceModel::uniform(n);
  } else if (cfg.preference == "global_implication") {
    g.pref = implication_preference(g.hyps);
  } else {
    PreferenceModel local = manhattan_preference(g.hyps, cfg.operator_penalty, true);
    g.pref = cfg.preference == "noisy_local" ? noisy_local_preference(local, g.hyps, cfg.perturb_radius) : local;
  }
  return g;
}

TiePolicy tie_policy(const std::string& name) {
  if (name == "adversarial") return TiePolicy::adversarial();
  if (name == "first") return TiePolicy::first_index();
  return TiePolicy::random();
}

std::chrono::milliseconds seconds_to_ms(double s) {
  return std::chrono::milliseconds(static_cast<std::int64_t>(s * 1000.0));
}

TeacherConfig teacher_config(const ExperimentConfig& cfg, std::uint64_t a) {
  TeacherConfig t;
  t.objective = cfg.objective == "AL" ? Objective::AL : Objective::AN;
  t.method = cfg.method == "esmt" ? Method::ESMT : cfg.method == "rg" ? Method::RandomizedGreedy : Method::TLIP;
  t.adaptive = cfg.adaptive;
  t.myopic = cfg.oracle == "none";
  t.positive_only = cfg.positive_only;
  t.l_max = cfg.l_max ? cfg.l_max : a + 1;
  t.budget.wall = seconds_to_ms(cfg.step_timeout_s);
  t.esmt_budget = seconds_to_ms(cfg.short_mode ? 60.0 : cfg.esmt_timeout_s);
  t.sample_size = cfg.sample_size;
  t.simulated = tie_policy(cfg.simulated_ties);
  t.iteration_cap = cfg.iteration_cap;
  return t;
}

bool op_matches(const Formula& f, const std::string& op) {
  if (op == "F") return f.op() == Op::Eventually;
  if (op == "G") return f.op() == Op::Always;
  return true;
}

std::size_t fixed_id(const GridContext& g, const std::string& text) {
  const auto id = g.hyps.index_of(parse(text));
  if (!id) throw std::invalid_argument("formula '" + text + "' is not in the hypothesis grid");
  return *id;
}

/// (initial, target) for one session, drawn from the core grid.
std::pair<std::size_t, std::size_t> draw_pair(const GridContext& g, const ExperimentConfig& cfg, std::uint64_t seed) {
  std::uint64_t rng = seed;
  const std::uint64_t l_max = cfg.l_max ? cfg.l_max : g.a + 1;
  auto teachable_target = [&](std::size_t id) {
    if (!cfg.teachable_pairs) return true;
    HypothesisSet hyps = g.hyps;
    hyps.target_id = id;
    return teachability_checks(Problem(g.domain, std::move(hyps)), g.pref, l_max).positive_teachable();
  };
  IdList targets, initials;
  for (std::size_t i = 0; i < g.core_size; ++i) {
    if (op_matches(g.hyps.formulas[i], cfg.target_op) && teachable_target(i)) targets.push_back(i);
    if (op_matches(g.hyps.formulas[i], cfg.initial_op)) initials.push_back(i);
  }
  std::size_t target = 0;
  if (cfg.target) {
    target = fixed_id(g, *cfg.target);
  } else {
    if (targets.empty()) throw std::invalid_argument("no hypothesis matches target_op");
    target = targets[splitmix64(rng) % targets.size()];
  }
  std::size_t initial = 0;
  if (cfg.initial) {
    initial = fixed_id(g, *cfg.initial);
  } else {
    initials.erase(std::remove(initials.begin(), initials.end(), target), initials.end());
    if (cfg.teachable_pairs) {
      const Formula& t = g.hyps.formulas[target];
      std::erase_if(initials, [&](std::size_t i) { return implies_syntactic(t, g.hyps.formulas[i]) == Tri::Holds; });
    }
    if (initials.empty()) throw std::invalid_argument("no hypothesis matches initial_op");
    initial = initials[splitmix64(rng) % initials.size()];
  }
  if (initial == target) throw std::invalid_argument("initial and target hypotheses coincide");
  return {initial, target};
}

SessionRecord run_session(const GridContext& g, const ExperimentConfig& cfg, const std::string& suite,
                          std::size_t session) {
  SessionRecord r;
  r.suite = suite;
  r.method = method_label(cfg);
  r.a = g.a;
  r.session = session;
  r.seed = session_seed(cfg.seed, g.a, session);
  try {
    const auto [initial, target] = draw_pair(g, cfg, r.seed);
    r.initial_id = initial;
    r.target_id = target;
    r.initial = render(g.hyps.formulas[initial]);
    r.target = render(g.hyps.formulas[target]);
    HypothesisSet hyps = g.hyps;
    hyps.target_id = target;
    const Problem p(g.domain, std::move(hyps));
    TeacherConfig tc = teacher_config(cfg, g.a);
    if (!cfg.export_lp.empty()) {
      tc.export_lp_dir = cfg.export_lp;
      tc.export_lp_prefix = suite + "_" + r.method + "_a" + std::to_string(g.a) + "_s" + std::to_string(session);
    }
    Oracle oracle;
    if (cfg.oracle == "boundary") {
      oracle = [&p](std::size_t cur, const VersionSpace& space, std::size_t tgt) {
        return oracle_boundary(p, cur, space, tgt);
      };
    }
    Teacher teacher(p, g.pref, tc, oracle);
    r.transcript = teacher.teach(initial, tie_policy(cfg.learner_ties), r.seed ^ 0x2545f4914f6cdd1dULL);
    r.completed = r.transcript.reached_target;
    r.timeout = r.transcript.status == SessionStatus::Budget;
    if (!r.completed) r.note = status_name(r.transcript.status);
  } catch (const std::exception& e) {
    r.completed = false;
    r.note = e.what();
  }
  return r;
}

/// Runs every task on the worker pool; results keep task order.
std::vector<SessionRecord> run_tasks(const std::vector<std::function<SessionRecord()>>& tasks) {
  std::vector<SessionRecord> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) out[i] = tasks[i]();
  };
  const std::size_t n = std::min(worker_count(), tasks.size());
  if (n <= 1) {
    work();
    return out;
  }
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < n; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  return out;
}

std::vector<std::uint64_t> sizes_or(const ExperimentConfig& cfg, std::vector<std::uint64_t> fallback) {
  return cfg.grid_sizes.empty() ? fallback : cfg.grid_sizes;
}

ExperimentReport run_matrix(const std::string& suite, const std::vector<ExperimentConfig>& variants,
                            const std::vector<std::uint64_t>& sizes) {
  ExperimentReport report;
  report.suite = suite;
  report.domain = variants.front().domain;
  std::vector<GridContext> contexts;
  for (auto a : sizes) contexts.push_back(make_context(variants.front(), a));
  std::vector<std::function<SessionRecord()>> tasks;
  for (std::size_t gi = 0; gi < contexts.size(); ++gi) {
    for (const auto& v : variants) {
      for (std::size_t s = 0; s < v.sessions; ++s) {
        tasks.push_back([&contexts, gi, &v, &suite, s] { return run_session(contexts[gi], v, suite, s); });
      }
    }
  }
  report.sessions = run_tasks(tasks);
  report.summaries = summarize(report.sessions);
  return report;
}

/// One greedy step per (method, L_max) at the largest grid size, from the full version space.
ExperimentReport run_timing(const ExperimentConfig& base) {
  ExperimentReport report;
  report.suite = "timing";
  report.domain = base.domain;
  const auto sizes = sizes_or(base, {15});
  const std::uint64_t a = *std::max_element(sizes.begin(), sizes.end());
  const GridContext g = make_context(base, a);
  std::vector<std::function<SessionRecord()>> tasks;
  for (std::uint64_t l_max : {5, 10, 15}) {
    for (const char* method : {"tlip", "esmt"}) {
      // ESMT: one session per L_max.
      const std::size_t sessions = std::string(method) == "esmt" ? 1 : base.sessions;
      for (std::size_t s = 0; s < sessions; ++s) {
        tasks.push_back([&g, &base, l_max, method, s, a] {
          ExperimentConfig cfg = base;
          cfg.method = method;
          cfg.l_max = l_max;
          SessionRecord r;
          r.suite = "timing";
          r.method = std::string(method == std::string("tlip") ? "TLIP" : "ESMT") + "-L" + std::to_string(l_max);
          r.a = a;
          r.session = s;
          r.seed = session_seed(cfg.seed, a, s);
          try {
            const auto [initial, target] = draw_pair(g, cfg, r.seed);
            r.initial_id = initial;
            r.target_id = target;
            r.initial = render(g.hyps.formulas[initial]);
            r.target = render(g.hyps.formulas[target]);
            HypothesisSet hyps = g.hyps;
            hyps.target_id = target;
            const Problem p(g.domain, std::move(hyps));
            Teacher teacher(p, g.pref, teacher_config(cfg, a));
            const VersionSpace full = VersionSpace::full(p.size());
            const IdList preferred = teacher.preferred_for(full, initial, target);
            std::uint64_t rng = r.seed;
            const DemoChoice c = teacher.compute_demonstration(full, preferred, target, rng);
            r.transcript.initial = initial;
            r.transcript.target = target;
            r.transcript.solver_ms = c.solver_ms;
            r.timeout = c.budget_exhausted;
            if (c.found && !c.budget_exhausted) {
              StepRecord step;
              step.demo = c.demo;
              step.eliminated = c.eliminated;
              step.kappa = c.kappa;
              step.preferred_size = preferred.size();
              step.solver_ms = c.solver_ms;
              step.nodes = c.nodes;
              audit_emission(p, full, c.demo, step);
              r.transcript.demos.push_back(c.demo);
              r.transcript.steps.push_back(step);
              r.transcript.an_cost = 1;
              r.transcript.al_cost = c.demo.length();
              r.completed = true;
            } else {
              r.transcript.status = SessionStatus::Budget;
              r.note = r.timeout ? "TIMEOUT" : "no demonstration";
            }
          } catch (const std::exception& e) {
            r.note = e.what();
          }
          return r;
        });
      }
    }
  }
  report.sessions = run_tasks(tasks);
  report.summaries = summarize(report.sessions);
  return report;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  return run_matrix("experiment", {cfg}, sizes_or(cfg, {5}));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"global_uniform", "positive_only", "adaptive_vs_nonadaptive",
                                              "oracle_vs_plain", "timing"};
  return names;
}

ExperimentReport run_suite(const std::string& suite, const ExperimentConfig& base) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  if (suite == "timing") return run_timing(base);

  const auto sizes = sizes_or(base, {5, 10, 15});
  std::vector<ExperimentConfig> variants;
  auto variant = [&](const std::string& objective, const std::string& method, auto&& tweak) {
    ExperimentConfig c = base;
    c.objective = objective;
    c.method = method;
    tweak(c);
    variants.push_back(std::move(c));
    return method_label(variants.back());
  };
  ExperimentReport r;
  std::vector<std::pair<std::string, std::string>> pairs;
  if (suite == "global_uniform") {
    auto set = [](ExperimentConfig& c) {
      c.preference = "uniform";
      c.oracle = "none";
      c.positive_only = false;
    };
    const auto an_tlip = variant("AN", "tlip", set);
    const auto al_tlip = variant("AL", "tlip", set);
    const auto an_rg = variant("AN", "rg", set);
    const auto al_rg = variant("AL", "rg", set);
    pairs = {{an_tlip, al_tlip}, {an_tlip, an_rg}, {al_tlip, an_tlip}, {al_tlip, al_rg}};
  } else if (suite == "positive_only") {
    auto mixed = [](ExperimentConfig& c) {
      c.preference = "global_implication";
      c.teachable_pairs = true;
      c.oracle = "none";
      c.positive_only = false;
    };
    auto pos = [&](ExperimentConfig& c) { mixed(c); c.positive_only = true; };
    const auto an_mixed = variant("AN", "tlip", mixed);
    const auto an_pos = variant("AN", "tlip", pos);
    const auto al_mixed = variant("AL", "tlip", mixed);
    const auto al_pos = variant("AL", "tlip", pos);
    pairs = {{an_mixed, an_pos}, {al_mixed, al_pos}};
  } else if (suite == "adaptive_vs_nonadaptive") {
    for (const char* objective : {"AN", "AL"}) {
      for (const char* method : {"tlip", "rg"}) {
        auto nada = [](ExperimentConfig& c) { c.preference = "noisy_local"; c.adaptive = false; c.oracle = "none"; };
        auto ada = [](ExperimentConfig& c) { c.preference = "noisy_local"; c.adaptive = true; c.oracle = "none"; };
        const auto n = variant(objective, method, nada);
        const auto a = variant(objective, method, ada);
        pairs.emplace_back(n, a);
      }
    }
  } else if (suite == "oracle_vs_plain") {
    for (const char* objective : {"AN", "AL"}) {
      auto plain = [](ExperimentConfig& c) {
        c.preference = "local_manhattan";
        c.boundary_formulas = true;
        c.adaptive = true;
        c.oracle = "none";
        c.initial_op = "F";
        c.target_op = "G";
      };
      auto with_oracle = [&](ExperimentConfig& c) { plain(c); c.oracle = "boundary"; };
      const auto p = variant(objective, "tlip", plain);
      const auto o = variant(objective, "tlip", with_oracle);
      pairs.emplace_back(p, o);
    }
  }
  r = run_matrix(suite, variants, sizes);
  for (const auto& [b, o] : pairs) add_deltas(r, b, o);
  return r;
}

}  // namespace tlteach
