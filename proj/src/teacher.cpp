#include "tlteach/teacher.hpp"

#include <algorithm>
#include <filesystem>
#include <stdexcept>

#include "tlteach/lp_export.hpp"

namespace tlteach {

const char* status_name(SessionStatus s) {
  switch (s) {
    case SessionStatus::Reached: return "reached";
    case SessionStatus::NoProgress: return "no-progress";
    case SessionStatus::IterationCap: return "iteration-cap";
    case SessionStatus::Budget: return "budget";
  }
  return "?";
}

SessionStatus status_from_name(const std::string& s) {
  for (auto st : {SessionStatus::Reached, SessionStatus::NoProgress, SessionStatus::IterationCap,
                  SessionStatus::Budget}) {
    if (s == status_name(st)) return st;
  }
  throw std::invalid_argument("unknown session status '" + s + "'");
}

Costs cost_metrics(const TeachingTranscript& t) {
  Costs c;
  c.an = t.demos.size();
  for (const auto& d : t.demos) c.al += d.length();
  return c;
}

void EmissionAudit::reset() {
  demos = 0;
  theorem1_violations = 0;
  invalid_label = 0;
  invalid_transition = 0;
}

EmissionAudit& emission_audit() {
  static EmissionAudit audit;
  return audit;
}

std::uint64_t theorem1_lower_bound(const Formula& target, const std::vector<Formula>& eliminated, DemoLabel l) {
  std::uint64_t b = minimal_length(target, l);
  for (const auto& f : eliminated) b = std::max(b, minimal_length(f, -l));
  return b;
}

Teacher::Teacher(const Problem& p, const PreferenceModel& pref, TeacherConfig cfg, Oracle oracle)
    : p_(p), pref_(pref), cfg_(std::move(cfg)), oracle_(std::move(oracle)) {
  if (cfg_.l_max < 1) throw std::invalid_argument("L_max must be at least 1");
  if (!cfg_.myopic && !oracle_) throw std::invalid_argument("oracle-guided teaching needs an oracle");
  if (pref_.size() != p_.size()) throw std::invalid_argument("preference model size does not match hypotheses");
}

IdList Teacher::preferred_for(const VersionSpace& space, std::size_t current_view, std::size_t intermediate) const {
  IdList out;
  if (!pref_.is_global() && cfg_.adaptive) {
    out = preferred_version_space(current_view, space, pref_, intermediate);
  } else {
    out = preferred_set(space, pref_, intermediate);
  }
  if (current_view != intermediate && space.contains(current_view) &&
      std::find(out.begin(), out.end(), current_view) == out.end()) {
    out.push_back(current_view);
    std::sort(out.begin(), out.end());
  }
  return out;
}

namespace {

struct Found {
  bool ok = false;
  std::uint64_t length = 0;
  IpSolution sol;
  IpInstance inst;
};

// a/b > c/d for non-negative counts and positive lengths.
bool ratio_greater(std::size_t a, std::uint64_t b, std::size_t c, std::uint64_t d) { return a * d > c * b; }

}  // namespace

DemoChoice Teacher::solve_tlip(const VersionSpace& space, const IdList& preferred, std::size_t intermediate) {
  DemoChoice out;
  const Formula& target = p_.target();
  const auto start = std::chrono::steady_clock::now();
  const auto deadline = start + cfg_.esmt_budget;
  const bool exhaustive = cfg_.method == Method::ESMT;

  auto solve = [&](IpVariant v, std::uint64_t L, std::int64_t beat, Found& f) -> bool {
    IpInstance inst = inject_constraints(build_ip(v, preferred, p_, target, L), p_.domain());
    if (intermediate != p_.target_id()) inst.protect.push_back(p_.formula(intermediate));
    IpSolution s;
    if (exhaustive) {
      SolverBudget b = cfg_.budget;
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
      b.wall = std::max(left, std::chrono::milliseconds(1));
      s = solve_ip_exhaustive(inst, b);
      s.improved = s.feasible && static_cast<std::int64_t>(s.kappa) > beat;
    } else {
      s = solve_ip(inst, cfg_.budget, beat);
    }
    out.nodes += s.nodes;
    out.budget_exhausted = out.budget_exhausted || s.budget_exhausted;
    if (!s.improved) return false;
    f.ok = true;
    f.length = L;
    f.sol = std::move(s);
    f.inst = std::move(inst);
    return true;
  };

  std::vector<IpVariant> variants{IpVariant::Pos};
  if (!cfg_.positive_only) variants.push_back(IpVariant::Neg);
  Found best_of[2];
  for (std::size_t vi = 0; vi < variants.size(); ++vi) {
    const IpVariant v = variants[vi];
    const std::uint64_t lb = std::max<std::uint64_t>(1, minimal_length(target, label_of(v)));
    if (lb > cfg_.l_max) continue;
    Found& best = best_of[vi];
    if (cfg_.objective == Objective::AN) {
      if (!solve(v, cfg_.l_max, -1, best)) continue;
      for (std::uint64_t L = lb; L < cfg_.l_max && !out.budget_exhausted; ++L) {
        const auto k = static_cast<std::int64_t>(best.sol.kappa);
        Found f;
        if (solve(v, L, L < best.length ? k - 1 : k, f)) best = std::move(f);
      }
    } else {
      for (std::uint64_t L = lb; L <= cfg_.l_max && !out.budget_exhausted; ++L) {
        const std::int64_t beat =
            best.ok ? static_cast<std::int64_t>((best.sol.kappa * L) / best.length) : -1;
        Found f;
        if (solve(v, L, beat, f)) best = std::move(f);
      }
    }
  }
  out.solver_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const Found* pick = nullptr;
  const Found& pos = best_of[0];
  const Found& neg = best_of[1];
  if (pos.ok && neg.ok) {
    const bool pos_wins = cfg_.objective == Objective::AN
                              ? pos.sol.kappa >= neg.sol.kappa
                              : !ratio_greater(neg.sol.kappa, neg.length, pos.sol.kappa, pos.length);
    pick = pos_wins ? &pos : &neg;
  } else if (pos.ok) {
    pick = &pos;
  } else if (neg.ok) {
    pick = &neg;
  }
  if (!pick) return out;
  out.found = true;
  out.demo = Demonstration{pick->sol.trajectory, label_of(pick->inst.variant)};
  out.eliminated_preferred = pick->sol.eliminated;
  out.kappa = pick->sol.kappa;
  out.eliminated = eliminated_by(p_, space.ids(), out.demo);
  out.instance = pick->inst;
  return out;
}

DemoChoice Teacher::solve_random(const VersionSpace& space, const IdList& preferred, std::size_t intermediate,
                                 std::uint64_t& rng) {
  DemoChoice out;
  const auto start = std::chrono::steady_clock::now();
  IdList candidates;
  for (std::size_t id : preferred) {
    if (id != p_.target_id() && id != intermediate) candidates.push_back(id);
  }
  const StateDomain& d = p_.domain();
  const Evaluator target_eval(d, p_.target());
  std::optional<Evaluator> protect;
  if (intermediate != p_.target_id()) protect.emplace(d, p_.formula(intermediate));

  auto uniform_bit = [&](StateMask m) {
    std::vector<State> opts;
    for (std::size_t s = 0; s < d.size(); ++s) {
      if ((m >> s) & 1U) opts.push_back(static_cast<State>(s));
    }
    return opts[splitmix64(rng) % opts.size()];
  };

  std::size_t best_kappa = 0;
  std::uint64_t best_len = 1;
  for (std::size_t draw = 0; draw < cfg_.sample_size; ++draw) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const std::uint64_t L = 1 + splitmix64(rng) % cfg_.l_max;
      Trajectory rho;
      rho.push_back(uniform_bit(d.all_states()));
      while (rho.size() < L) rho.push_back(uniform_bit(d.successors(rho.back())));
      const Verdict v = target_eval.verdict(rho);
      if (v == Verdict::Undetermined) continue;
      if (cfg_.positive_only && v != Verdict::Satisfied) continue;
      const Demonstration demo{rho, v == Verdict::Satisfied ? DemoLabel::Positive : DemoLabel::Negative};
      const Verdict kill = demo.label == DemoLabel::Positive ? Verdict::Violated : Verdict::Satisfied;
      if (protect && protect->verdict(rho) == kill) continue;
      const IdList elim = eliminated_by(p_, candidates, demo);
      const bool better = !out.found || (cfg_.objective == Objective::AN
                                             ? elim.size() > best_kappa
                                             : ratio_greater(elim.size(), L, best_kappa, best_len));
      if (better) {
        out.found = true;
        out.demo = demo;
        out.eliminated_preferred = elim;
        out.kappa = elim.size();
        best_kappa = elim.size();
        best_len = L;
      }
      break;
    }
  }
  if (out.found) out.eliminated = eliminated_by(p_, space.ids(), out.demo);
  out.solver_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

DemoChoice Teacher::compute_demonstration(const VersionSpace& space, const IdList& preferred,
                                          std::size_t intermediate, std::uint64_t& rng) {
  bool anything = false;
  for (std::size_t id : preferred) anything = anything || (id != p_.target_id() && id != intermediate);
  if (!anything) throw std::logic_error("preferred set holds nothing to eliminate");
  if (cfg_.method == Method::RandomizedGreedy) return solve_random(space, preferred, intermediate, rng);

  std::vector<std::uint64_t> key;
  key.push_back(intermediate);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < space.universe(); ++i) {
    if (space.contains(i)) word |= std::uint64_t{1} << (i % 64);
    if (i % 64 == 63) key.push_back(std::exchange(word, 0));
  }
  key.push_back(word);
  key.insert(key.end(), preferred.begin(), preferred.end());
  auto it = cache_.find(key);
  DemoChoice c;
  if (it != cache_.end()) {
    c = it->second;
  } else {
    c = solve_tlip(space, preferred, intermediate);
    if (!c.budget_exhausted) cache_.emplace(std::move(key), c);
  }
  if (c.found && !cfg_.export_lp_dir.empty() && c.instance) {
    std::filesystem::create_directories(cfg_.export_lp_dir);
    const auto path = std::filesystem::path(cfg_.export_lp_dir) /
                      (cfg_.export_lp_prefix + "_" + std::to_string(lp_counter_++) + ".lp");
    write_lp_file(to_linear_model(*c.instance), path.string());
  }
  return c;
}

void audit_emission(const Problem& p, const VersionSpace& before, const Demonstration& demo, StepRecord& rec) {
  auto& audit = emission_audit();
  ++audit.demos;
  const Verdict want = demo.label == DemoLabel::Positive ? Verdict::Satisfied : Verdict::Violated;
  if (verdict(p.domain(), p.target(), demo.trajectory) != want) ++audit.invalid_label;
  if (!valid_trajectory(demo.trajectory, p.domain())) ++audit.invalid_transition;
  std::vector<Formula> gone;
  for (std::size_t id : eliminated_by(p, before.ids(), demo)) gone.push_back(p.formula(id));
  rec.lower_bound = theorem1_lower_bound(p.target(), gone, demo.label);
  if (demo.length() < rec.lower_bound) ++audit.theorem1_violations;
}

TeachingTranscript Teacher::teach(std::size_t initial, const TiePolicy& theta, std::uint64_t seed) {
  const std::size_t target = p_.target_id();
  if (initial == target) throw std::invalid_argument("initial hypothesis equals the target");
  if (initial >= p_.size()) throw std::invalid_argument("initial hypothesis out of range");

  TeachingTranscript tr;
  tr.initial = initial;
  tr.target = target;
  tr.hypothesis_path.push_back(initial);

  LearnerState actual{initial, VersionSpace::full(p_.size()), seed};
  std::size_t belief = initial;
  std::uint64_t belief_rng = seed ^ 0x5bd1e995ULL;
  std::uint64_t teacher_rng = seed ^ 0xa0761d6478bd642fULL;
  const std::size_t cap = cfg_.iteration_cap ? cfg_.iteration_cap : 10 * p_.size();

  while (actual.current != target) {
    if (tr.demos.size() >= cap) {
      tr.status = SessionStatus::IterationCap;
      break;
    }
    const std::size_t view = cfg_.adaptive ? actual.current : belief;
    std::size_t intermediate = target;
    if (oracle_) {
      intermediate = oracle_(view, actual.space, target);
      if (!actual.space.contains(intermediate)) intermediate = target;
    }
    IdList preferred;
    DemoChoice c;
    bool stuck = false;
    for (;;) {
      preferred = preferred_for(actual.space, view, intermediate);
      bool work = false;
      for (std::size_t id : preferred) work = work || (id != target && id != intermediate);
      if (work) {
        c = compute_demonstration(actual.space, preferred, intermediate, teacher_rng);
        tr.solver_ms += c.solver_ms;
        if (c.budget_exhausted && !c.found) break;
        if (c.found && (c.kappa > 0 || cfg_.method == Method::RandomizedGreedy)) break;
      }
      // Keeping the intermediate consistent can block every demo; teach the target instead.
      if (intermediate == target) {
        stuck = true;
        break;
      }
      intermediate = target;
    }
    if (stuck || !c.found) {
      tr.status = c.budget_exhausted ? SessionStatus::Budget : SessionStatus::NoProgress;
      break;
    }
    StepRecord rec;
    rec.demo = c.demo;
    rec.eliminated = c.eliminated;
    rec.kappa = c.kappa;
    rec.preferred_size = preferred.size();
    rec.hypothesis_before = actual.current;
    rec.intermediate = intermediate;
    rec.solver_ms = c.solver_ms;
    rec.nodes = c.nodes;
    rec.budget_exhausted = c.budget_exhausted;
    audit_emission(p_, actual.space, c.demo, rec);

    actual = learner_step(p_, actual, c.demo, pref_, theta);
    rec.hypothesis_after = actual.current;
    tr.demos.push_back(c.demo);
    tr.hypothesis_path.push_back(actual.current);
    tr.steps.push_back(std::move(rec));

    if (!cfg_.adaptive && !actual.space.contains(belief)) {
      // The simulated learner jumps within the preferred set.
      IdList options;
      for (std::size_t id : preferred) {
        if (id != target && actual.space.contains(id)) options.push_back(id);
      }
      belief = options.empty() ? target
                               : pick_tie(options, actual.space, pref_, target, cfg_.simulated, belief_rng);
    }
  }
  const Costs costs = cost_metrics(tr);
  tr.an_cost = costs.an;
  tr.al_cost = costs.al;
  tr.reached_target = actual.current == target;
  if (tr.reached_target) tr.status = SessionStatus::Reached;
  return tr;
}

TeachingTranscript tlip_teach(const Problem& p, std::size_t initial, const PreferenceModel& pref, TeacherConfig cfg,
                              const TiePolicy& theta, std::uint64_t seed, Oracle oracle) {
  cfg.method = Method::TLIP;
  if (oracle) cfg.myopic = false;
  return Teacher(p, pref, std::move(cfg), std::move(oracle)).teach(initial, theta, seed);
}

TeachingTranscript esmt_teach(const Problem& p, std::size_t initial, const PreferenceModel& pref, TeacherConfig cfg,
                              const TiePolicy& theta, std::uint64_t seed) {
  cfg.method = Method::ESMT;
  return Teacher(p, pref, std::move(cfg)).teach(initial, theta, seed);
}

TeachingTranscript randomized_greedy_teach(std::size_t sample_size, const Problem& p, std::size_t initial,
                                           const PreferenceModel& pref, TeacherConfig cfg, const TiePolicy& theta,
                                           std::uint64_t seed) {
  if (sample_size < 1) throw std::invalid_argument("sample size must be at least 1");
  cfg.method = Method::RandomizedGreedy;
  cfg.sample_size = sample_size;
  return Teacher(p, pref, std::move(cfg)).teach(initial, theta, seed);
}

TeachingTranscript positive_only_teach(const Problem& p, std::size_t initial, const PreferenceModel& pref,
                                       TeacherConfig cfg, const TiePolicy& theta, std::uint64_t seed) {
  cfg.positive_only = true;
  return Teacher(p, pref, std::move(cfg)).teach(initial, theta, seed);
}

std::vector<Demonstration> demonstration_pool(const Problem& p, std::uint64_t l_max, std::size_t limit) {
  std::vector<Demonstration> pool;
  const StateDomain& d = p.domain();
  const Evaluator target(d, p.target());
  Trajectory rho;
  auto rec = [&](auto&& self) -> void {
    if (!rho.empty()) {
      const Verdict v = target.verdict(rho);
      if (v != Verdict::Undetermined) {
        if (pool.size() >= limit) throw BudgetExceeded("demonstration pool exceeds its limit");
        pool.push_back({rho, v == Verdict::Satisfied ? DemoLabel::Positive : DemoLabel::Negative});
      }
    }
    if (rho.size() == l_max) return;
    const StateMask next = rho.empty() ? d.all_states() : d.successors(rho.back());
    for (std::size_t s = 0; s < d.size(); ++s) {
      if (!((next >> s) & 1U)) continue;
      rho.push_back(static_cast<State>(s));
      self(self);
      rho.pop_back();
    }
  };
  rec(rec);
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Demonstration& a, const Demonstration& b) { return a.length() < b.length(); });
  return pool;
}

std::vector<Demonstration> optimal_teach_setcover(const Problem& p, const std::vector<Demonstration>& pool,
                                                  const IdList& preferred, Objective objective) {
  IdList universe;
  for (std::size_t id : preferred) {
    if (id != p.target_id()) universe.push_back(id);
  }
  std::vector<IdList> family;
  std::vector<double> costs;
  family.reserve(pool.size());
  for (const auto& d : pool) {
    family.push_back(eliminated_by(p, universe, d));
    costs.push_back(objective == Objective::AN ? 1.0 : static_cast<double>(d.length()));
  }
  const CoverResult r = optimal_set_cover(universe, family, costs);
  if (!r.coverable) throw std::runtime_error("some preferred hypothesis is eliminated by no pool demonstration");
  IdList idx = r.chosen;
  std::sort(idx.begin(), idx.end());
  std::vector<Demonstration> out;
  for (std::size_t i : idx) out.push_back(pool[i]);
  return out;
}

IdList teaching_universe(const Problem& p, const PreferenceModel& pref, std::size_t initial) {
  const VersionSpace full = VersionSpace::full(p.size());
  IdList u = preferred_version_space(initial, full, pref, p.target_id());
  if (std::find(u.begin(), u.end(), initial) == u.end()) u.push_back(initial);
  u.erase(std::remove(u.begin(), u.end(), p.target_id()), u.end());
  std::sort(u.begin(), u.end());
  return u;
}

Costs teaching_complexity(const Problem& p, const PreferenceModel& pref, std::size_t initial,
                          const std::vector<Demonstration>& pool) {
  const IdList u = teaching_universe(p, pref, initial);
  Costs c;
  for (const auto& d : optimal_teach_setcover(p, pool, u, Objective::AN)) {
    (void)d;
    ++c.an;
  }
  for (const auto& d : optimal_teach_setcover(p, pool, u, Objective::AL)) c.al += d.length();
  return c;
}

Costs worst_case_costs(const Problem& p, std::size_t initial, const PreferenceModel& pref, const TeacherConfig& cfg,
                       std::size_t max_runs) {
  Teacher teacher(p, pref, cfg);
  Costs worst;
  std::vector<std::size_t> script;
  for (std::size_t run = 0;; ++run) {
    if (run >= max_runs) throw BudgetExceeded("tie-break enumeration exceeded its run limit");
    std::vector<std::size_t> arity;
    std::size_t pos = 0;
    const TiePolicy theta = TiePolicy::scripted([&](const IdList& ties) {
      const std::size_t idx = pos < script.size() ? script[pos] : 0;
      arity.push_back(ties.size());
      ++pos;
      return ties.at(idx);
    });
    const TeachingTranscript t = teacher.teach(initial, theta, 0);
    if (!t.reached_target) {
      throw std::runtime_error(std::string("worst-case enumeration hit an incomplete session: ") +
                               status_name(t.status));
    }
    worst.an = std::max(worst.an, t.an_cost);
    worst.al = std::max(worst.al, t.al_cost);
    script.resize(arity.size(), 0);
    std::size_t i = arity.size();
    while (i > 0 && script[i - 1] + 1 >= arity[i - 1]) --i;
    if (i == 0) break;
    ++script[i - 1];
    script.resize(i);
  }
  return worst;
}

TeachabilityReport teachability_checks(const Problem& p, const PreferenceModel& pref, std::uint64_t max_length) {
  TeachabilityReport r;
  r.max_length = max_length;
  const IdList pref_set = preferred_set(VersionSpace::full(p.size()), pref, p.target_id());
  for (std::size_t id : pref_set) {
    const Formula& f = p.formula(id);
    const auto zp = minimal_length(f, DemoLabel::Positive);
    const auto zn = minimal_length(f, DemoLabel::Negative);
    r.mixed_bound = std::max(r.mixed_bound, std::min(zp, zn));
    if (id == p.target_id()) continue;
    r.positive_bound = std::max(r.positive_bound, zn);
    if (!r.implied_witness && implies_syntactic(p.target(), f) == Tri::Holds) r.implied_witness = id;
  }
  r.positive_length_ok = max_length >= r.positive_bound;
  r.mixed_length_ok = max_length >= r.mixed_bound;
  r.no_preferred_implied = !r.implied_witness.has_value();
  return r;
}

TeachabilityReport teachability_checks(const Problem& p, const PreferenceModel& pref,
                                       const std::vector<Demonstration>& demos) {
  std::uint64_t m = 0;
  for (const auto& d : demos) m = std::max<std::uint64_t>(m, d.length());
  return teachability_checks(p, pref, m);
}

std::size_t oracle_boundary(const Problem& p, std::size_t current, const VersionSpace& space, std::size_t target) {
  const auto boundary = p.hyps().index_of(Formula::eventually(1, Formula::threshold(10)));
  if (!boundary || !space.contains(*boundary)) return target;
  const Formula& cur = p.formula(current);
  if (p.formula(target).op() == Op::Always && cur.op() == Op::Eventually && !is_boundary_formula(cur)) {
    return *boundary;
  }
  return target;
}

}  // namespace tlteach
