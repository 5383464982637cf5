// Acceptance run: one PASS/FAIL line per criterion, with measured values.
// Usage: acceptance [--strict] [criterion numbers...]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "reference.hpp"
#include "tlteach/harness.hpp"
#include "tlteach/parser.hpp"
#include "tlteach/teacher.hpp"
#include "tlteach/verify.hpp"
#include "zeta_cases.hpp"

using namespace tlteach;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string config_path(const std::string& name) { return std::string(TLTEACH_SOURCE_DIR) + "/configs/" + name; }

IdList all_ids(std::size_t n) {
  IdList ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i;
  return ids;
}

// ---------------------------------------------------------------- 1

// Minimum number and total length of pool demonstrations covering every non-target
// hypothesis, by dynamic programming over subsets and the reference evaluator.
std::pair<std::size_t, std::size_t> reference_cover(const Problem& p, std::uint64_t l_max) {
  const StateDomain& d = p.domain();
  const std::size_t n = p.size();
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != p.target_id()) others.push_back(i);
  }
  std::vector<std::pair<std::uint32_t, std::size_t>> moves;  // (mask, length)
  for (std::uint64_t L = 1; L <= l_max; ++L) {
    ref::for_each_trajectory(d.size(), L, {}, 0, [&](const Trajectory& rho) {
      const int tv = ref::verdict(d, p.target(), rho);
      if (tv == 0) return;
      std::uint32_t mask = 0;
      for (std::size_t k = 0; k < others.size(); ++k) {
        if (ref::verdict(d, p.formula(others[k]), rho) == -tv) mask |= 1U << k;
      }
      if (mask) moves.emplace_back(mask, L);
    });
  }
  const std::uint32_t full = (1U << others.size()) - 1;
  constexpr std::size_t inf = 1U << 30;
  std::vector<std::size_t> an(full + 1, inf), al(full + 1, inf);
  an[0] = al[0] = 0;
  for (std::uint32_t m = 0; m <= full; ++m) {
    if (an[m] == inf && al[m] == inf) continue;
    for (const auto& [mv, len] : moves) {
      const std::uint32_t nm = m | mv;
      if (nm == m) continue;
      an[nm] = std::min(an[nm], an[m] + 1);
      al[nm] = std::min(al[nm], al[m] + len);
    }
  }
  return {an[full], al[full]};
}

Outcome criterion1() {
  const Problem p(suit_domain(), suit_example_hypotheses());
  const auto pref = PreferenceModel::uniform(p.size());
  std::set<std::size_t> an_seen, al_seen, an_tlip_al;
  for (Objective obj : {Objective::AN, Objective::AL}) {
    TeacherConfig cfg;
    cfg.objective = obj;
    cfg.l_max = 5;
    for (std::size_t start = 0; start < p.size(); ++start) {
      if (start == p.target_id()) continue;
      const Costs wc = worst_case_costs(p, start, pref, cfg);
      (obj == Objective::AN ? an_seen : al_seen).insert(obj == Objective::AN ? wc.an : wc.al);
      if (obj == Objective::AN) an_tlip_al.insert(wc.al);
    }
  }
  const auto pool = demonstration_pool(p, 5);
  std::size_t cover_an = optimal_teach_setcover(p, pool, all_ids(p.size()), Objective::AN).size();
  std::size_t cover_al = 0;
  for (const auto& d : optimal_teach_setcover(p, pool, all_ids(p.size()), Objective::AL)) cover_al += d.length();
  const auto [ref_an, ref_al] = reference_cover(p, 5);

  auto list = [](const std::set<std::size_t>& s) {
    std::string out;
    for (auto v : s) out += (out.empty() ? "" : "/") + std::to_string(v);
    return out;
  };
  const bool pass = an_seen == std::set<std::size_t>{2} && al_seen == std::set<std::size_t>{8} && cover_an == 2 &&
                    cover_al == 8 && ref_an == 2 && ref_al == 8;
  return {pass, "expected AN=2 AL=8; worst-case AN-TLIP AN=" + list(an_seen) + " (its AL " + list(an_tlip_al) + "), AL-TLIP AL=" + list(al_seen) +
                    ", set cover AN=" + std::to_string(cover_an) + " AL=" + std::to_string(cover_al) +
                    ", reference cover AN=" + std::to_string(ref_an) + " AL=" + std::to_string(ref_al)};
}

// ---------------------------------------------------------------- 2

Outcome criterion2() {
  std::size_t zeta_bad = 0;
  std::string first;
  for (const auto& c : kZetaCases) {
    const Formula f = parse(c.text);
    if (minimal_length(f, DemoLabel::Positive) != c.pos || minimal_length(f, DemoLabel::Negative) != c.neg) {
      if (!zeta_bad++) first = c.text;
    }
  }
  const StateDomain d = symbolic_domain({"a", "b", "c"});
  std::uint64_t rng = 101;
  std::size_t violations = 0, checks = 0;
  std::string witness;
  for (int i = 0; i < 1000; ++i) {
    const Formula f = random_formula(rng, d, static_cast<unsigned>(i % 4), 3);
    const Formula nf = Formula::negation(f);
    const std::uint64_t zp = minimal_length(f, DemoLabel::Positive);
    const std::uint64_t zn = minimal_length(f, DemoLabel::Negative);
    for (std::uint64_t L = 1; L <= 6; ++L) {
      ref::for_each_trajectory(3, L, {}, 0, [&](const Trajectory& rho) {
        for (std::uint64_t t = 0; t <= L; ++t) {
          bool bad = false;
          if (L < t + zp) {
            ++checks;
            bad = bad || !ref::weak(d, nf, rho, t);
          }
          if (L < t + zn) {
            ++checks;
            bad = bad || !ref::weak(d, f, rho, t);
          }
          if (bad && !violations++) witness = render(f) + " on " + format_trajectory(rho, d) + " t=" + std::to_string(t);
        }
      });
    }
  }
  std::string detail = std::to_string(std::size(kZetaCases) - zeta_bad) + "/" + std::to_string(std::size(kZetaCases)) +
                       " zeta cases; " + std::to_string(checks) + " applicable length-property checks, " +
                       std::to_string(violations) + " violations";
  if (zeta_bad) detail += "; first zeta mismatch " + first;
  if (violations) detail += "; first violation " + witness;
  return {zeta_bad == 0 && violations == 0, detail};
}

// ---------------------------------------------------------------- 3

struct Best {
  bool any = false;
  std::size_t kappa = 0;
  std::uint64_t length = 1;
};

Outcome criterion3() {
  std::uint64_t rng = 303;
  std::size_t solver_checks = 0, solver_bad = 0, teacher_checks = 0, teacher_bad = 0;
  std::string first;
  for (int inst = 0; inst < 200; ++inst) {
    const std::size_t ns = 2 + splitmix64(rng) % 3;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ns; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    const StateDomain d = symbolic_domain(names);
    const std::size_t n = 2 + splitmix64(rng) % 14;
    std::set<std::string> seen;
    HypothesisSet h;
    for (int guard = 0; h.size() < n && guard < 500; ++guard) {
      const Formula f = random_formula(rng, d, 1 + static_cast<unsigned>(splitmix64(rng) % 2), 3);
      if (seen.insert(render(f)).second) h.formulas.push_back(f);
    }
    h.target_id = splitmix64(rng) % h.size();
    const std::uint64_t l_max = 1 + splitmix64(rng) % 5;
    const Problem p(d, h);
    IdList cand;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i != p.target_id()) cand.push_back(i);
    }

    Best best_an, best_al;
    for (IpVariant v : {IpVariant::Pos, IpVariant::Neg}) {
      for (std::uint64_t L = 1; L <= l_max; ++L) {
        ++solver_checks;
        IpInstance ip;
        bool built = true;
        try {
          ip = build_ip(v, cand, p, p.target(), L);
        } catch (const InfeasibleByLength&) {
          built = false;
        }
        IpInstance probe = ip;
        if (!built) {
          probe.variant = v;
          probe.target = p.target();
          probe.length = L;
          probe.domain = d;
          probe.candidates.clear();
        }
        const auto brute = ref::brute_force(probe);
        bool ok;
        if (!built) {
          ok = !brute.feasible;
        } else {
          const IpSolution s = solve_ip(ip);
          ok = s.feasible == brute.feasible && (!brute.feasible || s.kappa == brute.kappa);
        }
        if (!ok && !solver_bad++) first = "instance " + std::to_string(inst) + " L=" + std::to_string(L);
        if (!built || !brute.feasible) continue;
        if (!best_an.any || brute.kappa > best_an.kappa) best_an = {true, brute.kappa, L};
        if (!best_al.any || brute.kappa * best_al.length > best_al.kappa * L) best_al = {true, brute.kappa, L};
      }
    }

    for (Objective obj : {Objective::AN, Objective::AL}) {
      ++teacher_checks;
      TeacherConfig cfg;
      cfg.objective = obj;
      cfg.l_max = l_max;
      const auto pref = PreferenceModel::uniform(p.size());
      Teacher teacher(p, pref, cfg);
      std::uint64_t trng = 9;
      const DemoChoice c = teacher.compute_demonstration(VersionSpace::full(p.size()), all_ids(p.size()),
                                                          p.target_id(), trng);
      const Best& want = obj == Objective::AN ? best_an : best_al;
      bool ok = c.found == want.any;
      if (ok && want.any) {
        ok = obj == Objective::AN ? c.kappa == want.kappa : c.kappa * want.length == want.kappa * c.demo.length();
      }
      if (!ok && !teacher_bad++ && first.empty()) {
        first = "teacher " + std::string(obj == Objective::AN ? "AN" : "AL") + " on instance " + std::to_string(inst);
      }
    }
  }
  std::string detail = std::to_string(solver_checks) + " (instance, label, L) solver checks, " +
                       std::to_string(solver_bad) + " mismatches; " + std::to_string(teacher_checks) +
                       " objective optima, " + std::to_string(teacher_bad) + " mismatches";
  if (!first.empty()) detail += "; first " + first;
  return {solver_bad == 0 && teacher_bad == 0, detail};
}

// ---------------------------------------------------------------- 5

struct BoundInstance {
  Problem problem;
  PreferenceModel pref;
  std::size_t initial;
  std::uint64_t l_max;
  double lambda;
};

std::optional<BoundInstance> global_instance(std::uint64_t& rng) {
  const std::size_t ns = 2 + splitmix64(rng) % 2;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ns; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  const StateDomain d = symbolic_domain(names);
  const std::size_t n = 4 + splitmix64(rng) % 9;
  std::set<std::string> seen;
  HypothesisSet h;
  for (int guard = 0; h.size() < n && guard < 500; ++guard) {
    const Formula f = random_formula(rng, d, static_cast<unsigned>(splitmix64(rng) % 2), 2);
    if (seen.insert(render(f)).second) h.formulas.push_back(f);
  }
  if (h.size() < 3) return std::nullopt;
  h.target_id = splitmix64(rng) % h.size();
  const std::size_t initial = (h.target_id + 1 + splitmix64(rng) % (h.size() - 1)) % h.size();
  PreferenceModel pref = PreferenceModel::uniform(h.size());
  if (splitmix64(rng) % 2) {
    std::vector<double> rank(h.size());
    for (auto& r : rank) r = static_cast<double>(1 + splitmix64(rng) % 4);
    pref = PreferenceModel::ranked(rank);
  }
  return BoundInstance{Problem(d, h), pref, initial, 3 + splitmix64(rng) % 2, 1.0};
}

// Label-avoidance family over distinct symbols with a rank-plus-stay-bonus table.
std::optional<BoundInstance> local_instance(std::uint64_t& rng) {
  const std::vector<std::string> names{"a", "b", "c"};
  const StateDomain d = symbolic_domain(names);
  HypothesisSet h;
  const std::uint64_t tau = splitmix64(rng) % 3;
  for (const auto& s : names) h.formulas.push_back(Formula::always(tau, Formula::negation(Formula::label(s))));
  h.target_id = splitmix64(rng) % h.size();
  const std::size_t n = h.size();
  std::vector<double> rank(n);
  for (auto& r : rank) r = static_cast<double>(1 + splitmix64(rng) % 4);
  const double bonus = static_cast<double>(1 + splitmix64(rng) % 3);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t cur = 0; cur < n; ++cur) {
    for (std::size_t x = 0; x < n; ++x) rows[cur][x] = rank[x] + (x == cur ? 0 : bonus);
  }
  const std::size_t initial = (h.target_id + 1 + splitmix64(rng) % (n - 1)) % n;
  const std::uint64_t l_max = std::min<std::uint64_t>(4, tau + 2 + splitmix64(rng) % 2);
  BoundInstance b{Problem(d, h), PreferenceModel::from_table(rows), initial, l_max, 2.0};
  if (b.pref.kind() != PreferenceKind::Local) return std::nullopt;
  if (!check_condition1(b.pref, b.problem.target_id()).holds) return std::nullopt;
  if (!check_condition2(b.problem, demonstration_pool(b.problem, l_max)).holds) return std::nullopt;
  return b;
}

Outcome criterion5() {
  std::uint64_t rng = 505;
  std::size_t globals = 0, locals = 0, violations = 0, incomplete = 0, skipped = 0, below_complexity = 0;
  double worst_ratio = 0;
  std::string first;
  for (int attempt = 0; globals + locals < 50 && attempt < 20000; ++attempt) {
    const bool want_local = locals < 20 && (globals >= 30 || attempt % 2);
    auto inst = want_local ? local_instance(rng) : global_instance(rng);
    if (!inst) continue;
    const Problem& p = inst->problem;
    const auto pool = demonstration_pool(p, inst->l_max);
    Costs cx;
    try {
      cx = teaching_complexity(p, inst->pref, inst->initial, pool);
    } catch (const std::runtime_error&) {
      ++skipped;  // some preferred hypothesis is eliminated by no pool member
      continue;
    }
    // |{phi : sigma(phi; initial) <= sigma(target; initial)}|
    double universe = 0;
    for (std::size_t id = 0; id < p.size(); ++id) {
      universe += inst->pref.sigma(id, inst->initial) <= inst->pref.sigma(p.target_id(), inst->initial);
    }
    const double factor = inst->lambda * (std::log(universe) + 1);
    bool counted = false;
    for (Objective obj : {Objective::AN, Objective::AL}) {
      TeacherConfig cfg;
      cfg.objective = obj;
      cfg.adaptive = true;
      cfg.l_max = inst->l_max;
      Costs wc;
      try {
        wc = worst_case_costs(p, inst->initial, inst->pref, cfg, 20'000);
      } catch (const BudgetExceeded&) {
        break;
      } catch (const std::runtime_error& e) {
        ++incomplete;
        ++violations;
        if (first.empty()) first = std::string("incomplete worst-case session: ") + e.what();
        counted = true;
        continue;
      }
      counted = true;
      const double cost = static_cast<double>(obj == Objective::AN ? wc.an : wc.al);
      const double comp = static_cast<double>(obj == Objective::AN ? cx.an : cx.al);
      if (cost < comp) ++below_complexity;
      if (comp > 0) worst_ratio = std::max(worst_ratio, cost / (factor * comp));
      if (cost > factor * comp) {
        ++violations;
        if (first.empty()) {
          first = std::string(obj == Objective::AN ? "AN " : "AL ") + fmt(cost, 0) + " > " + fmt(factor * comp);
        }
      }
    }
    if (!counted) {
      ++skipped;
      continue;
    }
    (inst->lambda == 1.0 ? globals : locals)++;
  }
  std::string detail = std::to_string(globals) + " global + " + std::to_string(locals) + " local instances, " +
                       std::to_string(violations) + " bound violations (" + std::to_string(incomplete) +
                       " incomplete), " + std::to_string(below_complexity) +
                       " worst-case costs below complexity, max cost/bound " + fmt(worst_ratio) + ", " +
                       std::to_string(skipped) + " skipped";
  if (!first.empty()) detail += "; first " + first;
  return {globals + locals == 50 && violations == 0 && below_complexity == 0, detail};
}

// ---------------------------------------------------------------- 6

Outcome criterion6() {
  const CheckResult battery = check_semantics_battery(10'000, 606);
  std::uint64_t rng = 6060;
  const StateDomain dn = numeric_domain(10);
  const StateDomain ds = symbolic_domain({"a", "b", "c"});
  std::size_t mismatches = 0;
  for (int i = 0; i < 10'000; ++i) {
    const StateDomain& d = i % 2 ? ds : dn;
    const Formula f = random_formula(rng, d, 1 + static_cast<unsigned>(splitmix64(rng) % 3), 4);
    const Trajectory rho = random_trajectory(rng, d, 1 + splitmix64(rng) % 7);
    const int lib = verdict(d, f, rho) == Verdict::Satisfied ? 1 : verdict(d, f, rho) == Verdict::Violated ? -1 : 0;
    bool ok = lib == ref::verdict(d, f, rho);
    for (std::uint64_t t = 0; t <= rho.size(); ++t) {
      ok = ok && strong_sat(d, rho, t, f) == ref::strong(d, f, rho, t) && weak_sat(d, rho, t, f) == ref::weak(d, f, rho, t);
    }
    mismatches += !ok;
  }
  return {battery.passed && mismatches == 0,
          std::to_string(battery.cases) + " property pairs (" + (battery.passed ? "no violations" : battery.detail) +
              "), " + std::to_string(mismatches) + "/10000 disagreements with the reference evaluator"};
}

// ---------------------------------------------------------------- 7 and 9

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    ok = ok && cond;
    notes.push_back(what + (cond ? "" : " [no]"));
  }
  std::string text() const {
    std::string s;
    for (const auto& n : notes) s += (s.empty() ? "" : "; ") + n;
    return s;
  }
};

const MethodSummary* need(const ExperimentReport& r, const std::string& m, std::uint64_t a) {
  const MethodSummary* s = find_summary(r, m, a);
  if (!s) throw std::runtime_error("no summary for " + m + " at a=" + std::to_string(a));
  return s;
}

Check global_trend(const ExperimentReport& r) {
  Check c;
  for (std::uint64_t a : {5, 10, 15}) {
    const auto* an = need(r, "AN-TLIP", a);
    const auto* al = need(r, "AL-TLIP", a);
    const auto* an_rg = need(r, "AN-RG", a);
    const auto* al_rg = need(r, "AL-RG", a);
    const std::string at = "a=" + std::to_string(a) + " ";
    c.expect(an->mean_an <= al->mean_an && an->mean_an <= an_rg->mean_an,
             at + "AN " + fmt(an->mean_an) + " vs AL-TLIP " + fmt(al->mean_an) + ", AN-RG " + fmt(an_rg->mean_an));
    c.expect(al->mean_al <= an->mean_al && al->mean_al <= al_rg->mean_al,
             at + "AL " + fmt(al->mean_al) + " vs AN-TLIP " + fmt(an->mean_al) + ", AL-RG " + fmt(al_rg->mean_al));
  }
  return c;
}

std::string delta_text(const Delta& d) {
  return "a=" + std::to_string(d.a) + " " + d.other + " " + d.metric + " " + fmt(d.other_mean) + " vs " +
         fmt(d.base_mean) + " (" + (d.relative >= 0 ? "+" : "") + fmt(100 * d.relative, 1) + "%)";
}

Outcome criterion7() {
  Check all;
  std::vector<std::string> parts;

  const ExperimentReport gu = run_suite("global_uniform", load_config(config_path("global_uniform.conf")));
  const Check a = global_trend(gu);
  parts.push_back("7a " + std::string(a.ok ? "pass" : "fail") + ": " + a.text());
  all.ok = all.ok && a.ok;

  const ExperimentReport po = run_suite("positive_only", load_config(config_path("positive_only.conf")));
  Check b;
  for (const auto& s : po.summaries) {
    if (s.method.find("-pos") != std::string::npos) {
      b.expect(s.completed == s.sessions, s.method + " a=" + std::to_string(s.a) + " completed " +
                                              std::to_string(s.completed) + "/" + std::to_string(s.sessions));
    }
  }
  for (const auto& d : po.deltas) b.expect(d.relative <= 0.5, delta_text(d));
  parts.push_back("7b " + std::string(b.ok ? "pass" : "fail") + ": " + b.text());
  all.ok = all.ok && b.ok;

  for (const auto& [name, tag] : {std::pair{"adaptive_vs_nonadaptive", "7c"}, std::pair{"oracle_vs_plain", "7d"}}) {
    const ExperimentReport r = run_suite(name, load_config(config_path(std::string(name) + ".conf")));
    Check c;
    for (const auto& d : r.deltas) c.expect(d.relative <= 0, delta_text(d));
    if (r.deltas.empty()) c.expect(false, "no completed pairs");
    parts.push_back(std::string(tag) + " " + (c.ok ? "pass" : "fail") + ": " + c.text());
    all.ok = all.ok && c.ok;
  }
  std::string detail;
  for (const auto& p : parts) detail += "\n    " + p;
  return {all.ok, detail};
}

Outcome criterion8() {
  const ExperimentReport r = run_suite("timing", load_config(config_path("timing.conf")));
  double tlip15_max = 0;
  bool tlip15_done = true, esmt5_done = false, esmt10_timeout = false;
  std::map<std::string, std::string> lines;
  for (const auto& s : r.sessions) {
    const std::string cell =
        s.completed ? fmt(s.transcript.solver_ms / 1000.0, 3) + "s" : (s.timeout ? std::string("TO") : "fail");
    lines[s.method] += (lines[s.method].empty() ? "" : ",") + cell;
    if (s.method == "TLIP-L15") {
      tlip15_done = tlip15_done && s.completed;
      tlip15_max = std::max(tlip15_max, s.transcript.solver_ms);
    }
    if (s.method == "ESMT-L5") esmt5_done = s.completed;
    if (s.method == "ESMT-L10") esmt10_timeout = s.timeout;
  }
  std::string detail;
  for (const auto& [m, v] : lines) detail += (detail.empty() ? "" : "; ") + m + " " + v;
  return {tlip15_done && tlip15_max < 60'000 && esmt5_done && esmt10_timeout, detail};
}

Outcome criterion9() {
  ExperimentConfig base = load_config(config_path("gridworld_uniform.conf"));
  const auto before = emission_audit().invalid_transition.load();
  const ExperimentReport r = run_suite("global_uniform", base);
  const std::vector<StateMask> rel =
      base.relation == "map" ? map_color_relation(generate_color_map(base.map_seed)) : default_color_relation();
  std::size_t demos = 0, invalid = 0, incomplete = 0;
  for (const auto& s : r.sessions) {
    incomplete += !s.completed;
    for (const auto& d : s.transcript.demos) {
      ++demos;
      for (std::size_t t = 1; t < d.trajectory.size(); ++t) {
        if (!((rel[d.trajectory[t - 1]] >> d.trajectory[t]) & 1U)) {
          ++invalid;
          break;
        }
      }
    }
  }
  const auto audited = emission_audit().invalid_transition.load() - before;
  const Check trend = global_trend(r);
  return {invalid == 0 && audited == 0 && trend.ok,
          std::to_string(demos) + " demonstrations, " + std::to_string(invalid) + " invalid transitions (audit " +
              std::to_string(audited) + "), " + std::to_string(incomplete) + " incomplete sessions; trend " +
              (trend.ok ? "holds" : "fails") + ": " + trend.text()};
}

Outcome criterion4() {
  const auto& a = emission_audit();
  const auto demos = a.demos.load();
  const auto t1 = a.theorem1_violations.load();
  const auto label = a.invalid_label.load();
  const auto trans = a.invalid_transition.load();
  return {demos > 0 && t1 == 0 && label == 0 && trans == 0,
          std::to_string(demos) + " audited demonstrations, " + std::to_string(t1) + " length-bound violations, " +
              std::to_string(label) + " wrong labels, " + std::to_string(trans) + " invalid transitions"};
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--strict") {
      strict = true;
    } else {
      try {
        only.insert(std::stoi(arg));
      } catch (const std::exception&) {
        std::cerr << "usage: acceptance [--strict] [criterion numbers...]\n";
        return 2;
      }
    }
  }
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {5, criterion5}, {6, criterion6},
      {7, criterion7}, {8, criterion8}, {9, criterion9}, {4, criterion4}};

  emission_audit().reset();
  std::ofstream report("acceptance_report.txt");
  auto out = [&](const std::string& text) {
    std::cout << text << std::flush;
    report << text << std::flush;
  };
  std::map<int, Outcome> results;
  std::map<int, double> seconds;
  for (const auto& [id, fn] : criteria) {
    if (!only.empty() && !only.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    seconds[id] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out("[" + std::to_string(id) + "] " + fmt(seconds[id], 1) + "s " + o.detail + "\n");
    results[id] = o;
  }
  out("\n");
  bool all = true;
  for (const auto& [id, o] : results) {
    out("criterion " + std::to_string(id) + ": " + (o.pass ? "PASS" : "FAIL") + "\n");
    all = all && o.pass;
  }
  return strict && !all ? 1 : 0;
}
