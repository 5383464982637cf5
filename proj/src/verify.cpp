#include "tlteach/verify.hpp"

#include <sstream>

#include "tlteach/lp_export.hpp"
#include "tlteach/parser.hpp"
#include "tlteach/teacher.hpp"

namespace tlteach {

namespace {

std::uint64_t uniform(std::uint64_t& rng, std::uint64_t n) { return splitmix64(rng) % n; }

Formula random_atom(std::uint64_t& rng, const StateDomain& d) {
  if (uniform(rng, 12) == 0) return Formula::truth();
  if (d.kind() == DomainKind::Numeric) return Formula::threshold(uniform(rng, d.size()));
  return Formula::label(d.symbol(static_cast<State>(uniform(rng, d.size()))));
}

std::string describe(const Formula& f, const Trajectory& rho, const StateDomain& d) {
  return render(f) + " on [" + format_trajectory(rho, d) + "]";
}

}  // namespace

Formula random_formula(std::uint64_t& rng, const StateDomain& d, unsigned depth, std::uint64_t max_tau) {
  if (depth == 0 || uniform(rng, 5) == 0) return random_atom(rng, d);
  switch (uniform(rng, 7)) {
    case 0:
      return Formula::negation(random_formula(rng, d, depth - 1, max_tau));
    case 1:
      return Formula::conjunction(random_formula(rng, d, depth - 1, max_tau),
                                  random_formula(rng, d, depth - 1, max_tau));
    case 2:
      return Formula::disjunction(random_formula(rng, d, depth - 1, max_tau),
                                  random_formula(rng, d, depth - 1, max_tau));
    case 3:
      return Formula::implication(random_formula(rng, d, depth - 1, max_tau),
                                  random_formula(rng, d, depth - 1, max_tau));
    case 4:
    case 5:
      return Formula::eventually(uniform(rng, max_tau + 1), random_formula(rng, d, depth - 1, max_tau));
    default:
      return Formula::always(uniform(rng, max_tau + 1), random_formula(rng, d, depth - 1, max_tau));
  }
}

Trajectory random_trajectory(std::uint64_t& rng, const StateDomain& d, std::size_t length) {
  Trajectory rho;
  for (std::size_t t = 0; t < length; ++t) {
    const StateMask m = t == 0 ? d.all_states() : d.successors(rho.back());
    std::vector<State> opts;
    for (std::size_t s = 0; s < d.size(); ++s) {
      if ((m >> s) & 1U) opts.push_back(static_cast<State>(s));
    }
    rho.push_back(opts[uniform(rng, opts.size())]);
  }
  return rho;
}

IpInstance random_instance(std::uint64_t& rng, std::size_t max_states, std::uint64_t max_length,
                           std::size_t max_candidates) {
  const std::size_t n = 2 + uniform(rng, max_states - 1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  IpInstance inst;
  inst.domain = symbolic_domain(names);
  inst.variant = uniform(rng, 2) ? IpVariant::Pos : IpVariant::Neg;
  inst.length = 1 + uniform(rng, max_length);
  inst.target = random_formula(rng, inst.domain, 1 + static_cast<unsigned>(uniform(rng, 2)), 3);
  const std::size_t k = 1 + uniform(rng, max_candidates);
  for (std::size_t i = 0; i < k; ++i) {
    inst.candidates.push_back({i, random_formula(rng, inst.domain, 1 + static_cast<unsigned>(uniform(rng, 3)), 4)});
  }
  if (uniform(rng, 4) == 0) inst.protect.push_back(random_formula(rng, inst.domain, 2, 3));
  if (uniform(rng, 3) == 0) {
    std::vector<StateMask> rel(n);
    for (std::size_t s = 0; s < n; ++s) {
      rel[s] = StateMask{1} << uniform(rng, n);
      for (std::size_t t = 0; t < n; ++t) {
        if (uniform(rng, 2)) rel[s] |= StateMask{1} << t;
      }
    }
    inst.transitions = rel;
  }
  return inst;
}

CheckResult check_semantics_battery(std::size_t pairs, std::uint64_t seed) {
  CheckResult r;
  r.name = "semantics properties";
  std::uint64_t rng = seed;
  const StateDomain dn = numeric_domain(10);
  const StateDomain ds = symbolic_domain({"a", "b", "c"});
  for (std::size_t i = 0; i < pairs && r.passed; ++i) {
    const StateDomain& d = i % 2 ? ds : dn;
    const Formula f = random_formula(rng, d, 1 + static_cast<unsigned>(uniform(rng, 3)), 4);
    const Formula nf = Formula::negation(f);
    const Trajectory rho = random_trajectory(rng, d, 1 + uniform(rng, 7));
    Trajectory ext = rho;
    const std::size_t extra = 1 + uniform(rng, 4);
    for (std::size_t e = 0; e < extra; ++e) ext.push_back(static_cast<State>(uniform(rng, d.size())));
    const Evaluator ev(d, f), nev(d, nf);
    ++r.cases;
    for (std::uint64_t t = 0; t <= rho.size() + 1; ++t) {
      const bool s = ev.strong(rho, t), w = ev.weak(rho, t);
      std::string bad;
      if (nev.strong(rho, t) != !w || nev.weak(rho, t) != !s) bad = "negation duality";
      else if (s && !w) bad = "strong implies weak";
      else if (s && !ev.strong(ext, t)) bad = "strong persistence under extension";
      else if (!w && ev.weak(ext, t)) bad = "weak falsity persistence under extension";
      if (!bad.empty()) {
        r.passed = false;
        r.detail = bad + " at t=" + std::to_string(t) + ": " + describe(f, rho, d);
        break;
      }
    }
    if (r.passed && static_cast<int>(ev.verdict(rho)) != -static_cast<int>(nev.verdict(rho))) {
      r.passed = false;
      r.detail = "verdict/negation: " + describe(f, rho, d);
    }
  }
  if (r.passed) r.detail = std::to_string(r.cases) + " pairs";
  return r;
}

CheckResult check_minimal_length_bound(std::size_t formulas, std::size_t states, std::uint64_t max_length,
                                       std::uint64_t seed) {
  CheckResult r;
  r.name = "minimal length bound";
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  const StateDomain d = symbolic_domain(names);
  std::uint64_t rng = seed;
  for (std::size_t i = 0; i < formulas && r.passed; ++i) {
    const Formula f = random_formula(rng, d, 3, 3);
    const Evaluator ev(d, f);
    const auto zp = minimal_length(f, DemoLabel::Positive);
    const auto zn = minimal_length(f, DemoLabel::Negative);
    ++r.cases;
    for (std::uint64_t L = 1; L <= max_length && r.passed; ++L) {
      if (L >= zp && L >= zn) continue;
      Trajectory rho(L, 0);
      while (true) {
        const Verdict v = ev.verdict(rho);
        if ((v == Verdict::Satisfied && L < zp) || (v == Verdict::Violated && L < zn)) {
          r.passed = false;
          r.detail = "verdict below minimal length: " + describe(f, rho, d);
          break;
        }
        std::size_t p = L;
        bool done = false;
        while (true) {
          --p;
          if (++rho[p] < states) break;
          rho[p] = 0;
          if (p == 0) {
            done = true;
            break;
          }
        }
        if (done) break;
      }
    }
  }
  if (r.passed) r.detail = std::to_string(r.cases) + " formulas";
  return r;
}

CheckResult check_solver_equivalence(std::size_t instances, std::uint64_t seed) {
  CheckResult r;
  r.name = "solver vs enumeration";
  std::uint64_t rng = seed;
  for (std::size_t i = 0; i < instances && r.passed; ++i) {
    IpInstance inst = random_instance(rng, 4, 5, 15);
    for (IpVariant v : {IpVariant::Pos, IpVariant::Neg}) {
      inst.variant = v;
      const IpSolution a = solve_ip(inst);
      const IpSolution b = solve_ip_exhaustive(inst);
      ++r.cases;
      if (a.feasible != b.feasible || a.kappa != b.kappa || a.trajectory != b.trajectory ||
          (a.feasible && !check_solution(inst, a.trajectory))) {
        std::ostringstream os;
        os << "instance " << i << " target " << render(inst.target) << " L=" << inst.length << ": solver "
           << a.feasible << "/" << a.kappa << " enumeration " << b.feasible << "/" << b.kappa;
        r.passed = false;
        r.detail = os.str();
        break;
      }
    }
  }
  if (r.passed) r.detail = std::to_string(r.cases) + " solves";
  return r;
}

CheckResult check_lp_export(std::size_t instances, std::uint64_t seed) {
  CheckResult r;
  r.name = "LP export consistency";
  std::uint64_t rng = seed;
  for (std::size_t i = 0; i < instances && r.passed; ++i) {
    const IpInstance inst = random_instance(rng, 3, 4, 6);
    const IpSolution s = solve_ip(inst);
    if (!s.feasible) continue;
    ++r.cases;
    const LinearModel m = to_linear_model(inst);
    const auto x = assignment_for(m, inst, s.trajectory);
    std::string why;
    if (!m.satisfied_by(x, &why) || m.objective_value(x) != static_cast<double>(s.kappa)) {
      r.passed = false;
      r.detail = "instance " + std::to_string(i) + ": " + (why.empty() ? "objective mismatch" : why);
    }
  }
  if (r.passed) r.detail = std::to_string(r.cases) + " models";
  return r;
}

CheckResult check_parser_round_trip(std::size_t formulas, std::uint64_t seed) {
  CheckResult r;
  r.name = "parser round trip";
  std::uint64_t rng = seed;
  const StateDomain dn = numeric_domain(10);
  const StateDomain ds = symbolic_domain({"a", "b", "c"});
  for (std::size_t i = 0; i < formulas && r.passed; ++i) {
    const Formula f = random_formula(rng, i % 2 ? ds : dn, 4, 9);
    ++r.cases;
    const std::string text = render(f);
    try {
      if (parse(text) != f) {
        r.passed = false;
        r.detail = "mismatch for " + text;
      }
    } catch (const ParseError& e) {
      r.passed = false;
      r.detail = text + ": " + e.what();
    }
  }
  if (r.passed) r.detail = std::to_string(r.cases) + " formulas";
  return r;
}

CheckResult check_worked_example() {
  CheckResult r;
  r.name = "suit example";
  const Problem p(suit_domain(), suit_example_hypotheses());
  const PreferenceModel pref = PreferenceModel::uniform(p.size());
  TeacherConfig cfg;
  cfg.l_max = 5;
  const auto pool = demonstration_pool(p, 5);
  std::ostringstream os;
  for (std::size_t init = 0; init < p.size(); ++init) {
    if (init == p.target_id()) continue;
    ++r.cases;
    const auto t = tlip_teach(p, init, pref, cfg, TiePolicy::adversarial(), 1);
    if (!t.reached_target || t.an_cost != 2) {
      r.passed = false;
      os << "AN-TLIP from " << render(p.formula(init)) << " gave AN=" << t.an_cost << "; ";
    }
  }
  const Costs c = teaching_complexity(p, pref, 0, pool);
  os << "complexity AN=" << c.an << " AL=" << c.al;
  if (c.an != 2) r.passed = false;
  r.detail = os.str();
  return r;
}

std::vector<CheckResult> run_check_battery(bool quick, std::uint64_t seed) {
  const std::size_t scale = quick ? 1 : 10;
  return {
      check_parser_round_trip(100 * scale, seed),
      check_semantics_battery(1000 * scale, seed),
      check_minimal_length_bound(quick ? 100 : 1000, 3, 6, seed),
      check_solver_equivalence(20 * scale, seed),
      check_lp_export(20 * scale, seed),
      check_worked_example(),
  };
}

}  // namespace tlteach
