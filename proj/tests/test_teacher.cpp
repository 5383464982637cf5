#include <filesystem>

#include "doctest.h"
#include "tlteach/parser.hpp"
#include "tlteach/teacher.hpp"

using namespace tlteach;

namespace {

Problem suit_problem() { return Problem(suit_domain(), suit_example_hypotheses()); }

HypothesisSet from_texts(std::initializer_list<const char*> texts, std::size_t target) {
  HypothesisSet h;
  for (const char* t : texts) h.formulas.push_back(parse(t));
  h.target_id = target;
  return h;
}

TeacherConfig suit_config(Objective o) {
  TeacherConfig cfg;
  cfg.objective = o;
  cfg.l_max = 5;
  return cfg;
}

}  // namespace

TEST_CASE("suit example: AN-TLIP needs two demonstrations from every start") {
  const Problem p = suit_problem();
  const auto pref = PreferenceModel::uniform(p.size());
  const auto pool = demonstration_pool(p, 5);
  const Costs best = teaching_complexity(p, pref, 0, pool);
  CHECK(best.an == 2);
  for (std::size_t init = 0; init < p.size(); ++init) {
    if (init == p.target_id()) continue;
    const auto t = tlip_teach(p, init, pref, suit_config(Objective::AN), TiePolicy::adversarial(), init);
    CHECK(t.reached_target);
    CHECK(t.an_cost == 2);
    CHECK(t.al_cost == best.al);
    CHECK(cost_metrics(t) == Costs{t.an_cost, t.al_cost});
  }
}

TEST_CASE("suit example transcript") {
  const Problem p = suit_problem();
  const auto pref = PreferenceModel::uniform(p.size());
  const auto t = tlip_teach(p, 0, pref, suit_config(Objective::AN), TiePolicy::adversarial(), 1);
  REQUIRE(t.demos.size() == 2);
  CHECK(t.demos[0].label == DemoLabel::Negative);
  CHECK(format_trajectory(t.demos[0].trajectory, p.domain()) == "spade,diamond,spade,club");
  CHECK(t.demos[1].label == DemoLabel::Positive);
  CHECK(format_trajectory(t.demos[1].trajectory, p.domain()) == "spade,spade,club");
  CHECK(t.hypothesis_path.front() == 0);
  CHECK(t.hypothesis_path.back() == p.target_id());
  CHECK(t.status == SessionStatus::Reached);
  for (const auto& s : t.steps) CHECK(s.demo.length() >= s.lower_bound);
}

TEST_CASE("optimal covers over the suit pool") {
  const Problem p = suit_problem();
  const auto pool = demonstration_pool(p, 5);
  CHECK(pool.size() > 0);
  for (std::size_t i = 1; i < pool.size(); ++i) CHECK(pool[i - 1].length() <= pool[i].length());
  IdList all;
  for (std::size_t i = 0; i < p.size(); ++i) all.push_back(i);
  const auto an = optimal_teach_setcover(p, pool, all, Objective::AN);
  CHECK(an.size() == 2);
  const auto al = optimal_teach_setcover(p, pool, all, Objective::AL);
  std::size_t len = 0;
  for (const auto& d : al) len += d.length();
  CHECK(len == 7);
  CHECK(optimal_teach_setcover(p, pool, {p.target_id()}, Objective::AN).empty());
}

TEST_CASE("teacher preconditions") {
  const Problem p = suit_problem();
  const auto pref = PreferenceModel::uniform(p.size());
  CHECK_THROWS_AS(tlip_teach(p, p.target_id(), pref, suit_config(Objective::AN), TiePolicy::random(), 1),
                  std::invalid_argument);
  TeacherConfig zero = suit_config(Objective::AN);
  zero.l_max = 0;
  CHECK_THROWS_AS(Teacher(p, pref, zero), std::invalid_argument);
  TeacherConfig guided = suit_config(Objective::AN);
  guided.myopic = false;
  CHECK_THROWS_AS(Teacher(p, pref, guided), std::invalid_argument);
  CHECK_THROWS_AS(Teacher(p, PreferenceModel::uniform(3), suit_config(Objective::AN)), std::invalid_argument);

  Teacher t(p, pref, suit_config(Objective::AN));
  std::uint64_t rng = 1;
  CHECK_THROWS_AS(t.compute_demonstration(VersionSpace::full(p.size()), {p.target_id()}, p.target_id(), rng),
                  std::logic_error);
}

TEST_CASE("ESMT matches TLIP step by step on small instances") {
  const Problem p = suit_problem();
  const auto pref = PreferenceModel::uniform(p.size());
  for (Objective o : {Objective::AN, Objective::AL}) {
    for (std::size_t init : {0, 5, 14}) {
      const auto a = tlip_teach(p, init, pref, suit_config(o), TiePolicy::adversarial(), 3);
      const auto b = esmt_teach(p, init, pref, suit_config(o), TiePolicy::adversarial(), 3);
      REQUIRE(a.steps.size() == b.steps.size());
      for (std::size_t i = 0; i < a.steps.size(); ++i) CHECK(a.steps[i].kappa == b.steps[i].kappa);
    }
  }
}

TEST_CASE("ESMT runs out of time on the numeric grid at L_max=10") {
  const StateDomain d = numeric_domain(10);
  const Problem p(d, generate_hypothesis_grid(d, 5));
  TeacherConfig cfg;
  cfg.l_max = 10;
  cfg.esmt_budget = std::chrono::milliseconds(200);
  const auto t = esmt_teach(p, p.target_id() == 0 ? 1 : 0, PreferenceModel::uniform(p.size()), cfg,
                            TiePolicy::adversarial(), 1);
  CHECK(t.status == SessionStatus::Budget);
  CHECK_FALSE(t.reached_target);
}

TEST_CASE("randomized greedy") {
  const StateDomain d = numeric_domain(10);
  HypothesisSet h = generate_hypothesis_grid(d, 3);
  const auto pref = PreferenceModel::uniform(h.size());
  TeacherConfig cfg;
  cfg.l_max = 4;
  double rg = 0, tlip = 0;
  std::size_t done = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    h.target_id = static_cast<std::size_t>(s * 5 % h.size());
    const Problem p(d, h);
    const std::size_t init = (h.target_id + 7) % h.size();
    const auto a = randomized_greedy_teach(1, p, init, pref, cfg, TiePolicy::random(), s);
    const auto b = tlip_teach(p, init, pref, cfg, TiePolicy::random(), s);
    CHECK(b.reached_target);
    if (!a.reached_target) continue;
    ++done;
    rg += static_cast<double>(a.an_cost);
    tlip += static_cast<double>(b.an_cost);
  }
  REQUIRE(done > 0);
  CHECK(rg >= tlip);
  CHECK_THROWS_AS(randomized_greedy_teach(0, Problem(d, h), 0, pref, cfg, TiePolicy::random(), 1),
                  std::invalid_argument);
}

TEST_CASE("randomized greedy with a large sample finds the best first step") {
  const Problem p(symbolic_domain({"a", "b"}),
                  from_texts({"F[<=1] sym:a", "G[<=1] sym:a", "F[<=2] sym:b", "G[<=0] sym:b", "F[<=0] sym:a"}, 0));
  const auto pref = PreferenceModel::uniform(p.size());
  TeacherConfig cfg;
  cfg.l_max = 3;
  const auto a = randomized_greedy_teach(4000, p, 2, pref, cfg, TiePolicy::first_index(), 1);
  const auto b = esmt_teach(p, 2, pref, cfg, TiePolicy::first_index(), 1);
  REQUIRE(!a.steps.empty());
  REQUIRE(!b.steps.empty());
  CHECK(a.steps[0].kappa == b.steps[0].kappa);
}

TEST_CASE("positive-only teaching") {
  const StateDomain d = numeric_domain(10);
  // F[<=4](x<=5) is implied by the target and ranked first: positive demos cannot remove it.
  const Problem stuck(d, from_texts({"F[<=2] (x<=3)", "F[<=4] (x<=5)", "G[<=1] (x<=1)"}, 0));
  const auto ranked = PreferenceModel::ranked({2, 1, 3});
  TeacherConfig cfg;
  cfg.l_max = 6;
  const auto rep = teachability_checks(stuck, ranked, cfg.l_max);
  CHECK_FALSE(rep.no_preferred_implied);
  REQUIRE(rep.implied_witness);
  CHECK(*rep.implied_witness == 1);
  const auto t = positive_only_teach(stuck, 1, ranked, cfg, TiePolicy::random(), 1);
  CHECK(t.status == SessionStatus::NoProgress);
  for (const auto& demo : t.demos) CHECK(demo.label == DemoLabel::Positive);

  const Problem easy(d, from_texts({"F[<=2] (x<=3)", "G[<=1] (x<=1)"}, 0));
  const auto one = positive_only_teach(easy, 1, PreferenceModel::ranked({2, 1}), cfg, TiePolicy::random(), 1);
  CHECK(one.reached_target);
  CHECK(one.an_cost == 1);
  CHECK(teachability_checks(easy, PreferenceModel::ranked({2, 1}), one.demos).positive_teachable());

  const Problem alone(d, from_texts({"F[<=2] (x<=3)"}, 0));
  const auto vac = teachability_checks(alone, PreferenceModel::uniform(1), 1);
  CHECK(vac.positive_teachable());
  CHECK(vac.mixed_length_ok);
}

TEST_CASE("demonstration length lower bound") {
  const Formula target = parse("F[<=2] sym:club");
  CHECK(theorem1_lower_bound(target, {parse("F[<=4] sym:spade")}, DemoLabel::Positive) == 4);
  CHECK(theorem1_lower_bound(target, {}, DemoLabel::Negative) == 2);
  CHECK(theorem1_lower_bound(target, {}, DemoLabel::Positive) == 0);
}

TEST_CASE("cost metrics") {
  TeachingTranscript t;
  CHECK(cost_metrics(t) == Costs{0, 0});
  t.demos.push_back({{1, 2, 3}, DemoLabel::Positive});
  t.demos.push_back({{1}, DemoLabel::Negative});
  CHECK(cost_metrics(t) == Costs{2, 4});
}

TEST_CASE("status names round trip") {
  for (auto s : {SessionStatus::Reached, SessionStatus::NoProgress, SessionStatus::IterationCap,
                 SessionStatus::Budget}) {
    CHECK(status_from_name(status_name(s)) == s);
  }
  CHECK_THROWS(status_from_name("bogus"));
}

TEST_CASE("boundary oracle") {
  const StateDomain d = numeric_domain(10);
  HypothesisSet h = generate_hypothesis_grid(d, 5, true);
  h.target_id = *h.index_of(parse("G[<=2] (x<=3)"));
  const Problem p(d, h);
  const VersionSpace full = VersionSpace::full(p.size());
  const auto id = [&](const char* t) { return *h.index_of(parse(t)); };
  CHECK(oracle_boundary(p, id("F[<=3] (x<=4)"), full, h.target_id) == id("F[<=1] (x<=10)"));
  CHECK(oracle_boundary(p, id("G[<=3] (x<=4)"), full, h.target_id) == h.target_id);
  CHECK(oracle_boundary(p, id("F[<=2] (x<=10)"), full, h.target_id) == h.target_id);
  VersionSpace gone = full;
  gone.remove(id("F[<=1] (x<=10)"));
  CHECK(oracle_boundary(p, id("F[<=3] (x<=4)"), gone, h.target_id) == h.target_id);
}

TEST_CASE("oracle-guided sessions finish") {
  const StateDomain d = numeric_domain(10);
  HypothesisSet h = generate_hypothesis_grid(d, 3, true);
  h.target_id = *h.index_of(parse("G[<=2] (x<=3)"));
  const Problem p(d, h);
  const auto pref = manhattan_preference(h);
  TeacherConfig cfg;
  cfg.adaptive = true;
  cfg.l_max = 4;
  const Oracle oracle = [&p](std::size_t cur, const VersionSpace& s, std::size_t tgt) {
    return oracle_boundary(p, cur, s, tgt);
  };
  const auto t = tlip_teach(p, *h.index_of(parse("F[<=3] (x<=4)")), pref, cfg, TiePolicy::random(), 4, oracle);
  CHECK(t.reached_target);
  bool used = false;
  for (const auto& s : t.steps) used = used || s.intermediate != h.target_id;
  CHECK(used);
}

TEST_CASE("adaptive and non-adaptive teachers both finish") {
  const StateDomain d = numeric_domain(10);
  HypothesisSet h = generate_hypothesis_grid(d, 3);
  h.target_id = *h.index_of(parse("F[<=2] (x<=6)"));
  const Problem p(d, h);
  const auto pref = noisy_local_preference(manhattan_preference(h), h, 1);
  for (bool adaptive : {false, true}) {
    TeacherConfig cfg;
    cfg.adaptive = adaptive;
    cfg.l_max = 4;
    const auto t = tlip_teach(p, 0, pref, cfg, TiePolicy::random(), 9);
    CHECK(t.reached_target);
  }
}

TEST_CASE("worst case over tie breaks and the complexity bound") {
  const Problem p = suit_problem();
  const auto pref = PreferenceModel::uniform(p.size());
  TeacherConfig cfg = suit_config(Objective::AN);
  cfg.adaptive = true;
  const Costs worst = worst_case_costs(p, 0, pref, cfg);
  const Costs best = teaching_complexity(p, pref, 0, demonstration_pool(p, 5));
  CHECK(worst.an >= best.an);
  CHECK(worst.al >= best.al);
  CHECK(teaching_universe(p, pref, 0).size() == p.size() - 1);
}

TEST_CASE("LP files are written per step") {
  const Problem p = suit_problem();
  const auto dir = std::filesystem::temp_directory_path() / "tlteach_lp_test";
  std::filesystem::remove_all(dir);
  TeacherConfig cfg = suit_config(Objective::AN);
  cfg.export_lp_dir = dir.string();
  const auto t = tlip_teach(p, 0, PreferenceModel::uniform(p.size()), cfg, TiePolicy::random(), 1);
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) files += e.path().extension() == ".lp";
  CHECK(files == t.demos.size());
  std::filesystem::remove_all(dir);
}

TEST_CASE("emission audit stays clean") {
  // Every teacher run above went through the audit.
  const auto& a = emission_audit();
  CHECK(a.demos.load() > 0);
  CHECK(a.theorem1_violations.load() == 0);
  CHECK(a.invalid_label.load() == 0);
  CHECK(a.invalid_transition.load() == 0);
}
