#include "doctest.h"
#include "reference.hpp"
#include "tlteach/parser.hpp"
#include "tlteach/semantics.hpp"
#include "tlteach/verify.hpp"

using namespace tlteach;

namespace {

const StateDomain& suits() {
  static const StateDomain d = suit_domain();
  return d;
}

Trajectory suit_run(const char* text) { return parse_trajectory(text, suits()); }

}  // namespace

TEST_CASE("strong and weak views on the suit example") {
  const Formula f = parse("F[<=2] sym:club");
  CHECK(strong_sat(suits(), suit_run("spade,diamond,club"), 0, f));
  CHECK_FALSE(strong_sat(suits(), suit_run("spade,diamond,spade,club,club"), 0, f));
  CHECK(weak_sat(suits(), suit_run("spade,diamond,club"), 0, f));

  const Formula g = parse("F[<=4] sym:spade");
  CHECK(weak_sat(suits(), suit_run("club,diamond"), 0, g));
  CHECK_FALSE(strong_sat(suits(), suit_run("club,diamond"), 0, g));
}

TEST_CASE("positions past the end") {
  const Formula atom = parse("sym:club");
  const Trajectory rho = suit_run("club,club");
  CHECK_FALSE(strong_sat(suits(), rho, 5, atom));
  CHECK(weak_sat(suits(), rho, 5, atom));
  CHECK_FALSE(strong_sat(suits(), rho, 5, Formula::truth()));
  CHECK(strong_sat(suits(), rho, 1, Formula::truth()));
}

TEST_CASE("verdicts") {
  const Formula f = parse("F[<=2] sym:club");
  CHECK(verdict(suits(), f, suit_run("spade,diamond,club")) == Verdict::Satisfied);
  CHECK(verdict(suits(), f, suit_run("spade,diamond,spade,club,club")) == Verdict::Violated);
  CHECK(verdict(suits(), parse("F[<=4] sym:spade"), suit_run("club,diamond")) == Verdict::Undetermined);
}

TEST_CASE("strong inconsistency") {
  const Formula target = parse("F[<=2] sym:club");
  const Demonstration neg{suit_run("spade,diamond,spade,club,club"), DemoLabel::Negative};
  const Demonstration pos{suit_run("spade,diamond,club"), DemoLabel::Positive};
  CHECK(strongly_inconsistent(suits(), neg, target, parse("F[<=4] sym:club")));
  CHECK_FALSE(strongly_inconsistent(suits(), pos, target, target));
  const Demonstration und{suit_run("club,diamond"), DemoLabel::Positive};
  CHECK_FALSE(strongly_inconsistent(suits(), und, parse("F[<=0] sym:club"), parse("F[<=4] sym:spade")));
  CHECK_THROWS_AS(strongly_inconsistent(suits(), neg, parse("F[<=4] sym:club"), target), MalformedDemonstration);
}

TEST_CASE("require_valid rejects mislabelled demonstrations") {
  const Formula target = parse("F[<=2] sym:club");
  CHECK_NOTHROW(require_valid(suits(), {suit_run("spade,diamond,club"), DemoLabel::Positive}, target));
  CHECK_THROWS_AS(require_valid(suits(), {suit_run("spade,diamond,club"), DemoLabel::Negative}, target),
                  MalformedDemonstration);
  CHECK_THROWS_AS(require_valid(suits(), {suit_run("spade"), DemoLabel::Positive}, target), MalformedDemonstration);
}

TEST_CASE("evaluator agrees with the reference definitions") {
  std::uint64_t rng = 99;
  const StateDomain dn = numeric_domain(10);
  const StateDomain ds = symbolic_domain({"a", "b", "c"});
  for (int i = 0; i < 3000; ++i) {
    const StateDomain& d = i % 2 ? ds : dn;
    const Formula f = random_formula(rng, d, 4, 4);
    const Trajectory rho = random_trajectory(rng, d, 1 + splitmix64(rng) % 7);
    const Evaluator ev(d, f);
    for (std::uint64_t t = 0; t <= rho.size() + 2; ++t) {
      CAPTURE(render(f));
      CHECK(ev.strong(rho, t) == ref::strong(d, f, rho, t));
      CHECK(ev.weak(rho, t) == ref::weak(d, f, rho, t));
    }
    CHECK(static_cast<int>(ev.verdict(rho)) == ref::verdict(d, f, rho));
  }
}

TEST_CASE("semantic property battery") {
  const CheckResult r = check_semantics_battery(4000, 5);
  CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("minimal length bound on short trajectories") {
  const CheckResult r = check_minimal_length_bound(150, 3, 5, 8);
  CHECK_MESSAGE(r.passed, r.detail);
}

TEST_CASE("implication matrix is reflexive") {
  const std::vector<Formula> fs{parse("F[<=1] sym:a"), parse("G[<=1] sym:a"), parse("F[<=2] sym:b")};
  const auto m = implies_matrix(fs, symbolic_domain({"a", "b"}), 4);
  for (std::size_t i = 0; i < fs.size(); ++i) CHECK(m[i][i]);
  CHECK(m[1][0]);
  CHECK_FALSE(m[0][1]);
}
