#include "fuzzyorder/alpha_set.hpp"
#include "support.hpp"

using namespace fzo;
using fzo::test::iv;
using fzo::test::q;
using fzo::test::tri;

namespace {

bool has_label(const std::vector<Violation>& vs, const std::string& label) {
  for (const auto& v : vs) {
    if (v.property == label) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validate labels each failed condition") {
  CHECK(validate(FuzzyNumber::triangular(0, 1, 2).envelope()).empty());
  CHECK(validate(fzo::test::worked_example().envelope()).empty());

  const Envelope inverted{MonotonePL::constant(Direction::increasing, 3),
                          MonotonePL::constant(Direction::decreasing, 2)};
  const auto vs = validate(inverted);
  REQUIRE(has_label(vs, "condition iii"));
  CHECK_THROWS_AS(FuzzyNumber{inverted}, InvalidFuzzyNumber);

  const Envelope falling_l{MonotonePL::linear(Direction::increasing, 1, 0),
                           MonotonePL::constant(Direction::decreasing, 2)};
  CHECK(has_label(validate(falling_l), "condition i"));

  const Envelope rising_r{MonotonePL::constant(Direction::increasing, 0),
                          MonotonePL::linear(Direction::decreasing, 1, 2)};
  CHECK(has_label(validate(rising_r), "condition ii"));
}

TEST_CASE("alpha cuts of the worked example on every branch") {
  const FuzzyNumber a = fzo::test::worked_example();
  CHECK(a.alpha_cut(1) == iv("3", "4"));
  CHECK(a.alpha_cut(q("7/8")) == iv("5/2", "13/3"));
  // (20 - 8a)/3 at a = 7/10 is 24/5.
  CHECK(a.alpha_cut(q("7/10")) == iv("2", "24/5"));
  CHECK(a.alpha_cut(q("5/8")) == iv("2", "5"));
  CHECK(a.alpha_cut(q("11/20")) == iv("2", "5"));
  CHECK(a.alpha_cut(q("9/20")) == iv("1", "5"));
  CHECK(a.alpha_cut(q("1/5")) == iv("1", "27/5"));
  CHECK(a.alpha_cut(0) == iv("1", "6"));
  CHECK(a.cut_right_limit(q("1/2")) == iv("2", "5"));
}

TEST_CASE("membership is the exact generalized inverse") {
  const FuzzyNumber a = fzo::test::worked_example();
  CHECK(a.membership(q("5/2")) == q("7/8"));
  CHECK(a.membership(q("11/2")) == q("1/6"));
  CHECK(a.membership(q("7/2")) == 1);
  CHECK(a.membership(q("3/2")) == q("1/2"));
  CHECK(a.membership(2) == q("3/4"));
  CHECK(a.membership(5) == q("5/8"));
  CHECK(a.membership(q("1/2")) == 0);
  CHECK(a.membership(6) == 0);
  CHECK(a.membership(1) == q("1/2"));
}

TEST_CASE("support, kernel, height") {
  const FuzzyNumber a = fzo::test::worked_example();
  CHECK(a.support().lower == 1);
  CHECK(a.support().upper == 6);
  CHECK(a.kernel() == iv("3", "4"));
  CHECK(a.height() == 1);

  const FuzzyNumber crisp = FuzzyNumber::from_interval(iv("2", "3"));
  CHECK(crisp.support().lower == 2);
  CHECK(crisp.support().upper == 3);
  CHECK(crisp.kernel() == iv("2", "3"));
  CHECK(tri(0, 1, 2).kernel() == Interval(1));
}

TEST_CASE("constructors") {
  const FuzzyNumber five = FuzzyNumber::from_interval(Interval(5));
  CHECK(five == FuzzyNumber::real(5));
  CHECK(five.alpha_cut(q("1/3")) == Interval(5));

  const FuzzyNumber t = tri(0, 1, 2);
  for (const char* a : {"0", "1/3", "1/2", "1"}) CHECK(t.alpha_cut(q(a)) == Interval(q(a), 2 - q(a)));
  CHECK(FuzzyNumber::trapezoid(0, 1, 2, 3).kernel() == iv("1", "2"));
  CHECK_THROWS(tri(2, 1, 0));
}

TEST_CASE("equality is structural on canonical forms") {
  const FuzzyNumber a = fzo::test::worked_example();
  CHECK(equal(a, a));
  CHECK(equal(tri(0, 1, 2), FuzzyNumber::trapezoid(0, 1, 1, 2)));
  CHECK_FALSE(equal(tri(0, 1, 2), tri(0, 1, 2 + pow2(-20))));

  // Same function written with a redundant knot.
  const MonotonePL l(Direction::increasing, {0, q("1/3"), 1}, {{0, q("1/3")}, {q("1/3"), 1}});
  CHECK(FuzzyNumber(l, MonotonePL::linear(Direction::decreasing, 2, 1)) == tri(0, 1, 2));
}

TEST_CASE("translation shifts every cut") {
  const FuzzyNumber a = fzo::test::worked_example();
  const FuzzyNumber b = a.translated(q("1/2"));
  CHECK(b.alpha_cut(q("7/8")) == iv("3", "29/6"));
  CHECK(b.translated(q("-1/2")) == a);
}

TEST_CASE("diff region") {
  const FuzzyNumber a = fzo::test::worked_example();
  CHECK(diff_region(a, a).empty());

  const AlphaSet all = diff_region(tri(0, 1, 2), tri(1, 2, 3));
  REQUIRE(all.size() == 1);
  CHECK(all[0] == *make_alpha_interval(0, false, 1, true));

  const AlphaSet below_one = diff_region(tri(0, 2, 4), tri(1, 2, 3));
  REQUIRE(below_one.size() == 1);
  CHECK(below_one[0] == *make_alpha_interval(0, false, 1, false));

  // Cuts agree only at alpha = 1/2, where the left envelopes cross.
  const FuzzyNumber f(MonotonePL::linear(Direction::increasing, 0, 1), MonotonePL::constant(Direction::decreasing, 2));
  const FuzzyNumber g(MonotonePL::linear(Direction::increasing, q("-1/2"), q("3/2")),
                      MonotonePL::constant(Direction::decreasing, 2));
  const AlphaSet split = diff_region(f, g);
  REQUIRE(split.size() == 2);
  CHECK(split[0] == *make_alpha_interval(0, false, q("1/2"), false));
  CHECK(split[1] == *make_alpha_interval(q("1/2"), false, 1, true));
}

TEST_CASE("membership breakpoints include every envelope value") {
  const auto bp = fzo::test::worked_example().membership_breakpoints();
  for (const char* x : {"1", "2", "3", "4", "5", "6"}) {
    CHECK(std::find(bp.begin(), bp.end(), q(x)) != bp.end());
  }
}
