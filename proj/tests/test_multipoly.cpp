#include <doctest.h>

#include "acr/errors.hpp"
#include "acr/multipoly.hpp"

using namespace acr;

namespace {

VarSetPtr xy() { return std::make_shared<const VarSet>(std::vector<std::string>{"x", "y"}); }

MultiPoly X(const VarSetPtr& v) { return MultiPoly::variable(v, 0); }
MultiPoly Y(const VarSetPtr& v) { return MultiPoly::variable(v, 1); }

}  // namespace

TEST_SUITE("multipoly") {

TEST_CASE("VarSet builders and lookup") {
  auto v = VarSet::numbered("a", 3);
  CHECK(v->size() == 3);
  CHECK(v->name(0) == "a1");
  CHECK(v->name(2) == "a3");
  CHECK(v->index_of("a2") == 2 - 1);
  CHECK(!v->index_of("b1"));

  auto w = VarSet::concat(*v, *VarSet::numbered("h", 2));
  CHECK(w->size() == 5);
  CHECK(w->name(3) == "h1");
  CHECK(w->index_of("h2") == 4);
}

TEST_CASE("constant, variable, monomial and the term map") {
  auto v = xy();
  auto c = MultiPoly::constant(v, Rational(3, 2));
  CHECK(c.terms().size() == 1);
  CHECK(c.terms().at({0, 0}) == Rational(3, 2));
  CHECK(MultiPoly::constant(v, 0).is_zero());

  auto m = MultiPoly::monomial(v, {2, 1}, -5);
  CHECK(m.terms().at({2, 1}) == -5);
  CHECK(X(v).terms().at({1, 0}) == 1);
}

TEST_CASE("arithmetic: a binomial square, cancellation to zero") {
  auto v = xy();
  auto p = X(v) + Y(v);
  auto sq = p * p;
  CHECK(sq.terms().size() == 3);
  CHECK(sq.terms().at({2, 0}) == 1);
  CHECK(sq.terms().at({1, 1}) == 2);
  CHECK(sq.terms().at({0, 2}) == 1);

  CHECK((p - p).is_zero());
  CHECK((X(v) * Y(v)) == (Y(v) * X(v)));
  CHECK((-p + p).is_zero());
  CHECK((p * Rational(0)).is_zero());
  CHECK((Rational(2) * p) == (p + p));
}

TEST_CASE("mixed-variable-list arithmetic is rejected") {
  auto p = X(xy());
  auto q = MultiPoly::variable(VarSet::numbered("z", 2), 0);
  CHECK_THROWS_AS(p + q, DomainError);
  CHECK_THROWS_AS(p * q, DomainError);
}

TEST_CASE("sign_profile") {
  auto v = xy();
  CHECK((X(v) + Y(v)).sign_profile() == SignProfile::AllPositive);
  CHECK((-X(v) - Y(v) * Rational(2)).sign_profile() == SignProfile::AllNegative);
  CHECK((X(v) - Y(v)).sign_profile() == SignProfile::Mixed);
  CHECK(MultiPoly(v).sign_profile() == SignProfile::Zero);
  CHECK(to_string(SignProfile::AllPositive) == "all-positive");
  CHECK(to_string(SignProfile::Mixed) == "mixed");
}

TEST_CASE("divisible_by asks for a positive exponent in every term") {
  auto v = xy();
  auto p = MultiPoly::monomial(v, {2, 1}, 1) + MultiPoly::monomial(v, {1, 2}, 3);
  CHECK(p.divisible_by(0));
  CHECK(p.divisible_by(1));
  CHECK(p.divisible_by("x"));

  auto q = X(v) + MultiPoly::constant(v, 1);
  CHECK(!q.divisible_by(0));
  CHECK(MultiPoly(v).divisible_by(0));  // zero divides vacuously
  CHECK_THROWS_AS(p.divisible_by("nope"), DomainError);
}

TEST_CASE("degrees, -1 for the zero polynomial") {
  auto v = xy();
  auto p = MultiPoly::monomial(v, {2, 1}, 1) + X(v);
  CHECK(p.total_degree() == 3);
  CHECK(p.degree_in(0) == 2);
  CHECK(p.degree_in(1) == 1);
  CHECK(MultiPoly::constant(v, 7).total_degree() == 0);
  CHECK(MultiPoly(v).total_degree() == -1);
  CHECK(MultiPoly(v).degree_in(1) == -1);
}

TEST_CASE("evaluation, exact and floating") {
  auto v = xy();
  auto p = X(v) * X(v) - Y(v);  // x^2 - y
  CHECK(p.eval(std::vector<Rational>{Rational(3, 2), Rational(1, 4)}) == 2);
  CHECK(p.eval(std::vector<double>{2.0, 1.0}) == doctest::Approx(3.0));
  CHECK(MultiPoly(v).eval(std::vector<Rational>{1, 1}) == 0);
}

TEST_CASE("reindexed matches variables by name") {
  auto v = xy();
  auto target = std::make_shared<const VarSet>(std::vector<std::string>{"w", "y", "x"});
  auto p = X(v) * Y(v) + X(v);  // x*y + x
  auto q = p.reindexed(target);
  CHECK(q.terms().at({0, 1, 1}) == 1);
  CHECK(q.terms().at({0, 0, 1}) == 1);
  // Same values under the matching assignment.
  CHECK(q.eval(std::vector<Rational>{99, 5, 7}) == p.eval(std::vector<Rational>{7, 5}));

  auto missing = std::make_shared<const VarSet>(std::vector<std::string>{"x"});
  CHECK_THROWS_AS(p.reindexed(missing), DomainError);
}

TEST_CASE("collect groups by the kept exponent pattern") {
  auto v = std::make_shared<const VarSet>(std::vector<std::string>{"a", "h"});
  auto a = MultiPoly::variable(v, 0);
  auto h = MultiPoly::variable(v, 1);
  auto p = a * a * h + a * h + a * a * Rational(2) + MultiPoly::constant(v, 3);

  auto groups = p.collect({0});
  REQUIRE(groups.size() == 3);
  CHECK(groups.at({0}) == MultiPoly::constant(v, 3));
  CHECK(groups.at({1}) == h);
  CHECK(groups.at({2}) == h + MultiPoly::constant(v, 2));
  // Collecting on nothing returns the polynomial whole.
  auto all = p.collect({});
  REQUIRE(all.size() == 1);
  CHECK(all.at({}) == p);
}

TEST_CASE("normalized: content 1, positive graded-lex leading coefficient") {
  auto v = std::make_shared<const VarSet>(std::vector<std::string>{"a", "c"});
  auto a = MultiPoly::variable(v, 0);
  auto c = MultiPoly::variable(v, 1);
  CHECK((a * Rational(-2) + c * Rational(4)).normalized() == a - c * Rational(2));
  CHECK((a * Rational(1, 2)).normalized() == a);
  CHECK((a * Rational(2, 3) + c * Rational(4, 3)).normalized() == a + c * Rational(2));
  CHECK(MultiPoly(v).normalized().is_zero());
  // Scalar multiples collapse to one representative.
  auto p = a * a - c;
  CHECK((p * Rational(-7, 3)).normalized() == p.normalized());
}

TEST_CASE("to_string uses graded lex with the leading term first") {
  auto v = VarSet::numbered("z", 2);
  auto z1 = MultiPoly::variable(v, 0);
  auto z2 = MultiPoly::variable(v, 1);
  auto z1s = [&](int e) {
    auto p = MultiPoly::constant(v, 1);
    for (int i = 0; i < e; ++i) p = p * z1;
    return p;
  };
  auto p = z1s(4) * z2 * z2 - z1s(3) * z2 * z2 * Rational(2) + z2 * z2;
  CHECK(p.to_string() == "z1^4*z2^2 - 2*z1^3*z2^2 + z2^2");
  CHECK(MultiPoly(v).to_string() == "0");
  CHECK(MultiPoly::constant(v, Rational(-1, 2)).to_string() == "-1/2");
  CHECK((z2 - z1).to_string() == "-z1 + z2");
  CHECK((z1 * z2).to_string() == "z1*z2");
}

}  // TEST_SUITE
