#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>

#include "acr/analysis.hpp"
#include "acr/errors.hpp"
#include "acr/linalg.hpp"
#include "acr/parser.hpp"
#include "acr/sensitivity.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace acr;
using namespace acr::testing;

namespace {

MultiPoly var_by_name(const VarSetPtr& vars, const std::string& name) {
  auto idx = vars->index_of(name);
  REQUIRE(idx);
  return MultiPoly::variable(vars, *idx);
}

// Substitutes a kernel point v = sum_t a_t basis_t and compares against the
// free-flux matrix evaluated at v.
void check_substitution(const PowerLawSystem& sys, const ConvexJacobian& cj,
                        const std::vector<Rational>& a) {
  std::vector<Rational> v(sys.r, Rational(0));
  for (std::size_t t = 0; t < cj.basis.rows(); ++t)
    for (std::size_t j = 0; j < sys.r; ++j) v[j] += a[t] * cj.basis(t, j);
  CHECK(cj.matrix.eval(a) == free_flux_jacobian(sys).eval(v));
}

// FAILS counterexamples must be honest: strictly positive, in the kernel,
// and rank-dropping.
void check_counterexample(const PowerLawSystem& sys, const NondegeneracyVerdict& verdict) {
  REQUIRE(verdict.counterexample);
  const auto& v = *verdict.counterexample;
  REQUIRE(v.size() == sys.r);
  for (const auto& e : v) CHECK(e > 0);
  CHECK(in_kernel(sys.N, v));
  RationalMatrix sub(sys.s, sys.n);
  for (std::size_t p = 0; p < sys.s; ++p)
    for (std::size_t i = 0; i < sys.n; ++i) {
      Rational acc = 0;
      for (std::size_t j = 0; j < sys.r; ++j) acc += sys.N(p, j) * v[j] * sys.B(i, j);
      sub(p, i) = acc;
    }
  CHECK(gauss_rank(sub) < sys.s);
}

bool has_note(const std::vector<std::string>& notes, const std::string& needle) {
  return std::any_of(notes.begin(), notes.end(), [&](const std::string& n) {
    return n.find(needle) != std::string::npos;
  });
}

const SpeciesFinding& finding_for(const AnalysisReport& report, const std::string& name) {
  for (const auto& f : report.findings)
    if (f.name == name) return f;
  REQUIRE(false);
  return report.findings.front();
}

// All reduced equations vanish identically: every minor is zero, so the sign
// shortcut already refutes nondegeneracy.
PowerLawSystem all_zero_jacobian_system() {
  return raw_system(int_matrix({{1, -1}}), RationalMatrix(2, 2));
}

// The free-flux minors are mixed but collapse to zero on the one-ray cone.
PowerLawSystem ray_degenerate_system() {
  return raw_system(int_matrix({{1, -1}}), int_matrix({{0, 0}, {1, 1}}));
}

// v1 + v2 = 0 admits no positive flux.
PowerLawSystem empty_cone_system() {
  return raw_system(int_matrix({{1, 1}}), int_matrix({{1, 0}, {0, 1}}));
}

// The divisibility determinant vanishes identically under W = (1, 0).
PowerLawSystem vanishing_det_system() {
  return raw_system(int_matrix({{1, -1}}), int_matrix({{1, 0}, {1, 1}}),
                    int_matrix({{1, 0}}));
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("convex_jacobian over the canonical kernel basis") {
  auto sys = two_species_raw();
  auto cj = convex_jacobian(sys);
  CHECK(cj.basis == int_matrix({{1, 1}}));
  CHECK(cj.param_names == std::vector<std::string>{"a1"});
  CHECK(cj.params() == 1);
  auto a1 = var_by_name(cj.matrix.vars(), "a1");
  CHECK(cj.matrix(0, 0) == a1);
  CHECK(cj.matrix(0, 1).is_zero());

  auto rj = convex_jacobian(rank1_system());
  CHECK(rj.basis == int_matrix({{2, 1, 0}, {1, 0, -1}}));
  CHECK(rj.param_names == std::vector<std::string>{"a1", "a2"});
  auto ra1 = var_by_name(rj.matrix.vars(), "a1");
  auto ra2 = var_by_name(rj.matrix.vars(), "a2");
  CHECK(rj.matrix(0, 0) == (ra1 + ra2) * Rational(2));
  CHECK(rj.matrix(0, 1).is_zero());

  // The network build of the same dynamics flips the sign of N, and the
  // matrix follows.
  auto nj = convex_jacobian(two_species_system());
  CHECK(nj.matrix(0, 0) == -var_by_name(nj.matrix.vars(), "a1"));
}

TEST_CASE("convex_jacobian over a caller-chosen basis") {
  auto cj = convex_jacobian(rank1_system(), int_matrix({{-1, 0, 1}, {2, 1, 0}}), {"a", "c"});
  CHECK(cj.param_names == std::vector<std::string>{"a", "c"});
  auto a = var_by_name(cj.matrix.vars(), "a");
  auto c = var_by_name(cj.matrix.vars(), "c");
  CHECK(cj.matrix(0, 0) == a * Rational(-2) + c * Rational(2));
  CHECK(cj.matrix(0, 1).is_zero());
}

TEST_CASE("cone rays as a basis parametrize the Jacobian on the cone slice") {
  auto sys = free_kernel_system();
  auto cj = convex_jacobian(sys, int_matrix({{1, 0, 1, 1}, {1, 1, 0, 0}}), {"a", "b"});
  auto a = var_by_name(cj.matrix.vars(), "a");
  CHECK(cj.matrix(0, 0) == -a);
  CHECK(cj.matrix(0, 1) == a);
  CHECK(cj.matrix(0, 2) == a * Rational(-2));
  CHECK(cj.matrix(1, 0) == -a);
  CHECK(cj.matrix(1, 1).is_zero());
  CHECK(cj.matrix(1, 2) == a * Rational(-2));
}

TEST_CASE("custom basis validation") {
  auto sys = rank1_system();
  CHECK_THROWS_AS(convex_jacobian(sys, int_matrix({{2, 1, 0}, {1, 0, -1}}), {"a"}),
                  DimensionError);
  CHECK_THROWS_AS(convex_jacobian(sys, int_matrix({{2, 1}, {1, 0}}), {"a", "c"}),
                  DimensionError);
  // Spans the wrong plane.
  CHECK_THROWS_AS(convex_jacobian(sys, int_matrix({{1, 0, 0}, {0, 1, 0}}), {"a", "c"}),
                  DomainError);
  // Dependent rows cannot be a basis.
  CHECK_THROWS_AS(convex_jacobian(sys, int_matrix({{2, 1, 0}, {4, 2, 0}}), {"a", "c"}),
                  DomainError);
}

TEST_CASE("symbolic exponents ride along as extra variables") {
  auto bvars = std::make_shared<const VarSet>(
      std::vector<std::string>{"b11", "b12", "b13", "b21", "b22", "b23"});
  PolyMatrix b(bvars, 2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) b(i, j) = MultiPoly::variable(bvars, 3 * i + j);
  SymbolicSystem sym{int_matrix({{1, -2, 1}}), b};

  auto cj = convex_jacobian(sym);
  CHECK(cj.param_names == std::vector<std::string>{"a1", "a2"});
  auto vars = cj.matrix.vars();
  auto a1 = var_by_name(vars, "a1");
  auto a2 = var_by_name(vars, "a2");
  auto b11 = var_by_name(vars, "b11");
  auto b12 = var_by_name(vars, "b12");
  auto b13 = var_by_name(vars, "b13");
  // Column x1 of N diag(v(a)) B^t with v = (2a1 + a2, a1, -a2).
  CHECK(cj.matrix(0, 0) ==
        a1 * (b11 * Rational(2) - b12 * Rational(2)) + a2 * (b11 - b13));
}

TEST_CASE("free_flux_jacobian in unconstrained flux coordinates") {
  auto m = free_flux_jacobian(rank1_system());
  auto vars = m.vars();
  auto v1 = var_by_name(vars, "v1");
  auto v2 = var_by_name(vars, "v2");
  auto v3 = var_by_name(vars, "v3");
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 2);
  CHECK(m(0, 0) == v1 * Rational(3) - v2 * Rational(4) + v3);
  CHECK(m(0, 1) == v1 - v2 * Rational(2) + v3);

  auto t = free_flux_jacobian(two_species_raw());
  auto tv1 = var_by_name(t.vars(), "v1");
  auto tv2 = var_by_name(t.vars(), "v2");
  CHECK(t(0, 0) == tv1);
  CHECK(t(0, 1) == tv1 - tv2);
}

TEST_CASE("free-flux columns of the dehydrogenase loop") {
  auto m = free_flux_jacobian(idhkp_system());
  auto vars = m.vars();
  auto v = [&](int i) { return var_by_name(vars, "v" + std::to_string(i)); };
  REQUIRE(m.rows() == 3);
  REQUIRE(m.cols() == 5);
  // Columns x1 and x2 coincide: both monomials depend on x1 x2 only through v1.
  for (std::size_t i : {std::size_t{0}, std::size_t{1}}) {
    CHECK(m(0, i) == -v(1));
    CHECK(m(1, i) == -v(1));
    CHECK(m(2, i) == v(1));
  }
  CHECK(m(0, 2) == v(2) + v(3));
  CHECK(m(1, 2) == v(2));
  CHECK(m(2, 2) == -v(2) - v(3) - v(4));
  CHECK(m(0, 3).is_zero());
  CHECK(m(1, 3).is_zero());
  CHECK(m(2, 3) == -v(4));
  CHECK(m(0, 4).is_zero());
  CHECK(m(1, 4) == v(6));
  CHECK(m(2, 4) == v(5) + v(6));
}

TEST_CASE("symbolic free-flux minor factors into fluxes and exponents") {
  auto m = free_flux_jacobian(idhkp_symbolic());
  auto ms = minors(m, 3, {0, 4});
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].cols == std::vector<std::size_t>{1, 2, 3});

  auto vars = m.vars();
  MultiPoly::Exponents e(vars->size(), 0);
  for (const char* name : {"v1", "v3", "v4", "b21", "b33", "b44"}) {
    auto idx = vars->index_of(name);
    REQUIRE(idx);
    e[*idx] = 1;
  }
  CHECK(ms[0].value == MultiPoly::monomial(vars, e, -1));
}

TEST_CASE("ray_substituted_jacobian in ray-weight coordinates") {
  auto sys = rank1_system();
  auto m = ray_substituted_jacobian(sys, extreme_rays(sys.N));
  auto l1 = var_by_name(m.vars(), "l1");
  auto l2 = var_by_name(m.vars(), "l2");
  CHECK(m(0, 0) == l1 * Rational(-2) + l2 * Rational(2));
  CHECK(m(0, 1).is_zero());

  auto fk = free_kernel_system();
  auto fm = ray_substituted_jacobian(fk, extreme_rays(fk.N));
  auto f1 = var_by_name(fm.vars(), "l1");
  CHECK(fm(0, 0) == -f1);
  CHECK(fm(0, 1) == f1);
  CHECK(fm(0, 2) == f1 * Rational(-2));
  CHECK(fm(1, 0) == -f1);
  CHECK(fm(1, 1).is_zero());
  CHECK(fm(1, 2) == f1 * Rational(-2));
}

TEST_CASE("kernel substitution is sound on random parameter points") {
  std::mt19937_64 rng(61);
  for (const auto& sys : {two_species_raw(), rank1_system(), free_kernel_system(),
                          idhkp_system(), divisible_trap_system()}) {
    auto cj = convex_jacobian(sys);
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> a(cj.params());
      for (auto& e : a) e = Rational(uniform_int(rng, -9, 9), uniform_int(rng, 1, 4));
      check_substitution(sys, cj, a);
    }
  }
}

TEST_CASE("entries are linear in the convex parameters") {
  for (const auto& sys : {two_species_raw(), rank1_system(), idhkp_system()}) {
    auto cj = convex_jacobian(sys);
    for (std::size_t i = 0; i < cj.matrix.rows(); ++i)
      for (std::size_t j = 0; j < cj.matrix.cols(); ++j)
        CHECK(cj.matrix(i, j).total_degree() <= 1);
  }
}

TEST_CASE("local_acr_test pinned verdicts") {
  auto rj = convex_jacobian(rank1_system());
  auto x1 = local_acr_test(rj, 0);
  CHECK(x1.local_acr);
  CHECK(x1.species_index == 0);
  CHECK(x1.minors_checked == 1);
  CHECK(!x1.nonzero_minor);

  auto x2 = local_acr_test(rj, 1);
  CHECK(!x2.local_acr);
  REQUIRE(x2.nonzero_minor);
  CHECK(x2.nonzero_minor->cols == std::vector<std::size_t>{0});
  auto a1 = var_by_name(rj.matrix.vars(), "a1");
  auto a2 = var_by_name(rj.matrix.vars(), "a2");
  CHECK(x2.nonzero_minor->value == (a1 + a2) * Rational(2));

  auto tj = convex_jacobian(two_species_raw());
  CHECK(local_acr_test(tj, 0).local_acr);
  CHECK(!local_acr_test(tj, 1).local_acr);

  CHECK_THROWS_AS(local_acr_test(tj, 2), DimensionError);
}

TEST_CASE("robust coordinate of the dehydrogenase loop is x4") {
  auto cj = convex_jacobian(idhkp_system());
  auto report = std::vector<bool>{};
  for (std::size_t i = 0; i < 5; ++i) {
    auto verdict = local_acr_test(cj, i);
    CHECK(verdict.minors_checked == 4);
    report.push_back(verdict.local_acr);
  }
  CHECK(report == std::vector<bool>{false, false, false, true, false});
}

TEST_CASE("one fewer column than equations: vacuous robustness") {
  auto cj = convex_jacobian(finite_fiber_system());
  for (std::size_t i = 0; i < 2; ++i) {
    auto verdict = local_acr_test(cj, i);
    CHECK(verdict.local_acr);
    CHECK(verdict.minors_checked == 0);
  }
}

TEST_CASE("symbolic robustness conditions for the full exponent matrix") {
  auto bvars = std::make_shared<const VarSet>(
      std::vector<std::string>{"b11", "b12", "b13", "b21", "b22", "b23"});
  PolyMatrix b(bvars, 2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) b(i, j) = MultiPoly::variable(bvars, 3 * i + j);
  SymbolicSystem sym{int_matrix({{1, -2, 1}}), b};
  auto cj = convex_jacobian(sym);

  auto conditions = symbolic_acr_condition(cj, 0);
  std::vector<std::string> got;
  for (const auto& c : conditions) got.push_back(c.to_string());
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::string>{"b21 - b22", "b21 - b23"});
}

TEST_CASE("numeric systems degenerate symbolic conditions to the verdict") {
  auto cj = convex_jacobian(rank1_system());
  CHECK(symbolic_acr_condition(cj, 0).empty());       // robust: no condition
  CHECK(!symbolic_acr_condition(cj, 1).empty());      // not robust: unsatisfiable constant
}

TEST_CASE("nondegeneracy certified by the sign shortcut") {
  auto sys = two_species_raw();
  auto verdict = nondegeneracy_test(sys, extreme_rays(sys.N));
  CHECK(verdict.status == NondegStatus::Certified);
  CHECK(verdict.stage == NondegStage::SignShortcut);
  REQUIRE(verdict.certificate);
  CHECK(verdict.certificate->cols == std::vector<std::size_t>{0});
  CHECK(verdict.certificate->value.to_string() == "v1");

  auto loop = idhkp_system();
  auto lv = nondegeneracy_test(loop, extreme_rays(loop.N));
  CHECK(lv.status == NondegStatus::Certified);
  CHECK(lv.stage == NondegStage::SignShortcut);
  REQUIRE(lv.certificate);
  CHECK(lv.certificate->cols == std::vector<std::size_t>{0, 2, 3});
  CHECK(lv.certificate->value.to_string() == "-v1*v3*v4");
  CHECK(lv.certificate->value.sign_profile() == SignProfile::AllNegative);
}

TEST_CASE("nondegeneracy certified by the ray shortcut") {
  auto sys = free_kernel_system();
  auto verdict = nondegeneracy_test(sys, extreme_rays(sys.N));
  CHECK(verdict.status == NondegStatus::Certified);
  CHECK(verdict.stage == NondegStage::RayShortcut);
  REQUIRE(verdict.certificate);
  CHECK(verdict.certificate->cols == std::vector<std::size_t>{0, 1});
  CHECK(verdict.certificate->value.to_string() == "l1^2");
}

TEST_CASE("nondegeneracy refuted when every free-flux minor vanishes") {
  auto sys = all_zero_jacobian_system();
  auto verdict = nondegeneracy_test(sys, extreme_rays(sys.N));
  CHECK(verdict.status == NondegStatus::Fails);
  CHECK(verdict.stage == NondegStage::SignShortcut);
  CHECK(!verdict.certificate);
  CHECK(verdict.counterexample == std::vector<Rational>{1, 1});
  check_counterexample(sys, verdict);
}

TEST_CASE("nondegeneracy refuted on the ray parametrization") {
  auto sys = ray_degenerate_system();
  auto verdict = nondegeneracy_test(sys, extreme_rays(sys.N));
  CHECK(verdict.status == NondegStatus::Fails);
  CHECK(verdict.stage == NondegStage::RayShortcut);
  CHECK(verdict.counterexample == std::vector<Rational>{1, 1});
  check_counterexample(sys, verdict);
}

TEST_CASE("nondegeneracy inconclusive after sampling") {
  auto sys = rank1_system();
  auto verdict = nondegeneracy_test(sys, extreme_rays(sys.N), 0, 64);
  CHECK(verdict.status == NondegStatus::Inconclusive);
  CHECK(verdict.stage == NondegStage::Sampling);
  CHECK(verdict.seed == 0);
  CHECK(verdict.samples == 64);
  CHECK(!verdict.certificate);
  CHECK(!verdict.counterexample);
  // Deterministic in the seed.
  auto again = nondegeneracy_test(sys, extreme_rays(sys.N), 0, 64);
  CHECK(again.status == verdict.status);
  CHECK(again.samples == verdict.samples);
}

TEST_CASE("empty cone short-circuits the pipeline") {
  auto sys = empty_cone_system();
  auto rays = extreme_rays(sys.N);
  CHECK(!rays.has_positive_point);
  auto verdict = nondegeneracy_test(sys, rays);
  CHECK(verdict.status == NondegStatus::EmptyCone);
  CHECK(verdict.stage == NondegStage::None);
}

TEST_CASE("status and stage names") {
  CHECK(to_string(NondegStatus::Certified) == "CERTIFIED");
  CHECK(to_string(NondegStatus::Fails) == "FAILS");
  CHECK(to_string(NondegStatus::Inconclusive) == "INCONCLUSIVE");
  CHECK(to_string(NondegStatus::EmptyCone) == "EMPTY_CONE");
  CHECK(to_string(NondegStage::None) == "none");
  CHECK(to_string(NondegStage::SignShortcut) == "sign-shortcut");
  CHECK(to_string(NondegStage::RayShortcut) == "ray-shortcut");
  CHECK(to_string(NondegStage::Sampling) == "sampling");
  CHECK(to_string(DivisibilityReport::Status::Divides) == "divides");
  CHECK(to_string(DivisibilityReport::Status::DoesNotDivide) == "does-not-divide");
  CHECK(to_string(DivisibilityReport::Status::Skipped) == "skipped");
}

TEST_CASE("divisibility determinant pinned for the two-species system") {
  auto sys = two_species_raw();
  auto cj = convex_jacobian(sys);

  auto x1 = divisibility_test(sys, cj, 0);
  CHECK(x1.status == DivisibilityReport::Status::Divides);
  CHECK(x1.informative);
  REQUIRE(x1.p);
  CHECK(x1.p->to_string() == "a1*h1");

  auto x2 = divisibility_test(sys, cj, 1);
  CHECK(x2.status == DivisibilityReport::Status::DoesNotDivide);
  REQUIRE(x2.p);
  CHECK(x2.p->to_string() == "a1*h1");

  // The network build flips the sign of N; the criterion is unaffected.
  auto net = two_species_system();
  auto ncj = convex_jacobian(net);
  CHECK(divisibility_test(net, ncj, 0).status == DivisibilityReport::Status::Divides);
  CHECK(divisibility_test(net, ncj, 0).p->to_string() == "-a1*h1");
}

TEST_CASE("divisibility is necessary, not sufficient") {
  auto sys = divisible_trap_system();
  auto cj = convex_jacobian(sys);
  // x1 passes the divisibility screen yet is not robust.
  auto div = divisibility_test(sys, cj, 0);
  CHECK(div.status == DivisibilityReport::Status::Divides);
  CHECK(div.p->to_string() == "a1*h1");
  CHECK(!local_acr_test(cj, 0).local_acr);
  CHECK(divisibility_test(sys, cj, 1).status == DivisibilityReport::Status::DoesNotDivide);
}

TEST_CASE("divisibility skip reasons") {
  auto no_w = rank1_system();
  auto r1 = divisibility_test(no_w, convex_jacobian(no_w), 0);
  CHECK(r1.status == DivisibilityReport::Status::Skipped);
  CHECK(r1.note == "skipped: no conservation matrix");
  CHECK(!r1.p);

  auto iso = decay_system();  // d = 0, W is 0 x 1
  auto r2 = divisibility_test(iso, convex_jacobian(iso), 0);
  CHECK(r2.status == DivisibilityReport::Status::Skipped);
  CHECK(r2.note == "skipped: no conserved quantities");
}

TEST_CASE("identically vanishing determinant is flagged uninformative") {
  auto sys = vanishing_det_system();
  auto report = divisibility_test(sys, convex_jacobian(sys), 0);
  CHECK(report.status == DivisibilityReport::Status::Divides);  // vacuously
  CHECK(!report.informative);
  CHECK(report.note == "determinant vanishes identically");
  REQUIRE(report.p);
  CHECK(report.p->is_zero());
}

TEST_CASE("analyze: full report for the single-row system") {
  auto report = analyze(rank1_system(), 0, 64, "rank1");
  CHECK(report.source == "rank1");
  CHECK(report.n == 2);
  CHECK(report.r == 3);
  CHECK(report.s == 1);
  CHECK(report.d == 1);
  CHECK(report.rays.rays.size() == 2);
  REQUIRE(report.convex);
  CHECK(report.nondegeneracy.status == NondegStatus::Inconclusive);
  REQUIRE(report.findings.size() == 2);
  CHECK(report.findings[0].name == "x1");
  CHECK(report.findings[0].acr.local_acr);
  CHECK(report.findings[0].zero_sensitivity_implied);
  CHECK(report.findings[0].divisibility.status == DivisibilityReport::Status::Skipped);
  CHECK(!report.findings[1].acr.local_acr);
  CHECK(!report.findings[1].zero_sensitivity_implied);

  CHECK(has_note(report.notes, "verdicts are local"));
  CHECK(has_note(report.notes, "connectivity is not checked"));
  CHECK(has_note(report.notes, "no conservation matrix supplied"));
  CHECK(has_note(report.notes, "nondegeneracy not certified"));
}

TEST_CASE("analyze: dehydrogenase loop summary") {
  auto report = analyze(idhkp_system());
  CHECK(report.nondegeneracy.status == NondegStatus::Certified);
  CHECK(finding_for(report, "X4").acr.local_acr);
  CHECK(finding_for(report, "X4").zero_sensitivity_implied);
  for (const char* other : {"X1", "X2", "X3", "X5"})
    CHECK(!finding_for(report, other).acr.local_acr);
  CHECK(!has_note(report.notes, "nondegeneracy not certified"));
  // Divisibility ran: the build supplies W.
  CHECK(finding_for(report, "X4").divisibility.status != DivisibilityReport::Status::Skipped);
}

TEST_CASE("analyze: empty cone cuts the report short") {
  auto report = analyze(empty_cone_system());
  CHECK(report.nondegeneracy.status == NondegStatus::EmptyCone);
  CHECK(report.findings.empty());
  CHECK(!report.convex);
  CHECK(has_note(report.notes, "the positive flux cone is empty"));
}

TEST_CASE("analyze: no conserved quantities note") {
  // s == n with a non-empty cone; the one-species decay network would hit
  // the empty-cone early return instead.
  auto report = analyze(finite_fiber_system());
  CHECK(has_note(report.notes, "no conserved quantities"));
  REQUIRE(report.findings.size() == 2);
  for (const auto& f : report.findings) {
    CHECK(f.acr.local_acr);  // vacuous: fewer than s columns survive removal
    CHECK(f.acr.minors_checked == 0);
  }
}

TEST_CASE("verdicts are invariant under row changes of N") {
  // Scaled single row.
  auto scaled = raw_system(int_matrix({{-2, 4, -2}}), rank1_system().B);
  auto a = analyze(rank1_system());
  auto b = analyze(scaled);
  REQUIRE(a.findings.size() == b.findings.size());
  for (std::size_t i = 0; i < a.findings.size(); ++i)
    CHECK(a.findings[i].acr.local_acr == b.findings[i].acr.local_acr);

  // Row-mixed two-row system.
  auto fk = free_kernel_system();
  RationalMatrix mixed(2, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    mixed(0, j) = fk.N(0, j) + fk.N(1, j);
    mixed(1, j) = fk.N(1, j);
  }
  auto c = analyze(fk);
  auto d = analyze(raw_system(mixed, fk.B));
  for (std::size_t i = 0; i < c.findings.size(); ++i)
    CHECK(c.findings[i].acr.local_acr == d.findings[i].acr.local_acr);
  CHECK(c.rays.rays == d.rays.rays);
}

TEST_CASE("verdicts follow the species, not the row order of the text") {
  auto base = analyze(build_system(parse_network(two_species_text())));
  auto permuted = analyze(build_system(
      parse_network("species: X2, X1\nX1 + X2 -> 2 X2 ; k1\nX2 -> X1 ; k2\n")));
  for (const char* name : {"X1", "X2"})
    CHECK(finding_for(base, name).acr.local_acr == finding_for(permuted, name).acr.local_acr);
  CHECK(finding_for(base, "X1").acr.local_acr);
  CHECK(!finding_for(base, "X2").acr.local_acr);
}

TEST_CASE("certified robustness forces divisibility") {
  int yes_seen = 0;
  for (const auto& sys : {two_species_raw(), two_species_system(), idhkp_system()}) {
    REQUIRE(sys.has_w);
    auto cj = convex_jacobian(sys);
    REQUIRE(nondegeneracy_test(sys, extreme_rays(sys.N)).status == NondegStatus::Certified);
    for (std::size_t i = 0; i < sys.n; ++i)
      if (local_acr_test(cj, i).local_acr) {
        ++yes_seen;
        CHECK(divisibility_test(sys, cj, i).status == DivisibilityReport::Status::Divides);
      }
  }
  CHECK(yes_seen == 3);  // one robust coordinate per fixture
}

TEST_CASE("desk-scale oracle: robust coordinates cluster, others sweep") {
  // Solve the steady-state equations across a family of compatibility
  // classes. A certified YES coordinate must land on (numerically) one value
  // per rate choice; a NO coordinate must move with the class.
  auto spread = [](const std::vector<double>& vals) {
    auto [lo, hi] = std::minmax_element(vals.begin(), vals.end());
    return *hi - *lo;
  };

  auto sys = two_species_system();
  auto cj = convex_jacobian(sys);
  REQUIRE(local_acr_test(cj, 0).local_acr);
  REQUIRE(!local_acr_test(cj, 1).local_acr);
  REQUIRE(nondegeneracy_test(sys, extreme_rays(sys.N)).status == NondegStatus::Certified);
  for (auto [k1, k2] : {std::pair{1.0, 1.0}, {1.0, 3.0}, {2.0, 1.0}, {3.0, 2.0}}) {
    std::vector<double> x1s, x2s;
    for (double t : {2.0, 3.0, 4.0, 5.0}) {
      auto pt = find_steady_state(sys, {k1, k2}, {t, t});
      x1s.push_back(pt.x[0]);
      x2s.push_back(pt.x[1]);
    }
    CHECK(spread(x1s) <= 1e-6);
    CHECK(spread(x2s) >= 1.0);
  }

  // Three species, certified, robust exactly in the middle coordinate. At
  // k = (2, 1, 1, 1) the variety is x2 = 1, x1 x3^2 = 1.
  auto fk = free_kernel_system();
  auto w = int_matrix({{1, 1, 1}});
  REQUIRE(local_acr_test(convex_jacobian(fk), 1).local_acr);
  std::vector<double> x1s, x2s;
  for (double t : {0.6, 1.0, 1.7}) {
    std::vector<double> seed = {1.05 / (t * t), 0.95, 1.02 * t};
    auto pt = find_steady_state(fk, {2.0, 1.0, 1.0, 1.0}, seed, w);
    x1s.push_back(pt.x[0]);
    x2s.push_back(pt.x[1]);
  }
  CHECK(spread(x2s) <= 1e-6);
  CHECK(spread(x1s) >= 1.0);
}

}  // TEST_SUITE
