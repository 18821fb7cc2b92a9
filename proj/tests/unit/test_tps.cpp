#include <doctest.h>

#include "test_support.hpp"
#include "tpsgeo/diffgeo/curvature.hpp"
#include "tpsgeo/diffgeo/killing.hpp"
#include "tpsgeo/errors.hpp"
#include "tpsgeo/tps/tps.hpp"

using namespace tpsgeo;
using namespace tpsgeo::tps;
using diffgeo::VectorField;
using exactalg::LaurentPoly;
using exactalg::PolyMatrix;
using exactalg::Rational;

namespace {

void require_all(const std::vector<report::Check>& checks) {
  for (const auto& c : checks) {
    INFO(c.claim << " :: " << c.witness.dump());
    CHECK(c.passed());
  }
}

}  // namespace

TEST_CASE("contact form and frame") {
  auto s = build_tps(2);
  CHECK(s.theta.evaluate({s.reeb}) == LaurentPoly(1));
  CHECK(s.theta.evaluate({s.X(2)}).is_zero());
  auto d2 = VectorField::coordinate(s.chart.symbols, "x2");
  CHECK(s.theta.evaluate({d2}) == s.chart.var(s.chart.p(2)));
  for (int n = 1; n <= 3; ++n) require_all(verify_contact_structure(n));
  CHECK(diffgeo::bracket(s.P(1), s.X(1)) == -s.reeb);
}

TEST_CASE("mrugala metric matrix, inverse and frame gram") {
  auto g = mrugala_metric(1);
  auto c = make_tps_chart(1);
  LaurentPoly p1 = c.var(1);
  PolyMatrix expect(3, 3, c.symbols);
  expect(0, 0) = LaurentPoly(1);
  expect(0, 2) = expect(2, 0) = p1;
  expect(1, 2) = expect(2, 1) = LaurentPoly(1);
  expect(2, 2) = p1 * p1;
  CHECK(g.g == expect);
  CHECK(exactalg::matrix_inverse_exact(g.g) == g.g_inv);
  for (int n = 1; n <= 4; ++n)
    CHECK(exactalg::determinant(mrugala_metric(n).g) == LaurentPoly(n % 2 ? -1 : 1));
  auto s = build_tps(2);
  PolyMatrix gram = diffgeo::gram_matrix(mrugala_metric(2), s.frame);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j) {
      long e = (i == 0 && j == 0) || (i >= 1 && i <= 2 && j == i + 2) || (j >= 1 && j <= 2 && i == j + 2);
      CHECK(gram(i, j) == LaurentPoly(e));
    }
}

TEST_CASE("signature split and light cone") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 2; ++n) {
    auto g = mrugala_metric(n);
    auto sp = signature_split(n);
    CHECK(sp.plus.size() == static_cast<size_t>(n + 1));
    CHECK(sp.minus.size() == static_cast<size_t>(n));
    for (size_t i = 0; i < sp.plus.size(); ++i) {
      CHECK(g.inner(sp.plus[i], sp.plus[i]) == LaurentPoly(sp.plus_norm2[i]));
      for (const auto& w : sp.minus) CHECK(g.inner(sp.plus[i], w).is_zero());
    }
    for (size_t i = 0; i < sp.minus.size(); ++i)
      CHECK(g.inner(sp.minus[i], sp.minus[i]) == LaurentPoly(sp.minus_norm2[i]));
    auto pt = testsupport::random_point(rng, 2 * n + 1);
    CHECK(light_cone_test(g, sp.plus.back(), pt) == LightCone::positive);
    CHECK(light_cone_test(g, sp.minus.front(), pt) == LightCone::negative);
  }
  auto s = build_tps(1);
  auto g = mrugala_metric(1);
  std::vector<Rational> pt{Rational(1), Rational(2), Rational(3)};
  CHECK(light_cone_test(g, s.reeb, pt) == LightCone::positive);
  CHECK(light_cone_test(g, s.P(1), pt) == LightCone::null);
  CHECK(light_cone_test(g, s.reeb + s.P(1) - Rational(1, 2) * s.X(1), pt) == LightCone::null);
}

TEST_CASE("almost contact tensor and compatibility") {
  for (int n = 1; n <= 3; ++n) require_all(compatibility_check(n));
  auto s = build_tps(1);
  auto a = almost_contact_tensor(1);
  auto g = mrugala_metric(1);
  VectorField px = diffgeo::apply_tensor(a.phi, s.X(1)), pp = diffgeo::apply_tensor(a.phi, s.P(1));
  CHECK(g.inner(px, pp) == LaurentPoly(-1));
  CHECK(g.inner(s.X(1), s.P(1)) == LaurentPoly(1));
}

TEST_CASE("christoffel, ricci, scalar and curvature table of G") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    require_all(curvature_suite_tps(n));
    require_all(identity_suite_tps(n));
  }
  auto t = diffgeo::christoffel(mrugala_metric(2));
  auto c = make_tps_chart(2);
  CHECK(t(c.x0(), c.x0(), c.x(1)) == Rational(1, 2) * c.var(c.p(1)));
  CHECK(t(c.x(1), c.x(2), c.x(1)) == -Rational(1, 2) * c.var(c.p(2)));
  auto ct = diffgeo::ricci_scalar(mrugala_metric(2));
  CHECK(ct.ricci(0, 0) == LaurentPoly(-1));
  CHECK(ct.ricci(c.x(1), c.x(2)) == -(c.var(c.p(1)) * c.var(c.p(2))));
  CHECK(ct.scalar == LaurentPoly(1));
}

TEST_CASE("tampered metric breaks the christoffel table") {
  auto checks = curvature_suite_tps(1, true);
  CHECK_FALSE(checks[0].passed());
  CHECK_FALSE(report::all_passed(checks));
}

TEST_CASE("sectional curvature") {
  for (int n = 1; n <= 3; ++n) require_all(sectional_suite_tps(n, 20, 11));
  auto g = mrugala_metric(2);
  auto t = diffgeo::christoffel(g);
  auto s = build_tps(2);
  std::vector<Rational> pt{Rational(1), Rational(2), Rational(-3), Rational(5), Rational(1, 3)};
  auto dx1 = VectorField::coordinate(s.chart.symbols, "x1");
  auto dx2 = VectorField::coordinate(s.chart.symbols, "x2");
  CHECK(diffgeo::sectional(g, t, pt, s.P(1), dx1) == Rational(3, 4));
  CHECK_THROWS_AS(diffgeo::sectional(g, t, pt, s.P(1), dx2), DegeneratePlaneError);
  CHECK_THROWS_AS(diffgeo::sectional(g, t, pt, s.reeb, s.P(1)), DegeneratePlaneError);
  CHECK(diffgeo::sectional_numerator(g, t, pt, s.reeb, s.P(1)).is_zero());
  CHECK(diffgeo::sectional_numerator(g, t, pt, s.P(1), dx2).is_zero());
}

TEST_CASE("lie derivative of G") {
  auto g = mrugala_metric(1);
  auto s = build_tps(1);
  CHECK(diffgeo::lie_derivative_metric(g, s.reeb).is_zero());
  PolyMatrix l = diffgeo::lie_derivative_metric(g, s.P(1));
  CHECK_FALSE(l.is_zero());
  CHECK(l(2, 2) == 2 * s.chart.var(1));
}

TEST_CASE("killing catalog and solver") {
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    require_all(verify_killing_catalog_tps(n));
    auto basis = diffgeo::killing_solve(mrugala_metric(n), 2);
    CHECK(basis.size() == static_cast<size_t>(n * n + 2 * n + 1));
    std::vector<VectorField> cat;
    for (const auto& e : killing_catalog_tps(n)) cat.push_back(e.field);
    CHECK(diffgeo::same_span(basis, cat));
  }
  CHECK(diffgeo::killing_solve(mrugala_metric(1), 3).size() == 4);
  auto cat = killing_catalog_tps(2);
  CHECK(cat[1].hamiltonian == make_tps_chart(2).var(make_tps_chart(2).x(1)));
  CHECK(cat[3].hamiltonian == -make_tps_chart(2).var(make_tps_chart(2).p(1)));
}

TEST_CASE("constitutive hypersurface") {
  for (int n = 1; n <= 3; ++n) require_all(verify_constitutive_hypersurface(n));
  auto h = constitutive_hypersurface(1);
  std::vector<Rational> pt{Rational(-2), Rational(1), Rational(2)};
  CHECK(h.contains(pt));
  CHECK_FALSE(h.on_exceptional_plane(pt));
  CHECK(h.on_exceptional_plane(std::vector<Rational>{Rational(0), Rational(4), Rational(0)}));
}
