#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "tpsgeo/errors.hpp"
#include "tpsgeo/exactalg/json_io.hpp"
#include "tpsgeo/exactalg/linalg.hpp"
#include "tpsgeo/exactalg/polymatrix.hpp"

using namespace tpsgeo::exactalg;
using tpsgeo::DomainError;
using tpsgeo::SingularMatrixError;

namespace {

ChartPtr px_chart() { return make_chart({{"p1", true}, {"p2", true}, {"x1", false}, {"x2", false}}); }

// Mrugala metric written out entry by entry in (x0, p, x) order.
PolyMatrix mrugala_by_hand(int n) {
  std::vector<Symbol> syms{{"x0", false}};
  for (int i = 1; i <= n; ++i) syms.push_back({"p" + std::to_string(i), true});
  for (int i = 1; i <= n; ++i) syms.push_back({"x" + std::to_string(i), false});
  ChartPtr c = make_chart(syms);
  size_t d = 2 * n + 1;
  PolyMatrix g(d, d, c);
  g(0, 0) = LaurentPoly(c, 1);
  for (int i = 1; i <= n; ++i) {
    LaurentPoly pi = LaurentPoly::variable(c, i);
    g(0, n + i) = g(n + i, 0) = pi;
    g(i, n + i) = g(n + i, i) = LaurentPoly(c, 1);
    for (int j = 1; j <= n; ++j) g(n + i, n + j) = pi * LaurentPoly::variable(c, j);
  }
  return g;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse(" -3 ") == Rational(-3));
  CHECK_THROWS_AS(Rational::parse("1/0"), tpsgeo::InputError);
  CHECK_THROWS_AS(Rational::parse("abc"), tpsgeo::InputError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("poly_arith examples") {
  ChartPtr c = px_chart();
  LaurentPoly p1 = LaurentPoly::variable(c, "p1"), x1 = LaurentPoly::variable(c, "x1");
  CHECK((p1 + x1) * (p1 - x1) == p1 * p1 - x1 * x1);
  CHECK(p1 * p1.pow(-1) == LaurentPoly(1));
  LaurentPoly p1p2 = p1 * LaurentPoly::variable(c, "p2");
  CHECK(p1p2 + LaurentPoly(0) == p1p2);
  CHECK_THROWS_AS(x1.pow(-1), DomainError);
  CHECK_THROWS_AS(LaurentPoly::monomial(c, {0, 0, -1, 0}, 1), DomainError);
}

TEST_CASE("auto alignment by symbol name") {
  ChartPtr a = make_chart({{"u", false}}), b = make_chart({{"v", false}});
  LaurentPoly s = LaurentPoly::variable(a, "u") + LaurentPoly::variable(b, "v");
  CHECK(s.nvars() == 2);
  CHECK(s - LaurentPoly::variable(b, "v") == LaurentPoly::variable(a, "u"));
  ChartPtr bad = make_chart({{"u", true}});
  CHECK_THROWS_AS(LaurentPoly::variable(a, "u") + LaurentPoly::variable(bad, "u"), DomainError);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(7);
  ChartPtr c = px_chart();
  for (int t = 0; t < 1000; ++t) {
    LaurentPoly a = testsupport::random_poly(rng, c), b = testsupport::random_poly(rng, c),
                d = testsupport::random_poly(rng, c);
    REQUIRE((a * b) * d == a * (b * d));
    REQUIRE(a * (b + d) == a * b + a * d);
    REQUIRE((a + b) + d == a + (b + d));
    REQUIRE(a * b == b * a);
  }
}

TEST_CASE("poly_partial examples and commutation") {
  ChartPtr c = px_chart();
  LaurentPoly p1 = LaurentPoly::variable(c, "p1"), p2 = LaurentPoly::variable(c, "p2");
  CHECK((p1 * p2).partial("p1") == p2);
  CHECK(LaurentPoly(c, 5).partial("x2").is_zero());
  CHECK(p1.pow(-1).partial("p1") == -p1.pow(-2));
  CHECK_THROWS_AS(p1.partial("y"), DomainError);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    LaurentPoly f = testsupport::random_poly(rng, c, 5, 3);
    for (size_t i = 0; i < c->size(); ++i)
      for (size_t j = 0; j < c->size(); ++j) REQUIRE(f.partial(i).partial(j) == f.partial(j).partial(i));
  }
}

TEST_CASE("evaluation and substitution") {
  ChartPtr c = px_chart();
  LaurentPoly f = LaurentPoly::variable(c, "p1").pow(-1) * LaurentPoly::variable(c, "x1") + 3;
  std::vector<Rational> pt{Rational(2), Rational(1), Rational(5), Rational(0)};
  CHECK(f.evaluate(pt) == Rational(11, 2));
  pt[0] = 0;
  CHECK_THROWS_AS(f.evaluate(pt), DomainError);
  ChartPtr t = make_chart({{"s", true}});
  LaurentPoly s = LaurentPoly::variable(t, "s");
  LaurentPoly g = f.substitute({s * 2, s, s * s, LaurentPoly(t, 0)}, t);
  CHECK(g == s * Rational(1, 2) + 3);
  CHECK_THROWS_AS(f.substitute({s + 1, s, s, s}, t), DomainError);
}

TEST_CASE("exact division and rational functions") {
  ChartPtr c = px_chart();
  LaurentPoly p1 = LaurentPoly::variable(c, "p1"), x1 = LaurentPoly::variable(c, "x1"),
              x2 = LaurentPoly::variable(c, "x2");
  auto q = divide_exact(p1 * p1 - x1 * x1, p1 + x1);
  REQUIRE(q);
  CHECK(*q == p1 - x1);
  CHECK_FALSE(divide_exact(x2, x1));
  CHECK(*divide_exact(x1, p1) == x1 * p1.pow(-1));
  RationalFunction r(x2, x1);
  CHECK_FALSE(r.as_laurent());
  CHECK(r * RationalFunction(x1) == RationalFunction(x2));
  CHECK(RationalFunction(x2 * 2, x1 * 4) == RationalFunction(x2, x1 * 2));
  CHECK(r.den().leading_term().second == Rational(1));
  RationalFunction neg(x2, -x1);
  CHECK(neg.den().leading_term().second.sign() > 0);
  CHECK(r + r == RationalFunction(x2 * 2, x1));
  CHECK_THROWS_AS(RationalFunction(x1, LaurentPoly(0)), DomainError);
}

TEST_CASE("determinant and inverse of the Mrugala metric") {
  for (int n = 1; n <= 4; ++n) {
    PolyMatrix g = mrugala_by_hand(n);
    CHECK(determinant(g) == LaurentPoly(n % 2 ? -1 : 1));
  }
  PolyMatrix g = mrugala_by_hand(1);
  PolyMatrix inv = matrix_inverse_exact(g);
  ChartPtr c = g.chart();
  LaurentPoly p1 = LaurentPoly::variable(c, "p1");
  PolyMatrix expect(3, 3, c);
  expect(0, 0) = 1;
  expect(0, 1) = expect(1, 0) = -p1;
  expect(1, 2) = expect(2, 1) = 1;
  CHECK(inv == expect);
  for (int n = 1; n <= 3; ++n) {
    PolyMatrix gn = mrugala_by_hand(n);
    PolyMatrix in = matrix_inverse_exact(gn);
    CHECK(gn * in == PolyMatrix::identity(gn.rows()));
    CHECK(in * gn == PolyMatrix::identity(gn.rows()));
  }
  CHECK(matrix_inverse_exact(PolyMatrix::identity(3)) == PolyMatrix::identity(3));
  PolyMatrix sing(2, 2, c);
  sing(0, 0) = sing(0, 1) = sing(1, 0) = sing(1, 1) = p1;
  CHECK_THROWS_AS(matrix_inverse_exact(sing), SingularMatrixError);
}

TEST_CASE("inverse with rational-function entries") {
  ChartPtr c = px_chart();
  LaurentPoly x1 = LaurentPoly::variable(c, "x1");
  PolyMatrix m(2, 2, c);
  m(0, 0) = x1;
  m(1, 1) = 1;
  RationalFunctionMatrix inv = inverse_rational(m);
  CHECK(inv(0, 0) == RationalFunction(LaurentPoly(1), x1));
  CHECK_THROWS_AS(matrix_inverse_exact(m), DomainError);
}

TEST_CASE("kernel_exact") {
  CHECK(kernel_exact(RationalMatrix(2, 2)).size() == 2);
  CHECK(kernel_exact(RationalMatrix::identity(3)).empty());
  RationalMatrix m(2, 4);
  m(0, 0) = 1;
  m(0, 2) = 2;
  m(1, 1) = 1;
  m(1, 2) = -1;
  m(1, 3) = 3;
  auto k = kernel_exact(m);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) {
    RationalMatrix col(4, 1);
    for (size_t i = 0; i < 4; ++i) col(i, 0) = v[i];
    RationalMatrix prod = m * col;
    CHECK(prod(0, 0).is_zero());
    CHECK(prod(1, 0).is_zero());
  }
  // Basis comes back in reduced echelon form.
  RationalMatrix kb = RationalMatrix::from_rows(k, 4);
  CHECK(rref(kb) == kb);
  CHECK(rank_exact(m) == 2);
}

TEST_CASE("sparse echelon agrees with dense rank") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    RationalMatrix m(5, 7);
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = 0; j < 7; ++j)
        if (rng() % 3 == 0) m(i, j) = testsupport::random_rational(rng);
    CHECK(kernel_exact(m).size() == 7 - rank_exact(m));
  }
}

TEST_CASE("json round trip") {
  PolyMatrix g = mrugala_by_hand(2);
  json j = to_json(g);
  CHECK(j["chart"][0] == "x0");
  PolyMatrix back = matrix_from_json(json{{"chart", to_json(*g.chart())}, {"entries", j["entries"]}});
  CHECK(back == g);
  CHECK(to_json(Rational(3, 2)) == "3/2");
}
