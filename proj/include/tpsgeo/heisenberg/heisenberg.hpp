#pragma once

#include <json.hpp>
#include <span>
#include <vector>

#include "tpsgeo/diffgeo/vector_field.hpp"
#include "tpsgeo/exactalg/rational.hpp"
#include "tpsgeo/report/check.hpp"

namespace tpsgeo::heisenberg {

using exactalg::Rational;

// g(a, b, c): upper unitriangular (n+2)x(n+2) matrix with row a, column b, corner c.
struct HeisElement {
  std::vector<Rational> a, b;
  Rational c;

  size_t n() const { return a.size(); }
  friend bool operator==(const HeisElement&, const HeisElement&) = default;
};

// X(a, b, z): strictly upper triangular matrix of the same shape.
struct HeisAlgElement {
  std::vector<Rational> a, b;
  Rational z;

  size_t n() const { return a.size(); }
  friend bool operator==(const HeisAlgElement&, const HeisAlgElement&) = default;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

HeisElement identity(size_t n);
HeisElement multiply(const HeisElement& g, const HeisElement& h);
HeisElement inverse(const HeisElement& g);
HeisElement exp(const HeisAlgElement& x);
HeisAlgElement log(const HeisElement& g);

RationalMatrix to_matrix(const HeisElement& g);
RationalMatrix to_matrix(const HeisAlgElement& x);
// Throws InputError unless m has the unitriangular Heisenberg shape.
HeisElement from_matrix(const RationalMatrix& m);
RationalMatrix matrix_product(const RationalMatrix& a, const RationalMatrix& b);
// I + M + M^2/2; M^3 = 0.
HeisElement exp_series(const HeisAlgElement& x);

// Phase space point (x0, p1..pn, x1..xn) = (-c, b, a).
std::vector<Rational> chi(const HeisElement& g);
HeisElement chi_inv(std::span<const Rational> point);
// chi o L_g o chi^{-1}.
std::vector<Rational> left_action(const HeisElement& g, std::span<const Rational> point);

nlohmann::json to_json(const HeisElement& g);
HeisElement element_from_json(const nlohmann::json& j);
nlohmann::json to_json(const HeisAlgElement& x);
HeisAlgElement algebra_from_json(const nlohmann::json& j);

// Associativity, inverses, exp against the series, log, chi and the left action on random samples.
std::vector<report::Check> group_checks(int n, int samples, unsigned long seed);

// Coordinates (a1..an, b1..bn, c).
struct HeisChart {
  int n = 0;
  exactalg::ChartPtr symbols;

  size_t a(int i) const { return static_cast<size_t>(i - 1); }
  size_t b(int j) const { return static_cast<size_t>(n + j - 1); }
  size_t c() const { return static_cast<size_t>(2 * n); }
};

HeisChart make_heis_chart(int n);

struct InvariantFields {
  HeisChart chart;
  diffgeo::VectorField xi_Z;
  std::vector<diffgeo::VectorField> xi_A, xi_B;  // left translation generators
  diffgeo::VectorField eta_C;
  std::vector<diffgeo::VectorField> eta_A, eta_B;  // right translation generators
};

InvariantFields invariant_fields(int n);
// Pushforwards under chi, theta_H, right invariance of theta_H and G_H, and the Killing span.
std::vector<report::Check> invariant_fields_and_checks(int n);

}  // namespace tpsgeo::heisenberg
