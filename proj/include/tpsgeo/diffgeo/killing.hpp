#pragma once

#include <optional>
#include <vector>

#include "tpsgeo/diffgeo/metric.hpp"
#include "tpsgeo/exactalg/linalg.hpp"

namespace tpsgeo::diffgeo {

using exactalg::RationalVector;

// Basis of polynomial Killing fields with components of total degree at most
// max_degree, in reduced echelon form over the monomial coefficients.
std::vector<VectorField> killing_solve(const MetricSpec& metric, int max_degree);

// [e_i, e_j] = c^k_{ij} e_k
struct StructureConstants {
  size_t dim = 0;
  std::vector<Rational> c;

  const Rational& operator()(size_t i, size_t j, size_t k) const { return c[(i * dim + j) * dim + k]; }
  Rational& operator()(size_t i, size_t j, size_t k) { return c[(i * dim + j) * dim + k]; }
  friend bool operator==(const StructureConstants& a, const StructureConstants& b) = default;
};

// Throws NotClosedError when a bracket leaves the span.
StructureConstants structure_constants(const std::vector<VectorField>& basis);

std::optional<RationalVector> span_coordinates(const std::vector<VectorField>& basis,
                                               const VectorField& x);
size_t span_dimension(const std::vector<VectorField>& fields);
bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b);

}  // namespace tpsgeo::diffgeo
