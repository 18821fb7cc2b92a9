#pragma once

#include <string>
#include <vector>

#include "tpsgeo/diffgeo/vector_field.hpp"
#include "tpsgeo/exactalg/polymatrix.hpp"

namespace tpsgeo::diffgeo {

struct MetricSpec {
  std::string name;
  ChartPtr chart;
  PolyMatrix g;
  PolyMatrix g_inv;

  size_t dimension() const { return chart ? chart->size() : 0; }

  // Checks symmetry and computes the inverse exactly.
  static MetricSpec make(std::string name, ChartPtr chart, PolyMatrix g);
  // Checks symmetry and g * g_inv = I.
  static MetricSpec make(std::string name, ChartPtr chart, PolyMatrix g, PolyMatrix g_inv);

  LaurentPoly inner(const VectorField& x, const VectorField& y) const;
};

PolyMatrix gram_matrix(const MetricSpec& metric, const std::vector<VectorField>& frame);

// (L_X g)_ij = X^k d_k g_ij + g_kj d_i X^k + g_ik d_j X^k
PolyMatrix lie_derivative_metric(const MetricSpec& metric, const VectorField& x);

}  // namespace tpsgeo::diffgeo
