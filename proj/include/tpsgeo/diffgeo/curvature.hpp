#pragma once

#include <span>
#include <vector>

#include "tpsgeo/diffgeo/metric.hpp"

namespace tpsgeo::diffgeo {

// Gamma^a_{bc}, symmetric in the lower pair.
class ChristoffelTable {
 public:
  ChristoffelTable() = default;
  explicit ChristoffelTable(ChartPtr chart);

  const ChartPtr& chart() const { return chart_; }
  size_t dim() const { return dim_; }
  const LaurentPoly& operator()(size_t a, size_t b, size_t c) const {
    return data_[(a * dim_ + b) * dim_ + c];
  }
  LaurentPoly& operator()(size_t a, size_t b, size_t c) { return data_[(a * dim_ + b) * dim_ + c]; }
  // Sets both Gamma^a_{bc} and Gamma^a_{cb}.
  void set_symmetric(size_t a, size_t b, size_t c, const LaurentPoly& v);
  size_t nonzero_count() const;

  friend bool operator==(const ChristoffelTable& x, const ChristoffelTable& y);

 private:
  ChartPtr chart_;
  size_t dim_ = 0;
  std::vector<LaurentPoly> data_;
};

ChristoffelTable christoffel(const MetricSpec& metric);

// gamma_a = Gamma^b_{ab}
std::vector<LaurentPoly> trace_form(const ChristoffelTable& table);

VectorField covariant_derivative(const ChristoffelTable& table, const VectorField& x,
                                 const VectorField& y);

// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
VectorField riemann_transform(const ChristoffelTable& table, const VectorField& x,
                              const VectorField& y, const VectorField& z);

struct CurvatureTensors {
  ChartPtr chart;
  size_t dim = 0;
  // R^l_{kij} stored at ((l*dim + k)*dim + i)*dim + j, with R(d_i, d_j) d_k = R^l_{kij} d_l.
  std::vector<LaurentPoly> riemann;
  PolyMatrix ricci;
  LaurentPoly scalar;

  const LaurentPoly& R(size_t l, size_t k, size_t i, size_t j) const {
    return riemann[((l * dim + k) * dim + i) * dim + j];
  }
};

std::vector<LaurentPoly> riemann_tensor(const ChristoffelTable& table);

// R_ab = Gamma^m_{ba,m} - Gamma^m_{ma,b} + Gamma^m_{mc} Gamma^c_{ba} - Gamma^m_{bc} Gamma^c_{ma}
PolyMatrix ricci_index_formula(const ChristoffelTable& table);
PolyMatrix ricci_contraction(const CurvatureTensors& tensors);

CurvatureTensors ricci_scalar(const MetricSpec& metric);
CurvatureTensors ricci_scalar(const MetricSpec& metric, const ChristoffelTable& table);

// G(R(A,B)B, A) at a point.
Rational sectional_numerator(const MetricSpec& metric, const ChristoffelTable& table,
                             std::span<const Rational> point, const VectorField& a,
                             const VectorField& b);
// G(A,A)G(B,B) - G(A,B)^2 at a point.
Rational plane_norm(const MetricSpec& metric, std::span<const Rational> point,
                    const VectorField& a, const VectorField& b);
// Throws DegeneratePlaneError when plane_norm vanishes.
Rational sectional(const MetricSpec& metric, const ChristoffelTable& table,
                   std::span<const Rational> point, const VectorField& a, const VectorField& b);

}  // namespace tpsgeo::diffgeo
