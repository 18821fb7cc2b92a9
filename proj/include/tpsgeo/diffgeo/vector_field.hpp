#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tpsgeo/exactalg/laurent.hpp"
#include "tpsgeo/exactalg/polymatrix.hpp"

namespace tpsgeo::diffgeo {

using exactalg::ChartPtr;
using exactalg::LaurentPoly;
using exactalg::PolyMatrix;
using exactalg::Rational;

// Vector field with Laurent polynomial components in a chart.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(ChartPtr chart);
  VectorField(ChartPtr chart, std::vector<LaurentPoly> components);

  static VectorField coordinate(const ChartPtr& chart, size_t index);
  static VectorField coordinate(const ChartPtr& chart, std::string_view name);

  const ChartPtr& chart() const { return chart_; }
  size_t dim() const { return comps_.size(); }
  const std::vector<LaurentPoly>& components() const { return comps_; }
  const LaurentPoly& operator[](size_t i) const { return comps_[i]; }
  LaurentPoly& operator[](size_t i) { return comps_[i]; }

  // Directional derivative X(f).
  LaurentPoly apply(const LaurentPoly& f) const;
  bool is_zero() const;
  std::vector<Rational> evaluate(std::span<const Rational> point) const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const LaurentPoly& f, const VectorField& x);
  friend VectorField operator*(const Rational& c, const VectorField& x);
  friend VectorField operator*(long c, const VectorField& x) { return Rational(c) * x; }
  VectorField operator-() const;
  friend bool operator==(const VectorField& a, const VectorField& b);

  std::string str() const;

 private:
  void check_same(const VectorField& o) const;

  ChartPtr chart_;
  std::vector<LaurentPoly> comps_;
};

VectorField bracket(const VectorField& x, const VectorField& y);

// (1,1)-tensor applied to a field: (T X)^i = T^i_j X^j.
VectorField apply_tensor(const PolyMatrix& t, const VectorField& x);

}  // namespace tpsgeo::diffgeo
