#pragma once

#include <map>
#include <string>
#include <vector>

#include "tpsgeo/diffgeo/vector_field.hpp"

namespace tpsgeo::diffgeo {

// Differential form of fixed degree; components keyed by strictly
// increasing index tuples, so dx^i ^ dx^j evaluates to 1 on (d_i, d_j).
class DiffForm {
 public:
  using Index = std::vector<size_t>;

  DiffForm() = default;
  DiffForm(ChartPtr chart, int degree);

  static DiffForm function(const ChartPtr& chart, const LaurentPoly& f);
  static DiffForm coordinate_differential(const ChartPtr& chart, size_t index);
  static DiffForm exact(const ChartPtr& chart, const LaurentPoly& f);
  static DiffForm one_form(const ChartPtr& chart, const std::vector<LaurentPoly>& coeffs);

  const ChartPtr& chart() const { return chart_; }
  int degree() const { return degree_; }
  const std::map<Index, LaurentPoly>& components() const { return comps_; }
  LaurentPoly component(const Index& sorted) const;
  std::vector<LaurentPoly> one_form_coefficients() const;

  // Adds coeff * dx^{idx[0]} ^ ... for an arbitrary ordering of idx.
  void add_term(Index idx, const LaurentPoly& coeff);
  bool is_zero() const { return comps_.empty(); }

  DiffForm& operator+=(const DiffForm& o);
  DiffForm& operator-=(const DiffForm& o);
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
  friend DiffForm operator*(const LaurentPoly& f, const DiffForm& w);
  DiffForm operator-() const;
  friend bool operator==(const DiffForm& a, const DiffForm& b);

  friend DiffForm wedge(const DiffForm& a, const DiffForm& b);
  DiffForm d() const;
  DiffForm interior(const VectorField& x) const;
  DiffForm lie(const VectorField& x) const;
  LaurentPoly evaluate(const std::vector<VectorField>& args) const;

  std::string str() const;

 private:
  ChartPtr chart_;
  int degree_ = 0;
  std::map<Index, LaurentPoly> comps_;
};

DiffForm wedge(const DiffForm& a, const DiffForm& b);

}  // namespace tpsgeo::diffgeo
