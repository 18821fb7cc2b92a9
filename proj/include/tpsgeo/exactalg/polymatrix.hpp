#pragma once

#include <span>
#include <vector>

#include "tpsgeo/exactalg/laurent.hpp"
#include "tpsgeo/exactalg/ratfunc.hpp"

namespace tpsgeo::exactalg {

// Dense matrix of Laurent polynomials. The chart documents the coordinate
// order of rows and columns when the matrix represents a tensor.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(size_t rows, size_t cols, ChartPtr chart = nullptr);
  static PolyMatrix identity(size_t n, ChartPtr chart = nullptr);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const ChartPtr& chart() const { return chart_; }
  void set_chart(ChartPtr chart) { chart_ = std::move(chart); }

  LaurentPoly& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const LaurentPoly& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  PolyMatrix& operator+=(const PolyMatrix& o);
  PolyMatrix& operator-=(const PolyMatrix& o);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const LaurentPoly& c, const PolyMatrix& m);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  std::vector<std::vector<Rational>> evaluate(std::span<const Rational> point) const;
  PolyMatrix substitute(const std::vector<LaurentPoly>& images, const ChartPtr& target) const;

 private:
  size_t rows_ = 0, cols_ = 0;
  ChartPtr chart_;
  std::vector<LaurentPoly> data_;
};

struct RationalFunctionMatrix {
  size_t rows = 0, cols = 0;
  std::vector<RationalFunction> entries;
  RationalFunction& operator()(size_t i, size_t j) { return entries[i * cols + j]; }
  const RationalFunction& operator()(size_t i, size_t j) const { return entries[i * cols + j]; }
};

// Fraction-free (Bareiss) determinant.
LaurentPoly determinant(const PolyMatrix& m);

// Inverse as adjugate / determinant, entries reduced where the division is exact.
RationalFunctionMatrix inverse_rational(const PolyMatrix& m);

// Inverse whose entries are all Laurent polynomials; throws otherwise.
PolyMatrix matrix_inverse_exact(const PolyMatrix& m);

}  // namespace tpsgeo::exactalg
