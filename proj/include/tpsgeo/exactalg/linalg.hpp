#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tpsgeo/exactalg/rational.hpp"

namespace tpsgeo::exactalg {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, size_t cols);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  RationalVector row(size_t i) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

using SparseRow = std::map<size_t, Rational>;

// Row echelon form built one sparse row at a time; suited to the large,
// very sparse coefficient-matching systems of the Killing solver.
class SparseEchelon {
 public:
  explicit SparseEchelon(size_t cols) : cols_(cols) {}

  // Returns true when the row was independent of those already added.
  bool add_row(SparseRow row);
  size_t rank() const { return pivots_.size(); }
  size_t cols() const { return cols_; }

  // Kernel basis, itself returned in reduced row echelon form.
  std::vector<RationalVector> kernel() const;

 private:
  size_t cols_;
  std::map<size_t, SparseRow> pivots_;
};

// Reduced row echelon form; pivot columns are reported when requested.
RationalMatrix rref(const RationalMatrix& m, std::vector<size_t>* pivots = nullptr);
size_t rank_exact(const RationalMatrix& m);
std::vector<RationalVector> kernel_exact(const RationalMatrix& m);

// Some x with A x = b, if one exists.
std::optional<RationalVector> solve_exact(const RationalMatrix& a, const RationalVector& b);

std::optional<RationalMatrix> inverse_exact(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);

}  // namespace tpsgeo::exactalg
