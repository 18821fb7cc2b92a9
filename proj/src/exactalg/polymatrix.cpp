#include "tpsgeo/exactalg/polymatrix.hpp"

#include "tpsgeo/errors.hpp"

namespace tpsgeo::exactalg {

PolyMatrix::PolyMatrix(size_t rows, size_t cols, ChartPtr chart)
    : rows_(rows), cols_(cols), chart_(std::move(chart)), data_(rows * cols) {}

PolyMatrix PolyMatrix::identity(size_t n, ChartPtr chart) {
  PolyMatrix m(n, n, std::move(chart));
  for (size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(Rational(1));
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, chart_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  if (!chart_) chart_ = o.chart_;
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix dimension mismatch");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  if (!chart_) chart_ = o.chart_;
  return *this;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
  PolyMatrix r(a.rows_, b.cols_, a.chart_ ? a.chart_ : b.chart_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const LaurentPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j) += aik * b(k, j);
    }
  return r;
}

PolyMatrix operator*(const LaurentPoly& c, const PolyMatrix& m) {
  PolyMatrix r = m;
  for (auto& e : r.data_) e = c * e;
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t k = 0; k < a.data_.size(); ++k)
    if (!(a.data_[k] == b.data_[k])) return false;
  return true;
}

std::vector<std::vector<Rational>> PolyMatrix::evaluate(std::span<const Rational> point) const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const LaurentPoly& e = (*this)(i, j);
      out[i][j] = e.is_constant() ? *e.constant_value() : e.evaluate(point);
    }
  return out;
}

PolyMatrix PolyMatrix::substitute(const std::vector<LaurentPoly>& images,
                                  const ChartPtr& target) const {
  PolyMatrix r(rows_, cols_, target);
  for (size_t k = 0; k < data_.size(); ++k)
    r.data_[k] = data_[k].is_constant() ? LaurentPoly(target, *data_[k].constant_value())
                                        : data_[k].substitute(images, target);
  return r;
}

LaurentPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  size_t n = m.rows();
  if (n == 0) return LaurentPoly(Rational(1));
  std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  LaurentPoly prev(Rational(1));
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return LaurentPoly(m.chart(), Rational(0));
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = divide_exact(v, prev);
        if (!q) throw DomainError("Bareiss step lost exactness");
        a[i][j] = std::move(*q);
      }
      a[i][k] = LaurentPoly(Rational(0));
    }
    prev = a[k][k];
  }
  LaurentPoly d = a[n - 1][n - 1];
  return negate ? -d : d;
}

namespace {

PolyMatrix minor_matrix(const PolyMatrix& m, size_t skip_r, size_t skip_c) {
  size_t n = m.rows();
  PolyMatrix r(n - 1, n - 1, m.chart());
  for (size_t i = 0, ri = 0; i < n; ++i) {
    if (i == skip_r) continue;
    for (size_t j = 0, rj = 0; j < n; ++j) {
      if (j == skip_c) continue;
      r(ri, rj++) = m(i, j);
    }
    ++ri;
  }
  return r;
}

}  // namespace

RationalFunctionMatrix inverse_rational(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw SingularMatrixError("inverse of a non-square matrix");
  size_t n = m.rows();
  LaurentPoly det = determinant(m);
  if (det.is_zero()) throw SingularMatrixError("matrix is singular");
  RationalFunctionMatrix inv{n, n, std::vector<RationalFunction>(n * n)};
  if (n == 1) {
    inv(0, 0) = RationalFunction(LaurentPoly(Rational(1)), det);
    return inv;
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      LaurentPoly cof = determinant(minor_matrix(m, j, i));
      if ((i + j) % 2 == 1) cof = -cof;
      inv(i, j) = RationalFunction(std::move(cof), det);
    }
  return inv;
}

PolyMatrix matrix_inverse_exact(const PolyMatrix& m) {
  RationalFunctionMatrix inv = inverse_rational(m);
  PolyMatrix r(inv.rows, inv.cols, m.chart());
  for (size_t i = 0; i < inv.rows; ++i)
    for (size_t j = 0; j < inv.cols; ++j) {
      auto p = inv(i, j).as_laurent();
      if (!p) throw DomainError("inverse has non-polynomial entry " + inv(i, j).str());
      r(i, j) = std::move(*p);
    }
  return r;
}

}  // namespace tpsgeo::exactalg
