#include "tpsgeo/exactalg/linalg.hpp"

#include "tpsgeo/errors.hpp"

namespace tpsgeo::exactalg {

RationalMatrix RationalMatrix::identity(size_t n) {
  RationalMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DomainError("ragged rows");
    for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalVector RationalMatrix::row(size_t i) const {
  return RationalVector(data_.begin() + static_cast<long>(i * cols_),
                        data_.begin() + static_cast<long>((i + 1) * cols_));
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch");
  RationalMatrix r(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

namespace {

void axpy(SparseRow& row, const Rational& f, const SparseRow& other) {
  for (const auto& [c, v] : other) {
    auto [it, inserted] = row.try_emplace(c, f * v);
    if (!inserted) {
      it->second += f * v;
      if (it->second.is_zero()) row.erase(it);
    } else if (it->second.is_zero()) {
      row.erase(it);
    }
  }
}

}  // namespace

bool SparseEchelon::add_row(SparseRow row) {
  for (auto it = row.begin(); it != row.end();)
    it = it->second.is_zero() ? row.erase(it) : std::next(it);
  while (!row.empty()) {
    auto lead = row.begin();
    auto p = pivots_.find(lead->first);
    if (p == pivots_.end()) {
      Rational inv = lead->second.inverse();
      for (auto& [c, v] : row) v *= inv;
      pivots_.emplace(lead->first, std::move(row));
      return true;
    }
    Rational f = -lead->second;
    axpy(row, f, p->second);
  }
  return false;
}

std::vector<RationalVector> SparseEchelon::kernel() const {
  // Back substitution to reduced form, highest pivot first.
  std::map<size_t, SparseRow> reduced;
  for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
    SparseRow row = it->second;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [c, v] : row) {
        if (c == it->first) continue;
        auto r = reduced.find(c);
        if (r != reduced.end()) {
          Rational f = -v;
          axpy(row, f, r->second);
          changed = true;
          break;
        }
      }
    }
    reduced.emplace(it->first, std::move(row));
  }
  std::vector<RationalVector> basis;
  for (size_t f = 0; f < cols_; ++f) {
    if (reduced.count(f)) continue;
    RationalVector v(cols_);
    v[f] = 1;
    for (const auto& [pc, row] : reduced) {
      auto e = row.find(f);
      if (e != row.end()) v[pc] = -e->second;
    }
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  RationalMatrix k = rref(RationalMatrix::from_rows(basis, cols_));
  std::vector<RationalVector> out;
  for (size_t i = 0; i < k.rows(); ++i) out.push_back(k.row(i));
  return out;
}

RationalMatrix rref(const RationalMatrix& m, std::vector<size_t>* pivots) {
  RationalMatrix a = m;
  size_t r = 0;
  if (pivots) pivots->clear();
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = a(r, c).inverse();
    for (size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Rational f = a(i, c);
      for (size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return a;
}

size_t rank_exact(const RationalMatrix& m) {
  std::vector<size_t> piv;
  rref(m, &piv);
  return piv.size();
}

std::vector<RationalVector> kernel_exact(const RationalMatrix& m) {
  SparseEchelon e(m.cols());
  for (size_t i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) row.emplace(j, m(i, j));
    e.add_row(std::move(row));
  }
  return e.kernel();
}

std::optional<RationalVector> solve_exact(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw DomainError("right-hand side has wrong length");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<size_t> piv;
  RationalMatrix r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  RationalVector x(a.cols());
  for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, a.cols());
  return x;
}

std::optional<RationalMatrix> inverse_exact(const RationalMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<size_t> piv;
  RationalMatrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  RationalMatrix a = m;
  size_t n = a.rows();
  Rational det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Rational inv = a(c, c).inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      Rational f = a(i, c) * inv;
      for (size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

}  // namespace tpsgeo::exactalg
