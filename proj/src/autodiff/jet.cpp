#include "tpsgeo/autodiff/jet.hpp"

#include <algorithm>
#include <limits>

#include "tpsgeo/errors.hpp"

namespace tpsgeo::autodiff {

Jet3::Jet3(size_t nvars, double value)
    : n_(nvars), value_(value), grad_(nvars, 0.0), hess_(nvars * nvars, 0.0), third_(nvars * nvars * nvars, 0.0) {}

Jet3 Jet3::variable(size_t nvars, size_t index, double value) {
  if (index >= nvars) throw InputError("jet variable index out of range");
  Jet3 j(nvars, value);
  j.grad_[index] = 1.0;
  return j;
}

std::vector<Jet3> Jet3::seed(std::span<const double> point) {
  std::vector<Jet3> out;
  for (size_t i = 0; i < point.size(); ++i) out.push_back(variable(point.size(), i, point[i]));
  return out;
}

double Jet3::partial(std::span<const size_t> index) const {
  for (size_t i : index)
    if (i >= n_) throw InputError("jet partial index out of range");
  switch (index.size()) {
    case 0: return value_;
    case 1: return grad(index[0]);
    case 2: return hess(index[0], index[1]);
    case 3: return third(index[0], index[1], index[2]);
    default: throw InputError("jets carry derivatives up to order 3");
  }
}

void Jet3::same_size(const Jet3& o) const {
  if (n_ != o.n_) throw InputError("jets with different variable counts");
}

Jet3& Jet3::operator+=(const Jet3& o) {
  same_size(o);
  value_ += o.value_;
  for (size_t i = 0; i < grad_.size(); ++i) grad_[i] += o.grad_[i];
  for (size_t i = 0; i < hess_.size(); ++i) hess_[i] += o.hess_[i];
  for (size_t i = 0; i < third_.size(); ++i) third_[i] += o.third_[i];
  return *this;
}

Jet3& Jet3::operator-=(const Jet3& o) { return *this += -o; }

Jet3& Jet3::operator+=(double c) {
  value_ += c;
  return *this;
}

Jet3& Jet3::operator*=(double c) {
  value_ *= c;
  for (auto& v : grad_) v *= c;
  for (auto& v : hess_) v *= c;
  for (auto& v : third_) v *= c;
  return *this;
}

Jet3 Jet3::operator-() const {
  Jet3 r = *this;
  r *= -1.0;
  return r;
}

Jet3& Jet3::operator*=(const Jet3& o) {
  same_size(o);
  const Jet3& a = *this;
  const Jet3& b = o;
  Jet3 r(n_, a.value_ * b.value_);
  for (size_t i = 0; i < n_; ++i) r.grad_[i] = a.grad_[i] * b.value_ + a.value_ * b.grad_[i];
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j)
      r.h(i, j) = a.hess(i, j) * b.value_ + a.grad_[i] * b.grad_[j] + a.grad_[j] * b.grad_[i] + a.value_ * b.hess(i, j);
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j)
      for (size_t k = 0; k < n_; ++k)
        r.t(i, j, k) = a.third(i, j, k) * b.value_ + a.hess(i, j) * b.grad_[k] + a.hess(i, k) * b.grad_[j] +
                       a.hess(j, k) * b.grad_[i] + a.grad_[i] * b.hess(j, k) + a.grad_[j] * b.hess(i, k) +
                       a.grad_[k] * b.hess(i, j) + a.value_ * b.third(i, j, k);
  *this = std::move(r);
  return *this;
}

Jet3 Jet3::compose(double f0, double f1, double f2, double f3) const {
  Jet3 r(n_, f0);
  for (size_t i = 0; i < n_; ++i) r.grad_[i] = f1 * grad_[i];
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j) r.h(i, j) = f1 * hess(i, j) + f2 * grad_[i] * grad_[j];
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = 0; j < n_; ++j)
      for (size_t k = 0; k < n_; ++k)
        r.t(i, j, k) = f1 * third(i, j, k) +
                       f2 * (hess(i, j) * grad_[k] + hess(i, k) * grad_[j] + hess(j, k) * grad_[i]) +
                       f3 * grad_[i] * grad_[j] * grad_[k];
  return r;
}

Jet3& Jet3::operator/=(const Jet3& o) {
  same_size(o);
  double v = o.value_;
  if (v == 0.0) throw NumericDomainError("jet division by zero");
  Jet3 inv = o.compose(1 / v, -1 / (v * v), 2 / (v * v * v), -6 / (v * v * v * v));
  return *this *= inv;
}

Jet3 operator/(double c, const Jet3& a) { return Jet3(a.nvars(), c) / a; }

Jet3 exp(const Jet3& a) {
  double e = std::exp(a.value());
  return a.compose(e, e, e, e);
}

Jet3 log(const Jet3& a) {
  double v = a.value();
  if (!(v > 0)) throw NumericDomainError("logarithm of a non-positive value");
  return a.compose(std::log(v), 1 / v, -1 / (v * v), 2 / (v * v * v));
}

Jet3 pow(const Jet3& a, double r) {
  double v = a.value();
  bool integer = r == std::floor(r);
  if (!integer && !(v > 0)) throw NumericDomainError("non-integer power of a non-positive value");
  if (integer && r < 0 && v == 0) throw NumericDomainError("negative power of zero");
  auto p = [&](double e) { return e == 0 ? 1.0 : std::pow(v, e); };
  return a.compose(p(r), r * p(r - 1), r * (r - 1) * p(r - 2), r * (r - 1) * (r - 2) * p(r - 3));
}

namespace {

Quad central(const QuadFunction& f, std::span<const double> point, std::span<const size_t> index,
             const std::vector<Quad>& steps) {
  size_t k = index.size();
  std::vector<Quad> x(point.begin(), point.end());
  Quad sum = 0;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<Quad> y = x;
    int sign = 1;
    for (size_t m = 0; m < k; ++m) {
      bool minus = (mask >> m) & 1u;
      y[index[m]] += minus ? -steps[index[m]] : steps[index[m]];
      if (minus) sign = -sign;
    }
    Quad v = f(y);
    if (!finiteq(v)) throw NumericDomainError("non-finite sample in finite differences");
    sum += sign * v;
  }
  Quad denom = 1;
  for (size_t m = 0; m < k; ++m) denom *= 2 * steps[index[m]];
  return sum / denom;
}

}  // namespace

FdEstimate fd_oracle(const QuadFunction& f, std::span<const double> point, std::span<const size_t> index) {
  if (index.size() > 3) throw InputError("finite differences support order up to 3");
  for (size_t i : index)
    if (i >= point.size()) throw InputError("finite difference index out of range");
  if (index.empty()) {
    std::vector<Quad> x(point.begin(), point.end());
    Quad v = f(x);
    if (!finiteq(v)) throw NumericDomainError("non-finite sample in finite differences");
    return FdEstimate{static_cast<double>(v), 0.0};
  }
  Quad base = powq(FLT128_EPSILON, static_cast<Quad>(1.0) / static_cast<Quad>(index.size() + 2));
  std::vector<Quad> h(point.size()), h2(point.size());
  for (size_t i = 0; i < point.size(); ++i) {
    h[i] = std::max(std::abs(point[i]), 1.0) * base;
    h2[i] = h[i] / 2;
  }
  Quad coarse = central(f, point, index, h), fine = central(f, point, index, h2);
  Quad rich = (4 * fine - coarse) / 3;
  return FdEstimate{static_cast<double>(rich), static_cast<double>(fabsq(rich - fine))};
}

bool close(double a, double b, double rel, double abs_floor) {
  if (!std::isfinite(a) || !std::isfinite(b)) return false;
  return std::abs(a - b) <= std::max(abs_floor, rel * std::abs(b));
}

}  // namespace tpsgeo::autodiff
