#pragma once

#include <quadmath.h>

#include <cmath>
#include <functional>
#include <span>
#include <vector>

namespace tpsgeo::autodiff {

using Quad = __float128;

// Truncated Taylor jet of order 3 in nvars variables; dense symmetric storage.
class Jet3 {
 public:
  Jet3() = default;
  Jet3(size_t nvars, double value);

  static Jet3 constant(size_t nvars, double value) { return Jet3(nvars, value); }
  static Jet3 variable(size_t nvars, size_t index, double value);
  static std::vector<Jet3> seed(std::span<const double> point);

  size_t nvars() const { return n_; }
  double value() const { return value_; }
  double grad(size_t i) const { return grad_[i]; }
  double hess(size_t i, size_t j) const { return hess_[i * n_ + j]; }
  double third(size_t i, size_t j, size_t k) const { return third_[(i * n_ + j) * n_ + k]; }
  const std::vector<double>& gradient() const { return grad_; }
  // Partial derivative for a multi-index of length 0..3.
  double partial(std::span<const size_t> index) const;

  Jet3& operator+=(const Jet3& o);
  Jet3& operator-=(const Jet3& o);
  Jet3& operator*=(const Jet3& o);
  Jet3& operator/=(const Jet3& o);
  Jet3& operator+=(double c);
  Jet3& operator*=(double c);
  Jet3 operator-() const;

  friend Jet3 operator+(Jet3 a, const Jet3& b) { return a += b; }
  friend Jet3 operator-(Jet3 a, const Jet3& b) { return a -= b; }
  friend Jet3 operator*(Jet3 a, const Jet3& b) { return a *= b; }
  friend Jet3 operator/(Jet3 a, const Jet3& b) { return a /= b; }
  friend Jet3 operator+(Jet3 a, double c) { return a += c; }
  friend Jet3 operator+(double c, Jet3 a) { return a += c; }
  friend Jet3 operator-(Jet3 a, double c) { return a += -c; }
  friend Jet3 operator-(double c, const Jet3& a) { return -a + c; }
  friend Jet3 operator*(Jet3 a, double c) { return a *= c; }
  friend Jet3 operator*(double c, Jet3 a) { return a *= c; }
  friend Jet3 operator/(Jet3 a, double c) { return a *= 1.0 / c; }
  friend Jet3 operator/(double c, const Jet3& a);

  // f(a) from f and its first three derivatives at a.value().
  Jet3 compose(double f0, double f1, double f2, double f3) const;

 private:
  double& h(size_t i, size_t j) { return hess_[i * n_ + j]; }
  double& t(size_t i, size_t j, size_t k) { return third_[(i * n_ + j) * n_ + k]; }
  void same_size(const Jet3& o) const;

  size_t n_ = 0;
  double value_ = 0;
  std::vector<double> grad_, hess_, third_;
};

// Throws NumericDomainError on ln of a non-positive value, or a non-integer power of one.
Jet3 exp(const Jet3& a);
Jet3 log(const Jet3& a);
Jet3 pow(const Jet3& a, double r);

inline double exp(double x) { return std::exp(x); }
inline double log(double x) { return std::log(x); }
inline double pow(double x, double r) { return std::pow(x, r); }
inline Quad exp(Quad x) { return expq(x); }
inline Quad log(Quad x) { return logq(x); }
inline Quad pow(Quad x, double r) { return powq(x, static_cast<Quad>(r)); }

struct FdEstimate {
  double value = 0;
  double error = 0;  // |Richardson estimate - finer central difference|
};

using QuadFunction = std::function<Quad(std::span<const Quad>)>;

// Central differences in quad precision with one Richardson step.
FdEstimate fd_oracle(const QuadFunction& f, std::span<const double> point, std::span<const size_t> index);

// |a - b| <= max(abs_floor, rel * |b|)
bool close(double a, double b, double rel, double abs_floor);

}  // namespace tpsgeo::autodiff
