#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tpsgeo/exactalg/laurent.hpp"

namespace tpsgeo::exactalg {

// Quotient of Laurent polynomials. The denominator is scaled so that its
// lexicographically leading coefficient is 1, and collapses to 1 whenever
// the division is exact.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(LaurentPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : RationalFunction(LaurentPoly(c)) {}  // NOLINT
  RationalFunction(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  std::optional<LaurentPoly> as_laurent() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;

  // Cross-multiplied comparison.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  Rational evaluate(std::span<const Rational> point) const;
  RationalFunction substitute(const std::vector<LaurentPoly>& images, const ChartPtr& target) const;

  std::string str() const;

 private:
  void normalize();

  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(Rational(1));
};

}  // namespace tpsgeo::exactalg
