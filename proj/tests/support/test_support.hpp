#pragma once

#include <random>
#include <vector>

#include "tpsgeo/exactalg/laurent.hpp"

namespace testsupport {

using tpsgeo::exactalg::ChartPtr;
using tpsgeo::exactalg::Exponents;
using tpsgeo::exactalg::LaurentPoly;
using tpsgeo::exactalg::Rational;

inline Rational random_rational(std::mt19937_64& rng, long span = 9, long max_den = 5) {
  std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long span = 9, long max_den = 5) {
  Rational r;
  do r = random_rational(rng, span, max_den);
  while (r.is_zero());
  return r;
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, size_t dim, bool nonzero = true) {
  std::vector<Rational> pt;
  for (size_t i = 0; i < dim; ++i)
    pt.push_back(nonzero ? random_nonzero_rational(rng) : random_rational(rng));
  return pt;
}

// Random polynomial with a few terms; negative exponents only where allowed.
inline LaurentPoly random_poly(std::mt19937_64& rng, const ChartPtr& chart, int terms = 3,
                               int max_exp = 2) {
  std::uniform_int_distribution<int> e(0, max_exp), eneg(-1, max_exp);
  LaurentPoly p(chart, Rational(0));
  for (int t = 0; t < terms; ++t) {
    Exponents ex(chart->size());
    for (size_t i = 0; i < chart->size(); ++i) ex[i] = (*chart)[i].invertible ? eneg(rng) : e(rng);
    p += LaurentPoly::monomial(chart, ex, random_rational(rng));
  }
  return p;
}

}  // namespace testsupport
