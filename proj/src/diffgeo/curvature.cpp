#include "tpsgeo/diffgeo/curvature.hpp"

#include "tpsgeo/errors.hpp"

namespace tpsgeo::diffgeo {

ChristoffelTable::ChristoffelTable(ChartPtr chart)
    : chart_(std::move(chart)), dim_(chart_->size()), data_(dim_ * dim_ * dim_) {}

void ChristoffelTable::set_symmetric(size_t a, size_t b, size_t c, const LaurentPoly& v) {
  (*this)(a, b, c) = v;
  (*this)(a, c, b) = v;
}

size_t ChristoffelTable::nonzero_count() const {
  size_t n = 0;
  for (const auto& e : data_)
    if (!e.is_zero()) ++n;
  return n;
}

bool operator==(const ChristoffelTable& x, const ChristoffelTable& y) {
  if (x.dim_ != y.dim_) return false;
  for (size_t i = 0; i < x.data_.size(); ++i)
    if (!(x.data_[i] == y.data_[i])) return false;
  return true;
}

ChristoffelTable christoffel(const MetricSpec& metric) {
  size_t d = metric.dimension();
  const ChartPtr& chart = metric.chart;
  // dg[s][b][c] = d_s g_bc
  std::vector<LaurentPoly> dg(d * d * d);
  auto at = [d](size_t s, size_t b, size_t c) { return (s * d + b) * d + c; };
  for (size_t b = 0; b < d; ++b)
    for (size_t c = 0; c < d; ++c) {
      LaurentPoly gbc = metric.g(b, c).on_chart(chart);
      for (size_t s = 0; s < d; ++s) dg[at(s, b, c)] = gbc.partial(s);
    }
  ChristoffelTable t(chart);
  Rational half(1, 2);
  for (size_t b = 0; b < d; ++b)
    for (size_t c = b; c < d; ++c) {
      std::vector<LaurentPoly> lower(d);  // {bc, s}
      for (size_t s = 0; s < d; ++s) lower[s] = dg[at(b, c, s)] + dg[at(c, b, s)] - dg[at(s, b, c)];
      for (size_t a = 0; a < d; ++a) {
        LaurentPoly v;
        for (size_t s = 0; s < d; ++s)
          if (!metric.g_inv(a, s).is_zero() && !lower[s].is_zero()) v += metric.g_inv(a, s) * lower[s];
        t.set_symmetric(a, b, c, v * half);
      }
    }
  return t;
}

std::vector<LaurentPoly> trace_form(const ChristoffelTable& table) {
  size_t d = table.dim();
  std::vector<LaurentPoly> out(d);
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) out[a] += table(b, a, b);
  return out;
}

VectorField covariant_derivative(const ChristoffelTable& table, const VectorField& x,
                                 const VectorField& y) {
  size_t d = table.dim();
  if (x.dim() != d || y.dim() != d) throw DomainError("fields do not match connection chart");
  VectorField r(table.chart());
  for (size_t k = 0; k < d; ++k) {
    LaurentPoly v = x.apply(y[k]);
    for (size_t i = 0; i < d; ++i) {
      if (x[i].is_zero()) continue;
      for (size_t j = 0; j < d; ++j)
        if (!y[j].is_zero() && !table(k, i, j).is_zero()) v += table(k, i, j) * x[i] * y[j];
    }
    r[k] = v;
  }
  return r;
}

VectorField riemann_transform(const ChristoffelTable& table, const VectorField& x,
                              const VectorField& y, const VectorField& z) {
  VectorField a = covariant_derivative(table, x, covariant_derivative(table, y, z));
  VectorField b = covariant_derivative(table, y, covariant_derivative(table, x, z));
  VectorField c = covariant_derivative(table, bracket(x, y), z);
  return a - b - c;
}

std::vector<LaurentPoly> riemann_tensor(const ChristoffelTable& table) {
  size_t d = table.dim();
  const ChartPtr& chart = table.chart();
  // dG[((i*d + l)*d + j)*d + k] = d_i Gamma^l_{jk}
  std::vector<LaurentPoly> dG(d * d * d * d);
  for (size_t l = 0; l < d; ++l)
    for (size_t j = 0; j < d; ++j)
      for (size_t k = 0; k < d; ++k) {
        LaurentPoly g = table(l, j, k).on_chart(chart);
        if (g.is_zero()) continue;
        for (size_t i = 0; i < d; ++i) dG[((i * d + l) * d + j) * d + k] = g.partial(i);
      }
  auto idx = [d](size_t l, size_t k, size_t i, size_t j) { return ((l * d + k) * d + i) * d + j; };
  std::vector<LaurentPoly> r(d * d * d * d);
  for (size_t l = 0; l < d; ++l)
    for (size_t k = 0; k < d; ++k)
      for (size_t i = 0; i < d; ++i)
        for (size_t j = i + 1; j < d; ++j) {
          LaurentPoly v = dG[((i * d + l) * d + j) * d + k] - dG[((j * d + l) * d + i) * d + k];
          for (size_t m = 0; m < d; ++m) {
            if (!table(l, i, m).is_zero() && !table(m, j, k).is_zero()) v += table(l, i, m) * table(m, j, k);
            if (!table(l, j, m).is_zero() && !table(m, i, k).is_zero()) v -= table(l, j, m) * table(m, i, k);
          }
          r[idx(l, k, j, i)] = -v;
          r[idx(l, k, i, j)] = std::move(v);
        }
  return r;
}

PolyMatrix ricci_index_formula(const ChristoffelTable& table) {
  size_t d = table.dim();
  const ChartPtr& chart = table.chart();
  PolyMatrix ric(d, d, chart);
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) {
      LaurentPoly v;
      for (size_t m = 0; m < d; ++m) {
        v += table(m, b, a).on_chart(chart).partial(m);
        v -= table(m, m, a).on_chart(chart).partial(b);
        for (size_t c = 0; c < d; ++c) {
          if (!table(m, m, c).is_zero() && !table(c, b, a).is_zero()) v += table(m, m, c) * table(c, b, a);
          if (!table(m, b, c).is_zero() && !table(c, m, a).is_zero()) v -= table(m, b, c) * table(c, m, a);
        }
      }
      ric(a, b) = v;
    }
  return ric;
}

PolyMatrix ricci_contraction(const CurvatureTensors& t) {
  PolyMatrix ric(t.dim, t.dim, t.chart);
  for (size_t k = 0; k < t.dim; ++k)
    for (size_t j = 0; j < t.dim; ++j) {
      LaurentPoly v;
      for (size_t i = 0; i < t.dim; ++i) v += t.R(i, k, i, j);
      ric(k, j) = v;
    }
  return ric;
}

CurvatureTensors ricci_scalar(const MetricSpec& metric, const ChristoffelTable& table) {
  CurvatureTensors t;
  t.chart = metric.chart;
  t.dim = metric.dimension();
  t.riemann = riemann_tensor(table);
  t.ricci = ricci_index_formula(table);
  LaurentPoly s;
  for (size_t a = 0; a < t.dim; ++a)
    for (size_t b = 0; b < t.dim; ++b)
      if (!metric.g_inv(a, b).is_zero() && !t.ricci(a, b).is_zero()) s += metric.g_inv(a, b) * t.ricci(a, b);
  t.scalar = s;
  return t;
}

CurvatureTensors ricci_scalar(const MetricSpec& metric) { return ricci_scalar(metric, christoffel(metric)); }

namespace {

Rational eval(const LaurentPoly& p, std::span<const Rational> point) {
  return p.is_constant() ? *p.constant_value() : p.evaluate(point);
}

}  // namespace

Rational sectional_numerator(const MetricSpec& metric, const ChristoffelTable& table,
                             std::span<const Rational> point, const VectorField& a,
                             const VectorField& b) {
  VectorField rab = riemann_transform(table, a, b, b);
  return eval(metric.inner(rab, a), point);
}

Rational plane_norm(const MetricSpec& metric, std::span<const Rational> point, const VectorField& a,
                    const VectorField& b) {
  Rational aa = eval(metric.inner(a, a), point);
  Rational bb = eval(metric.inner(b, b), point);
  Rational ab = eval(metric.inner(a, b), point);
  return aa * bb - ab * ab;
}

Rational sectional(const MetricSpec& metric, const ChristoffelTable& table,
                   std::span<const Rational> point, const VectorField& a, const VectorField& b) {
  Rational den = plane_norm(metric, point, a, b);
  if (den.is_zero())
    throw DegeneratePlaneError("degenerate plane: |A^B|^2 = 0 at the given point");
  return sectional_numerator(metric, table, point, a, b) / den;
}

}  // namespace tpsgeo::diffgeo
