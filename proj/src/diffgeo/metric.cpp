#include "tpsgeo/diffgeo/metric.hpp"

#include "tpsgeo/errors.hpp"

namespace tpsgeo::diffgeo {

MetricSpec MetricSpec::make(std::string name, ChartPtr chart, PolyMatrix g) {
  if (!g.is_symmetric()) throw DomainError("metric matrix is not symmetric");
  PolyMatrix inv = exactalg::matrix_inverse_exact(g);
  inv.set_chart(chart);
  g.set_chart(chart);
  return MetricSpec{std::move(name), std::move(chart), std::move(g), std::move(inv)};
}

MetricSpec MetricSpec::make(std::string name, ChartPtr chart, PolyMatrix g, PolyMatrix g_inv) {
  if (g.rows() != chart->size() || g.cols() != chart->size())
    throw DomainError("metric matrix does not match chart");
  if (!g.is_symmetric()) throw DomainError("metric matrix is not symmetric");
  if (!(g * g_inv == PolyMatrix::identity(g.rows())))
    throw DomainError("supplied inverse does not invert the metric");
  g.set_chart(chart);
  g_inv.set_chart(chart);
  return MetricSpec{std::move(name), std::move(chart), std::move(g), std::move(g_inv)};
}

LaurentPoly MetricSpec::inner(const VectorField& x, const VectorField& y) const {
  LaurentPoly s;
  for (size_t i = 0; i < g.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (size_t j = 0; j < g.cols(); ++j)
      if (!g(i, j).is_zero() && !y[j].is_zero()) s += g(i, j) * x[i] * y[j];
  }
  return s;
}

PolyMatrix gram_matrix(const MetricSpec& metric, const std::vector<VectorField>& frame) {
  PolyMatrix m(frame.size(), frame.size(), metric.chart);
  for (size_t i = 0; i < frame.size(); ++i)
    for (size_t j = i; j < frame.size(); ++j) m(i, j) = m(j, i) = metric.inner(frame[i], frame[j]);
  return m;
}

PolyMatrix lie_derivative_metric(const MetricSpec& metric, const VectorField& x) {
  size_t d = metric.dimension();
  if (x.dim() != d) throw DomainError("field does not match metric chart");
  const PolyMatrix& g = metric.g;
  PolyMatrix out(d, d, metric.chart);
  std::vector<std::vector<LaurentPoly>> dx(d, std::vector<LaurentPoly>(d));  // dx[k][i] = d_i X^k
  for (size_t k = 0; k < d; ++k) {
    LaurentPoly xk = x[k].on_chart(metric.chart);
    for (size_t i = 0; i < d; ++i) dx[k][i] = xk.partial(i);
  }
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i; j < d; ++j) {
      LaurentPoly v = x.apply(g(i, j));
      for (size_t k = 0; k < d; ++k) {
        if (!g(k, j).is_zero() && !dx[k][i].is_zero()) v += g(k, j) * dx[k][i];
        if (!g(i, k).is_zero() && !dx[k][j].is_zero()) v += g(i, k) * dx[k][j];
      }
      out(i, j) = out(j, i) = v;
    }
  return out;
}

}  // namespace tpsgeo::diffgeo
