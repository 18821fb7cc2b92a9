#include "tpsgeo/diffgeo/killing.hpp"

#include <map>

#include "tpsgeo/errors.hpp"

namespace tpsgeo::diffgeo {

using exactalg::Exponents;
using exactalg::RationalMatrix;
using exactalg::SparseEchelon;
using exactalg::SparseRow;

namespace {

void monomials_rec(size_t nvars, int remaining, Exponents& cur, size_t pos, std::vector<Exponents>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    monomials_rec(nvars, remaining - e, cur, pos + 1, out);
  }
  cur[pos] = 0;
}

// All exponent tuples of total degree <= max_degree, graded then lexicographic.
std::vector<Exponents> monomials_up_to(size_t nvars, int max_degree) {
  std::vector<Exponents> out;
  for (int deg = 0; deg <= max_degree; ++deg) {
    Exponents cur(nvars, 0);
    std::vector<Exponents> layer;
    monomials_rec(nvars, deg, cur, 0, layer);
    std::vector<Exponents> exact;
    for (auto& e : layer) {
      int s = 0;
      for (int v : e) s += v;
      if (s == deg) exact.push_back(std::move(e));
    }
    out.insert(out.end(), exact.begin(), exact.end());
  }
  return out;
}

using Key = std::pair<size_t, Exponents>;

std::map<Key, size_t> index_keys(const std::vector<const VectorField*>& fields) {
  std::map<Key, size_t> keys;
  for (const VectorField* f : fields)
    for (size_t c = 0; c < f->dim(); ++c) {
      LaurentPoly comp = (*f)[c].on_chart(f->chart());
      for (const auto& [e, v] : comp.terms()) keys.try_emplace({c, e}, 0);
    }
  size_t i = 0;
  for (auto& [k, v] : keys) v = i++;
  return keys;
}

RationalVector vectorize(const VectorField& f, const std::map<Key, size_t>& keys) {
  RationalVector v(keys.size());
  for (size_t c = 0; c < f.dim(); ++c) {
    LaurentPoly comp = f[c].on_chart(f.chart());
    for (const auto& [e, coeff] : comp.terms()) v[keys.at({c, e})] = coeff;
  }
  return v;
}

RationalMatrix column_matrix(const std::vector<VectorField>& basis, const std::map<Key, size_t>& keys) {
  RationalMatrix m(keys.size(), basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    RationalVector v = vectorize(basis[j], keys);
    for (size_t i = 0; i < v.size(); ++i) m(i, j) = v[i];
  }
  return m;
}

}  // namespace

std::vector<VectorField> killing_solve(const MetricSpec& metric, int max_degree) {
  if (max_degree < 0) throw DomainError("Killing ansatz degree must be non-negative");
  size_t d = metric.dimension();
  const ChartPtr& chart = metric.chart;
  std::vector<Exponents> monos = monomials_up_to(d, max_degree);

  std::vector<LaurentPoly> g(d * d);
  std::vector<LaurentPoly> dg(d * d * d);  // dg[(c*d + i)*d + j] = d_c g_ij
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) {
      g[i * d + j] = metric.g(i, j).on_chart(chart);
      for (size_t c = 0; c < d; ++c) dg[(c * d + i) * d + j] = g[i * d + j].partial(c);
    }

  std::map<std::pair<size_t, Exponents>, SparseRow> rows;
  auto add = [&](size_t ij, const LaurentPoly& p, size_t unknown, long factor) {
    for (const auto& [e, v] : p.terms()) {
      Rational& slot = rows[{ij, e}][unknown];
      slot += v * Rational(factor);
    }
  };
  size_t nunk = d * monos.size();
  for (size_t c = 0; c < d; ++c)
    for (size_t mi = 0; mi < monos.size(); ++mi) {
      size_t u = c * monos.size() + mi;
      const Exponents& ex = monos[mi];
      LaurentPoly m = LaurentPoly::monomial(chart, ex, Rational(1));
      for (size_t i = 0; i < d; ++i)
        for (size_t j = i; j < d; ++j) {
          size_t ij = i * d + j;
          const LaurentPoly& dcg = dg[(c * d + i) * d + j];
          if (!dcg.is_zero()) add(ij, m * dcg, u, 1);
          // g_cj d_i m + g_ic d_j m
          if (ex[i] > 0 && !g[c * d + j].is_zero()) {
            Exponents e2 = ex;
            e2[i] -= 1;
            add(ij, LaurentPoly::monomial(chart, e2, Rational(ex[i])) * g[c * d + j], u, 1);
          }
          if (ex[j] > 0 && !g[i * d + c].is_zero()) {
            Exponents e2 = ex;
            e2[j] -= 1;
            add(ij, LaurentPoly::monomial(chart, e2, Rational(ex[j])) * g[i * d + c], u, 1);
          }
        }
    }

  SparseEchelon ech(nunk);
  for (auto& [key, row] : rows) ech.add_row(std::move(row));
  std::vector<VectorField> out;
  for (const auto& v : ech.kernel()) {
    VectorField f(chart);
    for (size_t u = 0; u < nunk; ++u) {
      if (v[u].is_zero()) continue;
      size_t c = u / monos.size(), mi = u % monos.size();
      f[c] += LaurentPoly::monomial(chart, monos[mi], v[u]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<RationalVector> span_coordinates(const std::vector<VectorField>& basis, const VectorField& x) {
  std::vector<const VectorField*> all;
  for (const auto& b : basis) all.push_back(&b);
  all.push_back(&x);
  auto keys = index_keys(all);
  return exactalg::solve_exact(column_matrix(basis, keys), vectorize(x, keys));
}

size_t span_dimension(const std::vector<VectorField>& fields) {
  std::vector<const VectorField*> all;
  for (const auto& b : fields) all.push_back(&b);
  auto keys = index_keys(all);
  return exactalg::rank_exact(column_matrix(fields, keys));
}

bool same_span(const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
  std::vector<VectorField> both = a;
  both.insert(both.end(), b.begin(), b.end());
  size_t ra = span_dimension(a), rb = span_dimension(b), rab = span_dimension(both);
  return ra == rab && rb == rab;
}

StructureConstants structure_constants(const std::vector<VectorField>& basis) {
  size_t n = basis.size();
  StructureConstants sc{n, std::vector<Rational>(n * n * n)};
  std::vector<std::vector<VectorField>> br(n, std::vector<VectorField>(n));
  std::vector<const VectorField*> all;
  for (const auto& b : basis) all.push_back(&b);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      br[i][j] = bracket(basis[i], basis[j]);
      all.push_back(&br[i][j]);
    }
  auto keys = index_keys(all);
  RationalMatrix a = column_matrix(basis, keys);
  if (exactalg::rank_exact(a) != n) throw DomainError("structure constants need an independent basis");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      auto coords = exactalg::solve_exact(a, vectorize(br[i][j], keys));
      if (!coords)
        throw NotClosedError("bracket of basis elements " + std::to_string(i) + " and " +
                             std::to_string(j) + " leaves the span: " + br[i][j].str());
      for (size_t k = 0; k < n; ++k) {
        sc(i, j, k) = (*coords)[k];
        sc(j, i, k) = -(*coords)[k];
      }
    }
  return sc;
}

}  // namespace tpsgeo::diffgeo
