#include "tpsgeo/diffgeo/killing.hpp"
#include "tpsgeo/diffgeo/metric.hpp"
#include "tpsgeo/diffgeo/poly_map.hpp"
#include "tpsgeo/errors.hpp"
#include "tpsgeo/exactalg/json_io.hpp"
#include "tpsgeo/heisenberg/heisenberg.hpp"
#include "tpsgeo/tps/tps.hpp"

namespace tpsgeo::heisenberg {

using diffgeo::DiffForm;
using diffgeo::PolyMap;
using diffgeo::VectorField;
using exactalg::ChartPtr;
using exactalg::LaurentPoly;
using exactalg::PolyMatrix;
using nlohmann::json;
using report::Check;

namespace {

std::string idx(int i) { return std::to_string(i); }

struct ChiMaps {
  PolyMap chi, chi_inv;
};

ChiMaps chi_maps(const HeisChart& h, const tps::TpsChart& t) {
  int n = h.n;
  std::vector<LaurentPoly> fwd(t.dim()), back(h.symbols->size());
  fwd[t.x0()] = -LaurentPoly::variable(h.symbols, h.c());
  back[h.c()] = -t.var(t.x0());
  for (int i = 1; i <= n; ++i) {
    fwd[t.p(i)] = LaurentPoly::variable(h.symbols, h.b(i));
    fwd[t.x(i)] = LaurentPoly::variable(h.symbols, h.a(i));
    back[h.a(i)] = t.var(t.x(i));
    back[h.b(i)] = t.var(t.p(i));
  }
  return ChiMaps{PolyMap(h.symbols, t.symbols, fwd), PolyMap(t.symbols, h.symbols, back)};
}

// Generator of t -> exp(tX) g (left) or g exp(tX) (right), from symbolic matrix products.
VectorField translation_generator(const HeisChart& h, const HeisAlgElement& x, bool left) {
  int n = h.n;
  size_t m = static_cast<size_t>(n) + 2;
  std::vector<exactalg::Symbol> syms = h.symbols->symbols();
  syms.push_back({"t", false});
  ChartPtr ext = exactalg::make_chart(std::move(syms));
  size_t ti = ext->size() - 1;
  LaurentPoly t = LaurentPoly::variable(ext, ti);

  PolyMatrix g = PolyMatrix::identity(m, ext);
  for (int i = 1; i <= n; ++i) {
    g(0, static_cast<size_t>(i)) = LaurentPoly::variable(ext, h.a(i));
    g(static_cast<size_t>(i), m - 1) = LaurentPoly::variable(ext, h.b(i));
  }
  g(0, m - 1) = LaurentPoly::variable(ext, h.c());

  RationalMatrix xm = to_matrix(x);
  PolyMatrix mt(m, m, ext);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) mt(i, j) = LaurentPoly(ext, xm[i][j]) * t;
  PolyMatrix e = PolyMatrix::identity(m, ext) + mt + LaurentPoly(Rational(1, 2)) * (mt * mt);
  PolyMatrix prod = left ? e * g : g * e;

  std::vector<LaurentPoly> at_zero;
  for (size_t k = 0; k + 1 < ext->size(); ++k) at_zero.push_back(LaurentPoly::variable(h.symbols, k));
  at_zero.push_back(LaurentPoly(h.symbols, Rational(0)));
  auto rate = [&](const LaurentPoly& f) { return f.partial(ti).substitute(at_zero, h.symbols); };

  VectorField out(h.symbols);
  for (int i = 1; i <= n; ++i) {
    out[h.a(i)] = rate(prod(0, static_cast<size_t>(i)));
    out[h.b(i)] = rate(prod(static_cast<size_t>(i), m - 1));
  }
  out[h.c()] = rate(prod(0, m - 1));
  return out;
}

HeisAlgElement basis_element(int n, char kind, int i) {
  size_t nn = static_cast<size_t>(n);
  HeisAlgElement x{std::vector<Rational>(nn), std::vector<Rational>(nn), Rational(0)};
  if (kind == 'A') x.a[static_cast<size_t>(i - 1)] = Rational(1);
  if (kind == 'B') x.b[static_cast<size_t>(i - 1)] = Rational(1);
  if (kind == 'Z') x.z = Rational(1);
  return x;
}

bool fields_equal(const std::vector<VectorField>& a, const std::vector<VectorField>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

json field_strings(const std::vector<VectorField>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back(f.str());
  return out;
}

}  // namespace

HeisChart make_heis_chart(int n) {
  if (n < 1) throw DomainError("Heisenberg group needs n >= 1");
  std::vector<exactalg::Symbol> syms;
  for (int i = 1; i <= n; ++i) syms.push_back({"a" + idx(i), false});
  for (int j = 1; j <= n; ++j) syms.push_back({"b" + idx(j), false});
  syms.push_back({"c", false});
  return HeisChart{n, exactalg::make_chart(std::move(syms))};
}

InvariantFields invariant_fields(int n) {
  HeisChart h = make_heis_chart(n);
  auto d = [&](size_t k) { return VectorField::coordinate(h.symbols, k); };
  auto var = [&](size_t k) { return LaurentPoly::variable(h.symbols, k); };
  InvariantFields f{h, d(h.c()), {}, {}, d(h.c()), {}, {}};
  for (int i = 1; i <= n; ++i) {
    f.xi_A.push_back(d(h.a(i)) + var(h.b(i)) * d(h.c()));
    f.xi_B.push_back(d(h.b(i)));
    f.eta_A.push_back(d(h.a(i)));
    f.eta_B.push_back(d(h.b(i)) + var(h.a(i)) * d(h.c()));
  }
  return f;
}

std::vector<Check> invariant_fields_and_checks(int n) {
  InvariantFields f = invariant_fields(n);
  const HeisChart& h = f.chart;
  tps::TpsStructure s = tps::build_tps(n);
  const tps::TpsChart& tc = s.chart;
  ChiMaps maps = chi_maps(h, tc);
  const PolyMap& chi = maps.chi;
  auto push = [&](const VectorField& v) { return chi.push(v, maps.chi_inv); };
  auto push_all = [&](const std::vector<VectorField>& vs) {
    std::vector<VectorField> out;
    for (const auto& v : vs) out.push_back(push(v));
    return out;
  };
  std::vector<Check> out;

  std::vector<VectorField> left_oracle{translation_generator(h, basis_element(n, 'Z', 0), true)};
  std::vector<VectorField> right_oracle{translation_generator(h, basis_element(n, 'Z', 0), false)};
  std::vector<VectorField> left_table{f.xi_Z}, right_table{f.eta_C};
  for (int i = 1; i <= n; ++i) {
    left_oracle.push_back(translation_generator(h, basis_element(n, 'A', i), true));
    right_oracle.push_back(translation_generator(h, basis_element(n, 'A', i), false));
    left_table.push_back(f.xi_A[static_cast<size_t>(i - 1)]);
    right_table.push_back(f.eta_A[static_cast<size_t>(i - 1)]);
  }
  for (int j = 1; j <= n; ++j) {
    left_oracle.push_back(translation_generator(h, basis_element(n, 'B', j), true));
    right_oracle.push_back(translation_generator(h, basis_element(n, 'B', j), false));
    left_table.push_back(f.xi_B[static_cast<size_t>(j - 1)]);
    right_table.push_back(f.eta_B[static_cast<size_t>(j - 1)]);
  }
  out.push_back(report::exact("left translation generators: xi_Z = d/dc, xi_A_i = d/da_i + b_i d/dc, xi_B_j = d/db_j",
                              "heisenberg-fields", fields_equal(left_oracle, left_table),
                              json{{"n", n}, {"generators", field_strings(left_oracle)}}));
  out.push_back(report::exact("right translation generators: eta_C = d/dc, eta_A_i = d/da_i, eta_B_j = d/db_j + a_j d/dc",
                              "heisenberg-fields", fields_equal(right_oracle, right_table),
                              json{{"generators", field_strings(right_oracle)}}));
  bool commute = true;
  for (const auto& l : left_table)
    for (const auto& r : right_table) commute = commute && diffgeo::bracket(l, r).is_zero();
  out.push_back(report::exact("left and right translation generators commute", "heisenberg-fields", commute));

  VectorField xi = s.reeb;
  bool pz = push(f.xi_Z) == -xi, pa = true, pb = true;
  for (int i = 1; i <= n; ++i) {
    pa = pa && push(f.xi_A[static_cast<size_t>(i - 1)]) == s.X(i);
    pb = pb && push(f.xi_B[static_cast<size_t>(i - 1)]) == s.P(i);
  }
  out.push_back(report::exact("chi_*(xi_Z) = -d/dx0", "heisenberg-chi", pz, json{{"push", push(f.xi_Z).str()}}));
  out.push_back(report::exact("chi_*(xi_A_i) = X_i = d/dx^i - p_i d/dx0", "heisenberg-chi", pa,
                              json{{"push", field_strings(push_all(f.xi_A))}}));
  out.push_back(report::exact("chi_*(xi_B_j) = P_j = d/dp_j", "heisenberg-chi", pb,
                              json{{"push", field_strings(push_all(f.xi_B))}}));

  DiffForm theta_h = chi.pull(s.theta);
  DiffForm expect(h.symbols, 1);
  expect.add_term({h.c()}, LaurentPoly(h.symbols, Rational(-1)));
  for (int i = 1; i <= n; ++i) expect.add_term({h.a(i)}, LaurentPoly::variable(h.symbols, h.b(i)));
  out.push_back(report::exact("theta_H = chi*theta = -dc + b_i da^i", "heisenberg-contact", theta_h == expect,
                              json{{"theta_H", theta_h.str()}}));

  VectorField reeb_h = -f.xi_Z;
  DiffForm dtheta = theta_h.d();
  bool reeb = theta_h.evaluate({reeb_h}) == LaurentPoly(h.symbols, Rational(1)) &&
              dtheta.interior(reeb_h).is_zero() && push(reeb_h) == xi;
  out.push_back(report::exact("Reeb field of theta_H is -d/dc and chi_* maps it to xi", "heisenberg-contact", reeb));

  bool kernel = true;
  for (const auto& v : f.xi_A) kernel = kernel && theta_h.evaluate({v}).is_zero();
  for (const auto& v : f.xi_B) kernel = kernel && theta_h.evaluate({v}).is_zero();
  out.push_back(report::exact("xi_A_i and xi_B_j span ker theta_H", "heisenberg-contact", kernel));

  bool heis_bracket = true;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Rational dl(i == j ? 1 : 0);
      VectorField br = diffgeo::bracket(f.xi_A[static_cast<size_t>(i - 1)], f.xi_B[static_cast<size_t>(j - 1)]);
      heis_bracket = heis_bracket && br == dl * reeb_h &&
                     push(br) == diffgeo::bracket(s.X(i), s.P(j)) && push(br) == dl * xi;
    }
  out.push_back(report::exact("[xi_A_i, xi_B_j] = delta_ij xi_H maps to [X_i, P_j] = delta_ij xi", "heisenberg-fields",
                              heis_bracket));

  std::vector<VectorField> etas = right_table;
  bool lie_theta = true;
  json lie_witness = json::array();
  for (const auto& e : etas) {
    DiffForm l = theta_h.lie(e);
    lie_theta = lie_theta && l.is_zero();
    lie_witness.push_back(l.str());
  }
  out.push_back(report::exact("L_eta theta_H = 0 for eta_C, eta_A_i, eta_B_j", "heisenberg-contact", lie_theta,
                              json{{"lie_derivatives", lie_witness}}));

  diffgeo::MetricSpec g = tps::mrugala_metric(n);
  diffgeo::MetricSpec gh = diffgeo::MetricSpec::make("G_H", h.symbols, chi.pull_metric(g.g));
  PolyMatrix gram = diffgeo::gram_matrix(gh, left_table);
  bool constant = true;
  for (size_t i = 0; i < gram.rows(); ++i)
    for (size_t j = 0; j < gram.cols(); ++j) constant = constant && gram(i, j).is_constant();
  out.push_back(report::exact("Gram matrix of G_H in (xi_Z, xi_A_i, xi_B_j) is constant", "heisenberg-metric", constant,
                              json{{"gram", exactalg::to_json(gram)}}));
  bool right_inv = true;
  for (const auto& e : etas) right_inv = right_inv && diffgeo::lie_derivative_metric(gh, e).is_zero();
  out.push_back(report::exact("L_eta G_H = 0 for every right translation generator", "heisenberg-metric", right_inv));

  std::vector<VectorField> pushed = push_all(etas);
  std::vector<VectorField> expect_push{-xi};
  for (int i = 1; i <= n; ++i) expect_push.push_back(VectorField::coordinate(tc.symbols, tc.x(i)));
  for (int j = 1; j <= n; ++j) expect_push.push_back(s.P(j) - tc.var(tc.x(j)) * xi);
  out.push_back(report::exact("chi_*(eta_C) = -xi, chi_*(eta_A_i) = d/dx^i, chi_*(eta_B_j) = d/dp_j - x^j d/dx0",
                              "heisenberg-chi", fields_equal(pushed, expect_push),
                              json{{"push", field_strings(pushed)}}));

  std::vector<VectorField> catalog;
  for (const auto& e : tps::killing_catalog_tps(n)) catalog.push_back(e.field);
  bool killing = true;
  json not_killing = json::array();
  for (const auto& p : pushed)
    if (!diffgeo::lie_derivative_metric(g, p).is_zero()) {
      killing = false;
      not_killing.push_back(p.str());
    }
  bool in_span = true;
  for (const auto& p : pushed) in_span = in_span && diffgeo::span_coordinates(catalog, p).has_value();
  out.push_back(report::exact("chi_*(eta) are Killing fields of G inside the catalog span", "heisenberg-killing",
                              killing && in_span, json{{"not_killing", not_killing}}));

  bool alt_fails = true;
  for (int j = 1; j <= n; ++j) {
    VectorField alt = s.P(j) + tc.var(tc.x(j)) * xi;
    alt_fails = alt_fails && !diffgeo::lie_derivative_metric(g, alt).is_zero();
  }
  out.push_back(report::exact("d/dp_j + x^j d/dx0 is not a Killing field of G", "heisenberg-killing", alt_fails));

  bool nilradical = true;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      VectorField br = diffgeo::bracket(pushed[static_cast<size_t>(i)], pushed[static_cast<size_t>(n + j)]);
      nilradical = nilradical && br == Rational(i == j ? 1 : 0) * pushed[0];
    }
  for (int i = 1; i <= 2 * n; ++i) nilradical = nilradical && diffgeo::bracket(pushed[0], pushed[static_cast<size_t>(i)]).is_zero();
  out.push_back(report::exact("chi_*(eta) close into a Heisenberg algebra with center spanned by xi", "heisenberg-killing",
                              nilradical));
  return out;
}

}  // namespace tpsgeo::heisenberg
