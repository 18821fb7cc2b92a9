#include <random>

#include "tpsgeo/diffgeo/poly_map.hpp"
#include "tpsgeo/errors.hpp"
#include "tpsgeo/exactalg/json_io.hpp"
#include "tpsgeo/exactalg/linalg.hpp"
#include "tpsgeo/sympl/sympl.hpp"
#include "tpsgeo/tps/tps.hpp"

namespace tpsgeo::sympl {

using exactalg::Symbol;
using nlohmann::json;
using report::Check;

namespace {

std::string idx(int i) { return std::to_string(i); }

const Rational kHalf(1, 2);

std::vector<Symbol> symbols_of(const ChartPtr& c) { return c->symbols(); }

}  // namespace

SasakianStructure sasakian_structure(int n) {
  tps::AlmostContactTensor a = tps::almost_contact_tensor(n);
  tps::TpsStructure s = tps::build_tps(n);
  std::vector<Symbol> syms = symbols_of(s.chart.symbols);
  syms.push_back({"t", false});
  ChartPtr chart = exactalg::make_chart(std::move(syms));
  size_t d = s.chart.dim(), t = d;
  PolyMatrix J(d + 1, d + 1, chart);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) J(i, j) = a.phi(i, j).on_chart(chart);
  auto th = s.theta.one_form_coefficients();
  for (size_t j = 0; j < d; ++j) J(t, j) = th[j].on_chart(chart);
  J(s.chart.x0(), t) = LaurentPoly(chart, Rational(-1));

  auto lift = [&](const VectorField& v) {
    VectorField out(chart);
    for (size_t i = 0; i < d; ++i) out[i] = v[i].on_chart(chart);
    return out;
  };
  SasakianStructure out{n, chart, J, {}, {}};
  out.labels.push_back("xi");
  out.frame.push_back(lift(s.reeb));
  for (int i = 1; i <= n; ++i) {
    out.labels.push_back("X_" + idx(i));
    out.frame.push_back(lift(s.X(i)));
  }
  for (int j = 1; j <= n; ++j) {
    out.labels.push_back("P_" + idx(j));
    out.frame.push_back(lift(s.P(j)));
  }
  out.labels.push_back("d/dt");
  out.frame.push_back(VectorField::coordinate(chart, t));
  return out;
}

VectorField nijenhuis(const PolyMatrix& j, const VectorField& x, const VectorField& y) {
  using diffgeo::apply_tensor;
  using diffgeo::bracket;
  VectorField jx = apply_tensor(j, x), jy = apply_tensor(j, y);
  return apply_tensor(j, apply_tensor(j, bracket(x, y))) + bracket(jx, jy) - apply_tensor(j, bracket(jx, y)) -
         apply_tensor(j, bracket(x, jy));
}

std::vector<Check> nijenhuis_check(int n) {
  SasakianStructure s = sasakian_structure(n);
  std::vector<Check> out;
  size_t d = s.J.rows();
  PolyMatrix sq = s.J * s.J;
  out.push_back(report::exact("J^2 = -I on P x R", "sasakian",
                              sq == LaurentPoly(s.chart, Rational(-1)) * PolyMatrix::identity(d, s.chart)));
  bool jt = diffgeo::apply_tensor(s.J, s.frame.front()) == s.frame.back() &&
            diffgeo::apply_tensor(s.J, s.frame.back()) == -s.frame.front();
  out.push_back(report::exact("J(xi) = d/dt and J(d/dt) = -xi", "sasakian", jt));

  json bad = json::array();
  size_t pairs = 0;
  for (size_t a = 0; a < s.frame.size(); ++a)
    for (size_t b = a + 1; b < s.frame.size(); ++b) {
      ++pairs;
      VectorField v = nijenhuis(s.J, s.frame[a], s.frame[b]);
      if (!v.is_zero()) bad.push_back({{"pair", json::array({s.labels[a], s.labels[b]})}, {"value", v.str()}});
    }
  for (size_t a = 0; a < s.frame.size(); ++a) {
    VectorField v = nijenhuis(s.J, s.frame[a], s.frame[a]);
    if (!v.is_zero()) bad.push_back({{"pair", json::array({s.labels[a], s.labels[a]})}, {"value", v.str()}});
  }
  out.push_back(report::exact("Nijenhuis tensor N_J vanishes on all frame pairs", "sasakian", bad.empty(),
                              json{{"n", n}, {"pairs", pairs}, {"nonzero", bad}}));

  // Non-parallel witness with X = Z = X_i, Y = xi.
  tps::TpsStructure t = tps::build_tps(n);
  tps::AlmostContactTensor a = tps::almost_contact_tensor(n);
  MetricSpec g = tps::mrugala_metric(n);
  diffgeo::ChristoffelTable table = diffgeo::christoffel(g);
  DiffForm dtheta = t.theta.d();
  bool formula = true, nonparallel = true;
  json values = json::array();
  for (int i = 1; i <= n; ++i) {
    const VectorField& xi_ = t.X(i);
    LaurentPoly term = LaurentPoly(-2) * dtheta.evaluate({diffgeo::apply_tensor(a.phi, xi_), xi_}) *
                       t.theta.evaluate({t.reeb});
    VectorField nabla_phi_xi = diffgeo::covariant_derivative(table, xi_, diffgeo::apply_tensor(a.phi, t.reeb)) -
                               diffgeo::apply_tensor(a.phi, diffgeo::covariant_derivative(table, xi_, t.reeb));
    LaurentPoly direct = LaurentPoly(2) * g.inner(nabla_phi_xi, xi_);
    formula = formula && term == LaurentPoly(-2);
    nonparallel = nonparallel && !nabla_phi_xi.is_zero();
    values.push_back({{"i", i},
                      {"-2 dtheta(phi X_i, X_i) theta(xi)", term.str()},
                      {"(nabla_{X_i} phi) xi", nabla_phi_xi.str()},
                      {"2 G((nabla_{X_i} phi) xi, X_i)", direct.str()}});
  }
  out.push_back(report::exact("non-parallel witness -2 dtheta(phi X_i, X_i) theta(xi) = -2", "non-parallel-phi",
                              formula, values));
  out.push_back(report::exact("phi is not parallel: (nabla_{X_i} phi) xi = P_i / 2 is nonzero", "non-parallel-phi",
                              nonparallel, values));

  diffgeo::CurvatureTensors ct = diffgeo::ricci_scalar(g, table);
  LaurentPoly ric_xi;
  for (size_t p = 0; p < t.reeb.dim(); ++p)
    for (size_t q = 0; q < t.reeb.dim(); ++q) ric_xi += ct.ricci(p, q) * t.reeb[p] * t.reeb[q];
  out.push_back(report::exact("Ric(xi, xi) = -n/2", "sasakian", ric_xi == LaurentPoly(Rational(-n, 2)),
                              json{{"Ric(xi)", ric_xi.str()}}));
  return out;
}

namespace {

struct Rotation {
  ChartPtr chart;  // sympl symbols followed by lambda
  std::vector<LaurentPoly> images, identity;
  size_t lambda = 0;
};

Rotation hyperbolic_rotation_map(const SymplChart& c) {
  std::vector<Symbol> syms = symbols_of(c.symbols);
  syms.push_back({"lambda", true});
  Rotation r;
  r.chart = exactalg::make_chart(std::move(syms));
  r.lambda = c.dim();
  LaurentPoly lam = LaurentPoly::variable(r.chart, r.lambda), inv = LaurentPoly::variable(r.chart, r.lambda, -1);
  for (size_t i = 0; i < c.dim(); ++i) {
    LaurentPoly v = LaurentPoly::variable(r.chart, i);
    r.identity.push_back(v);
    r.images.push_back(i <= static_cast<size_t>(c.n) ? lam * v : inv * v);
  }
  return r;
}

RationalFunction lift(const RationalFunction& f, const ChartPtr& chart) {
  return RationalFunction(f.num().on_chart(chart), f.den().on_chart(chart));
}

}  // namespace

std::vector<Check> hyperbolic_rotation_check(int n) {
  SymplStructure s = build_sympl(n);
  Rotation r = hyperbolic_rotation_map(s.chart);
  diffgeo::PolyMap g(r.chart, s.chart.symbols, r.images, {r.lambda});
  std::vector<Check> out;
  DiffForm th = s.theta;
  DiffForm pulled = g.pull(th);
  diffgeo::PolyMap id(r.chart, s.chart.symbols, r.identity, {r.lambda});
  out.push_back(report::exact("(g^lambda)* theta~ = theta~", "hyperbolic-rotation", pulled == id.pull(th),
                              json{{"n", n}, {"pullback", pulled.str()}}));
  out.push_back(report::exact("(g^lambda)* G~ = G~", "hyperbolic-rotation",
                              g.pull_metric(s.metric.g) == id.pull_metric(s.metric.g)));
  std::vector<LaurentPoly> at_one;
  std::vector<LaurentPoly> one_images(r.chart->size());
  for (size_t i = 0; i < s.chart.dim(); ++i) one_images[i] = LaurentPoly::variable(s.chart.symbols, i);
  one_images[r.lambda] = LaurentPoly(s.chart.symbols, Rational(1));
  bool identity = true;
  for (size_t i = 0; i < s.chart.dim(); ++i)
    identity = identity && r.images[i].substitute(one_images, s.chart.symbols) == s.chart.var(i);
  out.push_back(report::exact("lambda = 1 gives the identity map", "hyperbolic-rotation", identity));

  // The lifted constitutive quadric is preserved by rotations and by p-scaling.
  LaurentPoly quad;
  for (int i = 0; i <= n; ++i) quad += s.chart.var(s.chart.p(i)) * s.chart.var(s.chart.x(i));
  out.push_back(report::exact("sum p_i x^i is invariant under hyperbolic rotations", "hyperbolic-rotation",
                              g.pull(quad) == id.pull(quad)));
  return out;
}

std::string ProjChartId::str() const { return (kind == U ? "U" : "V") + std::to_string(index); }

std::vector<RationalFunction> proj_chart_functions(const SymplChart& c, ProjChartId id) {
  std::vector<RationalFunction> out;
  int n = c.n;
  if (id.index < 0 || id.index > n) throw DomainError("chart index out of range");
  if (id.kind == ProjChartId::U) {
    LaurentPoly pj = c.var(c.p(id.index));
    for (int i = 0; i <= n; ++i) out.emplace_back(c.var(c.x(i)) * pj);
    for (int l = 0; l <= n; ++l)
      if (l != id.index) out.emplace_back(c.var(c.p(l)), pj);
  } else {
    LaurentPoly xk = c.var(c.x(id.index));
    for (int i = 0; i <= n; ++i)
      if (i != id.index) out.emplace_back(c.var(c.x(i)), xk);
    for (int l = 0; l <= n; ++l) out.emplace_back(c.var(c.p(l)) * xk);
  }
  return out;
}

ProjCoordinates proj_chart(int n, std::span<const Rational> point) {
  SymplChart c = make_sympl_chart(n);
  if (point.size() != c.dim()) throw InputError("point must have 2n+2 coordinates");
  ProjChartId id;
  bool found = false;
  for (int j = 0; j <= n && !found; ++j)
    if (!point[c.p(j)].is_zero()) {
      id = {ProjChartId::U, j};
      found = true;
    }
  for (int k = 0; k <= n && !found; ++k)
    if (!point[c.x(k)].is_zero()) {
      id = {ProjChartId::V, k};
      found = true;
    }
  if (!found) throw DomainError("the origin has no projective chart");
  ProjCoordinates out{id, {}};
  for (const auto& f : proj_chart_functions(c, id)) out.coords.push_back(f.evaluate(point));
  return out;
}

namespace {

// Chart coordinate functions addressed by meaning rather than position.
struct ChartCoords {
  const SymplChart& c;
  // U_j coordinate x^i p_j
  RationalFunction xp(int i, int j) const { return RationalFunction(c.var(c.x(i)) * c.var(c.p(j))); }
  // U_j coordinate p_l / p_j
  RationalFunction pp(int l, int j) const { return RationalFunction(c.var(c.p(l)), c.var(c.p(j))); }
  // V_k coordinate x^i / x^k
  RationalFunction xx(int i, int k) const { return RationalFunction(c.var(c.x(i)), c.var(c.x(k))); }
  // V_k coordinate p_l x^k
  RationalFunction px(int l, int k) const { return RationalFunction(c.var(c.p(l)) * c.var(c.x(k))); }
};

}  // namespace

std::vector<Check> projectivization_check(int n, int samples, unsigned long seed) {
  SymplChart c = make_sympl_chart(n);
  ChartCoords k{c};
  RationalFunction one(Rational(1));
  std::vector<Check> out;

  Rotation r = hyperbolic_rotation_map(c);
  bool invariant = true;
  json charts = json::array();
  for (int kind = 0; kind < 2; ++kind)
    for (int i = 0; i <= n; ++i) {
      ProjChartId id{kind == 0 ? ProjChartId::U : ProjChartId::V, i};
      charts.push_back(id.str());
      for (const auto& f : proj_chart_functions(c, id))
        invariant = invariant && f.substitute(r.images, r.chart) == lift(f, r.chart);
    }
  out.push_back(report::exact("chart coordinates are invariant under (p, x) -> (lambda p, x / lambda)", "projectivization",
                              invariant, json{{"charts", charts}}));

  bool uu = true, uv = true, vv = true, naive_uv = true;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      for (int i = 0; i <= n; ++i) {
        if (a != b) {
          uu = uu && k.xp(i, b) == k.xp(i, a) * k.pp(b, a);
          uu = uu && k.pp(i, b) == k.pp(i, a) * (one / k.pp(b, a));
          vv = vv && k.xx(i, b) == k.xx(i, a) * (one / k.xx(b, a));
          vv = vv && k.px(i, b) == k.px(i, a) * k.xx(b, a);
        }
        // U_a with V_b.
        uv = uv && k.xp(i, a) == k.xx(i, b) * k.px(a, b);
        uv = uv && k.pp(i, a) == k.px(i, b) * (one / k.px(a, b));
        if (i != b) naive_uv = naive_uv && !(k.xp(i, a) == k.xx(i, b) * k.xp(i, a));
      }
    }
  out.push_back(report::exact("transitions on U_j1 with U_j2", "projectivization", uu));
  out.push_back(report::exact("transitions on U_j with V_k: x^l p_j = (x^l / x^k)(x^k p_j), p_l / p_j = (p_l x^k) / (x^k p_j)",
                              "projectivization", uv));
  out.push_back(report::exact("transitions on V_j1 with V_j2", "projectivization", vv));
  out.push_back(report::exact("the factor (x^l p_j) in place of (x^k p_j) does not reproduce x^l p_j on U_j with V_k",
                              "projectivization", naive_uv));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  bool sampled = true;
  json first;
  for (int t = 0; t < samples; ++t) {
    std::vector<Rational> pt;
    for (size_t i = 0; i < c.dim(); ++i) pt.emplace_back(num(rng), den(rng));
    if (t % 3 == 1)
      for (int j = 0; j <= n; ++j) pt[c.p(j)] = Rational(0);
    bool zero = true;
    for (const auto& v : pt) zero = zero && v.is_zero();
    if (zero) continue;
    std::vector<Rational> rot = pt;
    for (int j = 0; j <= n; ++j) {
      rot[c.p(j)] *= Rational(2);
      rot[c.x(j)] *= kHalf;
    }
    ProjCoordinates a = proj_chart(n, pt), b = proj_chart(n, rot);
    if (!(a.id.kind == b.id.kind && a.id.index == b.id.index && a.coords == b.coords)) {
      sampled = false;
      if (first.is_null()) first = json{{"point", exactalg::to_json(pt)}};
    }
  }
  out.push_back(report::exact("a point and its rotation by lambda = 2 get identical chart coordinates",
                              "projectivization", sampled, json{{"samples", samples}, {"first_failure", first}}));
  return out;
}

CellRestriction cell_restrict(int k, int n) {
  SymplStructure s = build_sympl(n);
  const SymplChart& c = s.chart;
  if (k < 0 || k > n) throw DomainError("cell index out of range");
  std::vector<Symbol> syms;
  for (int i = k + 1; i <= n; ++i) syms.push_back({"p" + idx(i), true});
  for (int i = 0; i <= n; ++i) syms.push_back({"x" + idx(i), false});
  ChartPtr chart = exactalg::make_chart(std::move(syms));
  std::vector<LaurentPoly> images(c.dim());
  for (int i = 0; i <= n; ++i) {
    if (i < k) images[c.p(i)] = LaurentPoly(chart, Rational(0));
    else if (i == k) images[c.p(i)] = LaurentPoly(chart, Rational(1));
    else images[c.p(i)] = LaurentPoly::variable(chart, "p" + idx(i));
    images[c.x(i)] = LaurentPoly::variable(chart, "x" + idx(i));
  }
  diffgeo::PolyMap m(chart, c.symbols, images);
  return CellRestriction{k, chart, m.pull(s.theta), m.pull_metric(s.metric.g)};
}

PolyMatrix cell_block_reference(int k, int n) {
  CellRestriction cr = cell_restrict(k, n);
  const ChartPtr& ch = cr.chart;
  PolyMatrix e(ch->size(), ch->size(), ch);
  auto at = [&](const std::string& name) { return ch->index(name); };
  auto p = [&](int i) { return LaurentPoly::variable(ch, "p" + idx(i)); };
  size_t xk = at("x" + idx(k));
  e(xk, xk) = LaurentPoly(ch, Rational(1));
  for (int i = k + 1; i <= n; ++i) {
    size_t xi = at("x" + idx(i)), pi = at("p" + idx(i));
    e(xk, xi) = e(xi, xk) = p(i);
    e(pi, xi) = e(xi, pi) = LaurentPoly(ch, Rational(1));
    for (int j = k + 1; j <= n; ++j) e(xi, at("x" + idx(j))) = p(i) * p(j);
  }
  return e;
}

std::vector<Check> verify_cells(int n) {
  std::vector<Check> out;
  for (int k = 0; k <= n; ++k) {
    CellRestriction cr = cell_restrict(k, n);
    const ChartPtr& ch = cr.chart;
    std::vector<LaurentPoly> coeffs(ch->size());
    coeffs[ch->index("x" + idx(k))] = LaurentPoly(ch, Rational(1));
    for (int i = k + 1; i <= n; ++i) coeffs[ch->index("x" + idx(i))] = LaurentPoly::variable(ch, "p" + idx(i));
    DiffForm expect = DiffForm::one_form(ch, coeffs);
    out.push_back(report::exact("theta_" + idx(k) + " = dx^" + idx(k) + " + sum_{i>" + idx(k) + "} p_i dx^i",
                                "cell-restriction", cr.theta_k == expect,
                                json{{"n", n}, {"k", k}, {"theta_k", cr.theta_k.str()}}));
    bool zero_block = true;
    for (int i = 0; i < k; ++i) {
      size_t xi = ch->index("x" + idx(i));
      for (size_t j = 0; j < ch->size(); ++j) zero_block = zero_block && cr.G_k(xi, j).is_zero();
    }
    PolyMatrix ref = cell_block_reference(k, n);
    out.push_back(report::exact("G_" + idx(k) + (k ? " vanishes on x0..x" + idx(k - 1) + " and" : "") +
                                    " is the Mrugala form on (x" + idx(k) + ", p_{>" + idx(k) + "}, x^{>" + idx(k) + "})",
                                "cell-restriction", zero_block && cr.G_k == ref,
                                json{{"chart", ch->names()}, {"G_k", exactalg::to_json(cr.G_k)}}));
  }
  // V_0 is the embedded phase space itself.
  CellRestriction c0 = cell_restrict(0, n);
  tps::TpsChart tc = tps::make_tps_chart(n);
  std::vector<LaurentPoly> rename(c0.chart->size());
  for (size_t i = 0; i < c0.chart->size(); ++i) rename[i] = LaurentPoly::variable(tc.symbols, (*c0.chart)[i].name);
  PolyMatrix g0 = c0.G_k.substitute(rename, tc.symbols);
  tps::TpsStructure ts = tps::build_tps(n);
  PolyMatrix reordered(tc.dim(), tc.dim(), tc.symbols);
  for (size_t a = 0; a < c0.chart->size(); ++a)
    for (size_t b = 0; b < c0.chart->size(); ++b)
      reordered(tc.symbols->index((*c0.chart)[a].name), tc.symbols->index((*c0.chart)[b].name)) = g0(a, b);
  out.push_back(report::exact("the cell V_0 carries (theta, G) of the phase space", "cell-restriction",
                              reordered == tps::mrugala_metric(n).g));
  return out;
}

std::vector<Check> ideal_gas_check(const Rational& gas_constant, int samples, unsigned long seed) {
  // n = 2 with x0 = U, p1 = -S, x1 = T, p2 = p, x2 = V.
  const int n = 2;
  SymplChart c = make_sympl_chart(n);
  LaurentPoly quad;
  for (int i = 0; i <= n; ++i) quad += c.var(c.p(i)) * c.var(c.x(i));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 40), den(1, 5);
  bool members = true, in_cell = true, rejects = true;
  Rational lam = -gas_constant.inverse();
  for (int t = 0; t < samples; ++t) {
    Rational T(num(rng), den(rng)), V(num(rng), den(rng)), U(num(rng) - 20, den(rng));
    Rational p = gas_constant * T / V;
    std::vector<Rational> pt(c.dim());
    pt[c.p(0)] = Rational(0);
    pt[c.p(1)] = -gas_constant;
    pt[c.p(2)] = p;
    pt[c.x(0)] = U;
    pt[c.x(1)] = T;
    pt[c.x(2)] = V;
    members = members && quad.evaluate(pt).is_zero();
    // Rotate so that p1 = 1, landing in the cell V_1.
    std::vector<Rational> cell = pt;
    for (int i = 0; i <= n; ++i) {
      cell[c.p(i)] *= lam;
      cell[c.x(i)] /= lam;
    }
    in_cell = in_cell && cell[c.p(0)].is_zero() && cell[c.p(1)] == Rational(1);
    in_cell = in_cell && (cell[c.x(1)] + cell[c.p(2)] * cell[c.x(2)]).is_zero();
    std::vector<Rational> off = pt;
    off[c.p(2)] = p + Rational(1);
    rejects = rejects && !quad.evaluate(off).is_zero();
  }
  return {
      report::exact("(T, p, V) with pV = RT lies on p0 U - S T + p V = 0 at p0 = 0, S = R", "ideal-gas", members,
                    json{{"R", gas_constant.str()}, {"samples", samples}}),
      report::exact("rotated into V_1 the point satisfies x^1 + p_2 x^2 = 0", "ideal-gas", in_cell),
      report::exact("points with pV != RT are rejected", "ideal-gas", rejects),
  };
}

QuadricSignature quadric_signature(int n) {
  SymplChart c = make_sympl_chart(n);
  size_t d = c.dim();
  exactalg::RationalMatrix a(d, d);
  for (int i = 0; i <= n; ++i) a(c.p(i), c.x(i)) = a(c.x(i), c.p(i)) = kHalf;
  // Symmetric congruence diagonalization.
  for (size_t k = 0; k < d; ++k) {
    if (a(k, k).is_zero()) {
      size_t j = k + 1;
      while (j < d && a(j, j).is_zero()) ++j;
      if (j < d) {
        for (size_t r = 0; r < d; ++r) std::swap(a(k, r), a(j, r));
        for (size_t r = 0; r < d; ++r) std::swap(a(r, k), a(r, j));
      } else {
        j = k + 1;
        while (j < d && a(k, j).is_zero()) ++j;
        if (j == d) continue;
        for (size_t r = 0; r < d; ++r) a(k, r) += a(j, r);
        for (size_t r = 0; r < d; ++r) a(r, k) += a(r, j);
      }
    }
    for (size_t i = k + 1; i < d; ++i) {
      if (a(i, k).is_zero()) continue;
      Rational f = a(i, k) / a(k, k);
      for (size_t r = 0; r < d; ++r) a(i, r) -= f * a(k, r);
      for (size_t r = 0; r < d; ++r) a(r, i) -= f * a(r, k);
    }
  }
  QuadricSignature s;
  for (size_t k = 0; k < d; ++k) {
    int sg = a(k, k).sign();
    if (sg > 0) ++s.plus;
    else if (sg < 0) ++s.minus;
    else ++s.zero;
  }
  return s;
}

std::vector<Check> verify_quadric(int n) {
  SymplChart c = make_sympl_chart(n);
  QuadricSignature s = quadric_signature(n);
  LaurentPoly lhs, rhs;
  for (int i = 0; i <= n; ++i) {
    LaurentPoly xi = c.var(c.x(i)) + c.var(c.p(i)), eta = c.var(c.x(i)) - c.var(c.p(i));
    lhs += LaurentPoly(4) * c.var(c.p(i)) * c.var(c.x(i));
    rhs += xi * xi - eta * eta;
  }
  return {
      report::exact("signature of sum p_i x^i is (n+1, n+1, 0)", "constitutive-cone",
                    s.plus == n + 1 && s.minus == n + 1 && s.zero == 0,
                    json{{"n", n}, {"plus", s.plus}, {"minus", s.minus}, {"zero", s.zero}}),
      report::exact("4 sum p_i x^i = sum (xi_i^2 - eta_i^2) with xi = x + p, eta = x - p", "constitutive-cone",
                    lhs == rhs),
  };
}

std::vector<Check> affine_symplecto(int n) {
  SymplChart c = make_sympl_chart(n);
  std::vector<Symbol> syms;
  for (int i = 0; i <= n; ++i) syms.push_back({"h" + idx(i), true});
  for (int i = 0; i <= n; ++i) syms.push_back({"z" + idx(i), false});
  ChartPtr g = exactalg::make_chart(std::move(syms));
  auto h = [&](int i) { return LaurentPoly::variable(g, static_cast<size_t>(i)); };
  auto hinv = [&](int i) { return LaurentPoly::variable(g, static_cast<size_t>(i), -1); };
  auto z = [&](int i) { return LaurentPoly::variable(g, static_cast<size_t>(n + 1 + i)); };
  auto dh = [&](int i) { return DiffForm::coordinate_differential(g, static_cast<size_t>(i)); };
  auto dz = [&](int i) { return DiffForm::coordinate_differential(g, static_cast<size_t>(n + 1 + i)); };

  std::vector<LaurentPoly> images(c.dim()), back(g->size());
  for (int i = 0; i <= n; ++i) {
    images[c.p(i)] = h(i);
    images[c.x(i)] = -(hinv(i) * z(i));
    back[static_cast<size_t>(i)] = c.var(c.p(i));
    back[static_cast<size_t>(n + 1 + i)] = -(c.var(c.p(i)) * c.var(c.x(i)));
  }
  diffgeo::PolyMap chi(g, c.symbols, images), chi_inv(c.symbols, g, back);

  std::vector<LaurentPoly> th(c.dim());
  for (int i = 0; i <= n; ++i) th[c.x(i)] = c.var(c.p(i));
  DiffForm theta = DiffForm::one_form(c.symbols, th);
  DiffForm omega = theta.d();

  DiffForm prop(g, 1), inline_display(g, 1), sum_hdz(g, 2);
  for (int i = 0; i <= n; ++i) {
    prop -= dz(i) - (z(i) * hinv(i)) * dh(i);
    inline_display -= dz(i) + (z(i) * hinv(i)) * dh(i);
    sum_hdz += wedge(hinv(i) * dh(i), dz(i));
  }
  DiffForm pulled = chi.pull(theta), pulled_omega = chi.pull(omega);
  std::vector<Check> out;
  out.push_back(report::exact("chi*(sum p_i dx^i) = -sum (dz_i - z_i h_i^{-1} dh_i)", "affine-symplectomorphism",
                              pulled == prop, json{{"n", n}, {"pullback", pulled.str()}}));
  out.push_back(report::exact("the variant -dz - z h^{-1} dh does not match the pullback", "affine-symplectomorphism",
                              !(pulled == inline_display)));
  out.push_back(report::exact("chi*(sum dp_i ^ dx^i) = -sum h_i^{-1} dh_i ^ dz_i = d chi*(theta~)",
                              "affine-symplectomorphism", pulled_omega == -sum_hdz && pulled_omega == pulled.d(),
                              json{{"pullback", pulled_omega.str()}}));

  bool push = true, brackets = true, invariant = true;
  for (int i = 0; i <= n; ++i) {
    VectorField dh_i = VectorField::coordinate(g, static_cast<size_t>(i));
    VectorField dz_i = VectorField::coordinate(g, static_cast<size_t>(n + 1 + i));
    VectorField xi_a = h(i) * dh_i + z(i) * dz_i, xi_z = dz_i;
    VectorField eta_a = h(i) * dh_i, eta_z = h(i) * dz_i;
    VectorField P = c.var(c.p(i)) * VectorField::coordinate(c.symbols, c.p(i));
    VectorField L = LaurentPoly::variable(c.symbols, c.p(i), -1) * VectorField::coordinate(c.symbols, c.x(i));
    push = push && chi.push(xi_a, chi_inv) == P && chi.push(xi_z, chi_inv) == -L;
    brackets = brackets && diffgeo::bracket(xi_a, xi_z) == -xi_z && diffgeo::bracket(eta_a, eta_z) == eta_z;
    DiffForm factor = dz(i) - (z(i) * hinv(i)) * dh(i);
    invariant = invariant && factor.lie(eta_a).is_zero() && factor.lie(eta_z).is_zero();
  }
  out.push_back(report::exact("chi_*(xi_a) = p d/dp and chi_*(xi_z) = -p^{-1} d/dx per factor", "affine-symplectomorphism",
                              push));
  out.push_back(report::exact("[xi_a, xi_z] = -xi_z and [eta_a, eta_z] = eta_z", "affine-symplectomorphism", brackets));
  out.push_back(report::exact("dz - z h^{-1} dh is preserved by the flows of eta_a and eta_z", "affine-symplectomorphism",
                              invariant));
  return out;
}

}  // namespace tpsgeo::sympl
