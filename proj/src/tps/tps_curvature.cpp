#include <random>

#include "tpsgeo/errors.hpp"
#include "tpsgeo/exactalg/json_io.hpp"
#include "tpsgeo/tps/tps.hpp"

namespace tpsgeo::tps {

using nlohmann::json;
using report::Check;

namespace {

enum Kind { kXi, kP, kX };

struct FrameIndex {
  Kind kind;
  int i;
};

FrameIndex frame_index(int n, size_t a) {
  if (a == 0) return {kXi, 0};
  if (a <= static_cast<size_t>(n)) return {kP, static_cast<int>(a)};
  return {kX, static_cast<int>(a) - n};
}

Rational delta(int i, int j) { return Rational(i == j ? 1 : 0); }

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

std::string idx(int i) { return std::to_string(i); }

std::string frame_label(int n, size_t a) {
  FrameIndex f = frame_index(n, a);
  switch (f.kind) {
    case kXi: return "xi";
    case kP: return "P_" + idx(f.i);
    case kX: return "X_" + idx(f.i);
  }
  return "";
}

}  // namespace

diffgeo::ChristoffelTable reference_christoffel(int n) {
  TpsChart c = make_tps_chart(n);
  diffgeo::ChristoffelTable t(c.symbols);
  for (int i = 1; i <= n; ++i) {
    LaurentPoly pi = c.var(c.p(i));
    t.set_symmetric(c.x0(), c.x0(), c.x(i), kHalf * pi);
    t.set_symmetric(c.x0(), c.x(i), c.p(i), LaurentPoly(kHalf));
    t.set_symmetric(c.p(i), c.x0(), c.p(i), LaurentPoly(kHalf));
    t.set_symmetric(c.x(i), c.x0(), c.x(i), LaurentPoly(-kHalf));
    for (int j = 1; j <= n; ++j) {
      LaurentPoly pj = c.var(c.p(j));
      t.set_symmetric(c.x0(), c.x(i), c.x(j), pi * pj);
      t.set_symmetric(c.p(i), c.x(j), c.p(i), kHalf * pj);
      for (int k = 1; k <= n; ++k) {
        LaurentPoly v = -kHalf * (delta(i, j) * c.var(c.p(k)) + delta(i, k) * pj);
        t.set_symmetric(c.x(i), c.x(j), c.x(k), v);
      }
    }
  }
  return t;
}

PolyMatrix reference_ricci(int n) {
  TpsChart c = make_tps_chart(n);
  PolyMatrix r(c.dim(), c.dim(), c.symbols);
  Rational hn(n, 2);
  r(c.x0(), c.x0()) = LaurentPoly(-hn);
  for (int i = 1; i <= n; ++i) {
    r(c.x0(), c.x(i)) = r(c.x(i), c.x0()) = -hn * c.var(c.p(i));
    r(c.p(i), c.x(i)) = r(c.x(i), c.p(i)) = LaurentPoly(kHalf);
    for (int j = 1; j <= n; ++j) r(c.x(i), c.x(j)) = -hn * c.var(c.p(i)) * c.var(c.p(j));
  }
  return r;
}

VectorField frame_combination(const TpsStructure& s, const std::vector<std::pair<size_t, Rational>>& terms) {
  VectorField v(s.chart.symbols);
  for (const auto& [a, coeff] : terms)
    if (!coeff.is_zero()) v += coeff * s.frame[a];
  return v;
}

VectorField reference_frame_connection(const TpsStructure& s, size_t a, size_t b) {
  int n = s.chart.n;
  FrameIndex x = frame_index(n, a), y = frame_index(n, b);
  auto P = [](int i) { return static_cast<size_t>(i); };
  auto X = [n](int i) { return static_cast<size_t>(n + i); };
  if (x.kind == kXi && y.kind == kP) return frame_combination(s, {{P(y.i), kHalf}});
  if (x.kind == kP && y.kind == kXi) return frame_combination(s, {{P(x.i), kHalf}});
  if (x.kind == kXi && y.kind == kX) return frame_combination(s, {{X(y.i), -kHalf}});
  if (x.kind == kX && y.kind == kXi) return frame_combination(s, {{X(x.i), -kHalf}});
  if (x.kind == kP && y.kind == kX) return frame_combination(s, {{0, -kHalf * delta(x.i, y.i)}});
  if (x.kind == kX && y.kind == kP) return frame_combination(s, {{0, kHalf * delta(x.i, y.i)}});
  return VectorField(s.chart.symbols);
}

VectorField reference_frame_curvature(const TpsStructure& s, size_t a, size_t b, size_t c) {
  int n = s.chart.n;
  FrameIndex x = frame_index(n, a), y = frame_index(n, b), z = frame_index(n, c);
  if (x.kind > y.kind) return -reference_frame_curvature(s, b, a, c);
  auto P = [](int i) { return static_cast<size_t>(i); };
  auto X = [n](int i) { return static_cast<size_t>(n + i); };
  int i = x.i, j = y.i, k = z.i;
  if (x.kind == kXi && y.kind == kP) {
    // R(xi, P_i)
    if (z.kind == kXi) return frame_combination(s, {{P(j), kQuarter}});
    if (z.kind == kX) return frame_combination(s, {{0, -kQuarter * delta(j, k)}});
  } else if (x.kind == kXi && y.kind == kX) {
    // R(xi, X_i)
    if (z.kind == kXi) return frame_combination(s, {{X(j), kQuarter}});
    if (z.kind == kP) return frame_combination(s, {{0, -kQuarter * delta(j, k)}});
  } else if (x.kind == kP && y.kind == kP) {
    if (z.kind == kX) return frame_combination(s, {{P(j), kQuarter * delta(i, k)}, {P(i), -kQuarter * delta(j, k)}});
  } else if (x.kind == kP && y.kind == kX) {
    if (z.kind == kP) return frame_combination(s, {{P(i), kQuarter * delta(j, k)}, {P(k), kHalf * delta(i, j)}});
    if (z.kind == kX) return frame_combination(s, {{X(j), -kQuarter * delta(i, k)}, {X(k), -kHalf * delta(i, j)}});
  } else if (x.kind == kX && y.kind == kX) {
    if (z.kind == kP) return frame_combination(s, {{X(j), kQuarter * delta(i, k)}, {X(i), -kQuarter * delta(j, k)}});
  }
  return VectorField(s.chart.symbols);
}

MetricSpec tampered_metric(const MetricSpec& g) {
  PolyMatrix m = g.g;
  size_t a = 0, b = g.chart->index("x1");
  m(a, b) = -m(a, b);
  m(b, a) = -m(b, a);
  return MetricSpec::make(g.name + "-tampered", g.chart, std::move(m));
}

std::vector<Check> curvature_suite_tps(int n, bool tamper) {
  TpsStructure s = build_tps(n);
  const TpsChart& c = s.chart;
  MetricSpec g = mrugala_metric(n);
  if (tamper) g = tampered_metric(g);
  std::vector<Check> out;
  json input{{"n", n}};
  if (tamper) input["tampered"] = "G(x0,x1)";

  diffgeo::ChristoffelTable table = diffgeo::christoffel(g);
  diffgeo::ChristoffelTable ref = reference_christoffel(n);
  json diff = json::array();
  for (size_t a = 0; a < c.dim(); ++a)
    for (size_t b = 0; b < c.dim(); ++b)
      for (size_t d = b; d < c.dim(); ++d)
        if (!(table(a, b, d) == ref(a, b, d)) && diff.size() < 8)
          diff.push_back({{"upper", (*c.symbols)[a].name},
                          {"lower", json::array({(*c.symbols)[b].name, (*c.symbols)[d].name})},
                          {"computed", table(a, b, d).str()},
                          {"expected", ref(a, b, d).str()}});
  out.push_back(report::exact("Christoffel symbols of G equal the seven-family table and vanish elsewhere",
                              "christoffel", diff.empty(),
                              json{{"inputs", input}, {"nonzero", table.nonzero_count()}, {"mismatches", diff}}));

  auto gamma = diffgeo::trace_form(table);
  bool trace_zero = true;
  json gw = json::array();
  for (const auto& v : gamma) {
    trace_zero = trace_zero && v.is_zero();
    gw.push_back(v.str());
  }
  out.push_back(report::exact("trace form gamma_a = Gamma^b_{ab} vanishes", "trace-form", trace_zero,
                              json{{"gamma", gw}}));

  json conn_bad = json::array();
  for (size_t a = 0; a < s.frame.size(); ++a)
    for (size_t b = 0; b < s.frame.size(); ++b) {
      VectorField got = diffgeo::covariant_derivative(table, s.frame[a], s.frame[b]);
      if (!(got == reference_frame_connection(s, a, b)) && conn_bad.size() < 8)
        conn_bad.push_back({{"pair", json::array({frame_label(n, a), frame_label(n, b)})}, {"computed", got.str()}});
    }
  out.push_back(report::exact("frame covariant derivatives nabla_{e_a} e_b match the table", "frame-connection",
                              conn_bad.empty(), json{{"mismatches", conn_bad}}));

  diffgeo::CurvatureTensors ct = diffgeo::ricci_scalar(g, table);
  PolyMatrix rref = reference_ricci(n);
  json ric_bad = json::array();
  for (size_t a = 0; a < c.dim(); ++a)
    for (size_t b = 0; b < c.dim(); ++b)
      if (!(ct.ricci(a, b) == rref(a, b)) && ric_bad.size() < 8)
        ric_bad.push_back({{"entry", json::array({(*c.symbols)[a].name, (*c.symbols)[b].name})},
                           {"computed", ct.ricci(a, b).str()},
                           {"expected", rref(a, b).str()}});
  out.push_back(report::exact("Ricci tensor of G equals the closed-form matrix", "ricci", ric_bad.empty(),
                              json{{"mismatches", ric_bad}}));
  out.push_back(report::exact("Ricci from the index formula equals the contraction R^i_{kij}", "ricci",
                              ct.ricci == diffgeo::ricci_contraction(ct)));
  out.push_back(report::exact("scalar curvature is the constant n/2", "scalar-curvature",
                              ct.scalar == LaurentPoly(Rational(n, 2)),
                              json{{"scalar", ct.scalar.str()}, {"expected", Rational(n, 2).str()}}));

  json curv_bad = json::array();
  size_t checked = 0;
  for (size_t a = 0; a < s.frame.size(); ++a)
    for (size_t b = 0; b < s.frame.size(); ++b)
      for (size_t d = 0; d < s.frame.size(); ++d) {
        VectorField got = diffgeo::riemann_transform(table, s.frame[a], s.frame[b], s.frame[d]);
        ++checked;
        if (!(got == reference_frame_curvature(s, a, b, d)) && curv_bad.size() < 8)
          curv_bad.push_back({{"R", json::array({frame_label(n, a), frame_label(n, b)})},
                              {"on", frame_label(n, d)},
                              {"computed", got.str()}});
      }
  out.push_back(report::exact("curvature transformations R(e_a, e_b) e_c match the frame table",
                              "curvature-table", curv_bad.empty(),
                              json{{"triples", checked}, {"mismatches", curv_bad}}));
  return out;
}

std::vector<Check> identity_suite_tps(int n) {
  TpsStructure s = build_tps(n);
  MetricSpec g = mrugala_metric(n);
  diffgeo::ChristoffelTable table = diffgeo::christoffel(g);
  const auto& f = s.frame;
  bool bianchi = true, torsion = true, compat = true;
  for (size_t a = 0; a < f.size(); ++a)
    for (size_t b = 0; b < f.size(); ++b) {
      VectorField t = diffgeo::covariant_derivative(table, f[a], f[b]) -
                      diffgeo::covariant_derivative(table, f[b], f[a]) - diffgeo::bracket(f[a], f[b]);
      torsion = torsion && t.is_zero();
      for (size_t d = 0; d < f.size(); ++d) {
        LaurentPoly lhs = f[a].apply(g.inner(f[b], f[d]));
        LaurentPoly rhs = g.inner(diffgeo::covariant_derivative(table, f[a], f[b]), f[d]) +
                          g.inner(f[b], diffgeo::covariant_derivative(table, f[a], f[d]));
        compat = compat && lhs == rhs;
        if (a < b && b < d) {
          VectorField bi = diffgeo::riemann_transform(table, f[a], f[b], f[d]) +
                           diffgeo::riemann_transform(table, f[b], f[d], f[a]) +
                           diffgeo::riemann_transform(table, f[d], f[a], f[b]);
          bianchi = bianchi && bi.is_zero();
        }
      }
    }
  return {
      report::exact("first Bianchi identity on frame triples", "curvature-identities", bianchi, json{{"n", n}}),
      report::exact("torsion free: nabla_X Y - nabla_Y X = [X,Y] on frame pairs", "curvature-identities", torsion),
      report::exact("metric compatible: X G(Y,Z) = G(nabla_X Y, Z) + G(Y, nabla_X Z) on frame triples",
                    "curvature-identities", compat),
  };
}

std::vector<Check> sectional_suite_tps(int n, int samples, unsigned long seed) {
  TpsStructure s = build_tps(n);
  const TpsChart& c = s.chart;
  MetricSpec g = mrugala_metric(n);
  diffgeo::ChristoffelTable table = diffgeo::christoffel(g);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  auto point = [&] {
    std::vector<Rational> pt;
    for (size_t k = 0; k < c.dim(); ++k) pt.emplace_back(num(rng), den(rng));
    return pt;
  };
  auto dx = [&](int i) { return VectorField::coordinate(c.symbols, c.x(i)); };
  std::vector<Check> out;

  bool conj_ok = true;
  json bad;
  for (int t = 0; t < samples; ++t) {
    auto pt = point();
    for (int i = 1; i <= n; ++i) {
      Rational k = diffgeo::sectional(g, table, pt, s.P(i), dx(i));
      if (k != Rational(3, 4) && bad.is_null()) {
        conj_ok = false;
        bad = json{{"point", exactalg::to_json(pt)}, {"i", i}, {"value", k.str()}};
      }
    }
  }
  out.push_back(report::exact("sectional curvature of the plane (P_i, d/dx^i) is 3/4", "sectional-curvature",
                              conj_ok, json{{"samples", samples}, {"seed", seed}, {"first_failure", bad}}));

  // The four coordinate-pair planes whose numerator vanishes.
  struct Case {
    std::string label;
    VectorField a, b;
  };
  std::vector<Case> cases;
  for (int i = 1; i <= n; ++i) {
    cases.push_back({"(xi, P_" + idx(i) + ")", s.reeb, s.P(i)});
    cases.push_back({"(xi, d/dx^" + idx(i) + ")", s.reeb, dx(i)});
    for (int j = i + 1; j <= n; ++j) {
      cases.push_back({"(P_" + idx(i) + ", P_" + idx(j) + ")", s.P(i), s.P(j)});
      cases.push_back({"(d/dx^" + idx(i) + ", d/dx^" + idx(j) + ")", dx(i), dx(j)});
    }
  }
  bool num_zero = true, degenerate = true;
  json labels = json::array();
  for (const auto& cs : cases) {
    labels.push_back(cs.label);
    LaurentPoly norm = g.inner(cs.a, cs.a) * g.inner(cs.b, cs.b) - g.inner(cs.a, cs.b).pow(2);
    degenerate = degenerate && norm.is_zero();
    LaurentPoly numer = g.inner(diffgeo::riemann_transform(table, cs.a, cs.b, cs.b), cs.a);
    num_zero = num_zero && numer.is_zero();
  }
  out.push_back(report::exact("G(R(A,B)B, A) vanishes identically on (xi,P_i), (xi,d/dx^i), (P_i,P_j), (d/dx^i,d/dx^j)",
                              "sectional-curvature", num_zero, json{{"planes", labels}}));
  out.push_back(report::exact("|A^B|^2 vanishes identically on those planes", "sectional-curvature", degenerate,
                              json{{"planes", labels}}));
  out.push_back(report::not_applicable("sectional curvature 0 on (xi,P_i), (xi,d/dx^i), (P_i,P_j), (d/dx^i,d/dx^j)",
                                       "sectional-curvature",
                                       json{{"reason", "degenerate plane"}, {"numerator", "0"}, {"norm", "0"}}));

  bool mixed = true;
  json mixed_w = json::array();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      auto pt = point();
      try {
        diffgeo::sectional(g, table, pt, s.P(i), dx(j));
        mixed = false;
      } catch (const DegeneratePlaneError&) {
        mixed_w.push_back("(P_" + idx(i) + ", d/dx^" + idx(j) + ")");
      }
    }
  if (n == 1)
    out.push_back(report::not_applicable("(P_i, d/dx^j) with i != j raises degenerate plane", "sectional-curvature",
                                         json{{"reason", "needs n >= 2"}}));
  else
    out.push_back(report::exact("(P_i, d/dx^j) with i != j raises degenerate plane", "sectional-curvature", mixed,
                                json{{"planes", mixed_w}}));
  return out;
}

}  // namespace tpsgeo::tps
