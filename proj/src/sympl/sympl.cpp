#include "tpsgeo/sympl/sympl.hpp"

#include "tpsgeo/diffgeo/killing.hpp"
#include "tpsgeo/diffgeo/poly_map.hpp"
#include "tpsgeo/errors.hpp"
#include "tpsgeo/exactalg/linalg.hpp"
#include "tpsgeo/tps/tps.hpp"

namespace tpsgeo::sympl {

using exactalg::Symbol;
using nlohmann::json;
using report::Check;

namespace {

std::string idx(int i) { return std::to_string(i); }

const Rational kHalf(1, 2);

Rational delta(int i, int j) { return Rational(i == j ? 1 : 0); }

}  // namespace

SymplChart make_sympl_chart(int n) {
  if (n < 0) throw DomainError("symplectization needs n >= 0");
  std::vector<Symbol> syms;
  for (int i = 0; i <= n; ++i) syms.push_back({"p" + idx(i), true});
  for (int i = 0; i <= n; ++i) syms.push_back({"x" + idx(i), false});
  return SymplChart{n, exactalg::make_chart(std::move(syms))};
}

SymplStructure build_sympl(int n) {
  if (n < 1) throw DomainError("symplectization needs n >= 1");
  SymplChart c = make_sympl_chart(n);
  std::vector<LaurentPoly> coeffs(c.dim());
  for (int i = 0; i <= n; ++i) coeffs[c.x(i)] = c.var(c.p(i));
  DiffForm theta = DiffForm::one_form(c.symbols, coeffs);
  DiffForm omega = theta.d();
  PolyMatrix g(c.dim(), c.dim(), c.symbols), inv(c.dim(), c.dim(), c.symbols);
  for (int i = 0; i <= n; ++i) {
    g(c.p(i), c.x(i)) = g(c.x(i), c.p(i)) = LaurentPoly(1);
    inv(c.p(i), c.x(i)) = inv(c.x(i), c.p(i)) = LaurentPoly(1);
    for (int j = 0; j <= n; ++j) {
      g(c.x(i), c.x(j)) = c.var(c.p(i)) * c.var(c.p(j));
      inv(c.p(i), c.p(j)) = -(c.var(c.p(i)) * c.var(c.p(j)));
    }
  }
  return SymplStructure{c, theta, omega, MetricSpec::make("G~", c.symbols, std::move(g), std::move(inv))};
}

std::vector<Check> verify_sympl_basics(int n) {
  SymplStructure s = build_sympl(n);
  const SymplChart& c = s.chart;
  std::vector<Check> out;
  LaurentPoly det = exactalg::determinant(s.metric.g);
  LaurentPoly expect((n + 1) % 2 ? -1 : 1);
  out.push_back(report::exact("det(G~) = (-1)^(n+1)", "symplectization-metric", det == expect,
                              json{{"n", n}, {"det", det.str()}}));

  PolyMatrix rebuilt = tps::symmetric_product(s.theta, s.theta);
  for (int i = 0; i <= n; ++i)
    rebuilt += LaurentPoly(2) * tps::symmetric_product(DiffForm::coordinate_differential(c.symbols, c.p(i)),
                                                       DiffForm::coordinate_differential(c.symbols, c.x(i)));
  out.push_back(report::exact("G~ = 2 dp (.) dx + theta~ (x) theta~", "symplectization-metric",
                              rebuilt == s.metric.g));

  DiffForm vol = s.omega;
  Rational fact(1);
  for (int k = 1; k <= n; ++k) {
    vol = wedge(vol, s.omega);
    fact *= Rational(k + 1);
  }
  bool vol_ok = vol.components().size() == 1;
  json coeff;
  if (vol_ok) {
    const auto& [ix, v] = *vol.components().begin();
    auto cv = v.constant_value();
    vol_ok = ix.size() == c.dim() && cv && !cv->is_zero();
    if (cv) {
      Rational normalized = *cv / fact;
      coeff = normalized.str();
      // dp0^dx0^...^dpn^dxn reordered to the chart order.
      Rational sign((n * (n + 1) / 2) % 2 ? -1 : 1);
      vol_ok = vol_ok && normalized == sign;
    }
  }
  out.push_back(report::exact("omega^(n+1)/(n+1)! is the coordinate volume form", "symplectic-volume", vol_ok,
                              json{{"coefficient", coeff}}));
  return out;
}

std::vector<Check> embed_and_pullback(int n) {
  tps::TpsStructure t = tps::build_tps(n);
  SymplStructure s = build_sympl(n);
  const tps::TpsChart& tc = t.chart;
  const SymplChart& sc = s.chart;
  std::vector<LaurentPoly> images(sc.dim());
  images[sc.p(0)] = LaurentPoly(tc.symbols, Rational(1));
  images[sc.x(0)] = tc.var(tc.x0());
  for (int l = 1; l <= n; ++l) {
    images[sc.p(l)] = tc.var(tc.p(l));
    images[sc.x(l)] = tc.var(tc.x(l));
  }
  diffgeo::PolyMap J(tc.symbols, sc.symbols, images);
  std::vector<Check> out;
  DiffForm jt = J.pull(s.theta);
  out.push_back(report::exact("J*theta~ = theta", "symplectization", jt == t.theta, json{{"pullback", jt.str()}}));
  out.push_back(report::exact("J*G~ = G", "symplectization", J.pull_metric(s.metric.g) == tps::mrugala_metric(n).g));
  out.push_back(report::exact("J*omega = dtheta", "symplectization", J.pull(s.omega) == t.theta.d()));
  return out;
}

SymplFrame canonical_frame_sympl(int n) {
  SymplChart c = make_sympl_chart(n);
  SymplFrame f;
  f.P_hat = VectorField(c.symbols);
  for (int i = 0; i <= n; ++i) {
    f.P.push_back(c.var(c.p(i)) * VectorField::coordinate(c.symbols, c.p(i)));
    f.L.push_back(LaurentPoly::variable(c.symbols, c.p(i), -1) * VectorField::coordinate(c.symbols, c.x(i)));
    f.P_hat += kHalf * f.P.back();
  }
  for (int j = 0; j <= n; ++j) f.X.push_back(f.L[static_cast<size_t>(j)] - f.P_hat);
  return f;
}

std::vector<Check> verify_canonical_frame_sympl(int n) {
  SymplStructure s = build_sympl(n);
  SymplFrame f = canonical_frame_sympl(n);
  const MetricSpec& g = s.metric;
  using diffgeo::bracket;
  size_t m = static_cast<size_t>(n + 1);
  bool br = true;
  for (size_t i = 0; i < m; ++i) {
    br = br && bracket(f.L[i], f.P_hat) == kHalf * f.L[i];
    for (size_t j = 0; j < m; ++j) {
      Rational d = delta(static_cast<int>(i), static_cast<int>(j));
      br = br && bracket(f.P[i], f.P[j]).is_zero() && bracket(f.L[i], f.L[j]).is_zero();
      br = br && bracket(f.P[i], f.L[j]) == -d * f.L[j];
      br = br && bracket(f.P[i], f.X[j]) == -d * (f.X[j] + f.P_hat);
      br = br && bracket(f.X[i], f.X[j]) == kHalf * (f.X[j] - f.X[i]);
    }
  }
  std::vector<Check> out;
  out.push_back(report::exact("frame commutators of P~_i, L_k, X~_j and P_hat", "symplectization-frame", br,
                              json{{"n", n}}));

  bool products = true;
  for (size_t i = 0; i < m; ++i) {
    products = products && g.inner(f.X[i], f.P_hat) == LaurentPoly(kHalf);
    for (size_t j = 0; j < m; ++j) {
      Rational d = delta(static_cast<int>(i), static_cast<int>(j));
      products = products && g.inner(f.P[i], f.P[j]).is_zero();
      products = products && g.inner(f.L[i], f.L[j]) == LaurentPoly(1);
      products = products && g.inner(f.P[i], f.L[j]) == LaurentPoly(d);
      products = products && g.inner(f.P[i], f.X[j]) == LaurentPoly(d);
      products = products && g.inner(f.X[i], f.X[j]).is_zero();
    }
  }
  out.push_back(report::exact("scalar products of the frame fields", "symplectization-frame", products));

  std::vector<VectorField> frame = f.P;
  frame.insert(frame.end(), f.X.begin(), f.X.end());
  PolyMatrix gram = diffgeo::gram_matrix(g, frame);
  bool canon = true;
  for (size_t a = 0; a < 2 * m; ++a)
    for (size_t b = 0; b < 2 * m; ++b)
      canon = canon && gram(a, b) == LaurentPoly((a + m == b || b + m == a) ? 1 : 0);
  out.push_back(report::exact("Gram matrix in (P~, X~) is [[0, I], [I, 0]]", "symplectization-frame", canon));

  // G~(f P~ + g X~, same) = 2 sum f_i g_i on a fixed integer sample.
  bool cone = true;
  for (int trial = 0; trial < 4; ++trial) {
    VectorField v(s.chart.symbols);
    Rational fg;
    for (size_t i = 0; i < m; ++i) {
      Rational fi(static_cast<long>(i) + trial - 1), gi(2 - static_cast<long>(i) * trial);
      v += fi * f.P[i] + gi * f.X[i];
      fg += fi * gi;
    }
    cone = cone && g.inner(v, v) == LaurentPoly(Rational(2) * fg);
  }
  out.push_back(report::exact("null cone in the frame: G~(X,X) = 2 sum f_i g_i", "symplectization-frame", cone));
  return out;
}

diffgeo::ChristoffelTable reference_christoffel_sympl(int n) {
  SymplChart c = make_sympl_chart(n);
  diffgeo::ChristoffelTable t(c.symbols);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        LaurentPoly pi = c.var(c.p(i)), pj = c.var(c.p(j)), pk = c.var(c.p(k));
        t.set_symmetric(c.x(i), c.x(j), c.x(k), -kHalf * (delta(i, j) * pk + delta(i, k) * pj));
        t.set_symmetric(c.p(i), c.x(j), c.x(k), pi * pj * pk);
        t.set_symmetric(c.p(i), c.x(j), c.p(k), kHalf * (delta(j, k) * pi + delta(i, k) * pj));
      }
  return t;
}

std::vector<Check> curvature_suite_sympl(int n) {
  SymplStructure s = build_sympl(n);
  const SymplChart& c = s.chart;
  std::vector<Check> out;
  diffgeo::ChristoffelTable table = diffgeo::christoffel(s.metric);
  diffgeo::ChristoffelTable ref = reference_christoffel_sympl(n);
  json diff = json::array();
  for (size_t a = 0; a < c.dim(); ++a)
    for (size_t b = 0; b < c.dim(); ++b)
      for (size_t d = b; d < c.dim(); ++d)
        if (!(table(a, b, d) == ref(a, b, d)) && diff.size() < 8)
          diff.push_back({{"upper", (*c.symbols)[a].name},
                          {"lower", json::array({(*c.symbols)[b].name, (*c.symbols)[d].name})},
                          {"computed", table(a, b, d).str()},
                          {"expected", ref(a, b, d).str()}});
  out.push_back(report::exact("Christoffel symbols of G~ equal the three-family table and vanish elsewhere",
                              "christoffel-symplectization", diff.empty(),
                              json{{"n", n}, {"nonzero", table.nonzero_count()}, {"mismatches", diff}}));

  diffgeo::CurvatureTensors ct = diffgeo::ricci_scalar(s.metric, table);
  Rational factor(n + 2, 2);
  PolyMatrix residual = ct.ricci - LaurentPoly(factor) * s.metric.g;
  out.push_back(report::exact("Ric(G~) - (n+2)/2 G~ = 0", "einstein", residual.is_zero(),
                              json{{"einstein_factor", factor.str()}}));
  out.push_back(report::exact("Ricci from the index formula equals the contraction", "einstein",
                              ct.ricci == diffgeo::ricci_contraction(ct)));
  Rational scalar((n + 1) * (n + 2));
  out.push_back(report::exact("scalar curvature of G~ is (n+1)(n+2)", "einstein", ct.scalar == LaurentPoly(scalar),
                              json{{"scalar", ct.scalar.str()}, {"expected", scalar.str()}}));
  return out;
}

std::vector<SymplKillingEntry> killing_catalog_sympl(int n) {
  SymplStructure s = build_sympl(n);
  const SymplChart& c = s.chart;
  auto dp = [&](int i) { return VectorField::coordinate(c.symbols, c.p(i)); };
  auto dx = [&](int i) { return VectorField::coordinate(c.symbols, c.x(i)); };
  std::vector<SymplKillingEntry> out;
  VectorField Q(c.symbols);
  LaurentPoly xp;
  for (int i = 0; i <= n; ++i) xp += c.var(c.x(i)) * c.var(c.p(i));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      VectorField q = c.var(c.x(i)) * dx(j) - c.var(c.p(j)) * dp(i);
      if (i == j) Q += q;
      out.push_back({"Q^" + idx(i) + "_" + idx(j), q, -(c.var(c.x(i)) * c.var(c.p(j)))});
    }
  for (int k = 0; k <= n; ++k) out.push_back({"X_" + idx(k), dx(k), -c.var(c.p(k))});
  LaurentPoly w = LaurentPoly(1) - kHalf * xp;
  for (int i = 0; i <= n; ++i)
    out.push_back({"D^" + idx(i), kHalf * c.var(c.x(i)) * Q + w * dp(i), c.var(c.x(i)) * w});
  return out;
}

namespace {

diffgeo::StructureConstants expected_sympl_constants(int n) {
  size_t m = static_cast<size_t>(n + 1);
  size_t dim = m * m + 2 * m;
  diffgeo::StructureConstants sc{dim, std::vector<Rational>(dim * dim * dim)};
  auto Q = [m](int i, int j) { return static_cast<size_t>(i) * m + static_cast<size_t>(j); };
  auto X = [m](int s) { return m * m + static_cast<size_t>(s); };
  auto D = [m](int i) { return m * m + m + static_cast<size_t>(i); };
  auto set = [&](size_t a, size_t b, size_t k, const Rational& v) {
    sc(a, b, k) += v;
    sc(b, a, k) -= v;
  };
  int N = n;
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) {
      for (int p = 0; p <= N; ++p)
        for (int k = 0; k <= N; ++k) {
          if (Q(i, j) >= Q(p, k)) continue;
          if (p == j) set(Q(i, j), Q(p, k), Q(i, k), Rational(1));
          if (i == k) set(Q(i, j), Q(p, k), Q(p, j), Rational(-1));
        }
      set(Q(i, j), X(i), X(j), Rational(-1));
      set(Q(i, j), D(j), D(i), Rational(1));
    }
  for (int s = 0; s <= N; ++s)
    for (int i = 0; i <= N; ++i) {
      set(X(s), D(i), Q(i, s), kHalf);
      if (i == s)
        for (int k = 0; k <= N; ++k) set(X(s), D(i), Q(k, k), kHalf);
    }
  return sc;
}

using exactalg::RationalMatrix;

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix ab = a * b, ba = b * a, r(a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) = ab(i, j) - ba(i, j);
  return r;
}

// Traceless part of a square matrix.
RationalMatrix traceless(RationalMatrix m) {
  Rational tr;
  for (size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
  Rational shift = tr / Rational(static_cast<long>(m.rows()));
  for (size_t i = 0; i < m.rows(); ++i) m(i, i) -= shift;
  return m;
}

// Q^i_j -> E^i_j, X_k -> -1/2 1_k, D^l -> 1^l in gl(n+2), then modulo the center.
std::vector<RationalMatrix> sl_images(int n) {
  size_t m = static_cast<size_t>(n + 1), N = m + 1;
  std::vector<RationalMatrix> out;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      RationalMatrix e(N, N);
      e(i, j) = Rational(1);
      out.push_back(traceless(e));
    }
  for (size_t k = 0; k < m; ++k) {
    RationalMatrix e(N, N);
    e(m, k) = -kHalf;
    out.push_back(e);
  }
  for (size_t l = 0; l < m; ++l) {
    RationalMatrix e(N, N);
    e(l, m) = Rational(1);
    out.push_back(e);
  }
  return out;
}

}  // namespace

std::vector<Check> verify_killing_catalog_sympl(int n) {
  SymplStructure s = build_sympl(n);
  auto cat = killing_catalog_sympl(n);
  std::vector<Check> out;
  std::vector<VectorField> fields;
  json not_killing = json::array(), bad_ham = json::array();
  for (const auto& e : cat) {
    fields.push_back(e.field);
    if (!diffgeo::lie_derivative_metric(s.metric, e.field).is_zero()) not_killing.push_back(e.label);
    if (!(s.omega.interior(e.field) == DiffForm::exact(s.chart.symbols, e.hamiltonian)))
      bad_ham.push_back(e.label);
  }
  size_t expect = static_cast<size_t>((n + 2) * (n + 2) - 1);
  out.push_back(report::exact("every Q^i_j, X_s, D^i satisfies L_X G~ = 0", "killing-symplectization",
                              not_killing.empty(), json{{"count", cat.size()}, {"not_killing", not_killing}}));
  out.push_back(report::exact("catalog has (n+2)^2 - 1 independent fields", "killing-symplectization",
                              cat.size() == expect && diffgeo::span_dimension(fields) == expect,
                              json{{"size", cat.size()}, {"expected", expect}}));
  out.push_back(report::exact("i_X omega = dH with H_Q = -x^i p_j, H_X = -p_k, H_D = x^s (1 - <x,p>/2)",
                              "killing-hamiltonians", bad_ham.empty(), json{{"failing", bad_ham}}));

  diffgeo::StructureConstants sc;
  bool closed = true;
  try {
    sc = diffgeo::structure_constants(fields);
  } catch (const NotClosedError& e) {
    closed = false;
    out.push_back(report::exact("commutators of Q, X, D match the table", "killing-symplectization", false, e.what()));
  }
  if (!closed) return out;
  out.push_back(report::exact("commutators of Q, X, D match the table", "killing-symplectization",
                              sc == expected_sympl_constants(n)));

  size_t m = static_cast<size_t>(n + 1);
  bool abelian = true;
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b) abelian = abelian && diffgeo::bracket(fields[m * m + m + a], fields[m * m + m + b]).is_zero();
  out.push_back(report::exact("D^i span an abelian subalgebra", "killing-symplectization", abelian));

  auto images = sl_images(n);
  bool hom = true;
  json fail;
  for (size_t a = 0; a < images.size() && hom; ++a)
    for (size_t b = 0; b < images.size() && hom; ++b) {
      RationalMatrix lhs = commutator(images[a], images[b]);
      RationalMatrix rhs(m + 1, m + 1);
      for (size_t k = 0; k < images.size(); ++k) {
        const Rational& ck = sc(a, b, k);
        if (ck.is_zero()) continue;
        for (size_t i = 0; i <= m; ++i)
          for (size_t j = 0; j <= m; ++j) rhs(i, j) += ck * images[k](i, j);
      }
      if (!(lhs == rhs)) {
        hom = false;
        fail = json{{"pair", json::array({cat[a].label, cat[b].label})}};
      }
    }
  RationalMatrix flat(images.size(), (m + 1) * (m + 1));
  for (size_t a = 0; a < images.size(); ++a)
    for (size_t i = 0; i <= m; ++i)
      for (size_t j = 0; j <= m; ++j) flat(a, i * (m + 1) + j) = images[a](i, j);
  size_t rank = exactalg::rank_exact(flat);
  out.push_back(report::exact("Q^i_j -> E^i_j, X_k -> -1/2 1_k, D^l -> 1^l modulo the center is a bracket-preserving "
                              "isomorphism onto sl(n+2)",
                              "sl-isomorphism", hom && rank == expect,
                              json{{"rank", rank}, {"dim_sl", expect}, {"first_failure", fail}}));
  return out;
}

}  // namespace tpsgeo::sympl
