#include "tpsgeo/tps/tps.hpp"

#include "tpsgeo/diffgeo/killing.hpp"
#include "tpsgeo/errors.hpp"
#include "tpsgeo/exactalg/json_io.hpp"
#include "tpsgeo/exactalg/linalg.hpp"

namespace tpsgeo::tps {

using exactalg::Symbol;
using nlohmann::json;
using report::Check;

namespace {

std::string idx(int i) { return std::to_string(i); }

LaurentPoly one() { return LaurentPoly(Rational(1)); }

}  // namespace

TpsChart make_tps_chart(int n) {
  if (n < 1) throw DomainError("thermodynamic phase space needs n >= 1");
  std::vector<Symbol> syms{{"x0", false}};
  for (int i = 1; i <= n; ++i) syms.push_back({"p" + idx(i), true});
  for (int i = 1; i <= n; ++i) syms.push_back({"x" + idx(i), false});
  return TpsChart{n, exactalg::make_chart(std::move(syms))};
}

TpsStructure build_tps(int n) {
  TpsChart c = make_tps_chart(n);
  std::vector<LaurentPoly> coeffs(c.dim());
  coeffs[c.x0()] = one();
  for (int l = 1; l <= n; ++l) coeffs[c.x(l)] = c.var(c.p(l));
  DiffForm theta = DiffForm::one_form(c.symbols, coeffs);
  VectorField xi = VectorField::coordinate(c.symbols, c.x0());
  std::vector<VectorField> frame{xi};
  for (int i = 1; i <= n; ++i) frame.push_back(VectorField::coordinate(c.symbols, c.p(i)));
  for (int i = 1; i <= n; ++i)
    frame.push_back(VectorField::coordinate(c.symbols, c.x(i)) - c.var(c.p(i)) * xi);
  return TpsStructure{c, theta, xi, frame};
}

PolyMatrix symmetric_product(const DiffForm& a, const DiffForm& b) {
  auto ca = a.one_form_coefficients(), cb = b.one_form_coefficients();
  size_t d = ca.size();
  PolyMatrix m(d, d, a.chart());
  Rational half(1, 2);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) m(i, j) = (ca[i] * cb[j] + ca[j] * cb[i]) * half;
  return m;
}

MetricSpec mrugala_metric(int n) {
  TpsStructure s = build_tps(n);
  const TpsChart& c = s.chart;
  PolyMatrix g = symmetric_product(s.theta, s.theta);
  for (int k = 1; k <= n; ++k) {
    PolyMatrix dpdx = symmetric_product(DiffForm::coordinate_differential(c.symbols, c.p(k)),
                                        DiffForm::coordinate_differential(c.symbols, c.x(k)));
    g += LaurentPoly(Rational(2)) * dpdx;
  }
  // Known inverse: [[1, -p^T, 0], [-p, 0, I], [0, I, 0]].
  PolyMatrix inv(c.dim(), c.dim(), c.symbols);
  inv(0, 0) = one();
  for (int i = 1; i <= n; ++i) {
    inv(c.x0(), c.p(i)) = inv(c.p(i), c.x0()) = -c.var(c.p(i));
    inv(c.p(i), c.x(i)) = inv(c.x(i), c.p(i)) = one();
  }
  return MetricSpec::make("G", c.symbols, std::move(g), std::move(inv));
}

SignatureSplit signature_split(int n) {
  TpsStructure s = build_tps(n);
  SignatureSplit out;
  Rational half(1, 2);
  out.plus.push_back(s.reeb);
  out.plus_norm2.push_back(Rational(1));
  for (int i = 1; i <= n; ++i) {
    out.plus.push_back(half * (s.P(i) + s.X(i)));
    out.plus_norm2.push_back(half);
    out.minus.push_back(half * (s.P(i) - s.X(i)));
    out.minus_norm2.push_back(-half);
  }
  return out;
}

const char* light_cone_name(LightCone c) {
  switch (c) {
    case LightCone::positive: return "positive";
    case LightCone::null: return "null";
    case LightCone::negative: return "negative";
  }
  return "null";
}

LightCone light_cone_test(const MetricSpec& metric, const VectorField& x, std::span<const Rational> point) {
  LaurentPoly q = metric.inner(x, x);
  Rational v = q.is_constant() ? *q.constant_value() : q.evaluate(point);
  if (v.sign() > 0) return LightCone::positive;
  if (v.sign() < 0) return LightCone::negative;
  return LightCone::null;
}

AlmostContactTensor almost_contact_tensor(int n) {
  TpsStructure s = build_tps(n);
  const TpsChart& c = s.chart;
  PolyMatrix phi(c.dim(), c.dim(), c.symbols);
  for (int i = 1; i <= n; ++i) {
    phi(c.x0(), c.p(i)) = c.var(c.p(i));
    phi(c.x(i), c.p(i)) = LaurentPoly(Rational(-1));
    phi(c.p(i), c.x(i)) = one();
  }
  return AlmostContactTensor{c, phi, s.reeb, s.theta};
}

std::vector<Check> compatibility_check(int n) {
  TpsStructure s = build_tps(n);
  AlmostContactTensor a = almost_contact_tensor(n);
  MetricSpec g = mrugala_metric(n);
  const TpsChart& c = s.chart;
  std::vector<Check> out;

  // phi^2 = -I + xi (x) theta
  PolyMatrix rhs = LaurentPoly(Rational(-1)) * PolyMatrix::identity(c.dim(), c.symbols);
  auto th = s.theta.one_form_coefficients();
  for (size_t j = 0; j < c.dim(); ++j) rhs(c.x0(), j) += th[j];
  out.push_back(report::exact("phi^2 = -I + theta (x) xi", "almost-contact", a.phi * a.phi == rhs));

  bool images = diffgeo::apply_tensor(a.phi, s.reeb).is_zero();
  for (int i = 1; i <= n; ++i) {
    images = images && diffgeo::apply_tensor(a.phi, s.X(i)) == s.P(i);
    images = images && diffgeo::apply_tensor(a.phi, s.P(i)) == -s.X(i);
  }
  out.push_back(report::exact("phi(xi) = 0, phi(X_i) = P_i, phi(P_k) = -X_k", "almost-contact", images));

  bool theta_phi = true;
  for (size_t j = 0; j < c.dim(); ++j) {
    LaurentPoly v;
    for (size_t i = 0; i < c.dim(); ++i) v += th[i] * a.phi(i, j);
    theta_phi = theta_phi && v.is_zero();
  }
  out.push_back(report::exact("theta o phi = 0", "almost-contact", theta_phi));

  // phi(xi) = 0 identically bounds the generic rank by 2n, so a single point of rank 2n fixes it.
  std::vector<Rational> pt(c.dim(), Rational(0));
  auto vals = a.phi.evaluate(pt);
  exactalg::RationalMatrix pm(c.dim(), c.dim());
  for (size_t i = 0; i < c.dim(); ++i)
    for (size_t j = 0; j < c.dim(); ++j) pm(i, j) = vals[i][j];
  size_t rank = exactalg::rank_exact(pm);
  out.push_back(report::exact("rank(phi) = 2n", "almost-contact", rank == 2 * static_cast<size_t>(n),
                              json{{"rank", rank}}));

  // Indefinite compatibility law on every ordered frame pair.
  json alt_failures = json::array();
  bool corrected = true;
  for (size_t i = 0; i < s.frame.size(); ++i)
    for (size_t j = 0; j < s.frame.size(); ++j) {
      const VectorField &x = s.frame[i], &y = s.frame[j];
      LaurentPoly lhs = g.inner(diffgeo::apply_tensor(a.phi, x), diffgeo::apply_tensor(a.phi, y));
      LaurentPoly tt = s.theta.evaluate({x}) * s.theta.evaluate({y});
      LaurentPoly gxy = g.inner(x, y);
      corrected = corrected && lhs == -gxy + tt;
      LaurentPoly alt = lhs - (-gxy - tt);
      if (!alt.is_zero())
        alt_failures.push_back({{"pair", json::array({i, j})}, {"residual", alt.str()}});
    }
  out.push_back(report::exact("G(phi X, phi Y) = -G(X,Y) + theta(X) theta(Y) on all frame pairs",
                              "indefinite-compatibility", corrected));
  out.push_back(report::exact(
      "the sign -theta(X)theta(Y) in the indefinite law fails exactly on (xi, xi)",
      "indefinite-compatibility",
      alt_failures.size() == 1 && alt_failures[0]["pair"] == json::array({0, 0}),
      json{{"failing_pairs", alt_failures}}));

  // Classical law fails on (X_1, P_1).
  LaurentPoly lhs = g.inner(diffgeo::apply_tensor(a.phi, s.X(1)), diffgeo::apply_tensor(a.phi, s.P(1)));
  LaurentPoly classical = g.inner(s.X(1), s.P(1)) - s.theta.evaluate({s.X(1)}) * s.theta.evaluate({s.P(1)});
  out.push_back(report::exact("classical compatibility fails on (X_1, P_1)", "classical-compatibility",
                              !(lhs == classical),
                              json{{"G(phi X_1, phi P_1)", lhs.str()}, {"G(X_1,P_1)", classical.str()}}));
  return out;
}

std::vector<Check> verify_contact_structure(int n) {
  TpsStructure s = build_tps(n);
  const TpsChart& c = s.chart;
  std::vector<Check> out;
  DiffForm dtheta = s.theta.d();

  DiffForm top = s.theta;
  for (int k = 0; k < n; ++k) top = wedge(top, dtheta);
  bool top_ok = top.components().size() == 1;
  json top_w;
  if (top_ok) {
    const auto& [ix, coeff] = *top.components().begin();
    top_ok = ix.size() == c.dim() && coeff.is_constant() && !coeff.is_zero();
    top_w = coeff.str();
  }
  out.push_back(report::exact("theta ^ (dtheta)^n is a nonzero constant multiple of the volume form",
                              "contact-condition", top_ok, json{{"coefficient", top_w}}));

  out.push_back(report::exact("theta(xi) = 1 and i_xi dtheta = 0", "reeb-field",
                              s.theta.evaluate({s.reeb}) == one() && dtheta.interior(s.reeb).is_zero()));

  // Kernel of the constant matrix of dtheta, normalized by theta.
  exactalg::RationalMatrix om(c.dim(), c.dim());
  for (const auto& [ix, coeff] : dtheta.components()) {
    Rational v = *coeff.constant_value();
    om(ix[0], ix[1]) = v;
    om(ix[1], ix[0]) = -v;
  }
  auto ker = exactalg::kernel_exact(om);
  bool reeb_unique = ker.size() == 1;
  if (reeb_unique) {
    VectorField v(c.symbols);
    for (size_t i = 0; i < c.dim(); ++i) v[i] = LaurentPoly(ker[0][i]);
    LaurentPoly tv = s.theta.evaluate({v});
    auto tc = tv.constant_value();
    reeb_unique = tc && !tc->is_zero() && tc->inverse() * v == s.reeb;
  }
  out.push_back(report::exact("ker dtheta with theta = 1 is exactly d/dx0", "reeb-field", reeb_unique,
                              json{{"kernel_dimension", ker.size()}}));

  bool brackets = true;
  json bad = json::array();
  for (size_t i = 0; i < s.frame.size(); ++i)
    for (size_t j = 0; j < s.frame.size(); ++j) {
      VectorField b = diffgeo::bracket(s.frame[i], s.frame[j]);
      VectorField expect(c.symbols);
      int pi = (i >= 1 && i <= static_cast<size_t>(n)) ? static_cast<int>(i) : 0;
      int xj = j > static_cast<size_t>(n) ? static_cast<int>(j) - n : 0;
      int pj = (j >= 1 && j <= static_cast<size_t>(n)) ? static_cast<int>(j) : 0;
      int xi = i > static_cast<size_t>(n) ? static_cast<int>(i) - n : 0;
      if (pi && xj && pi == xj) expect = -s.reeb;
      if (xi && pj && xi == pj) expect = s.reeb;
      if (!(b == expect)) {
        brackets = false;
        bad.push_back({{"pair", json::array({i, j})}, {"bracket", b.str()}});
      }
    }
  out.push_back(report::exact("frame brackets vanish except [P_i, X_j] = -delta_ij xi", "frame-brackets",
                              brackets, bad.empty() ? json(nullptr) : bad));

  bool gram = true;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      gram = gram && dtheta.evaluate({s.P(i), s.X(j)}) == LaurentPoly(Rational(i == j ? 1 : 0));
      gram = gram && dtheta.evaluate({s.P(i), s.P(j)}).is_zero();
      gram = gram && dtheta.evaluate({s.X(i), s.X(j)}).is_zero();
    }
  out.push_back(report::exact("dtheta(P_i, X_j) = delta_ij, dtheta(P,P) = dtheta(X,X) = 0",
                              "symplectic-distribution", gram));
  return out;
}

std::vector<KillingEntry> killing_catalog_tps(int n) {
  TpsStructure s = build_tps(n);
  const TpsChart& c = s.chart;
  std::vector<KillingEntry> out;
  auto add = [&](std::string label, VectorField f, LaurentPoly listed) {
    LaurentPoly h = s.theta.evaluate({f});
    out.push_back(KillingEntry{std::move(label), std::move(f), std::move(h), std::move(listed)});
  };
  add("xi", s.reeb, one());
  for (int i = 1; i <= n; ++i)
    add("A_" + idx(i), c.var(c.x(i)) * s.reeb - s.P(i), c.var(c.p(i)));
  for (int j = 1; j <= n; ++j)
    add("B_" + idx(j), -VectorField::coordinate(c.symbols, c.x(j)), c.var(c.x(j)));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      add("Q^" + idx(k) + "_" + idx(l),
          c.var(c.p(l)) * s.P(k) - c.var(c.x(k)) * VectorField::coordinate(c.symbols, c.x(l)),
          c.var(c.x(k)) * c.var(c.p(l)));
  return out;
}

namespace {

// Structure constants of the catalog as predicted by its commutator table.
diffgeo::StructureConstants expected_tps_constants(int n) {
  size_t dim = static_cast<size_t>(n * n + 2 * n + 1);
  diffgeo::StructureConstants sc{dim, std::vector<Rational>(dim * dim * dim)};
  auto A = [](int i) { return static_cast<size_t>(i); };
  auto B = [n](int j) { return static_cast<size_t>(n + j); };
  auto Q = [n](int k, int l) { return static_cast<size_t>(2 * n + (k - 1) * n + l); };
  auto set = [&](size_t i, size_t j, size_t k, const Rational& v) {
    sc(i, j, k) += v;
    sc(j, i, k) -= v;
  };
  for (int i = 1; i <= n; ++i) set(A(i), B(i), 0, Rational(1));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      set(Q(k, l), A(l), A(k), Rational(-1));
      set(Q(k, l), B(k), B(l), Rational(1));
      for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s) {
          if (Q(k, l) >= Q(r, s)) continue;
          if (k == s) set(Q(k, l), Q(r, s), Q(r, l), Rational(1));
          if (r == l) set(Q(k, l), Q(r, s), Q(k, s), Rational(-1));
        }
    }
  return sc;
}

}  // namespace

std::vector<Check> verify_killing_catalog_tps(int n) {
  TpsStructure s = build_tps(n);
  MetricSpec g = mrugala_metric(n);
  auto cat = killing_catalog_tps(n);
  std::vector<Check> out;

  json not_killing = json::array();
  std::vector<VectorField> fields;
  for (const auto& e : cat) {
    fields.push_back(e.field);
    if (!diffgeo::lie_derivative_metric(g, e.field).is_zero()) not_killing.push_back(e.label);
  }
  out.push_back(report::exact("every catalog field satisfies L_X G = 0", "killing-catalog",
                              not_killing.empty(), json{{"count", cat.size()}, {"not_killing", not_killing}}));
  out.push_back(report::exact("catalog size is n^2 + 2n + 1", "killing-catalog",
                              cat.size() == static_cast<size_t>(n * n + 2 * n + 1) &&
                                  diffgeo::span_dimension(fields) == cat.size(),
                              json{{"size", cat.size()}}));

  bool contact = true;
  for (const auto& e : cat) contact = contact && s.theta.lie(e.field).is_zero();
  out.push_back(report::exact("every catalog field preserves theta (L_X theta = 0)", "killing-catalog", contact));

  // A_i = d/dp_i + x^i d/dx0 with the other sign on d/dp_i.
  VectorField alt_a = s.P(1) + s.chart.var(s.chart.x(1)) * s.reeb;
  PolyMatrix lie = diffgeo::lie_derivative_metric(g, alt_a);
  out.push_back(report::exact("A_1 = d/dp_1 + x^1 d/dx0 is not Killing; x^1 xi - P_1 is used instead",
                              "killing-catalog", !lie.is_zero(),
                              json{{"L_X G(x0,x1)", lie(s.chart.x0(), s.chart.x(1)).str()}}));

  try {
    auto sc = diffgeo::structure_constants(fields);
    bool ok = sc == expected_tps_constants(n);
    out.push_back(report::exact("commutators [A_i,B_j], [Q,A], [Q,B], [Q,Q] match the table",
                                "killing-brackets", ok));
  } catch (const NotClosedError& e) {
    out.push_back(report::exact("commutators [A_i,B_j], [Q,A], [Q,B], [Q,Q] match the table",
                                "killing-brackets", false, e.what()));
  }

  json hams = json::array();
  for (const auto& e : cat)
    hams.push_back({{"field", e.label},
                    {"theta_X", e.hamiltonian.str()},
                    {"listed", e.listed_hamiltonian.str()},
                    {"agree", e.hamiltonian == e.listed_hamiltonian}});
  out.push_back(report::exact("contact Hamiltonians theta(X) evaluated for the catalog", "contact-hamiltonians",
                              true, hams));
  return out;
}

bool ConstitutiveHypersurface::contains(std::span<const Rational> point) const {
  return defining.evaluate(point).is_zero();
}

bool ConstitutiveHypersurface::on_exceptional_plane(std::span<const Rational> point) const {
  for (int i = 1; i <= chart.n; ++i)
    if (!point[chart.x(i)].is_zero()) return false;
  return true;
}

ConstitutiveHypersurface constitutive_hypersurface(int n) {
  TpsStructure s = build_tps(n);
  const TpsChart& c = s.chart;
  ConstitutiveHypersurface h{c, c.var(c.x0()), DiffForm(c.symbols, 1), {}, {}};
  for (int l = 1; l <= n; ++l) {
    h.defining += c.var(c.p(l)) * c.var(c.x(l));
    h.gibbs_duhem += c.var(c.x(l)) * DiffForm::coordinate_differential(c.symbols, c.p(l));
  }
  for (int l = 1; l <= n; ++l) {
    h.labels.push_back("X_" + idx(l));
    h.generators.push_back(s.X(l));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      h.labels.push_back("P_" + idx(i) + idx(j));
      h.generators.push_back(c.var(c.x(j)) * s.P(i) - c.var(c.x(i)) * s.P(j));
    }
  return h;
}

std::vector<Check> verify_constitutive_hypersurface(int n) {
  TpsStructure s = build_tps(n);
  ConstitutiveHypersurface h = constitutive_hypersurface(n);
  std::vector<Check> out;
  // Tangency: X(F) vanishes on C. Each generator kills F identically here.
  bool tangent = true, horizontal = true, gd = true;
  for (const auto& g : h.generators) {
    tangent = tangent && g.apply(h.defining).is_zero();
    horizontal = horizontal && s.theta.evaluate({g}).is_zero();
    gd = gd && h.gibbs_duhem.evaluate({g}).is_zero();
  }
  out.push_back(report::exact("generators X_l, P_ij are tangent to x0 + sum p x = 0", "constitutive-hypersurface",
                              tangent, json{{"generators", h.labels}}));
  out.push_back(report::exact("generators lie in ker theta", "constitutive-hypersurface", horizontal));
  out.push_back(report::exact("sum x^i dp_i annihilates the generators", "gibbs-duhem", gd));

  VectorField alt = VectorField::coordinate(h.chart.symbols, h.chart.x(1)) +
                        h.chart.var(h.chart.x(1)) * s.reeb;
  bool alt_fails = !alt.apply(h.defining).is_zero() || !s.theta.evaluate({alt}).is_zero();
  out.push_back(report::exact("X_l = d/dx^l + x^l d/dx0 is neither tangent nor horizontal",
                              "constitutive-hypersurface", alt_fails,
                              json{{"X(F)", alt.apply(h.defining).str()},
                                   {"theta(X)", s.theta.evaluate({alt}).str()}}));
  return out;
}

}  // namespace tpsgeo::tps
