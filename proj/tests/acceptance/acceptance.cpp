#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "tpsgeo/diffgeo/curvature.hpp"
#include "tpsgeo/diffgeo/killing.hpp"
#include "tpsgeo/errors.hpp"
#include "tpsgeo/heisenberg/heisenberg.hpp"
#include "tpsgeo/legendre/legendre.hpp"
#include "tpsgeo/sympl/sympl.hpp"
#include "tpsgeo/tps/tps.hpp"

using namespace tpsgeo;
using exactalg::LaurentPoly;
using exactalg::Rational;
using report::Check;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
  void suite(const std::vector<Check>& checks, const std::string& label) {
    for (const auto& c : checks)
      if (!c.passed()) require(false, label + ": " + c.claim);
  }
  // Requires the claim to be present and passed.
  void claim(const std::vector<Check>& checks, const std::string& text, const std::string& label) {
    for (const auto& c : checks)
      if (c.claim.find(text) != std::string::npos) {
        require(c.passed(), label + ": " + c.claim);
        return;
      }
    require(false, label + ": missing '" + text + "'");
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Rational sign_power(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

void criterion1(Outcome& o) {
  auto t0 = Clock::now();
  for (int n = 1; n <= 4; ++n)
    o.require(exactalg::determinant(tps::mrugala_metric(n).g) == LaurentPoly(sign_power(n)),
              "det G = (-1)^n at n=" + std::to_string(n));
  for (int n = 1; n <= 3; ++n)
    o.require(exactalg::determinant(sympl::build_sympl(n).metric.g) == LaurentPoly(sign_power(n + 1)),
              "det G~ = (-1)^(n+1) at n=" + std::to_string(n));
  double t = seconds_since(t0);
  o.require(t < 1.0, "time < 1 s");
  o.detail << " det G for n=1..4, det G~ for n=1..3 (" << t << " s)";
}

void criterion2(Outcome& o) {
  auto t0 = Clock::now();
  for (int n = 1; n <= 3; ++n)
    o.require(diffgeo::christoffel(tps::mrugala_metric(n)) == tps::reference_christoffel(n),
              "Christoffel(G) table at n=" + std::to_string(n));
  for (int n = 1; n <= 2; ++n)
    o.require(diffgeo::christoffel(sympl::build_sympl(n).metric) == sympl::reference_christoffel_sympl(n),
              "Christoffel(G~) table at n=" + std::to_string(n));
  double t = seconds_since(t0);
  o.require(t < 5.0, "time < 5 s");
  o.detail << " full tables compared, G n=1..3, G~ n=1..2 (" << t << " s)";
}

void criterion3(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    diffgeo::CurvatureTensors ct = diffgeo::ricci_scalar(tps::mrugala_metric(n));
    o.require(ct.ricci == tps::reference_ricci(n), "Ricci(G) closed form at n=" + std::to_string(n));
    o.require(ct.scalar == LaurentPoly(Rational(n, 2)), "scalar = n/2 at n=" + std::to_string(n));
    auto suite = tps::curvature_suite_tps(n);
    o.claim(suite, "curvature transformations R(e_a, e_b) e_c match the frame table", "n=" + std::to_string(n));
  }
  tps::TpsStructure s = tps::build_tps(1);
  auto table = diffgeo::christoffel(tps::mrugala_metric(1));
  o.require(diffgeo::riemann_transform(table, s.reeb, s.P(1), s.reeb) == Rational(1, 4) * s.P(1),
            "R(xi, P_1) xi = P_1 / 4");
  o.detail << " Ricci matrix, scalar n/2 and frame curvature table for n=1..3";
}

void criterion4(Outcome& o) {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 3; ++n)
    o.claim(tps::sectional_suite_tps(n, 100, 40 + n), "sectional curvature of the plane (P_i, d/dx^i) is 3/4",
            "n=" + std::to_string(n));
  int n = 2;
  tps::TpsStructure s = tps::build_tps(n);
  diffgeo::MetricSpec g = tps::mrugala_metric(n);
  auto table = diffgeo::christoffel(g);
  auto d = [&](size_t idx) { return diffgeo::VectorField::coordinate(s.chart.symbols, idx); };
  std::vector<Rational> pt;
  for (size_t i = 0; i < s.chart.dim(); ++i) pt.push_back(Rational(static_cast<long>(i) + 2, 3));
  bool raised = false;
  try {
    diffgeo::sectional(g, table, pt, s.P(1), d(s.chart.x(2)));
  } catch (const DegeneratePlaneError&) {
    raised = true;
  }
  o.require(raised, "(P_1, d/dx^2) raises degenerate plane");
  struct Plane {
    const char* name;
    diffgeo::VectorField a, b;
  };
  std::vector<Plane> zero{{"(xi,P_1)", s.reeb, s.P(1)},
                          {"(xi,d/dx^1)", s.reeb, d(s.chart.x(1))},
                          {"(P_1,P_2)", s.P(1), s.P(2)},
                          {"(d/dx^1,d/dx^2)", d(s.chart.x(1)), d(s.chart.x(2))}};
  for (const auto& p : zero) {
    bool numerator_zero = diffgeo::sectional_numerator(g, table, pt, p.a, p.b).is_zero();
    bool norm_zero = diffgeo::plane_norm(g, pt, p.a, p.b).is_zero();
    std::string value;
    try {
      value = diffgeo::sectional(g, table, pt, p.a, p.b).str();
    } catch (const DegeneratePlaneError&) {
      value = "undefined (degenerate plane)";
    }
    o.require(value == "0", std::string("sectional") + p.name + " -> 0; computed " + value +
                                (numerator_zero && norm_zero ? ", numerator 0 and |A^B|^2 0" : ""));
  }
  o.detail << " 3/4 at 100 random rational points n=1..3; (P_i, d/dx^j) degenerate";
}

void criterion5(Outcome& o) {
  auto t0 = Clock::now();
  for (int n = 1; n <= 3; ++n) {
    auto basis = diffgeo::killing_solve(tps::mrugala_metric(n), 2);
    o.require(static_cast<int>(basis.size()) == n * n + 2 * n + 1, "kernel dimension at n=" + std::to_string(n));
    std::vector<diffgeo::VectorField> cat;
    for (auto& e : tps::killing_catalog_tps(n)) cat.push_back(e.field);
    o.require(diffgeo::same_span(basis, cat), "span equals catalog at n=" + std::to_string(n));
    o.claim(tps::verify_killing_catalog_tps(n), "commutators", "n=" + std::to_string(n));
    o.detail << " n=" << n << ": dim " << basis.size() << ";";
  }
  double t = seconds_since(t0);
  o.require(t < 20.0, "time < 20 s");
  o.detail << " (" << t << " s)";
}

void criterion6(Outcome& o) {
  for (int n = 1; n <= 2; ++n) {
    auto curv = sympl::curvature_suite_sympl(n);
    o.claim(curv, "Ric(G~) - (n+2)/2 G~ = 0", "n=" + std::to_string(n));
    o.claim(curv, "scalar curvature of G~ is (n+1)(n+2)", "n=" + std::to_string(n));
    auto basis = diffgeo::killing_solve(sympl::build_sympl(n).metric, 2);
    o.require(static_cast<int>(basis.size()) == (n + 2) * (n + 2) - 1, "kernel dimension at n=" + std::to_string(n));
    std::vector<diffgeo::VectorField> cat;
    for (auto& e : sympl::killing_catalog_sympl(n)) cat.push_back(e.field);
    o.require(diffgeo::same_span(basis, cat), "span equals catalog at n=" + std::to_string(n));
    auto kc = sympl::verify_killing_catalog_sympl(n);
    o.claim(kc, "commutators of Q, X, D match the table", "n=" + std::to_string(n));
    o.claim(kc, "bracket-preserving isomorphism onto sl(n+2)", "n=" + std::to_string(n));
    o.detail << " n=" << n << ": dim " << basis.size() << ";";
  }
}

void criterion7(Outcome& o) {
  for (int n = 1; n <= 2; ++n) {
    auto c = sympl::nijenhuis_check(n);
    o.claim(c, "Nijenhuis tensor N_J vanishes on all frame pairs", "n=" + std::to_string(n));
    o.claim(c, "non-parallel witness", "n=" + std::to_string(n));
    o.claim(c, "Ric(xi, xi) = -n/2", "n=" + std::to_string(n));
  }
  o.detail << " N_J = 0, witness -2 and Ric(xi) = -n/2 for n=1..2";
}

void criterion8(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    o.suite(heisenberg::group_checks(n, 100, 8 + n), "group n=" + std::to_string(n));
    o.suite(heisenberg::invariant_fields_and_checks(n), "fields n=" + std::to_string(n));
  }
  o.detail << " group axioms, exp series, pushforwards, L_eta theta_H = 0, constant Gram for n=1..3";
}

void criterion9(Outcome& o) {
  auto t0 = Clock::now();
  auto c = legendre::legendre_suite(100, 9);
  double t = seconds_since(t0);
  o.suite(c, "legendre");
  o.claim(c, "theta pulls back to zero", "theta residual");
  o.claim(c, "induced metric equals +2 phi_ii'", "Gram vs block formula");
  o.claim(c, "II vanishes identically", "quadratic II");
  o.claim(c, "match finite differences to 1e-7", "vdW FD");
  o.claim(c, "surface points satisfy x0 + sum p_l x^l = 0", "homogeneous demo");
  o.require(t < 10.0, "time < 10 s");
  o.detail << " " << c.size() << " checks (" << t << " s)";
}

void criterion10(Outcome& o) {
  for (int n = 1; n <= 3; ++n) {
    o.suite(sympl::hyperbolic_rotation_check(n), "rotation n=" + std::to_string(n));
    o.suite(sympl::projectivization_check(n, 100, 10 + n), "projectivization n=" + std::to_string(n));
  }
  auto cells = sympl::verify_cells(2);
  o.suite(cells, "cells n=2");
  for (int k = 0; k <= 2; ++k) o.claim(cells, "G_" + std::to_string(k), "cell k=" + std::to_string(k));
  o.suite(sympl::ideal_gas_check(Rational(1), 100, 10), "ideal gas");
  o.detail << " rotation invariance, chart transitions, G_k for n=2, ideal-gas membership";
}

void criterion11(Outcome& o) {
  size_t failures = 0;
  bool witnessed = true;
  for (int n = 1; n <= 3; ++n)
    for (const auto& c : tps::curvature_suite_tps(n, true))
      if (!c.passed()) {
        ++failures;
        witnessed = witnessed && !c.witness.is_null();
      }
  o.require(failures >= 1, "tampered metric causes a failure");
  o.require(witnessed, "every failure carries a witness");
  o.detail << " " << failures << " documented failures under the sign flip";
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--known-failures" && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) known.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--known-failures i,j,...]\n";
      return 2;
    }
  }
  std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"metric determinants", criterion1},
      {"Christoffel tables", criterion2},
      {"Ricci, scalar curvature and curvature table", criterion3},
      {"sectional curvatures", criterion4},
      {"Killing algebra of G", criterion5},
      {"Einstein property and Killing algebra of G~", criterion6},
      {"Nijenhuis tensor, non-parallel witness, Ric(xi)", criterion7},
      {"Heisenberg suite", criterion8},
      {"Legendre suite", criterion9},
      {"projectivization and cells", criterion10},
      {"negative control", criterion11}};
  auto t0 = Clock::now();
  std::set<int> failed;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    int id = static_cast<int>(i) + 1;
    if (!o.pass) failed.insert(id);
    std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ":"
              << o.detail.str() << "\n";
  }
  double t = seconds_since(t0);
  std::cout << "total " << t << " s\n";
  if (!known.empty()) {
    bool match = failed == known;
    std::cout << "failing criteria " << (match ? "match" : "differ from") << " the known set\n";
    return match ? 0 : 1;
  }
  return failed.empty() ? 0 : 1;
}
