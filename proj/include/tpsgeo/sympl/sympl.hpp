#pragma once

#include <span>
#include <string>
#include <vector>

#include "tpsgeo/diffgeo/curvature.hpp"
#include "tpsgeo/diffgeo/forms.hpp"
#include "tpsgeo/diffgeo/metric.hpp"
#include "tpsgeo/exactalg/ratfunc.hpp"
#include "tpsgeo/report/check.hpp"

namespace tpsgeo::sympl {

using diffgeo::DiffForm;
using diffgeo::MetricSpec;
using diffgeo::VectorField;
using exactalg::ChartPtr;
using exactalg::LaurentPoly;
using exactalg::PolyMatrix;
using exactalg::Rational;
using exactalg::RationalFunction;

// Coordinates (p0..pn, x0..xn); p symbols are flagged invertible.
struct SymplChart {
  int n = 0;
  ChartPtr symbols;

  size_t dim() const { return 2 * static_cast<size_t>(n) + 2; }
  size_t p(int i) const { return static_cast<size_t>(i); }
  size_t x(int i) const { return static_cast<size_t>(n + 1 + i); }
  LaurentPoly var(size_t index) const { return LaurentPoly::variable(symbols, index); }
};

SymplChart make_sympl_chart(int n);

struct SymplStructure {
  SymplChart chart;
  DiffForm theta;  // sum p_i dx^i
  DiffForm omega;  // sum dp_i ^ dx^i
  MetricSpec metric;
};

SymplStructure build_sympl(int n);
// Determinant, symplectic volume and the metric as 2 dp (.) dx + theta^2.
std::vector<report::Check> verify_sympl_basics(int n);

// J: (x0, p, x) -> (p0 = 1, p, x0, x) pulls back theta~, G~ and omega.
std::vector<report::Check> embed_and_pullback(int n);

struct SymplFrame {
  std::vector<VectorField> P;  // p_i d/dp_i
  std::vector<VectorField> L;  // p_k^{-1} d/dx^k
  std::vector<VectorField> X;  // L_j - P_hat
  VectorField P_hat;           // half the p-dilatation
};

SymplFrame canonical_frame_sympl(int n);
std::vector<report::Check> verify_canonical_frame_sympl(int n);

diffgeo::ChristoffelTable reference_christoffel_sympl(int n);
// Christoffel table, Einstein identity and scalar curvature of G~.
std::vector<report::Check> curvature_suite_sympl(int n);

// Almost complex structure on P x R with t in the last slot.
struct SasakianStructure {
  int n = 0;
  ChartPtr chart;
  PolyMatrix J;
  std::vector<std::string> labels;
  std::vector<VectorField> frame;  // xi, X_i, P_j, d/dt
};

SasakianStructure sasakian_structure(int n);
VectorField nijenhuis(const PolyMatrix& j, const VectorField& x, const VectorField& y);
// N_J on frame pairs, the non-parallel witness and Ric(xi).
std::vector<report::Check> nijenhuis_check(int n);

// (p, x) -> (lambda p, lambda^{-1} x) with lambda a fresh invertible symbol.
std::vector<report::Check> hyperbolic_rotation_check(int n);

struct ProjChartId {
  enum Kind { U, V } kind = U;
  int index = 0;
  std::string str() const;
};

struct ProjCoordinates {
  ProjChartId id;
  std::vector<Rational> coords;
};

// U_j: (x^i p_j for all i, p_l / p_j for l != j); V_k: (x^i / x^k for i != k, p_l x^k for all l).
std::vector<RationalFunction> proj_chart_functions(const SymplChart& chart, ProjChartId id);
// First applicable chart in the order U_0..U_n, V_0..V_n.
ProjCoordinates proj_chart(int n, std::span<const Rational> point);
std::vector<report::Check> projectivization_check(int n, int samples, unsigned long seed);

struct CellRestriction {
  int k = 0;
  ChartPtr chart;  // p_{k+1}..p_n, x0..xn
  DiffForm theta_k;
  PolyMatrix G_k;
};

CellRestriction cell_restrict(int k, int n);
// Block form of G_k: zero on x0..x^{k-1}, Mrugala form on (x^k, p_{>k}, x^{>k}).
PolyMatrix cell_block_reference(int k, int n);
std::vector<report::Check> verify_cells(int n);
// Points with p V = R T lie on the lifted constitutive quadric inside the cell V_1.
std::vector<report::Check> ideal_gas_check(const Rational& gas_constant, int samples, unsigned long seed);

struct QuadricSignature {
  int plus = 0, minus = 0, zero = 0;
};
QuadricSignature quadric_signature(int n);
std::vector<report::Check> verify_quadric(int n);

// Product of n+1 affine groups identified with the positive quadrant.
std::vector<report::Check> affine_symplecto(int n);

struct SymplKillingEntry {
  std::string label;
  VectorField field;
  LaurentPoly hamiltonian;
};

// Order: Q^i_j (i outer), X_s, D^i.
std::vector<SymplKillingEntry> killing_catalog_sympl(int n);
std::vector<report::Check> verify_killing_catalog_sympl(int n);

}  // namespace tpsgeo::sympl
