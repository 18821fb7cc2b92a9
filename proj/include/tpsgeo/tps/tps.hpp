#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tpsgeo/diffgeo/curvature.hpp"
#include "tpsgeo/diffgeo/forms.hpp"
#include "tpsgeo/diffgeo/metric.hpp"
#include "tpsgeo/report/check.hpp"

namespace tpsgeo::tps {

using diffgeo::DiffForm;
using diffgeo::MetricSpec;
using diffgeo::VectorField;
using exactalg::ChartPtr;
using exactalg::LaurentPoly;
using exactalg::PolyMatrix;
using exactalg::Rational;

// Coordinates (x0, p1..pn, x1..xn); p symbols are flagged invertible.
struct TpsChart {
  int n = 0;
  ChartPtr symbols;

  size_t dim() const { return 2 * static_cast<size_t>(n) + 1; }
  size_t x0() const { return 0; }
  size_t p(int i) const { return static_cast<size_t>(i); }
  size_t x(int i) const { return static_cast<size_t>(n + i); }
  LaurentPoly var(size_t index) const { return LaurentPoly::variable(symbols, index); }
};

TpsChart make_tps_chart(int n);

struct TpsStructure {
  TpsChart chart;
  DiffForm theta;
  VectorField reeb;
  // (xi, P_1..P_n, X_1..X_n) with P_i = d/dp_i and X_i = d/dx^i - p_i d/dx0.
  std::vector<VectorField> frame;

  const VectorField& P(int i) const { return frame[static_cast<size_t>(i)]; }
  const VectorField& X(int i) const { return frame[static_cast<size_t>(chart.n + i)]; }
};

TpsStructure build_tps(int n);

// G = 2 dp (.) dx + theta (x) theta, expanded from the tensor expression.
MetricSpec mrugala_metric(int n);

// Symmetric product matrix of two one-forms: (a_i b_j + a_j b_i) / 2.
PolyMatrix symmetric_product(const DiffForm& a, const DiffForm& b);

// Orthogonal basis of the positive and negative parts with exact squared norms.
struct SignatureSplit {
  std::vector<VectorField> plus, minus;
  std::vector<Rational> plus_norm2, minus_norm2;
};
SignatureSplit signature_split(int n);

enum class LightCone { positive, null, negative };
const char* light_cone_name(LightCone c);
LightCone light_cone_test(const MetricSpec& metric, const VectorField& x, std::span<const Rational> point);

struct AlmostContactTensor {
  TpsChart chart;
  PolyMatrix phi;
  VectorField reeb;
  DiffForm theta;
};
AlmostContactTensor almost_contact_tensor(int n);

std::vector<report::Check> compatibility_check(int n);

// Contact condition, Reeb characterization, frame brackets, symplectic Gram.
std::vector<report::Check> verify_contact_structure(int n);

struct KillingEntry {
  std::string label;
  VectorField field;
  LaurentPoly hamiltonian;         // theta(X)
  LaurentPoly listed_hamiltonian;  // value in the reference list
};

// Order: xi, A_1..A_n, B_1..B_n, Q^k_l (k outer, l inner).
std::vector<KillingEntry> killing_catalog_tps(int n);
std::vector<report::Check> verify_killing_catalog_tps(int n);

struct ConstitutiveHypersurface {
  TpsChart chart;
  LaurentPoly defining;        // x0 + sum p_l x^l
  DiffForm gibbs_duhem;        // sum x^i dp_i
  std::vector<std::string> labels;
  std::vector<VectorField> generators;  // X_l, then P_ij for i < j

  bool contains(std::span<const Rational> point) const;
  // Points with every x^i = 0, where the distribution is all of T(C).
  bool on_exceptional_plane(std::span<const Rational> point) const;
};
ConstitutiveHypersurface constitutive_hypersurface(int n);
std::vector<report::Check> verify_constitutive_hypersurface(int n);

// Closed-form connection and curvature of G.
diffgeo::ChristoffelTable reference_christoffel(int n);
PolyMatrix reference_ricci(int n);
// Linear combination of frame fields with rational coefficients.
VectorField frame_combination(const TpsStructure& s, const std::vector<std::pair<size_t, Rational>>& terms);
// nabla_{e_a} e_b and R(e_a, e_b) e_c for frame indices a, b, c.
VectorField reference_frame_connection(const TpsStructure& s, size_t a, size_t b);
VectorField reference_frame_curvature(const TpsStructure& s, size_t a, size_t b, size_t c);

// Same metric with the sign of G(x0, x^1) flipped; a negative control.
MetricSpec tampered_metric(const MetricSpec& g);

// Christoffel, trace form, frame connection, Ricci, scalar and curvature table.
std::vector<report::Check> curvature_suite_tps(int n, bool tamper = false);
// Bianchi identity, torsion freedom and metric compatibility on frame triples.
std::vector<report::Check> identity_suite_tps(int n);
std::vector<report::Check> sectional_suite_tps(int n, int samples, unsigned long seed);

}  // namespace tpsgeo::tps
