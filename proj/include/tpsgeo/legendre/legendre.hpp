#pragma once

#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tpsgeo/autodiff/jet.hpp"
#include "tpsgeo/report/check.hpp"

namespace tpsgeo::legendre {

using autodiff::Jet3;
using autodiff::Quad;
using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;

// canonical: x0 = phi - p_I phi_I, p_J = -phi_J, x^I = phi_I.
// positive_gradient: x0 = phi, p = +grad phi, I empty.
enum class Convention { canonical, positive_gradient };

const char* convention_name(Convention c);
Convention convention_from_name(const std::string& s);

struct PotentialModel {
  std::string name;
  std::string catalog_id;
  int n = 0;
  std::vector<int> I;  // 1-based indices whose variable is p_i; the rest are x^j
  Convention convention = Convention::canonical;
  std::map<std::string, double> parameters;
  nlohmann::json catalog_parameters = nlohmann::json::object();
  std::optional<double> homogeneous_degree;
  bool paper_literal = false;
  // Sampling box per variable, inside the declared domain.
  std::vector<std::pair<double, double>> box;

  std::function<Jet3(std::span<const Jet3>)> jet_eval;
  std::function<Quad(std::span<const Quad>)> quad_eval;
  std::function<bool(std::span<const double>)> in_domain;

  bool in_I(int k) const;
  std::vector<std::string> variable_names() const;
  Jet3 jet(std::span<const double> base) const;
  Vec sample(std::mt19937_64& rng) const;
};

// U(S, V) = (V - b)^(-R/cV) e^(S/cV) - a/V; paper_literal uses the exponent +R/cV.
PotentialModel van_der_waals(double a = 1, double b = 1, double R = 1, double cV = 1.5, bool paper_literal = false);
PotentialModel ideal_gas_energy(double R = 1, double cV = 1.5);
// phi = u^T Q u / 2 over the base variables.
PotentialModel quadratic(const Mat& Q, std::vector<int> I = {}, Convention c = Convention::canonical);
PotentialModel linear(const Vec& a);
// phi = x1 g(x2 / x1) with g(u) = u^2.
PotentialModel homogeneous_demo();
// phi = sum_j (x^j)^3.
PotentialModel cubic(int n);

std::vector<std::string> catalog_ids();
PotentialModel catalog_model(const std::string& id, const nlohmann::json& parameters = nlohmann::json::object());
// {name, convention, partition: {I: [...]}, parameters, model: catalog-id}
PotentialModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const PotentialModel& m);

struct SurfacePoint {
  Vec base;
  Vec ambient;                  // (x0, p1..pn, x1..xn)
  Jet3 phi;                     // jet of the potential at base
  std::vector<Vec> tangent;     // d ambient / d u_k
  std::vector<std::vector<Vec>> second;  // d^2 ambient / d u_k d u_l
  double theta_residual = 0;    // max_k |theta(tangent_k)| relative to the tangent scale
};

// Throws DomainError outside the model domain.
SurfacePoint surface_point(const PotentialModel& model, std::span<const double> base);

// Mrugala metric, its inverse and Christoffel symbols at an ambient point (x0, p, x).
Mat ambient_metric(std::span<const double> m);
Mat ambient_metric_inverse(std::span<const double> m);
std::vector<Mat> ambient_christoffel(std::span<const double> m);  // [a](b, c)
double ambient_inner(std::span<const double> m, const Vec& u, const Vec& v);

struct InducedGeometry {
  Mat pullback_metric;   // Gram of the tangent vectors under G
  Mat block_metric;      // +2 phi on the I block, -2 phi on the J block, zero mixed
  Mat weinhold_hessian;  // raw Hessian of phi
  Mat theta_squared;     // theta(Y_k) theta(Y_l)
  double gram_block_diff = 0;
  std::vector<Vec> V, W, Y, Z;
  Mat phi_inverse;       // blockwise inverse, mixed entries zero
  double vw_table_diff = 0;     // G(V_k, W_l) against +-delta
  double frame_tangent_diff = 0;  // Y_k = V_k + phi_kl W_l against the pushforward
  double yz_max = 0;            // max |G(Y_k, Z_l)|
  double theta_z_max = 0;       // max |theta(Z_k)|
  Mat zz;                       // G(Z_k, Z_l)
  double span_det = 0;          // det [Y, Z, xi] in ambient coordinates
};

// Pullback metric and weinhold Hessian only; no frames.
InducedGeometry induced_metric(const PotentialModel& model, std::span<const double> base);
// Adds V, W, Y, Z; throws DegenerateSurfaceError when the normalized induced metric is singular.
InducedGeometry frames(const PotentialModel& model, std::span<const double> base);

struct SecondFundamentalForm {
  std::vector<Mat> coeffs;         // phi_lks = Y_k(phi_ls), [k](l, s)
  std::vector<Mat> normal_coeffs;  // Z_s components of nabla_{Y_k} Y_l from a direct solve
  Mat xi_coeffs;                   // xi component of nabla_{Y_k} Y_l
  double tangential_residual = 0;  // |nabla_{Y_k} Y_l - phi^{sr} phi_lks Y_r / 2 - phi_lks Z_s|
  double symmetry_residual = 0;    // |II(Y_k, Y_l) - II(Y_l, Y_k)|
  double decomposition_diff = 0;   // |normal_coeffs - coeffs|
  double norm = 0;                 // max |phi_lks|
};

SecondFundamentalForm second_fundamental_form(const PotentialModel& model, std::span<const double> base);

enum class Definiteness { positive_definite, negative_definite, indefinite, marginal };
const char* definiteness_name(Definiteness d);

struct Stability {
  Definiteness definiteness = Definiteness::marginal;
  Vec eigenvalues;
  double tolerance = 0;
  bool stable() const { return definiteness == Definiteness::positive_definite; }
};

Stability stability_classify(const PotentialModel& model, std::span<const double> base);
Stability classify_matrix(const Mat& h);

// Grid scan of a box for a point with an indefinite Hessian.
std::optional<Vec> locate_spinodal(const PotentialModel& model, const std::vector<std::pair<double, double>>& box,
                                   int grid = 60);

std::vector<report::Check> homogeneity_check(const PotentialModel& model, int samples, unsigned long seed);

// {point, ambient, metric, eigenvalues, classification, II_norm, gibbs_duhem_residual, ...}; residuals are relative.
nlohmann::json analyze(const PotentialModel& model, std::span<const double> base);

// Full numeric suite over the built-in catalog.
std::vector<report::Check> legendre_suite(int samples, unsigned long seed);

}  // namespace tpsgeo::legendre
