#include <algorithm>
#include <cmath>

#include "tpsgeo/errors.hpp"
#include "tpsgeo/legendre/legendre.hpp"

namespace tpsgeo::legendre {

using nlohmann::json;
using report::Check;

namespace {

constexpr double kRel = 1e-8, kAbsFloor = 1e-10;

std::vector<std::vector<size_t>> multi_indices(size_t n, size_t max_order) {
  std::vector<std::vector<size_t>> out;
  std::vector<std::vector<size_t>> frontier{{}};
  for (size_t order = 1; order <= max_order; ++order) {
    std::vector<std::vector<size_t>> next;
    for (const auto& f : frontier)
      for (size_t i = f.empty() ? 0 : f.back(); i < n; ++i) {
        auto g = f;
        g.push_back(i);
        next.push_back(g);
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

struct JetFdResult {
  double worst = 0;  // max |jet - fd| / max(floor, rel |fd|) scaled so that <= 1 passes
  json failure;
};

JetFdResult compare_jet_fd(const PotentialModel& model, std::span<const double> base, size_t max_order, double rel,
                           double floor_abs) {
  Jet3 j = model.jet(base);
  JetFdResult r;
  for (const auto& idx : multi_indices(static_cast<size_t>(model.n), max_order)) {
    autodiff::FdEstimate fd = autodiff::fd_oracle(model.quad_eval, base, idx);
    double jv = j.partial(idx);
    double ratio = std::abs(jv - fd.value) / std::max(floor_abs, rel * std::abs(fd.value));
    if (ratio > r.worst) {
      r.worst = ratio;
      if (ratio > 1) r.failure = json{{"point", Vec(base.begin(), base.end())}, {"index", idx}, {"jet", jv}, {"fd", fd.value}};
    }
  }
  return r;
}

}  // namespace

std::vector<Check> homogeneity_check(const PotentialModel& model, int samples, unsigned long seed) {
  std::vector<Check> out;
  std::string topic = "homogeneity";
  if (!model.homogeneous_degree) {
    out.push_back(report::not_applicable(model.name + " declares no homogeneity degree", topic));
    return out;
  }
  double deg = *model.homogeneous_degree;
  std::mt19937_64 rng(seed);
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    Vec u = model.sample(rng);
    double f = model.jet(u).value();
    for (double lam : {0.5, 2.0, 3.0}) {
      Vec v = u;
      for (auto& c : v) c *= lam;
      if (!model.in_domain(v)) continue;
      double expect = std::pow(lam, deg) * f;
      worst = std::max(worst, std::abs(model.jet(v).value() - expect) / std::max(1.0, std::abs(expect)));
    }
  }
  out.push_back(report::numeric(model.name + ": phi(lambda u) = lambda^d phi(u) for lambda in {1/2, 2, 3}", topic,
                                worst < 1e-12, json{{"degree", deg}, {"max_relative_residual", worst}}));
  if (deg != 1) return out;
  if (!model.I.empty() || model.convention != Convention::canonical) {
    out.push_back(report::not_applicable("constitutive quadric test needs I empty and the canonical convention", topic));
    return out;
  }
  double quad = 0, gd = 0;
  size_t n = static_cast<size_t>(model.n);
  for (int s = 0; s < samples; ++s) {
    SurfacePoint sp = surface_point(model, model.sample(rng));
    const Vec& m = sp.ambient;
    double val = m[0], scale = std::abs(m[0]);
    for (size_t l = 1; l <= n; ++l) {
      val += m[l] * m[n + l];
      scale += std::abs(m[l] * m[n + l]);
    }
    quad = std::max(quad, std::abs(val) / std::max(1.0, scale));
    for (const auto& t : sp.tangent) {
      double g = 0, gs = 0;
      for (size_t i = 1; i <= n; ++i) {
        g += m[n + i] * t[i];
        gs += std::abs(m[n + i] * t[i]);
      }
      gd = std::max(gd, std::abs(g) / std::max(1.0, gs));
    }
  }
  out.push_back(report::numeric(model.name + ": surface points satisfy x0 + sum p_l x^l = 0", "constitutive-quadric",
                                quad < 1e-12, json{{"samples", samples}, {"max_relative_residual", quad}}));
  out.push_back(report::numeric(model.name + ": sum x^i dp_i annihilates the tangent frame", "gibbs-duhem", gd < 1e-12,
                                json{{"samples", samples}, {"max_relative_residual", gd}}));
  return out;
}

std::vector<Check> legendre_suite(int samples, unsigned long seed) {
  std::vector<Check> out;
  std::mt19937_64 rng(seed);
  Mat q_pos{{2, 1}, {1, 3}}, q_mixed{{1, 0.5}, {0.5, -2}}, q_hyp{{0, 1}, {1, 0}};
  std::vector<PotentialModel> models{van_der_waals(),           van_der_waals(1, 1, 1, 1.5, true), ideal_gas_energy(),
                                     quadratic(q_pos),          quadratic(q_mixed, {1}),           linear({1.5, -2}),
                                     homogeneous_demo(),        cubic(2)};
  models[4].name = "quadratic (I = {1})";

  // Legendre property and the metric block formula.
  for (const auto& m : models) {
    double theta = 0, gram = 0;
    for (int s = 0; s < samples; ++s) {
      Vec u = m.sample(rng);
      theta = std::max(theta, surface_point(m, u).theta_residual);
      gram = std::max(gram, induced_metric(m, u).gram_block_diff);
    }
    out.push_back(report::numeric(m.name + ": theta pulls back to zero on the surface", "legendre-surface",
                                  theta < 1e-12, json{{"samples", samples}, {"max_residual", theta}}));
    out.push_back(report::numeric(m.name + ": induced metric equals +2 phi_ii' (I), -2 phi_jj' (J), zero mixed",
                                  "induced-metric", gram < 1e-10, json{{"samples", samples}, {"max_abs_diff", gram}}));
  }

  // Frames, orthogonality and the second fundamental form.
  for (const auto& m : models) {
    if (m.catalog_id == "linear" || m.catalog_id == "homogeneous_demo") {
      bool raises = false;
      try {
        frames(m, m.sample(rng));
      } catch (const DegenerateSurfaceError&) {
        raises = true;
      }
      out.push_back(report::exact(m.name + ": frames raise degenerate-surface (singular Hessian)", "legendre-frames",
                                  raises));
      continue;
    }
    double vw = 0, yt = 0, yz = 0, tz = 0, det_min = 1e300, tang = 0, decomp = 0, sym = 0, xi = 0, norm = 0;
    int skipped = 0;
    for (int s = 0; s < samples; ++s) {
      Vec u = m.sample(rng);
      try {
        InducedGeometry ig = frames(m, u);
        SecondFundamentalForm ff = second_fundamental_form(m, u);
        vw = std::max(vw, ig.vw_table_diff);
        yt = std::max(yt, ig.frame_tangent_diff);
        yz = std::max(yz, ig.yz_max);
        tz = std::max(tz, ig.theta_z_max);
        det_min = std::min(det_min, std::abs(ig.span_det));
        tang = std::max(tang, ff.tangential_residual);
        decomp = std::max(decomp, ff.decomposition_diff);
        sym = std::max(sym, ff.symmetry_residual);
        for (const auto& r : ff.xi_coeffs)
          for (double v : r) xi = std::max(xi, std::abs(v));
        norm = std::max(norm, ff.norm);
      } catch (const DegenerateSurfaceError&) {
        ++skipped;
      }
    }
    out.push_back(report::numeric(m.name + ": G(V_k, W_l) = +delta on I, -delta on J, 0 mixed; G(V, V) = G(W, W) = 0",
                                  "legendre-frames", vw < 1e-10,
                                  json{{"max_abs_diff", vw}, {"samples", samples}, {"degenerate_points", skipped}}));
    out.push_back(report::numeric(m.name + ": Y_k = V_k + phi_kl W_l equals the pushforward of the coordinate field",
                                  "legendre-frames", yt < 1e-10, json{{"max_abs_diff", yt}}));
    out.push_back(report::numeric(m.name + ": G(Y_k, Z_l) = 0 and theta(Z_k) = 0", "legendre-frames",
                                  yz < 1e-10 && tz < 1e-10, json{{"max_G_YZ", yz}, {"max_theta_Z", tz}}));
    out.push_back(report::numeric(m.name + ": Y, Z and xi span the tangent space", "legendre-frames", det_min > 1e-8,
                                  json{{"min_abs_det", det_min}}));
    out.push_back(report::numeric(m.name + ": nabla_{Y_k} Y_l = phi^{sr} phi_lks Y_r / 2 + phi_lks Z_s",
                                  "second-fundamental-form", tang < 1e-9 && decomp < 1e-9 && xi < 1e-9,
                                  json{{"tangential_residual", tang}, {"normal_vs_formula", decomp}, {"max_xi_component", xi}}));
    out.push_back(report::numeric(m.name + ": II(Y_k, Y_l) = II(Y_l, Y_k)", "second-fundamental-form", sym < 1e-9,
                                  json{{"max_asymmetry", sym}}));
    if (m.catalog_id == "quadratic")
      out.push_back(report::numeric(m.name + ": II vanishes identically (totally geodesic)", "second-fundamental-form",
                                    norm < 1e-12, json{{"max_coefficient", norm}}));
  }

  // Jets against the quad precision finite-difference oracle.
  for (const auto& m : models) {
    double worst = 0;
    json failure;
    for (int s = 0; s < 20; ++s) {
      JetFdResult r = compare_jet_fd(m, m.sample(rng), 3, kRel, kAbsFloor);
      if (r.worst > worst) {
        worst = r.worst;
        failure = r.failure;
      }
    }
    out.push_back(report::numeric(m.name + ": jet partials through order 3 match finite differences", "autodiff",
                                  worst <= 1, json{{"points", 20}, {"worst_ratio_to_tolerance", worst}, {"failure", failure}}));
  }
  Vec vdw_base{1, 2};
  for (bool literal : {false, true}) {
    PotentialModel vdw = van_der_waals(1, 1, 1, 1.5, literal);
    JetFdResult r = compare_jet_fd(vdw, vdw_base, 3, 1e-7, 0);
    out.push_back(report::numeric(vdw.name + ": second and third partials at (S, V) = (1, 2) match finite differences to 1e-7",
                                  "autodiff", r.worst <= 1, json{{"worst_ratio_to_tolerance", r.worst}}));
  }
  {
    PotentialModel vdw = van_der_waals();
    SurfacePoint sp = surface_point(vdw, vdw_base);
    std::vector<size_t> dS{0};
    double T = autodiff::fd_oracle(vdw.quad_eval, vdw_base, dS).value;
    PotentialModel pg = vdw;
    pg.convention = Convention::positive_gradient;
    SurfacePoint spg = surface_point(pg, vdw_base);
    bool ok = autodiff::close(-sp.ambient[1], T, 1e-8, kAbsFloor) && autodiff::close(spg.ambient[1], T, 1e-8, kAbsFloor);
    out.push_back(report::numeric("van_der_waals at (1, 2): T = dU/dS equals -p_1 (canonical) and p_1 (positive gradient)",
                                  "legendre-surface", ok, json{{"T_fd", T}, {"p1_canonical", sp.ambient[1]}, {"p1_positive", spg.ambient[1]}}));
  }

  // Closed-form examples.
  {
    PotentialModel half = quadratic({{1, 0}, {0, 1}});
    Vec base{1, 2};
    SurfacePoint sp = surface_point(half, base);
    Vec expect{2.5, -1, -2, 1, 2};
    double diff = 0;
    for (size_t i = 0; i < expect.size(); ++i) diff = std::max(diff, std::abs(sp.ambient[i] - expect[i]));
    InducedGeometry ig = induced_metric(half, base);
    double g = 0;
    for (size_t k = 0; k < 2; ++k)
      for (size_t l = 0; l < 2; ++l) g = std::max(g, std::abs(ig.pullback_metric[k][l] - (k == l ? -2.0 : 0.0)));
    out.push_back(report::numeric("phi = |x|^2 / 2 at x = (1, 2): ambient (5/2, -1, -2, 1, 2), induced metric -2 I",
                                  "legendre-surface", diff < 1e-14 && g < 1e-14, json{{"ambient", sp.ambient}}));

    PotentialModel pg = quadratic({{1, 0}, {0, 1}}, {}, Convention::positive_gradient);
    InducedGeometry igp = induced_metric(pg, base);
    SurfacePoint spp = surface_point(pg, base);
    double lit = 0, theta_twice = 0;
    for (size_t k = 0; k < 2; ++k) {
      const Vec& t = spp.tangent[k];
      double theta = t[0] + spp.ambient[1] * t[3] + spp.ambient[2] * t[4];
      theta_twice = std::max(theta_twice, std::abs(theta - 2 * spp.phi.grad(k)));
      for (size_t l = 0; l < 2; ++l)
        lit = std::max(lit, std::abs(igp.pullback_metric[k][l] -
                                     (2 * spp.phi.hess(k, l) + 4 * spp.phi.grad(k) * spp.phi.grad(l))));
    }
    bool weinhold = igp.weinhold_hessian[0][0] == 1 && igp.weinhold_hessian[1][1] == 1 && igp.weinhold_hessian[0][1] == 0;
    out.push_back(report::numeric("graph x0 = phi, p = +grad phi: theta restricts to 2 dphi, so the induced metric is "
                                  "2 phi_ij + 4 phi_i phi_j and equals 2 phi_ij only on ker theta",
                                  "weinhold-factor", lit < 1e-12 && theta_twice < 1e-12 && igp.gram_block_diff < 1e-12 && weinhold,
                                  json{{"pullback", igp.pullback_metric}, {"weinhold_hessian", igp.weinhold_hessian}}));
    Vec origin{0, 0};
    InducedGeometry ig0 = induced_metric(pg, origin);
    out.push_back(report::numeric("at a critical point of phi the positive-gradient induced metric is 2 * Hessian",
                                  "weinhold-factor",
                                  ig0.pullback_metric[0][0] == 2 && ig0.pullback_metric[1][1] == 2 && ig0.pullback_metric[0][1] == 0,
                                  json{{"pullback", ig0.pullback_metric}}));

    PotentialModel mixed = quadratic(q_hyp, {1});
    InducedGeometry igm = induced_metric(mixed, Vec{0.7, -1.3});
    out.push_back(report::numeric("phi = p1 x2 (I = {1}): mixed block of the induced metric vanishes", "induced-metric",
                                  std::abs(igm.pullback_metric[0][1]) < 1e-14 && std::abs(igm.pullback_metric[1][0]) < 1e-14,
                                  json{{"pullback", igm.pullback_metric}}));

    SecondFundamentalForm ff = second_fundamental_form(cubic(1), Vec{1});
    out.push_back(report::numeric("phi = (x1)^3 at x1 = 1: phi_111 = 6", "second-fundamental-form",
                                  ff.coeffs[0][0][0] == 6 && std::abs(ff.normal_coeffs[0][0][0] - 6) < 1e-12,
                                  json{{"phi_111", ff.coeffs[0][0][0]}, {"normal_component", ff.normal_coeffs[0][0][0]}}));

    InducedGeometry igq = frames(half, base);
    // phi^{jj'} = delta here.
    double zdiff = 0, alt_inner = 0;
    for (size_t j = 0; j < 2; ++j) {
      Vec z(5, 0.0), alt(5, 0.0);
      z[1 + j] = -0.5;
      z[3 + j] = -0.5;
      z[0] = 0.5 * sp.ambient[1 + j];
      alt[1 + j] = 0.5;
      alt[3 + j] = -0.5;
      alt[0] = 0.5 * sp.ambient[1 + j];
      for (size_t c = 0; c < 5; ++c) zdiff = std::max(zdiff, std::abs(igq.Z[j][c] - z[c]));
      alt_inner = std::max(alt_inner, std::abs(ambient_inner(sp.ambient, igq.Y[j], alt)));
    }
    out.push_back(report::numeric("I empty: Z_j = -(P_j + phi^{jj'} X_j') / 2", "legendre-frames", zdiff < 1e-14,
                                  json{{"max_abs_diff", zdiff}}));
    out.push_back(report::numeric("I empty: (P_j - phi^{jj'} X_j') / 2 is not orthogonal to Y_j", "legendre-frames",
                                  std::abs(alt_inner - 1) < 1e-14, json{{"G_Y_alt", alt_inner}}));
  }

  // Polynomial jets are exact.
  {
    Jet3 c = cubic(2).jet(Vec{3, -2});
    bool exact = c.value() == 27 - 8 && c.grad(0) == 27 && c.grad(1) == 12 && c.hess(0, 0) == 18 && c.hess(1, 1) == -12 &&
                 c.hess(0, 1) == 0 && c.third(0, 0, 0) == 6 && c.third(1, 1, 1) == 6 && c.third(0, 0, 1) == 0;
    out.push_back(report::exact("jets of polynomial potentials are exact at integer points", "autodiff", exact));
  }

  // Homogeneity.
  for (const auto& m : {homogeneous_demo(), linear({1.5, -2}), van_der_waals()}) {
    auto h = homogeneity_check(m, samples, seed + 17);
    out.insert(out.end(), h.begin(), h.end());
  }

  // Stability.
  {
    Stability s1 = stability_classify(quadratic({{1, 0}, {0, 1}}), Vec{0.3, -0.4});
    Stability s2 = stability_classify(quadratic(q_hyp), Vec{0.3, -0.4});
    bool hyp = s2.definiteness == Definiteness::indefinite && std::abs(s2.eigenvalues[0] + 1) < 1e-14 &&
               std::abs(s2.eigenvalues[1] - 1) < 1e-14;
    out.push_back(report::numeric("|x|^2 / 2 is positive definite; x1 x2 is indefinite with eigenvalues -1, 1",
                                  "stability", s1.definiteness == Definiteness::positive_definite && hyp,
                                  json{{"eigenvalues", s2.eigenvalues}}));
    std::vector<std::pair<double, double>> wide{{-8.0, 4.0}, {1.05, 12.0}};
    for (bool literal : {false, true}) {
      PotentialModel vdw = van_der_waals(1, 1, 1, 1.5, literal);
      auto spin = locate_spinodal(vdw, wide);
      json w = nullptr;
      bool ok = spin.has_value();
      if (spin) {
        Stability st = stability_classify(vdw, *spin);
        Jet3 j = vdw.jet(*spin);
        double det = j.hess(0, 0) * j.hess(1, 1) - j.hess(0, 1) * j.hess(1, 0);
        ok = st.definiteness == Definiteness::indefinite && det < 0;
        w = json{{"point", *spin}, {"eigenvalues", st.eigenvalues}, {"det_hessian", det}};
      }
      out.push_back(report::numeric(vdw.name + ": a grid scan finds a spinodal point with indefinite Hessian",
                                    "stability", ok, w));
    }
  }
  return out;
}

}  // namespace tpsgeo::legendre
