#include "tpsgeo/legendre/legendre.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "tpsgeo/errors.hpp"

namespace tpsgeo::legendre {

using nlohmann::json;

namespace {

size_t dim_of(std::span<const double> m) {
  if (m.size() % 2 == 0) throw InputError("ambient point must have odd length 2n+1");
  return m.size();
}

Eigen::MatrixXd to_eigen(const Mat& a) {
  Eigen::MatrixXd e(a.size(), a.empty() ? 0 : a[0].size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a[i][j];
  return e;
}

Mat square(size_t n) { return Mat(n, Vec(n, 0.0)); }

double max_abs(const Mat& a) {
  double m = 0;
  for (const auto& r : a)
    for (double v : r) m = std::max(m, std::abs(v));
  return m;
}

double theta_of(std::span<const double> m, const Vec& v) {
  size_t n = (m.size() - 1) / 2;
  double t = v[0];
  for (size_t k = 1; k <= n; ++k) t += m[k] * v[n + k];
  return t;
}

double theta_scale(std::span<const double> m, const Vec& v) {
  size_t n = (m.size() - 1) / 2;
  double s = std::abs(v[0]);
  for (size_t k = 1; k <= n; ++k) s += std::abs(m[k] * v[n + k]);
  return std::max(s, 1.0);
}

void require_canonical(const PotentialModel& model) {
  if (model.convention != Convention::canonical)
    throw DomainError("frames and the second fundamental form use the canonical parameterization");
}

// Normalized determinant of the induced metric.
double normalized_det(const Mat& g) {
  double s = max_abs(g);
  if (s == 0) return 0;
  return (to_eigen(g) / s).determinant();
}

}  // namespace

SurfacePoint surface_point(const PotentialModel& model, std::span<const double> base) {
  Jet3 f = model.jet(base);
  size_t n = static_cast<size_t>(model.n), d = 2 * n + 1;
  auto in_I = [&](size_t k) { return model.in_I(static_cast<int>(k + 1)); };
  SurfacePoint sp;
  sp.base.assign(base.begin(), base.end());
  sp.phi = f;
  sp.ambient.assign(d, 0.0);
  sp.tangent.assign(n, Vec(d, 0.0));
  sp.second.assign(n, std::vector<Vec>(n, Vec(d, 0.0)));
  Vec& m = sp.ambient;
  if (model.convention == Convention::positive_gradient) {
    if (!model.I.empty()) throw InputError("positive_gradient convention needs an empty I");
    m[0] = f.value();
    for (size_t k = 0; k < n; ++k) {
      m[1 + k] = f.grad(k);
      m[1 + n + k] = base[k];
    }
    for (size_t a = 0; a < n; ++a) {
      sp.tangent[a][0] = f.grad(a);
      for (size_t k = 0; k < n; ++k) sp.tangent[a][1 + k] = f.hess(k, a);
      sp.tangent[a][1 + n + a] = 1.0;
      for (size_t b = 0; b < n; ++b) {
        sp.second[a][b][0] = f.hess(a, b);
        for (size_t k = 0; k < n; ++k) sp.second[a][b][1 + k] = f.third(k, a, b);
      }
    }
  } else {
    m[0] = f.value();
    for (size_t k = 0; k < n; ++k) {
      if (in_I(k)) {
        m[0] -= base[k] * f.grad(k);
        m[1 + k] = base[k];
        m[1 + n + k] = f.grad(k);
      } else {
        m[1 + k] = -f.grad(k);
        m[1 + n + k] = base[k];
      }
    }
    for (size_t a = 0; a < n; ++a) {
      Vec& t = sp.tangent[a];
      t[0] = in_I(a) ? 0.0 : f.grad(a);
      for (size_t i = 0; i < n; ++i)
        if (in_I(i)) t[0] -= base[i] * f.hess(i, a);
      for (size_t k = 0; k < n; ++k) {
        if (in_I(k)) {
          t[1 + k] = k == a ? 1.0 : 0.0;
          t[1 + n + k] = f.hess(k, a);
        } else {
          t[1 + k] = -f.hess(k, a);
          t[1 + n + k] = k == a ? 1.0 : 0.0;
        }
      }
      for (size_t b = 0; b < n; ++b) {
        Vec& s = sp.second[a][b];
        s[0] = (in_I(a) ? 0.0 : f.hess(a, b)) - (in_I(b) ? f.hess(b, a) : 0.0);
        for (size_t i = 0; i < n; ++i)
          if (in_I(i)) s[0] -= base[i] * f.third(i, a, b);
        for (size_t k = 0; k < n; ++k) {
          if (in_I(k)) s[1 + n + k] = f.third(k, a, b);
          else s[1 + k] = -f.third(k, a, b);
        }
      }
    }
  }
  double res = 0;
  for (const auto& t : sp.tangent) res = std::max(res, std::abs(theta_of(m, t)) / theta_scale(m, t));
  sp.theta_residual = res;
  return sp;
}

Mat ambient_metric(std::span<const double> m) {
  size_t d = dim_of(m), n = (d - 1) / 2;
  Mat g = square(d);
  g[0][0] = 1;
  for (size_t i = 1; i <= n; ++i) {
    g[0][n + i] = g[n + i][0] = m[i];
    g[i][n + i] = g[n + i][i] = 1;
    for (size_t j = 1; j <= n; ++j) g[n + i][n + j] = m[i] * m[j];
  }
  return g;
}

Mat ambient_metric_inverse(std::span<const double> m) {
  size_t d = dim_of(m), n = (d - 1) / 2;
  Mat g = square(d);
  g[0][0] = 1;
  for (size_t i = 1; i <= n; ++i) {
    g[0][i] = g[i][0] = -m[i];
    g[i][n + i] = g[n + i][i] = 1;
  }
  return g;
}

std::vector<Mat> ambient_christoffel(std::span<const double> m) {
  size_t d = dim_of(m), n = (d - 1) / 2;
  // dG[e](b, c) = d_e G_bc; only the p directions are nonzero.
  std::vector<Mat> dg(d, square(d));
  for (size_t k = 1; k <= n; ++k) {
    dg[k][0][n + k] = dg[k][n + k][0] = 1;
    for (size_t j = 1; j <= n; ++j) {
      dg[k][n + k][n + j] += m[j];
      dg[k][n + j][n + k] += m[j];
    }
  }
  Mat inv = ambient_metric_inverse(m);
  std::vector<Mat> gamma(d, square(d));
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b)
      for (size_t c = 0; c < d; ++c) {
        double s = 0;
        for (size_t e = 0; e < d; ++e)
          if (inv[a][e] != 0) s += inv[a][e] * (dg[b][e][c] + dg[c][e][b] - dg[e][b][c]);
        gamma[a][b][c] = 0.5 * s;
      }
  return gamma;
}

double ambient_inner(std::span<const double> m, const Vec& u, const Vec& v) {
  Mat g = ambient_metric(m);
  double s = 0;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) s += u[i] * g[i][j] * v[j];
  return s;
}

InducedGeometry induced_metric(const PotentialModel& model, std::span<const double> base) {
  SurfacePoint sp = surface_point(model, base);
  size_t n = static_cast<size_t>(model.n);
  InducedGeometry ig;
  ig.pullback_metric = square(n);
  ig.block_metric = square(n);
  ig.weinhold_hessian = square(n);
  ig.theta_squared = square(n);
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) {
      ig.pullback_metric[k][l] = ambient_inner(sp.ambient, sp.tangent[k], sp.tangent[l]);
      ig.weinhold_hessian[k][l] = sp.phi.hess(k, l);
      ig.theta_squared[k][l] = theta_of(sp.ambient, sp.tangent[k]) * theta_of(sp.ambient, sp.tangent[l]);
      bool ik = model.in_I(static_cast<int>(k + 1)), il = model.in_I(static_cast<int>(l + 1));
      double block = 0;
      if (model.convention == Convention::positive_gradient) block = 2 * sp.phi.hess(k, l);
      else if (ik && il) block = 2 * sp.phi.hess(k, l);
      else if (!ik && !il) block = -2 * sp.phi.hess(k, l);
      ig.block_metric[k][l] = block;
    }
  double diff = 0;
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) {
      double lhs = ig.pullback_metric[k][l];
      // The positive-gradient graph is not Legendre; compare after removing theta^2.
      if (model.convention == Convention::positive_gradient) lhs -= ig.theta_squared[k][l];
      diff = std::max(diff, std::abs(lhs - ig.block_metric[k][l]));
    }
  ig.gram_block_diff = diff;
  return ig;
}

InducedGeometry frames(const PotentialModel& model, std::span<const double> base) {
  require_canonical(model);
  InducedGeometry ig = induced_metric(model, base);
  SurfacePoint sp = surface_point(model, base);
  size_t n = static_cast<size_t>(model.n), d = 2 * n + 1;
  const Vec& m = sp.ambient;
  if (std::abs(normalized_det(ig.pullback_metric)) <= 1e-10)
    throw DegenerateSurfaceError("degenerate surface metric at this point of " + model.name);
  auto in_I = [&](size_t k) { return model.in_I(static_cast<int>(k + 1)); };

  ig.phi_inverse = square(n);
  for (bool block_I : {true, false}) {
    std::vector<size_t> ids;
    for (size_t k = 0; k < n; ++k)
      if (in_I(k) == block_I) ids.push_back(k);
    if (ids.empty()) continue;
    Eigen::MatrixXd blk(ids.size(), ids.size());
    for (size_t a = 0; a < ids.size(); ++a)
      for (size_t b = 0; b < ids.size(); ++b)
        blk(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = sp.phi.hess(ids[a], ids[b]);
    Eigen::MatrixXd inv = blk.inverse();
    for (size_t a = 0; a < ids.size(); ++a)
      for (size_t b = 0; b < ids.size(); ++b)
        ig.phi_inverse[ids[a]][ids[b]] = inv(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
  }

  auto P = [&](size_t k) {
    Vec v(d, 0.0);
    v[1 + k] = 1;
    return v;
  };
  auto X = [&](size_t k) {
    Vec v(d, 0.0);
    v[1 + n + k] = 1;
    v[0] = -m[1 + k];
    return v;
  };
  for (size_t k = 0; k < n; ++k) {
    ig.V.push_back(in_I(k) ? P(k) : X(k));
    Vec w = in_I(k) ? X(k) : P(k);
    if (!in_I(k))
      for (auto& c : w) c = -c;
    ig.W.push_back(w);
  }
  double vw = 0;
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) {
      double expect = k == l ? (in_I(k) ? 1.0 : -1.0) : 0.0;
      vw = std::max(vw, std::abs(ambient_inner(m, ig.V[k], ig.W[l]) - expect));
      vw = std::max(vw, std::abs(ambient_inner(m, ig.V[k], ig.V[l])));
      vw = std::max(vw, std::abs(ambient_inner(m, ig.W[k], ig.W[l])));
    }
  ig.vw_table_diff = vw;

  double yt = 0;
  for (size_t k = 0; k < n; ++k) {
    Vec y = ig.V[k];
    for (size_t l = 0; l < n; ++l)
      for (size_t c = 0; c < d; ++c) y[c] += sp.phi.hess(k, l) * ig.W[l][c];
    for (size_t c = 0; c < d; ++c) yt = std::max(yt, std::abs(y[c] - sp.tangent[k][c]));
    ig.Y.push_back(y);
  }
  ig.frame_tangent_diff = yt;
  for (size_t k = 0; k < n; ++k) {
    Vec z = ig.W[k];
    for (size_t l = 0; l < n; ++l)
      for (size_t c = 0; c < d; ++c) z[c] -= 0.5 * ig.phi_inverse[k][l] * ig.Y[l][c];
    ig.Z.push_back(z);
  }
  ig.zz = square(n);
  double yz = 0, tz = 0;
  for (size_t k = 0; k < n; ++k) {
    tz = std::max(tz, std::abs(theta_of(m, ig.Z[k])));
    for (size_t l = 0; l < n; ++l) {
      yz = std::max(yz, std::abs(ambient_inner(m, ig.Y[k], ig.Z[l])));
      ig.zz[k][l] = ambient_inner(m, ig.Z[k], ig.Z[l]);
    }
  }
  ig.yz_max = yz;
  ig.theta_z_max = tz;
  Eigen::MatrixXd span(d, d);
  for (size_t k = 0; k < n; ++k)
    for (size_t c = 0; c < d; ++c) {
      span(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(k)) = ig.Y[k][c];
      span(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(n + k)) = ig.Z[k][c];
    }
  for (size_t c = 0; c < d; ++c) span(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(2 * n)) = c == 0 ? 1 : 0;
  ig.span_det = span.determinant();
  return ig;
}

SecondFundamentalForm second_fundamental_form(const PotentialModel& model, std::span<const double> base) {
  InducedGeometry ig = frames(model, base);
  SurfacePoint sp = surface_point(model, base);
  size_t n = static_cast<size_t>(model.n), d = 2 * n + 1;
  std::vector<Mat> gamma = ambient_christoffel(sp.ambient);
  SecondFundamentalForm ff;
  ff.coeffs.assign(n, square(n));
  ff.normal_coeffs.assign(n, square(n));
  ff.xi_coeffs = square(n);

  Eigen::MatrixXd basis(d, d);
  for (size_t k = 0; k < n; ++k)
    for (size_t c = 0; c < d; ++c) {
      basis(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(k)) = ig.Y[k][c];
      basis(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(n + k)) = ig.Z[k][c];
    }
  for (size_t c = 0; c < d; ++c) basis(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(2 * n)) = c == 0 ? 1 : 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);

  double tang = 0, decomp = 0, norm = 0;
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l) {
      for (size_t s = 0; s < n; ++s) {
        ff.coeffs[k][l][s] = sp.phi.third(l, k, s);
        norm = std::max(norm, std::abs(ff.coeffs[k][l][s]));
      }
      // nabla_{Y_k} Y_l = d_k Y_l + Gamma(Y_k, Y_l)
      Vec nab = sp.second[k][l];
      for (size_t a = 0; a < d; ++a)
        for (size_t b = 0; b < d; ++b)
          for (size_t c = 0; c < d; ++c)
            if (gamma[a][b][c] != 0) nab[a] += gamma[a][b][c] * sp.tangent[k][b] * sp.tangent[l][c];
      double scale = 1;
      for (double v : nab) scale = std::max(scale, std::abs(v));
      Vec res = nab;
      for (size_t s = 0; s < n; ++s)
        for (size_t c = 0; c < d; ++c) {
          double half_y = 0;
          for (size_t r = 0; r < n; ++r) half_y += 0.5 * ig.phi_inverse[s][r] * ff.coeffs[k][l][s] * ig.Y[r][c];
          res[c] -= half_y + ff.coeffs[k][l][s] * ig.Z[s][c];
        }
      for (double v : res) tang = std::max(tang, std::abs(v) / scale);

      Eigen::VectorXd rhs(d);
      for (size_t c = 0; c < d; ++c) rhs(static_cast<Eigen::Index>(c)) = nab[c];
      Eigen::VectorXd coef = lu.solve(rhs);
      for (size_t s = 0; s < n; ++s) {
        ff.normal_coeffs[k][l][s] = coef(static_cast<Eigen::Index>(n + s));
        decomp = std::max(decomp, std::abs(ff.normal_coeffs[k][l][s] - ff.coeffs[k][l][s]) / scale);
      }
      ff.xi_coeffs[k][l] = coef(static_cast<Eigen::Index>(2 * n));
    }
  double sym = 0;
  for (size_t k = 0; k < n; ++k)
    for (size_t l = 0; l < n; ++l)
      for (size_t s = 0; s < n; ++s)
        sym = std::max(sym, std::abs(ff.normal_coeffs[k][l][s] - ff.normal_coeffs[l][k][s]));
  ff.tangential_residual = tang;
  ff.decomposition_diff = decomp;
  ff.symmetry_residual = sym;
  ff.norm = norm;
  return ff;
}

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::positive_definite: return "positive_definite";
    case Definiteness::negative_definite: return "negative_definite";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::marginal: return "marginal";
  }
  return "marginal";
}

Stability classify_matrix(const Mat& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(h));
  Stability s;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) s.eigenvalues.push_back(es.eigenvalues()(i));
  double scale = 0;
  for (double v : s.eigenvalues) scale = std::max(scale, std::abs(v));
  s.tolerance = 1e-9 * scale;
  bool pos = false, neg = false, zero = false;
  for (double v : s.eigenvalues) {
    if (std::abs(v) <= s.tolerance) zero = true;
    else if (v > 0) pos = true;
    else neg = true;
  }
  if (zero) s.definiteness = Definiteness::marginal;
  else if (pos && neg) s.definiteness = Definiteness::indefinite;
  else if (pos) s.definiteness = Definiteness::positive_definite;
  else s.definiteness = Definiteness::negative_definite;
  return s;
}

Stability stability_classify(const PotentialModel& model, std::span<const double> base) {
  return classify_matrix(induced_metric(model, base).weinhold_hessian);
}

std::optional<Vec> locate_spinodal(const PotentialModel& model, const std::vector<std::pair<double, double>>& box,
                                   int grid) {
  if (box.size() != static_cast<size_t>(model.n)) throw InputError("scan box has the wrong dimension");
  if (grid < 2) throw InputError("scan grid needs at least 2 points per axis");
  size_t n = box.size();
  std::vector<int> idx(n, 0);
  while (true) {
    Vec u(n);
    for (size_t k = 0; k < n; ++k)
      u[k] = box[k].first + (box[k].second - box[k].first) * idx[k] / (grid - 1);
    if (model.in_domain(u) && stability_classify(model, u).definiteness == Definiteness::indefinite) return u;
    size_t k = 0;
    while (k < n && ++idx[k] == grid) idx[k++] = 0;
    if (k == n) return std::nullopt;
  }
}

json analyze(const PotentialModel& model, std::span<const double> base) {
  SurfacePoint sp = surface_point(model, base);
  InducedGeometry ig = induced_metric(model, base);
  Stability st = classify_matrix(ig.weinhold_hessian);
  size_t n = static_cast<size_t>(model.n);
  double gd = 0, gd_scale = 1;
  for (const auto& t : sp.tangent) {
    double s = 0;
    for (size_t i = 0; i < n; ++i) {
      s += sp.ambient[1 + n + i] * t[1 + i];
      gd_scale = std::max(gd_scale, std::abs(sp.ambient[1 + n + i] * t[1 + i]));
    }
    gd = std::max(gd, std::abs(s));
  }
  double euler = sp.ambient[0], euler_scale = std::max(1.0, std::abs(sp.ambient[0]));
  for (size_t i = 0; i < n; ++i) {
    euler += sp.ambient[1 + i] * sp.ambient[1 + n + i];
    euler_scale = std::max(euler_scale, std::abs(sp.ambient[1 + i] * sp.ambient[1 + n + i]));
  }
  json ii = nullptr, ii_symmetry = nullptr, ii_status = "not computed for this convention";
  if (model.convention == Convention::canonical) {
    try {
      SecondFundamentalForm ff = second_fundamental_form(model, base);
      ii = ff.norm;
      ii_symmetry = ff.symmetry_residual;
      ii_status = "ok";
    } catch (const DegenerateSurfaceError&) {
      ii_status = "degenerate surface metric";
    }
  }
  return json{{"model", model.name},
              {"convention", convention_name(model.convention)},
              {"legendre", model.convention == Convention::canonical},
              {"variables", model.variable_names()},
              {"point", sp.base},
              {"ambient", sp.ambient},
              {"theta_residual", sp.theta_residual},
              {"metric", ig.pullback_metric},
              {"weinhold_hessian", ig.weinhold_hessian},
              {"gram_block_diff", ig.gram_block_diff},
              {"eigenvalues", st.eigenvalues},
              {"classification", definiteness_name(st.definiteness)},
              {"II_norm", ii},
              {"II_symmetry", ii_symmetry},
              {"II_status", ii_status},
              {"gibbs_duhem_residual", gd / gd_scale},
              {"euler_residual", std::abs(euler) / euler_scale}};
}

}  // namespace tpsgeo::legendre
