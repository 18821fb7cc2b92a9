#include "tpsgeo/app/commands.hpp"

#include <algorithm>
#include <chrono>

#include "tpsgeo/diffgeo/killing.hpp"
#include "tpsgeo/errors.hpp"
#include "tpsgeo/exactalg/json_io.hpp"
#include "tpsgeo/heisenberg/heisenberg.hpp"
#include "tpsgeo/legendre/legendre.hpp"
#include "tpsgeo/sympl/sympl.hpp"
#include "tpsgeo/tps/tps.hpp"

namespace tpsgeo::app {

using nlohmann::json;
using report::Check;
using report::Envelope;
using report::Suite;

namespace {

using Clock = std::chrono::steady_clock;

Envelope finish(std::string command, json inputs, const std::vector<Suite>& suites) {
  Envelope e;
  e.command = std::move(command);
  e.inputs = std::move(inputs);
  e.threads = report::thread_limit();
  auto t0 = Clock::now();
  e.results = report::run_suites(suites, e.threads);
  e.wall_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return e;
}

void check_n(Space space, int n) {
  if (n < 1 || n > max_n(space))
    throw InputError(std::string("n must lie in 1..") + std::to_string(max_n(space)) + " for space " +
                     space_name(space));
}

diffgeo::MetricSpec space_metric(Space space, int n) {
  return space == Space::tps ? tps::mrugala_metric(n) : sympl::build_sympl(n).metric;
}

int algebra_dim(Space space, int n) { return space == Space::tps ? (n + 1) * (n + 1) : (n + 2) * (n + 2) - 1; }

std::vector<diffgeo::VectorField> catalog_fields(Space space, int n) {
  std::vector<diffgeo::VectorField> out;
  if (space == Space::tps)
    for (auto& e : tps::killing_catalog_tps(n)) out.push_back(e.field);
  else
    for (auto& e : sympl::killing_catalog_sympl(n)) out.push_back(e.field);
  return out;
}

std::vector<Check> killing_solver_checks(Space space, int n, int degree) {
  std::vector<diffgeo::VectorField> basis = diffgeo::killing_solve(space_metric(space, n), degree);
  int expected = algebra_dim(space, n);
  json fields = json::array();
  for (const auto& f : basis) fields.push_back(f.str());
  std::string ref = space == Space::tps ? "killing-algebra" : "killing-algebra-symplectization";
  std::vector<Check> out;
  out.push_back(report::exact("polynomial Killing fields of degree <= " + std::to_string(degree) + " span a space of dimension " +
                                  std::to_string(expected),
                              ref, static_cast<int>(basis.size()) == expected,
                              json{{"dimension", basis.size()}, {"expected", expected}, {"degree", degree}, {"basis", fields}}));
  out.push_back(report::exact("solver basis and catalog span the same space", ref,
                              diffgeo::same_span(basis, catalog_fields(space, n))));
  json constants = json::array();
  bool closed = true;
  std::string error;
  try {
    diffgeo::StructureConstants sc = diffgeo::structure_constants(basis);
    for (size_t i = 0; i < sc.dim; ++i)
      for (size_t j = i + 1; j < sc.dim; ++j)
        for (size_t k = 0; k < sc.dim; ++k)
          if (!sc(i, j, k).is_zero()) constants.push_back({i, j, k, sc(i, j, k).str()});
  } catch (const NotClosedError& e) {
    closed = false;
    error = e.what();
  }
  json w{{"nonzero_constants", constants}};
  if (!closed) w["error"] = error;
  out.push_back(report::exact("solver basis closes under the bracket", ref, closed, w));
  return out;
}

}  // namespace

Space space_from_name(const std::string& s) {
  if (s == "tps") return Space::tps;
  if (s == "sympl") return Space::sympl;
  throw InputError("unknown space '" + s + "' (expected tps or sympl)");
}

const char* space_name(Space s) { return s == Space::tps ? "tps" : "sympl"; }

int max_n(Space s) { return s == Space::tps ? 4 : 3; }

Envelope curvature(Space space, int n) {
  check_n(space, n);
  std::vector<Suite> suites;
  if (space == Space::tps) {
    suites = {{"tps-curvature", [n] { return tps::curvature_suite_tps(n); }},
              {"tps-identities", [n] { return tps::identity_suite_tps(n); }},
              {"tps-sectional", [n] { return tps::sectional_suite_tps(n, 100, 1); }}};
  } else {
    suites = {{"sympl-curvature", [n] { return sympl::curvature_suite_sympl(n); }}};
  }
  return finish("curvature", json{{"space", space_name(space)}, {"n", n}}, suites);
}

Envelope killing(Space space, int n, int degree) {
  check_n(space, n);
  if (degree < 1 || degree > kMaxKillingDegree)
    throw InputError("degree must lie in 1.." + std::to_string(kMaxKillingDegree));
  std::vector<Suite> suites{{std::string(space_name(space)) + "-killing-solver",
                             [=] { return killing_solver_checks(space, n, degree); }}};
  if (space == Space::tps)
    suites.push_back({"tps-killing-catalog", [n] { return tps::verify_killing_catalog_tps(n); }});
  else
    suites.push_back({"sympl-killing-catalog", [n] { return sympl::verify_killing_catalog_sympl(n); }});
  return finish("killing", json{{"space", space_name(space)}, {"n", n}, {"degree", degree}}, suites);
}

std::vector<std::vector<double>> expand_points(const json& points, int n) {
  if (!points.is_object()) throw InputError("points must be a JSON object");
  std::vector<std::vector<double>> out;
  try {
    if (points.contains("points")) {
      for (const auto& p : points.at("points")) {
        std::vector<double> v = p.get<std::vector<double>>();
        if (static_cast<int>(v.size()) != n)
          throw InputError("point " + p.dump() + " needs " + std::to_string(n) + " coordinates");
        out.push_back(v);
      }
    } else if (points.contains("grid")) {
      const json& g = points.at("grid");
      auto ranges = g.at("ranges").get<std::vector<std::pair<double, double>>>();
      auto counts = g.at("counts").get<std::vector<int>>();
      if (static_cast<int>(ranges.size()) != n || static_cast<int>(counts.size()) != n)
        throw InputError("grid needs one range and one count per variable");
      size_t total = 1;
      for (int c : counts) {
        if (c < 1 || c > 10000) throw InputError("grid counts must lie in 1..10000");
        total *= static_cast<size_t>(c);
      }
      if (total > 1000000) throw InputError("grid has more than 10^6 points");
      std::vector<int> idx(static_cast<size_t>(n), 0);
      for (size_t t = 0; t < total; ++t) {
        std::vector<double> v(static_cast<size_t>(n));
        for (size_t k = 0; k < v.size(); ++k) {
          auto [lo, hi] = ranges[k];
          v[k] = counts[k] == 1 ? lo : lo + (hi - lo) * idx[k] / (counts[k] - 1);
        }
        out.push_back(v);
        for (int k = n - 1; k >= 0; --k) {
          if (++idx[static_cast<size_t>(k)] < counts[static_cast<size_t>(k)]) break;
          idx[static_cast<size_t>(k)] = 0;
        }
      }
    } else {
      throw InputError("points need a 'points' list or a 'grid' object");
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed points: ") + e.what());
  }
  if (out.empty()) throw InputError("no evaluation points");
  return out;
}

namespace {

Check point_record(const legendre::PotentialModel& model, const std::vector<double>& u, size_t index) {
  std::string claim = "point " + std::to_string(index) + ": residual checks";
  json w;
  try {
    w = legendre::analyze(model, u);
  } catch (const Error& e) {
    return report::numeric(claim, "legendre-analysis", false, json{{"point", u}, {"error", e.what()}});
  }
  json violations = json::array();
  auto require = [&](bool ok, const char* what) {
    if (!ok) violations.push_back(what);
  };
  double metric_scale = 1;
  for (const auto& row : w.at("metric"))
    for (const auto& x : row) metric_scale = std::max(metric_scale, std::abs(x.get<double>()));
  if (model.convention == legendre::Convention::canonical)
    require(w.at("theta_residual").get<double>() < 1e-12, "theta_residual < 1e-12");
  require(w.at("gram_block_diff").get<double>() < 1e-10 * metric_scale, "gram_block_diff < 1e-10 (relative)");
  if (!w.at("II_symmetry").is_null()) require(w.at("II_symmetry").get<double>() < 1e-9, "II_symmetry < 1e-9");
  if (model.catalog_id == "quadratic" && !w.at("II_norm").is_null())
    require(w.at("II_norm").get<double>() < 1e-12, "II_norm < 1e-12 for a quadratic potential");
  if (model.homogeneous_degree && *model.homogeneous_degree == 1) {
    require(w.at("euler_residual").get<double>() < 1e-12, "euler_residual < 1e-12");
    require(w.at("gibbs_duhem_residual").get<double>() < 1e-12, "gibbs_duhem_residual < 1e-12");
  }
  w["violations"] = violations;
  return report::numeric(claim, "legendre-analysis", violations.empty(), w);
}

}  // namespace

Envelope potential(const json& model_json, const json& points) {
  legendre::PotentialModel model = legendre::model_from_json(model_json);
  std::vector<std::vector<double>> pts = expand_points(points, model.n);
  std::vector<Suite> suites;
  for (size_t i = 0; i < pts.size(); ++i)
    suites.push_back({"potential", [&model, &pts, i] { return std::vector<Check>{point_record(model, pts[i], i)}; }});
  Envelope e = finish("potential", json{{"model", legendre::model_to_json(model)}, {"points", pts}}, suites);

  json counts = json::object();
  for (const auto& r : e.results)
    if (r.check.witness.contains("classification")) {
      std::string c = r.check.witness.at("classification").get<std::string>();
      counts[c] = counts.value(c, 0) + 1;
    }
  e.results.push_back({"potential", report::exact("classification counts over the evaluated points", "plumbing", true,
                                                  json{{"counts", counts}, {"convention", convention_name(model.convention)}})});
  return e;
}

std::vector<std::string> verify_modules() { return {"tps", "sympl", "heisenberg", "legendre"}; }

Envelope verify_all(const VerifyOptions& o) {
  if (o.n_max < 1 || o.n_max > 4) throw InputError("n-max must lie in 1..4");
  if (o.samples < 1 || o.samples > 100000) throw InputError("samples must lie in 1..100000");
  std::vector<std::string> modules = verify_modules();
  for (const auto& m : o.only)
    if (std::find(modules.begin(), modules.end(), m) == modules.end())
      throw InputError("unknown module '" + m + "' for --only");
  auto wanted = [&](const std::string& m) {
    return o.only.empty() || std::find(o.only.begin(), o.only.end(), m) != o.only.end();
  };

  std::vector<Suite> suites;
  auto add = [&](std::string name, int n, std::function<std::vector<Check>()> f) {
    suites.push_back({name + " n=" + std::to_string(n), std::move(f)});
  };
  int samples = o.samples;
  unsigned long seed = o.seed;
  bool tamper = o.tamper;
  if (wanted("tps"))
    for (int n = 1; n <= std::min(o.n_max, max_n(Space::tps)); ++n) {
      add("tps-contact", n, [n] { return tps::verify_contact_structure(n); });
      add("tps-compatibility", n, [n] { return tps::compatibility_check(n); });
      add("tps-curvature", n, [n, tamper] { return tps::curvature_suite_tps(n, tamper); });
      add("tps-identities", n, [n] { return tps::identity_suite_tps(n); });
      add("tps-sectional", n, [n, samples, seed] { return tps::sectional_suite_tps(n, samples, seed + n); });
      add("tps-killing-catalog", n, [n] { return tps::verify_killing_catalog_tps(n); });
      if (n <= 3) add("tps-killing-solver", n, [n] { return killing_solver_checks(Space::tps, n, 2); });
      add("tps-constitutive", n, [n] { return tps::verify_constitutive_hypersurface(n); });
    }
  if (wanted("tps") && o.n_max >= 1)
    suites.push_back({"tps-killing-solver degree 3 n=1", [] {
                        auto b = diffgeo::killing_solve(tps::mrugala_metric(1), 3);
                        return std::vector<Check>{report::exact("degree 3 adds no Killing fields for n = 1",
                                                                "killing-algebra", b.size() == 4,
                                                                json{{"dimension", b.size()}})};
                      }});
  if (wanted("sympl")) {
    for (int n = 1; n <= std::min(o.n_max, max_n(Space::sympl)); ++n) {
      add("sympl-basics", n, [n] { return sympl::verify_sympl_basics(n); });
      add("sympl-embedding", n, [n] { return sympl::embed_and_pullback(n); });
      add("sympl-frame", n, [n] { return sympl::verify_canonical_frame_sympl(n); });
      add("sympl-curvature", n, [n] { return sympl::curvature_suite_sympl(n); });
      add("sympl-nijenhuis", n, [n] { return sympl::nijenhuis_check(n); });
      add("sympl-rotation", n, [n] { return sympl::hyperbolic_rotation_check(n); });
      add("sympl-projectivization", n, [n, samples, seed] { return sympl::projectivization_check(n, samples, seed + n); });
      add("sympl-cells", n, [n] { return sympl::verify_cells(n); });
      add("sympl-quadric", n, [n] { return sympl::verify_quadric(n); });
      add("sympl-affine", n, [n] { return sympl::affine_symplecto(n); });
      add("sympl-killing-catalog", n, [n] { return sympl::verify_killing_catalog_sympl(n); });
      if (n <= 2) add("sympl-killing-solver", n, [n] { return killing_solver_checks(Space::sympl, n, 2); });
    }
    suites.push_back({"sympl-ideal-gas", [samples, seed] { return sympl::ideal_gas_check(exactalg::Rational(1), samples, seed); }});
  }
  if (wanted("heisenberg"))
    for (int n = 1; n <= std::min(o.n_max, 3); ++n) {
      add("heisenberg-group", n, [n, samples, seed] { return heisenberg::group_checks(n, samples, seed + n); });
      add("heisenberg-fields", n, [n] { return heisenberg::invariant_fields_and_checks(n); });
    }
  if (wanted("legendre"))
    suites.push_back({"legendre", [samples, seed] { return legendre::legendre_suite(samples, seed); }});

  json inputs{{"n_max", o.n_max}, {"only", o.only}, {"tamper", o.tamper}, {"samples", o.samples}, {"seed", o.seed}};
  return finish("verify-all", inputs, suites);
}

}  // namespace tpsgeo::app
