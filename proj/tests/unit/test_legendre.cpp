#include <doctest.h>

#include "tpsgeo/errors.hpp"
#include "tpsgeo/legendre/legendre.hpp"
#include "tpsgeo/tps/tps.hpp"

using namespace tpsgeo;
using namespace tpsgeo::legendre;
using nlohmann::json;

namespace {

void require_all(const std::vector<report::Check>& checks) {
  REQUIRE(!checks.empty());
  for (const auto& c : checks) {
    INFO(c.claim << " :: " << c.witness.dump());
    CHECK(c.passed());
  }
}

}  // namespace

TEST_CASE("legendre suite") {
  require_all(legendre_suite(100, 7));
  require_all(legendre_suite(40, 12345));
}

TEST_CASE("surface points") {
  PotentialModel half = quadratic({{1, 0}, {0, 1}});
  SurfacePoint sp = surface_point(half, Vec{1, 2});
  CHECK(sp.ambient == Vec{2.5, -1, -2, 1, 2});
  CHECK(sp.theta_residual < 1e-15);
  InducedGeometry ig = induced_metric(half, Vec{1, 2});
  CHECK(ig.pullback_metric == Mat{{-2, 0}, {0, -2}});

  PotentialModel vdw = van_der_waals();
  CHECK_THROWS_AS(surface_point(vdw, Vec{0.0, 0.5}), DomainError);
  CHECK_THROWS_AS(surface_point(vdw, Vec{0.0}), InputError);
  CHECK_THROWS_AS(frames(linear({1, 2}), Vec{0.3, 0.4}), DegenerateSurfaceError);
}

TEST_CASE("ambient christoffel symbols agree with the exact table") {
  int n = 2;
  Vec m{0.5, -1.25, 2.0, 0.75, -3.0};
  diffgeo::ChristoffelTable exact = tps::reference_christoffel(n);
  std::vector<Mat> num = ambient_christoffel(m);
  Mat g = ambient_metric(m), gi = ambient_metric_inverse(m);
  double diff = 0, inv = 0;
  for (size_t a = 0; a < m.size(); ++a)
    for (size_t b = 0; b < m.size(); ++b) {
      for (size_t c = 0; c < m.size(); ++c)
        diff = std::max(diff, std::abs(num[a][b][c] - exact(a, b, c).evaluate(std::span<const double>(m))));
      double s = 0;
      for (size_t c = 0; c < m.size(); ++c) s += g[a][c] * gi[c][b];
      inv = std::max(inv, std::abs(s - (a == b ? 1.0 : 0.0)));
    }
  CHECK(diff < 1e-14);
  CHECK(inv < 1e-14);
}

TEST_CASE("model json") {
  for (const std::string& id : catalog_ids()) {
    json params = json::object();
    if (id == "quadratic") params = {{"Q", {{2, 1}, {1, 3}}}};
    if (id == "linear") params = {{"a", {1, -1}}};
    PotentialModel m = catalog_model(id, params);
    PotentialModel back = model_from_json(model_to_json(m));
    CHECK(model_to_json(back) == model_to_json(m));
  }
  json file = {{"model", "quadratic"},
               {"name", "q"},
               {"partition", {{"I", {1}}}},
               {"parameters", {{"Q", {{1, 0}, {0, -1}}}}}};
  PotentialModel q = model_from_json(file);
  CHECK(q.I == std::vector<int>{1});
  CHECK(q.variable_names() == std::vector<std::string>{"p1", "x2"});
  CHECK(model_from_json(json{{"model", "van_der_waals"}, {"parameters", {{"paper_literal", true}}}}).paper_literal);

  CHECK_THROWS_AS(model_from_json(json{{"model", "nope"}}), InputError);
  CHECK_THROWS_AS(model_from_json(json::array()), InputError);
  CHECK_THROWS_AS(model_from_json(json{{"model", "quadratic"}, {"parameters", {{"Q", {{1, 2}, {3, 4}}}}}}), InputError);
  CHECK_THROWS_AS(model_from_json(json{{"model", "cubic"}, {"partition", {{"I", {3}}}}}), InputError);
  CHECK_THROWS_AS(model_from_json(json{{"model", "cubic"}, {"name", 5}}), InputError);
  CHECK_THROWS_AS(model_from_json(json{{"model", "van_der_waals"}, {"parameters", {{"paper_literal", 1}}}}),
                  InputError);
  CHECK_THROWS_AS(model_from_json(json{{"model", "linear"},
                                       {"parameters", {{"a", {1, 2}}}},
                                       {"convention", "positive_gradient"},
                                       {"partition", {{"I", {1}}}}}),
                  InputError);
}

TEST_CASE("stability and analysis") {
  CHECK(classify_matrix(Mat{{1, 0}, {0, 2}}).definiteness == Definiteness::positive_definite);
  CHECK(classify_matrix(Mat{{-1, 0}, {0, -2}}).definiteness == Definiteness::negative_definite);
  CHECK(classify_matrix(Mat{{0, 1}, {1, 0}}).definiteness == Definiteness::indefinite);
  CHECK(classify_matrix(Mat{{1, 0}, {0, 0}}).definiteness == Definiteness::marginal);
  CHECK(stability_classify(ideal_gas_energy(), Vec{0.0, 2.0}).stable());

  json a = analyze(van_der_waals(), Vec{1.0, 2.0});
  CHECK(a.contains("metric"));
  CHECK(a.contains("classification"));
  CHECK(a.at("ambient").size() == 5);
}
