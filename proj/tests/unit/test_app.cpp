#include <doctest.h>

#include <cstdlib>

#include "tpsgeo/app/commands.hpp"
#include "tpsgeo/errors.hpp"

using namespace tpsgeo;
using nlohmann::json;

TEST_CASE("grid expansion") {
  auto pts = app::expand_points(json{{"grid", {{"ranges", {{0, 1}, {10, 20}}}, {"counts", {2, 3}}}}}, 2);
  REQUIRE(pts.size() == 6);
  CHECK(pts[0] == std::vector<double>{0, 10});
  CHECK(pts[1] == std::vector<double>{0, 15});
  CHECK(pts[5] == std::vector<double>{1, 20});
  CHECK(app::expand_points(json{{"grid", {{"ranges", {{3, 4}}}, {"counts", {1}}}}}, 1)[0][0] == 3);
  CHECK_THROWS_AS(app::expand_points(json{{"grid", {{"ranges", {{0, 1}}}, {"counts", {0}}}}}, 1), InputError);
  CHECK_THROWS_AS(app::expand_points(json{{"points", {{1, 2}}}}, 1), InputError);
  CHECK_THROWS_AS(app::expand_points(json{{"points", json::array()}}, 1), InputError);
  CHECK_THROWS_AS(app::expand_points(json{{"points", "x"}}, 1), InputError);
  CHECK_THROWS_AS(app::expand_points(json::object(), 1), InputError);
}

TEST_CASE("suite runner keeps declared order and isolates failures") {
  std::vector<report::Suite> suites;
  for (int i = 0; i < 20; ++i)
    suites.push_back({"s" + std::to_string(i), [i] {
                        if (i == 7) throw std::runtime_error("boom");
                        return std::vector<report::Check>{report::exact("c" + std::to_string(i), "plumbing", true)};
                      }});
  auto res = report::run_suites(suites, 4);
  REQUIRE(res.size() == 20);
  for (int i = 0; i < 20; ++i) CHECK(res[static_cast<size_t>(i)].suite == "s" + std::to_string(i));
  CHECK(!res[7].check.passed());
  CHECK(res[7].check.witness["error"] == "boom");
}

TEST_CASE("thread limit honours the environment") {
  setenv("TPSGEO_THREADS", "1", 1);
  CHECK(report::thread_limit() == 1);
  setenv("TPSGEO_THREADS", "junk", 1);
  CHECK(report::thread_limit() >= 1);
  unsetenv("TPSGEO_THREADS");
}

TEST_CASE("envelope rendering") {
  report::Envelope e;
  e.command = "demo";
  e.results.push_back({"s", report::exact("a | b", "plumbing", false, json{{"x", 1}})});
  json j = report::to_json(e, false);
  CHECK(j["summary"]["fail"] == 1);
  CHECK(j["summary"]["all_passed"] == false);
  CHECK(j["results"][0]["paper_ref"] == "plumbing");
  CHECK(!j.contains("timing"));
  std::string md = report::to_markdown(e);
  CHECK(md.find("a \\| b") != std::string::npos);
  CHECK(md.find("verdict: FAIL") != std::string::npos);
}

TEST_CASE("command guards") {
  CHECK_THROWS_AS(app::curvature(app::Space::tps, 5), InputError);
  CHECK_THROWS_AS(app::killing(app::Space::sympl, 1, app::kMaxKillingDegree + 1), InputError);
  CHECK_THROWS_AS(app::space_from_name("x"), InputError);
  app::VerifyOptions o;
  o.n_max = 0;
  CHECK_THROWS_AS(app::verify_all(o), InputError);
  o.n_max = 1;
  o.only = {"heisenberg"};
  CHECK(app::verify_all(o).all_passed());
}
