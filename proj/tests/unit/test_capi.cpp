#include <doctest.h>

#include <json.hpp>
#include <string>

#include "tpsgeo/tpsgeo.h"

using nlohmann::json;

namespace {

json report_json(tpsgeo_report* r, int timing = 1) {
  char* text = nullptr;
  REQUIRE(tpsgeo_report_json(r, timing, -1, &text) == TPSGEO_OK);
  json j = json::parse(text);
  tpsgeo_string_free(text);
  return j;
}

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::string(tpsgeo_version()) == "0.1.0");
  tpsgeo_report* r = nullptr;
  CHECK(tpsgeo_curvature("tps", 0, &r) == TPSGEO_USAGE_ERROR);
  CHECK(r == nullptr);
  CHECK(std::string(tpsgeo_last_error()).find("n must lie") != std::string::npos);
  CHECK(tpsgeo_curvature("nope", 1, &r) == TPSGEO_USAGE_ERROR);
  CHECK(tpsgeo_curvature(nullptr, 1, &r) == TPSGEO_USAGE_ERROR);
  CHECK(tpsgeo_killing("tps", 1, 0, &r) == TPSGEO_USAGE_ERROR);
  CHECK(tpsgeo_potential("{", "{}", &r) == TPSGEO_USAGE_ERROR);
  CHECK(tpsgeo_verify_all(1, "nope", 0, 10, 0, &r) == TPSGEO_USAGE_ERROR);
  CHECK(tpsgeo_report_json(nullptr, 1, -1, nullptr) == TPSGEO_USAGE_ERROR);
  CHECK(tpsgeo_report_passed(nullptr) == 0);
}

TEST_CASE("curvature report") {
  tpsgeo_report* r = nullptr;
  REQUIRE(tpsgeo_curvature("tps", 2, &r) == TPSGEO_OK);
  CHECK(tpsgeo_report_passed(r) == 1);
  CHECK(tpsgeo_report_failures(r) == 0);
  CHECK(std::string(tpsgeo_last_error()).empty());
  json j = report_json(r);
  CHECK(j["command"] == "curvature");
  CHECK(j["inputs"]["n"] == 2);
  CHECK(j["summary"]["all_passed"] == true);
  CHECK(j.contains("timing"));
  CHECK(!report_json(r, 0).contains("timing"));
  bool scalar = false;
  for (const auto& res : j["results"]) {
    CHECK(res.contains("paper_ref"));
    if (res["witness"].is_object() && res["witness"].contains("scalar")) scalar = res["witness"]["scalar"] == "1";
  }
  CHECK(scalar);
  char* md = nullptr;
  REQUIRE(tpsgeo_report_markdown(r, &md) == TPSGEO_OK);
  CHECK(std::string(md).find("| suite | claim |") != std::string::npos);
  tpsgeo_string_free(md);
  tpsgeo_report_free(r);
}

TEST_CASE("verify-all negative control") {
  tpsgeo_report* r = nullptr;
  REQUIRE(tpsgeo_verify_all(1, "tps", 1, 10, 0, &r) == TPSGEO_VERIFY_FAILED);
  CHECK(tpsgeo_report_failures(r) >= 1);
  json j = report_json(r);
  for (const auto& res : j["results"])
    if (res["status"] == "fail") CHECK(!res["witness"].is_null());
  tpsgeo_report_free(r);
}

TEST_CASE("potential report") {
  tpsgeo_report* r = nullptr;
  const char* model = R"({"model": "quadratic", "parameters": {"Q": [[2, 1], [1, 3]]}})";
  REQUIRE(tpsgeo_potential(model, R"({"points": [[0.5, 1.0], [-1, 2]]})", &r) == TPSGEO_OK);
  json j = report_json(r);
  CHECK(j["results"].size() == 3);
  CHECK(j["results"][0]["witness"]["II_norm"] == 0.0);
  tpsgeo_report_free(r);
  CHECK(tpsgeo_potential(model, R"({"points": [[0.5]]})", &r) == TPSGEO_USAGE_ERROR);
}

TEST_CASE("heisenberg handles") {
  tpsgeo_heis *g = nullptr, *h = nullptr, *gh = nullptr, *gi = nullptr;
  REQUIRE(tpsgeo_heis_from_json(R"({"a": ["1"], "b": ["2"], "c": "0"})", &g) == TPSGEO_OK);
  REQUIRE(tpsgeo_heis_from_json(R"({"a": ["3"], "b": ["4"], "c": "0"})", &h) == TPSGEO_OK);
  REQUIRE(tpsgeo_heis_multiply(g, h, &gh) == TPSGEO_OK);
  char* text = nullptr;
  REQUIRE(tpsgeo_heis_to_json(gh, &text) == TPSGEO_OK);
  json j = json::parse(text);
  tpsgeo_string_free(text);
  CHECK(j["c"] == "4");
  REQUIRE(tpsgeo_heis_chi(gh, &text) == TPSGEO_OK);
  CHECK(json::parse(text) == json::array({"-4", "6", "4"}));
  tpsgeo_string_free(text);
  REQUIRE(tpsgeo_heis_inverse(g, &gi) == TPSGEO_OK);
  REQUIRE(tpsgeo_heis_to_json(gi, &text) == TPSGEO_OK);
  CHECK(json::parse(text)["c"] == "2");
  tpsgeo_string_free(text);
  tpsgeo_heis* bad = nullptr;
  CHECK(tpsgeo_heis_from_json(R"({"a": ["1", "2"], "b": ["2"], "c": "0"})", &bad) == TPSGEO_USAGE_ERROR);
  CHECK(tpsgeo_heis_multiply(g, nullptr, &bad) == TPSGEO_USAGE_ERROR);
  for (auto* p : {g, h, gh, gi}) tpsgeo_heis_free(p);
}
