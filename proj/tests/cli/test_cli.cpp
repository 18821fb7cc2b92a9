#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(TPSGEO_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch() {
  auto dir = std::filesystem::temp_directory_path() / "tpsgeo_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  auto path = scratch() / name;
  std::ofstream(path) << text;
  return path.string();
}

json find_witness(const json& report, const std::string& key) {
  for (const auto& r : report["results"])
    if (r["witness"].is_object() && r["witness"].contains(key)) return r["witness"][key];
  return nullptr;
}

std::map<std::string, int> counts(const json& report) {
  std::map<std::string, int> out;
  for (const auto& r : report["results"])
    if (r["witness"].is_object() && r["witness"].contains("classification"))
      ++out[r["witness"]["classification"].get<std::string>()];
  return out;
}

}  // namespace

TEST_CASE("curvature command") {
  Run r = run("curvature --space tps --n 2");
  CHECK(r.code == 0);
  CHECK(find_witness(json::parse(r.out), "scalar") == "1");
  r = run("curvature --space sympl --n 1");
  CHECK(r.code == 0);
  CHECK(find_witness(json::parse(r.out), "einstein_factor") == "3/2");
  CHECK(run("curvature --space tps --n 0").code == 2);
  CHECK(run("curvature --space sympl --n 4").code == 2);
  CHECK(run("curvature --space other --n 1").code == 2);
  CHECK(run("curvature").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("killing command") {
  Run r = run("killing --space tps --n 2 --degree 2");
  CHECK(r.code == 0);
  CHECK(find_witness(json::parse(r.out), "dimension") == 9);
  r = run("killing --space sympl --n 1 --degree 2");
  CHECK(r.code == 0);
  CHECK(find_witness(json::parse(r.out), "dimension") == 8);
  r = run("killing --space tps --n 1 --degree 3");
  CHECK(r.code == 0);
  CHECK(find_witness(json::parse(r.out), "dimension") == 4);
  CHECK(run("killing --space tps --n 1 --degree 0").code == 2);
}

TEST_CASE("potential command") {
  std::string vdw = write("vdw.json", R"({"name": "vdw", "model": "van_der_waals", "convention": "canonical",
                                          "partition": {"I": []}, "parameters": {"a": 1, "b": 1, "R": 1, "cV": 1.5}})");
  Run r = run("potential --model " + vdw + " --grid 0.5:2:10,1.5:3:10");
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["results"].size() == 101);
  // The physical exponent keeps this box inside the stable region.
  CHECK(counts(j)["positive_definite"] == 100);

  std::string literal = write("vdw_literal.json", R"({"model": "van_der_waals", "parameters": {"paper_literal": true}})");
  r = run("potential --model " + literal + " --grid 0.5:2:10,1.5:3:10");
  CHECK(r.code == 0);
  CHECK(counts(json::parse(r.out))["indefinite"] >= 1);

  std::string quad = write("quad.json", R"({"model": "quadratic", "parameters": {"Q": [[2, 1], [1, 3]]}})");
  r = run("potential --model " + quad + " --grid -1:1:4,-1:1:4");
  CHECK(r.code == 0);
  for (const auto& res : json::parse(r.out)["results"])
    if (res["witness"].contains("II_norm")) CHECK(res["witness"]["II_norm"] == 0.0);

  std::string homog = write("homog.json", R"({"model": "homogeneous_demo"})");
  r = run("potential --model " + homog + " --grid 0.5:3:5,-2:2:5");
  CHECK(r.code == 0);
  for (const auto& res : json::parse(r.out)["results"])
    if (res["witness"].contains("gibbs_duhem_residual")) {
      CHECK(res["witness"]["gibbs_duhem_residual"].get<double>() < 1e-12);
      CHECK(res["witness"]["euler_residual"].get<double>() < 1e-12);
    }

  std::string pts = write("pts.json", R"({"points": [[0.0, 2.0], [0.0, 0.5]]})");
  r = run("potential --model " + vdw + " --points " + pts);
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["results"][1]["status"] == "fail");

  CHECK(run("potential --model " + write("bad.json", "{\"model\":") + " --grid 0:1:2,0:1:2").code == 2);
  CHECK(run("potential --model " + vdw + " --grid 0:1:2").code == 2);
  CHECK(run("potential --model " + vdw).code == 2);
  CHECK(run("potential --model /nonexistent.json --grid 0:1:2,0:1:2").code == 2);
}

TEST_CASE("verify-all command") {
  Run r = run("verify-all");
  CHECK(r.code == 0);
  json all = json::parse(r.out);
  CHECK(all["summary"]["all_passed"] == true);
  CHECK(all["timing"]["wall_seconds"].get<double>() < 60);

  Run again = run("verify-all");
  json second = json::parse(again.out);
  all.erase("timing");
  second.erase("timing");
  CHECK(all == second);

  r = run("verify-all --only heisenberg");
  CHECK(r.code == 0);
  for (const auto& res : json::parse(r.out)["results"])
    CHECK(res["suite"].get<std::string>().rfind("heisenberg", 0) == 0);

  r = run("verify-all --only tps --n-max 1 --tamper");
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["summary"]["fail"].get<int>() >= 1);

  r = run("verify-all --only legendre --markdown");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: PASS") != std::string::npos);

  std::string out = (scratch() / "report.json").string();
  r = run("verify-all --only sympl --n-max 1 --out " + out);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out);
  CHECK(json::parse(f)["command"] == "verify-all");

  CHECK(run("verify-all --only nope").code == 2);
  CHECK(run("verify-all --n-max 9").code == 2);
}
