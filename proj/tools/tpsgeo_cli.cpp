#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tpsgeo/tpsgeo.h"

namespace {

constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "lo:hi:count,lo:hi:count,..." -> {"grid": {"ranges": [...], "counts": [...]}}
std::string grid_json(const std::string& text) {
  std::ostringstream ranges, counts;
  std::stringstream ss(text);
  std::string item;
  bool first = true;
  while (std::getline(ss, item, ',')) {
    double lo, hi;
    int count;
    char c1, c2;
    std::istringstream is(item);
    if (!(is >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || !is.eof())
      throw std::runtime_error("grid item '" + item + "' is not lo:hi:count");
    ranges << (first ? "" : ",") << "[" << lo << "," << hi << "]";
    counts << (first ? "" : ",") << count;
    first = false;
  }
  if (first) throw std::runtime_error("empty grid specification");
  return "{\"grid\":{\"ranges\":[" + ranges.str() + "],\"counts\":[" + counts.str() + "]}}";
}

// Writes the report, returns the process exit code.
int finish(tpsgeo_status status, tpsgeo_report* report, const std::string& out, bool markdown) {
  if (status != TPSGEO_OK && status != TPSGEO_VERIFY_FAILED) {
    std::cerr << "error: " << tpsgeo_last_error() << "\n";
    return status == TPSGEO_INTERNAL_ERROR ? 1 : kUsage;
  }
  char* text = nullptr;
  tpsgeo_status s = markdown ? tpsgeo_report_markdown(report, &text) : tpsgeo_report_json(report, 1, 2, &text);
  int code = tpsgeo_report_passed(report) ? 0 : 1;
  size_t failures = tpsgeo_report_failures(report), total = tpsgeo_report_count(report);
  tpsgeo_report_free(report);
  if (s != TPSGEO_OK) {
    std::cerr << "error: " << tpsgeo_last_error() << "\n";
    return 1;
  }
  std::string body(text);
  tpsgeo_string_free(text);
  if (out.empty() || out == "-") {
    std::cout << body << "\n";
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return kUsage;
    }
    f << body << "\n";
    std::cerr << total - failures << "/" << total << " checks passed; report written to " << out << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numeric verification of the contact thermodynamic phase space"};
  app.set_version_flag("--version", std::string(tpsgeo_version()));
  app.require_subcommand(1);

  std::string out;
  bool markdown = false;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out,-o", out, "Output path; '-' or empty writes to stdout");
    sub->add_flag("--markdown", markdown, "Render the report as a Markdown table");
  };

  std::string space = "tps";
  int n = 1, degree = 2;

  auto* curv = app.add_subcommand("curvature", "Christoffel, Ricci, scalar and sectional curvature suites");
  curv->add_option("--space", space, "tps or sympl")->check(CLI::IsMember({"tps", "sympl"}));
  curv->add_option("--n", n, "Dimension parameter")->required();
  add_output(curv);

  auto* kill = app.add_subcommand("killing", "Polynomial Killing fields, catalog span and structure constants");
  kill->add_option("--space", space, "tps or sympl")->check(CLI::IsMember({"tps", "sympl"}));
  kill->add_option("--n", n, "Dimension parameter")->required();
  kill->add_option("--degree", degree, "Maximal polynomial degree of the ansatz");
  add_output(kill);

  std::string model_file, points_file, grid;
  auto* pot = app.add_subcommand("potential", "Legendre surface analysis of a thermodynamic potential");
  pot->add_option("--model", model_file, "Potential definition (JSON)")->required();
  auto* pts = pot->add_option("--points", points_file, "Points file (JSON)");
  auto* grd = pot->add_option("--grid", grid, "Grid lo:hi:count per variable, comma separated");
  pts->excludes(grd);
  grd->excludes(pts);
  add_output(pot);

  int n_max = 4, samples = 100;
  unsigned long seed = 0;
  std::vector<std::string> only;
  bool tamper = false;
  auto* all = app.add_subcommand("verify-all", "Run every verification suite");
  all->add_option("--n-max", n_max, "Largest dimension parameter");
  all->add_option("--only", only, "Restrict to modules: tps, sympl, heisenberg, legendre")->delimiter(',');
  all->add_flag("--tamper", tamper, "Flip one sign of G in the curvature suite (negative control)");
  all->add_option("--samples", samples, "Random samples per numeric or sampled check");
  all->add_option("--seed", seed, "Random seed (0 keeps the default)");
  add_output(all);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  tpsgeo_report* report = nullptr;
  tpsgeo_status status;
  try {
    if (curv->parsed()) {
      status = tpsgeo_curvature(space.c_str(), n, &report);
    } else if (kill->parsed()) {
      status = tpsgeo_killing(space.c_str(), n, degree, &report);
    } else if (pot->parsed()) {
      if (points_file.empty() && grid.empty()) {
        std::cerr << "error: potential needs --points or --grid\n";
        return kUsage;
      }
      std::string model = read_file(model_file);
      std::string points = grid.empty() ? read_file(points_file) : grid_json(grid);
      status = tpsgeo_potential(model.c_str(), points.c_str(), &report);
    } else {
      std::string list;
      for (const auto& m : only) list += (list.empty() ? "" : ",") + m;
      status = tpsgeo_verify_all(n_max, only.empty() ? nullptr : list.c_str(), tamper ? 1 : 0, samples, seed, &report);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return finish(status, report, out, markdown);
}
