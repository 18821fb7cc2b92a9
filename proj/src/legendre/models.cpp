#include <algorithm>
#include <set>

#include "tpsgeo/errors.hpp"
#include "tpsgeo/legendre/legendre.hpp"

namespace tpsgeo::legendre {

using nlohmann::json;

namespace {

template <class F>
void bind(PotentialModel& m, F f) {
  m.jet_eval = [f](std::span<const Jet3> u) { return f(u); };
  m.quad_eval = [f](std::span<const Quad> u) { return f(u); };
}

PotentialModel base_model(std::string name, std::string id, int n) {
  PotentialModel m;
  m.name = std::move(name);
  m.catalog_id = std::move(id);
  m.n = n;
  m.box.assign(static_cast<size_t>(n), {-2.0, 2.0});
  m.in_domain = [](std::span<const double>) { return true; };
  return m;
}

double param(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw InputError(std::string("parameter '") + key + "' must be a number");
  return j.at(key).get<double>();
}

Mat matrix_param(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing parameter '") + key + "'");
  try {
    return j.at(key).get<Mat>();
  } catch (const json::exception&) {
    throw InputError(std::string("parameter '") + key + "' must be a matrix of numbers");
  }
}

Vec vector_param(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing parameter '") + key + "'");
  try {
    return j.at(key).get<Vec>();
  } catch (const json::exception&) {
    throw InputError(std::string("parameter '") + key + "' must be a list of numbers");
  }
}

}  // namespace

const char* convention_name(Convention c) {
  return c == Convention::canonical ? "canonical" : "positive_gradient";
}

Convention convention_from_name(const std::string& s) {
  if (s == "canonical") return Convention::canonical;
  if (s == "positive_gradient") return Convention::positive_gradient;
  throw InputError("unknown convention '" + s + "'");
}

bool PotentialModel::in_I(int k) const { return std::find(I.begin(), I.end(), k) != I.end(); }

std::vector<std::string> PotentialModel::variable_names() const {
  std::vector<std::string> out;
  for (int k = 1; k <= n; ++k) out.push_back((in_I(k) ? "p" : "x") + std::to_string(k));
  return out;
}

Jet3 PotentialModel::jet(std::span<const double> base) const {
  if (base.size() != static_cast<size_t>(n)) throw InputError("base point has the wrong length");
  if (!in_domain(base)) throw DomainError("base point outside the domain of " + name);
  std::vector<Jet3> u = Jet3::seed(base);
  return jet_eval(u);
}

Vec PotentialModel::sample(std::mt19937_64& rng) const {
  Vec u(static_cast<size_t>(n));
  for (int tries = 0; tries < 1000; ++tries) {
    for (size_t k = 0; k < u.size(); ++k) u[k] = std::uniform_real_distribution<double>(box[k].first, box[k].second)(rng);
    if (in_domain(u)) return u;
  }
  throw DomainError("could not sample the domain of " + name);
}

PotentialModel van_der_waals(double a, double b, double R, double cV, bool paper_literal) {
  if (cV == 0) throw InputError("cV must be nonzero");
  PotentialModel m = base_model(paper_literal ? "van_der_waals (literal exponent)" : "van_der_waals", "van_der_waals", 2);
  m.parameters = {{"a", a}, {"b", b}, {"R", R}, {"cV", cV}};
  m.catalog_parameters = m.parameters;
  if (paper_literal) m.catalog_parameters["paper_literal"] = true;
  m.paper_literal = paper_literal;
  double e = (paper_literal ? 1.0 : -1.0) * R / cV;
  bind(m, [=](auto u) {
    using autodiff::exp;
    using autodiff::pow;
    auto vol = u[1] - b;
    return pow(vol, e) * exp(u[0] / cV) - a / u[1];
  });
  m.in_domain = [b](std::span<const double> u) { return u[1] > b && u[1] > 0; };
  m.box = {{-2.0, 2.0}, {std::max(b, 0.0) + 0.5, std::max(b, 0.0) + 4.0}};
  return m;
}

PotentialModel ideal_gas_energy(double R, double cV) {
  PotentialModel m = van_der_waals(0, 0, R, cV, false);
  m.name = "ideal_gas_energy";
  m.catalog_id = "ideal_gas_energy";
  m.parameters = {{"R", R}, {"cV", cV}};
  m.catalog_parameters = m.parameters;
  return m;
}

PotentialModel quadratic(const Mat& Q, std::vector<int> I, Convention c) {
  size_t n = Q.size();
  if (n == 0) throw InputError("quadratic potential needs a nonempty matrix");
  for (const auto& row : Q)
    if (row.size() != n) throw InputError("quadratic potential needs a square matrix");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (Q[i][j] != Q[j][i]) throw InputError("quadratic potential needs a symmetric matrix");
  PotentialModel m = base_model("quadratic", "quadratic", static_cast<int>(n));
  m.I = std::move(I);
  m.convention = c;
  m.homogeneous_degree = 2;
  bind(m, [Q](auto u) {
    auto acc = u[0] * 0.0;
    for (size_t i = 0; i < Q.size(); ++i)
      for (size_t j = 0; j < Q.size(); ++j)
        if (Q[i][j] != 0) acc += (0.5 * Q[i][j]) * (u[i] * u[j]);
    return acc;
  });
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m.parameters["Q" + std::to_string(i + 1) + std::to_string(j + 1)] = Q[i][j];
  m.catalog_parameters = json{{"Q", Q}};
  return m;
}

PotentialModel linear(const Vec& a) {
  if (a.empty()) throw InputError("linear potential needs coefficients");
  PotentialModel m = base_model("linear", "linear", static_cast<int>(a.size()));
  m.homogeneous_degree = 1;
  bind(m, [a](auto u) {
    auto acc = u[0] * 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * u[i];
    return acc;
  });
  for (size_t i = 0; i < a.size(); ++i) m.parameters["a" + std::to_string(i + 1)] = a[i];
  m.catalog_parameters = json{{"a", a}};
  return m;
}

PotentialModel homogeneous_demo() {
  PotentialModel m = base_model("homogeneous_demo", "homogeneous_demo", 2);
  m.homogeneous_degree = 1;
  bind(m, [](auto u) { return u[1] * u[1] / u[0]; });
  m.in_domain = [](std::span<const double> u) { return u[0] > 0; };
  m.box = {{0.5, 3.0}, {-2.0, 2.0}};
  return m;
}

PotentialModel cubic(int n) {
  if (n < 1) throw InputError("cubic potential needs n >= 1");
  PotentialModel m = base_model("cubic", "cubic", n);
  m.homogeneous_degree = 3;
  bind(m, [](auto u) {
    auto acc = u[0] * 0.0;
    for (size_t i = 0; i < u.size(); ++i) acc += u[i] * u[i] * u[i];
    return acc;
  });
  m.catalog_parameters = json{{"n", n}};
  return m;
}

std::vector<std::string> catalog_ids() {
  return {"van_der_waals", "ideal_gas_energy", "quadratic", "linear", "homogeneous_demo", "cubic"};
}

PotentialModel catalog_model(const std::string& id, const json& p) {
  if (!p.is_object()) throw InputError("parameters must be an object");
  if (id == "van_der_waals") {
    if (p.contains("paper_literal") && !p.at("paper_literal").is_boolean())
      throw InputError("parameter 'paper_literal' must be a boolean");
    bool literal = p.contains("paper_literal") && p.at("paper_literal").get<bool>();
    return van_der_waals(param(p, "a", 1), param(p, "b", 1), param(p, "R", 1), param(p, "cV", 1.5), literal);
  }
  if (id == "ideal_gas_energy") return ideal_gas_energy(param(p, "R", 1), param(p, "cV", 1.5));
  if (id == "quadratic") return quadratic(matrix_param(p, "Q"));
  if (id == "linear") return linear(vector_param(p, "a"));
  if (id == "homogeneous_demo") return homogeneous_demo();
  if (id == "cubic") return cubic(static_cast<int>(param(p, "n", 1)));
  throw InputError("unknown catalog model '" + id + "'");
}

namespace {

PotentialModel parse_model(const json& j) {
  if (!j.is_object()) throw InputError("model file must hold a JSON object");
  if (!j.contains("model") || !j.at("model").is_string()) throw InputError("model file needs a string field 'model'");
  PotentialModel m = catalog_model(j.at("model").get<std::string>(), j.value("parameters", json::object()));
  if (j.contains("name")) m.name = j.at("name").get<std::string>();
  if (j.contains("convention")) m.convention = convention_from_name(j.at("convention").get<std::string>());
  if (j.contains("partition")) {
    const json& part = j.at("partition");
    std::vector<int> I = part.value("I", std::vector<int>{});
    std::set<int> seen;
    for (int k : I) {
      if (k < 1 || k > m.n) throw InputError("partition index out of range");
      if (!seen.insert(k).second) throw InputError("partition index repeated");
    }
    std::sort(I.begin(), I.end());
    m.I = I;
  }
  if (m.convention == Convention::positive_gradient && !m.I.empty())
    throw InputError("positive_gradient convention needs an empty I");
  return m;
}

}  // namespace

PotentialModel model_from_json(const json& j) {
  try {
    return parse_model(j);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed model file: ") + e.what());
  }
}

json model_to_json(const PotentialModel& m) {
  const json& params = m.catalog_parameters;
  return json{{"name", m.name},
              {"model", m.catalog_id},
              {"convention", convention_name(m.convention)},
              {"partition", {{"I", m.I}}},
              {"variables", m.variable_names()},
              {"parameters", params},
              {"homogeneous_degree", m.homogeneous_degree ? json(*m.homogeneous_degree) : json(nullptr)}};
}

}  // namespace tpsgeo::legendre
