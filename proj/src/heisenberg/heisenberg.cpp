#include "tpsgeo/heisenberg/heisenberg.hpp"

#include <random>

#include "tpsgeo/errors.hpp"
#include "tpsgeo/exactalg/json_io.hpp"

namespace tpsgeo::heisenberg {

using nlohmann::json;
using report::Check;

namespace {

Rational dot(const std::vector<Rational>& u, const std::vector<Rational>& v) {
  Rational s;
  for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

void same_n(size_t a, size_t b) {
  if (a != b) throw InputError("Heisenberg elements of different dimension");
}

template <class E>
void check_shape(const E& e) {
  if (e.a.size() != e.b.size()) throw InputError("a and b must have the same length");
}

RationalMatrix unitri(size_t n, const std::vector<Rational>& a, const std::vector<Rational>& b,
                      const Rational& corner, long diag) {
  size_t m = n + 2;
  RationalMatrix out(m, std::vector<Rational>(m));
  for (size_t i = 0; i < m; ++i) out[i][i] = Rational(diag);
  for (size_t i = 0; i < n; ++i) {
    out[0][i + 1] = a[i];
    out[i + 1][m - 1] = b[i];
  }
  out[0][m - 1] = corner;
  return out;
}

std::vector<Rational> json_vector(const json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(exactalg::rational_from_json(v));
  return out;
}

json rational_array(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(exactalg::to_json(r));
  return out;
}

}  // namespace

HeisElement identity(size_t n) { return HeisElement{std::vector<Rational>(n), std::vector<Rational>(n), Rational(0)}; }

HeisElement multiply(const HeisElement& g, const HeisElement& h) {
  check_shape(g);
  check_shape(h);
  same_n(g.n(), h.n());
  HeisElement out = g;
  for (size_t i = 0; i < g.n(); ++i) {
    out.a[i] += h.a[i];
    out.b[i] += h.b[i];
  }
  out.c = g.c + h.c + dot(g.a, h.b);
  return out;
}

HeisElement inverse(const HeisElement& g) {
  check_shape(g);
  HeisElement out = g;
  for (size_t i = 0; i < g.n(); ++i) {
    out.a[i] = -g.a[i];
    out.b[i] = -g.b[i];
  }
  out.c = -g.c + dot(g.a, g.b);
  return out;
}

HeisElement exp(const HeisAlgElement& x) {
  check_shape(x);
  return HeisElement{x.a, x.b, x.z + Rational(1, 2) * dot(x.a, x.b)};
}

HeisAlgElement log(const HeisElement& g) {
  check_shape(g);
  return HeisAlgElement{g.a, g.b, g.c - Rational(1, 2) * dot(g.a, g.b)};
}

RationalMatrix to_matrix(const HeisElement& g) {
  check_shape(g);
  return unitri(g.n(), g.a, g.b, g.c, 1);
}

RationalMatrix to_matrix(const HeisAlgElement& x) {
  check_shape(x);
  return unitri(x.n(), x.a, x.b, x.z, 0);
}

HeisElement from_matrix(const RationalMatrix& m) {
  size_t s = m.size();
  if (s < 2) throw InputError("Heisenberg matrix must be at least 2x2");
  for (const auto& row : m)
    if (row.size() != s) throw InputError("Heisenberg matrix must be square");
  size_t n = s - 2;
  HeisElement g = identity(n);
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) {
      bool free_entry = (i == 0 && j > 0) || (j == s - 1 && i > 0 && i < s - 1);
      if (free_entry) continue;
      if (m[i][j] != Rational(i == j ? 1 : 0)) throw InputError("matrix is not in the Heisenberg group");
    }
  for (size_t i = 0; i < n; ++i) {
    g.a[i] = m[0][i + 1];
    g.b[i] = m[i + 1][s - 1];
  }
  g.c = m[0][s - 1];
  return g;
}

RationalMatrix matrix_product(const RationalMatrix& a, const RationalMatrix& b) {
  size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  RationalMatrix out(r, std::vector<Rational>(c));
  for (size_t i = 0; i < r; ++i) {
    if (a[i].size() != k) throw InputError("matrix dimensions do not agree");
    for (size_t l = 0; l < k; ++l)
      if (!a[i][l].is_zero())
        for (size_t j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
  }
  return out;
}

HeisElement exp_series(const HeisAlgElement& x) {
  RationalMatrix m = to_matrix(x);
  RationalMatrix m2 = matrix_product(m, m);
  RationalMatrix out = m;
  for (size_t i = 0; i < m.size(); ++i) {
    out[i][i] += Rational(1);
    for (size_t j = 0; j < m.size(); ++j) out[i][j] += Rational(1, 2) * m2[i][j];
  }
  for (const auto& row : matrix_product(m2, m))
    for (const auto& v : row)
      if (!v.is_zero()) throw DomainError("algebra element is not nilpotent of order 3");
  return from_matrix(out);
}

std::vector<Rational> chi(const HeisElement& g) {
  check_shape(g);
  std::vector<Rational> m{-g.c};
  m.insert(m.end(), g.b.begin(), g.b.end());
  m.insert(m.end(), g.a.begin(), g.a.end());
  return m;
}

HeisElement chi_inv(std::span<const Rational> point) {
  if (point.size() % 2 == 0) throw InputError("phase space point must have odd length 2n+1");
  size_t n = point.size() / 2;
  HeisElement g = identity(n);
  g.c = -point[0];
  for (size_t i = 0; i < n; ++i) {
    g.b[i] = point[1 + i];
    g.a[i] = point[1 + n + i];
  }
  return g;
}

std::vector<Rational> left_action(const HeisElement& g, std::span<const Rational> point) {
  return chi(multiply(g, chi_inv(point)));
}

json to_json(const HeisElement& g) {
  return json{{"n", g.n()}, {"a", rational_array(g.a)}, {"b", rational_array(g.b)}, {"c", exactalg::to_json(g.c)}};
}

HeisElement element_from_json(const json& j) {
  try {
    HeisElement g{json_vector(j.at("a")), json_vector(j.at("b")), exactalg::rational_from_json(j.at("c"))};
    check_shape(g);
    if (j.contains("n") && j.at("n").get<size_t>() != g.n()) throw InputError("field n does not match a and b");
    return g;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad Heisenberg element: ") + e.what());
  }
}

json to_json(const HeisAlgElement& x) {
  return json{{"n", x.n()}, {"a", rational_array(x.a)}, {"b", rational_array(x.b)}, {"z", exactalg::to_json(x.z)}};
}

HeisAlgElement algebra_from_json(const json& j) {
  try {
    HeisAlgElement x{json_vector(j.at("a")), json_vector(j.at("b")), exactalg::rational_from_json(j.at("z"))};
    check_shape(x);
    if (j.contains("n") && j.at("n").get<size_t>() != x.n()) throw InputError("field n does not match a and b");
    return x;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad Heisenberg algebra element: ") + e.what());
  }
}

std::vector<Check> group_checks(int n, int samples, unsigned long seed) {
  if (n < 1) throw DomainError("Heisenberg group needs n >= 1");
  size_t nn = static_cast<size_t>(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-12, 12), den(1, 6);
  auto rnd = [&] { return Rational(num(rng), den(rng)); };
  auto rnd_vec = [&] {
    std::vector<Rational> v(nn);
    for (auto& r : v) r = rnd();
    return v;
  };
  auto rnd_elem = [&] { return HeisElement{rnd_vec(), rnd_vec(), rnd()}; };

  bool assoc = true, inv = true, unit = true, matmul = true, series = true, logexp = true, explog = true;
  bool chi_ok = true, action = true, action_formula = true, round_trip = true;
  json first_failure;
  auto note = [&](bool ok, const char* what, const json& w) {
    if (!ok && first_failure.is_null()) first_failure = json{{"check", what}, {"sample", w}};
  };
  HeisElement e = identity(nn);
  for (int s = 0; s < samples; ++s) {
    HeisElement g = rnd_elem(), h = rnd_elem(), k = rnd_elem();
    bool ok = multiply(multiply(g, h), k) == multiply(g, multiply(h, k));
    assoc = assoc && ok;
    note(ok, "associativity", to_json(g));
    ok = multiply(g, inverse(g)) == e && multiply(inverse(g), g) == e;
    inv = inv && ok;
    note(ok, "inverse", to_json(g));
    ok = multiply(g, e) == g && multiply(e, g) == g;
    unit = unit && ok;
    ok = from_matrix(matrix_product(to_matrix(g), to_matrix(h))) == multiply(g, h);
    matmul = matmul && ok;
    note(ok, "matrix product", to_json(g));

    HeisAlgElement x{rnd_vec(), rnd_vec(), rnd()};
    ok = exp_series(x) == exp(x);
    series = series && ok;
    note(ok, "series", to_json(x));
    logexp = logexp && log(exp(x)) == x;
    explog = explog && exp(log(g)) == g;

    std::vector<Rational> m = chi(g);
    chi_ok = chi_ok && chi_inv(m) == g && chi(chi_inv(m)) == m;
    std::vector<Rational> moved = left_action(h, m);
    ok = moved == chi(multiply(h, g));
    action = action && ok;
    // (x0 - c - <a, p>, p + b, x + a)
    std::vector<Rational> expect(m.size());
    expect[0] = m[0] - h.c;
    for (size_t i = 0; i < nn; ++i) {
      expect[0] -= h.a[i] * m[1 + i];
      expect[1 + i] = m[1 + i] + h.b[i];
      expect[1 + nn + i] = m[1 + nn + i] + h.a[i];
    }
    action_formula = action_formula && moved == expect;
    note(moved == expect, "left action", json{{"g", to_json(h)}, {"point", rational_array(m)}});
    round_trip = round_trip && element_from_json(json::parse(to_json(g).dump())) == g &&
                 algebra_from_json(json::parse(to_json(x).dump())) == x;
  }
  json w{{"n", n}, {"samples", samples}, {"seed", seed}, {"first_failure", first_failure}};
  std::vector<Check> out;
  out.push_back(report::exact("group law is associative", "heisenberg-group", assoc, w));
  out.push_back(report::exact("g (-a, -b, -c + <a, b>) = e on both sides", "heisenberg-group", inv, w));
  out.push_back(report::exact("identity element", "heisenberg-group", unit, w));
  out.push_back(report::exact("(a, b, c)(a1, b1, c1) = (a + a1, b + b1, c + c1 + <a, b1>) agrees with matrix multiplication",
                              "heisenberg-group", matmul, w));
  out.push_back(report::exact("exp X(a, b, z) = g(a, b, z + <a, b>/2) equals I + M + M^2/2", "heisenberg-exp", series, w));
  out.push_back(report::exact("log o exp = id and exp o log = id", "heisenberg-exp", logexp && explog, w));
  out.push_back(report::exact("chi(a, b, c) = (-c, b, a) is a bijection", "heisenberg-chi", chi_ok, w));
  out.push_back(report::exact("chi o L_g o chi^{-1} = T_g", "heisenberg-chi", action, w));
  out.push_back(report::exact("T_g(x0, p, x) = (x0 - c - <a, p>, p + b, x + a)", "heisenberg-chi", action_formula, w));
  out.push_back(report::exact("JSON round trip of group and algebra elements", "plumbing", round_trip, w));

  HeisElement g1{{Rational(1)}, {Rational(2)}, Rational(0)}, g2{{Rational(3)}, {Rational(4)}, Rational(0)};
  HeisElement prod = multiply(g1, g2);
  out.push_back(report::exact("(1, 2, 0)(3, 4, 0) = (4, 6, 4)", "heisenberg-group",
                              prod == HeisElement{{Rational(4)}, {Rational(6)}, Rational(4)}, to_json(prod)));
  HeisElement ex = exp(HeisAlgElement{{Rational(2)}, {Rational(3)}, Rational(0)});
  out.push_back(report::exact("exp X(2, 3, 0) has c = 3", "heisenberg-exp", ex.c == Rational(3), to_json(ex)));
  return out;
}

}  // namespace tpsgeo::heisenberg
