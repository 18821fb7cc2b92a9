#include "tpsgeo/exactalg/json_io.hpp"

#include "tpsgeo/errors.hpp"

namespace tpsgeo::exactalg {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError("expected a rational string, got " + j.dump());
}

json to_json(const Chart& chart) {
  json out = json::array();
  for (const auto& s : chart.symbols()) out.push_back({{"name", s.name}, {"invertible", s.invertible}});
  return out;
}

ChartPtr chart_from_json(const json& j) {
  if (!j.is_array()) throw InputError("chart must be an array");
  std::vector<Symbol> syms;
  for (const auto& e : j) {
    if (e.is_string())
      syms.push_back({e.get<std::string>(), false});
    else
      syms.push_back({e.at("name").get<std::string>(), e.value("invertible", false)});
  }
  return make_chart(std::move(syms));
}

json to_json(const LaurentPoly& p) {
  json out = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Exponents e = it->first;
    if (e.empty()) e.assign(p.nvars(), 0);
    out.push_back({{"exponents", e}, {"coeff", it->second.str()}});
  }
  return out;
}

LaurentPoly poly_from_json(const json& j, const ChartPtr& chart) {
  if (!j.is_array()) throw InputError("polynomial must be an array of terms");
  LaurentPoly::Terms terms;
  for (const auto& t : j) {
    auto e = t.at("exponents").get<Exponents>();
    if (e.size() != (chart ? chart->size() : 0)) throw InputError("exponent tuple has wrong length");
    Rational c = rational_from_json(t.at("coeff"));
    auto [it, ins] = terms.try_emplace(e, c);
    if (!ins) it->second += c;
  }
  return LaurentPoly::from_terms(chart, std::move(terms));
}

json to_json(const RationalFunction& f) {
  return {{"numerator", to_json(f.num())}, {"denominator", to_json(f.den())}};
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) {
      LaurentPoly e = m(i, j);
      if (m.chart() && e.is_constant()) e = e.on_chart(m.chart());
      row.push_back(to_json(e));
    }
    rows.push_back(std::move(row));
  }
  json out;
  out["chart"] = m.chart() ? json(m.chart()->names()) : json::array();
  out["entries"] = std::move(rows);
  return out;
}

PolyMatrix matrix_from_json(const json& j) {
  ChartPtr chart = chart_from_json(j.at("chart"));
  const json& rows = j.at("entries");
  size_t r = rows.size(), c = r ? rows[0].size() : 0;
  PolyMatrix m(r, c, chart);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InputError("ragged matrix rows");
    for (size_t k = 0; k < c; ++k) m(i, k) = poly_from_json(rows[i][k], chart);
  }
  return m;
}

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

}  // namespace tpsgeo::exactalg
