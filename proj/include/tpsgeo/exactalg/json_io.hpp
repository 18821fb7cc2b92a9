#pragma once

#include <json.hpp>

#include "tpsgeo/exactalg/laurent.hpp"
#include "tpsgeo/exactalg/linalg.hpp"
#include "tpsgeo/exactalg/polymatrix.hpp"
#include "tpsgeo/exactalg/ratfunc.hpp"

namespace tpsgeo::exactalg {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Chart& chart);
ChartPtr chart_from_json(const json& j);

// [{exponents: [...], coeff: "n/d"}, ...] in descending lexicographic order.
json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j, const ChartPtr& chart);

json to_json(const RationalFunction& f);

// {chart: [...], entries: [[poly, ...], ...]}
json to_json(const PolyMatrix& m);
PolyMatrix matrix_from_json(const json& j);

json to_json(const RationalVector& v);

}  // namespace tpsgeo::exactalg
