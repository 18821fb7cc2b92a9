#include "tpsgeo/diffgeo/vector_field.hpp"

#include "tpsgeo/errors.hpp"

namespace tpsgeo::diffgeo {

VectorField::VectorField(ChartPtr chart) : chart_(std::move(chart)), comps_(chart_ ? chart_->size() : 0) {}

VectorField::VectorField(ChartPtr chart, std::vector<LaurentPoly> components)
    : chart_(std::move(chart)), comps_(std::move(components)) {
  if (!chart_ || comps_.size() != chart_->size())
    throw DomainError("vector field needs one component per chart symbol");
}

VectorField VectorField::coordinate(const ChartPtr& chart, size_t index) {
  VectorField v(chart);
  if (index >= v.dim()) throw DomainError("coordinate field index out of range");
  v.comps_[index] = LaurentPoly(Rational(1));
  return v;
}

VectorField VectorField::coordinate(const ChartPtr& chart, std::string_view name) {
  return coordinate(chart, chart->index(name));
}

void VectorField::check_same(const VectorField& o) const {
  if (!exactalg::same_chart(chart_, o.chart_)) throw DomainError("vector fields live on different charts");
}

LaurentPoly VectorField::apply(const LaurentPoly& f) const {
  LaurentPoly g = f.on_chart(chart_);
  LaurentPoly out;
  for (size_t i = 0; i < comps_.size(); ++i)
    if (!comps_[i].is_zero()) out += comps_[i] * g.partial(i);
  return out;
}

bool VectorField::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<Rational> VectorField::evaluate(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c.is_constant() ? *c.constant_value() : c.evaluate(point));
  return out;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  check_same(o);
  for (size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  check_same(o);
  for (size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
  return *this;
}

VectorField operator*(const LaurentPoly& f, const VectorField& x) {
  VectorField r = x;
  for (auto& c : r.comps_) c = f * c;
  return r;
}

VectorField operator*(const Rational& c, const VectorField& x) {
  VectorField r = x;
  for (auto& v : r.comps_) v *= c;
  return r;
}

VectorField VectorField::operator-() const { return Rational(-1) * *this; }

bool operator==(const VectorField& a, const VectorField& b) {
  if (!exactalg::same_chart(a.chart_, b.chart_)) return false;
  for (size_t i = 0; i < a.comps_.size(); ++i)
    if (!(a.comps_[i] == b.comps_[i])) return false;
  return true;
}

std::string VectorField::str() const {
  std::string out;
  for (size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + comps_[i].str() + ")*d/d" + (*chart_)[i].name;
  }
  return out.empty() ? "0" : out;
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  if (!exactalg::same_chart(x.chart(), y.chart())) throw DomainError("vector fields live on different charts");
  VectorField r(x.chart());
  for (size_t k = 0; k < x.dim(); ++k) r[k] = x.apply(y[k]) - y.apply(x[k]);
  return r;
}

VectorField apply_tensor(const PolyMatrix& t, const VectorField& x) {
  if (t.rows() != x.dim() || t.cols() != x.dim()) throw DomainError("tensor dimension mismatch");
  VectorField r(x.chart());
  for (size_t i = 0; i < t.rows(); ++i)
    for (size_t j = 0; j < t.cols(); ++j)
      if (!t(i, j).is_zero() && !x[j].is_zero()) r[i] += t(i, j) * x[j];
  return r;
}

}  // namespace tpsgeo::diffgeo
