#include "tpsgeo/diffgeo/poly_map.hpp"

#include "tpsgeo/errors.hpp"

namespace tpsgeo::diffgeo {

PolyMap::PolyMap(ChartPtr source, ChartPtr target, std::vector<LaurentPoly> images,
                 std::vector<size_t> parameters)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != target_->size()) throw DomainError("map needs one image per target symbol");
  for (auto& im : images_) im = im.on_chart(source_);
  is_param_.assign(source_->size(), false);
  for (size_t p : parameters) {
    if (p >= source_->size()) throw DomainError("parameter index out of range");
    is_param_[p] = true;
  }
}

PolyMatrix PolyMap::jacobian() const {
  PolyMatrix j(target_->size(), source_->size(), source_);
  for (size_t i = 0; i < target_->size(); ++i)
    for (size_t k = 0; k < source_->size(); ++k)
      if (!is_param_[k]) j(i, k) = images_[i].partial(k);
  return j;
}

LaurentPoly PolyMap::pull(const LaurentPoly& f) const {
  if (f.is_constant()) return LaurentPoly(source_, *f.constant_value());
  return f.on_chart(target_).substitute(images_, source_);
}

DiffForm PolyMap::pulled_differential(size_t target_index) const {
  DiffForm w(source_, 1);
  for (size_t k = 0; k < source_->size(); ++k)
    if (!is_param_[k]) w.add_term({k}, images_[target_index].partial(k));
  return w;
}

DiffForm PolyMap::pull(const DiffForm& w) const {
  DiffForm out(source_, w.degree());
  std::vector<DiffForm> diffs;
  diffs.reserve(target_->size());
  for (size_t i = 0; i < target_->size(); ++i) diffs.push_back(pulled_differential(i));
  for (const auto& [idx, c] : w.components()) {
    DiffForm term = DiffForm::function(source_, pull(c));
    for (size_t i : idx) term = wedge(term, diffs[i]);
    out += term;
  }
  return out;
}

PolyMatrix PolyMap::pull_metric(const PolyMatrix& g) const {
  if (g.rows() != target_->size() || g.cols() != target_->size())
    throw DomainError("metric does not match the target chart");
  PolyMatrix gf(g.rows(), g.cols(), source_);
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.cols(); ++j) gf(i, j) = pull(g(i, j));
  PolyMatrix j = jacobian();
  PolyMatrix r = j.transpose() * gf * j;
  r.set_chart(source_);
  return r;
}

VectorField PolyMap::push(const VectorField& x, const PolyMap& inverse) const {
  if (!exactalg::same_chart(x.chart(), source_)) throw DomainError("field is not on the map source");
  if (!exactalg::same_chart(inverse.source(), target_) || !exactalg::same_chart(inverse.target(), source_))
    throw DomainError("inverse map has mismatched charts");
  PolyMatrix j = jacobian();
  VectorField out(target_);
  for (size_t i = 0; i < target_->size(); ++i) {
    LaurentPoly c;
    for (size_t k = 0; k < source_->size(); ++k)
      if (!j(i, k).is_zero() && !x[k].is_zero()) c += j(i, k) * x[k];
    out[i] = inverse.pull(c);
  }
  return out;
}

}  // namespace tpsgeo::diffgeo
