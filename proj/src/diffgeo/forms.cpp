#include "tpsgeo/diffgeo/forms.hpp"

#include <algorithm>

#include "tpsgeo/errors.hpp"

namespace tpsgeo::diffgeo {

DiffForm::DiffForm(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  if (degree < 0) throw DomainError("negative form degree");
}

DiffForm DiffForm::function(const ChartPtr& chart, const LaurentPoly& f) {
  DiffForm w(chart, 0);
  w.add_term({}, f);
  return w;
}

DiffForm DiffForm::coordinate_differential(const ChartPtr& chart, size_t index) {
  DiffForm w(chart, 1);
  if (index >= chart->size()) throw DomainError("differential index out of range");
  w.add_term({index}, LaurentPoly(Rational(1)));
  return w;
}

DiffForm DiffForm::exact(const ChartPtr& chart, const LaurentPoly& f) {
  LaurentPoly g = f.on_chart(chart);
  DiffForm w(chart, 1);
  for (size_t i = 0; i < chart->size(); ++i) w.add_term({i}, g.partial(i));
  return w;
}

DiffForm DiffForm::one_form(const ChartPtr& chart, const std::vector<LaurentPoly>& coeffs) {
  if (coeffs.size() != chart->size()) throw DomainError("one-form needs one coefficient per symbol");
  DiffForm w(chart, 1);
  for (size_t i = 0; i < coeffs.size(); ++i) w.add_term({i}, coeffs[i]);
  return w;
}

LaurentPoly DiffForm::component(const Index& sorted) const {
  auto it = comps_.find(sorted);
  return it == comps_.end() ? LaurentPoly() : it->second;
}

std::vector<LaurentPoly> DiffForm::one_form_coefficients() const {
  if (degree_ != 1) throw DomainError("not a one-form");
  std::vector<LaurentPoly> out(chart_->size());
  for (const auto& [idx, c] : comps_) out[idx[0]] = c;
  return out;
}

void DiffForm::add_term(Index idx, const LaurentPoly& coeff) {
  if (static_cast<int>(idx.size()) != degree_) throw DomainError("form term of wrong degree");
  if (coeff.is_zero()) return;
  // Bubble sort to count the permutation sign; repeated index gives zero.
  bool negate = false;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        negate = !negate;
      }
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] == idx[i + 1]) return;
  LaurentPoly c = negate ? -coeff : coeff;
  auto [it, inserted] = comps_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

DiffForm& DiffForm::operator+=(const DiffForm& o) {
  if (o.is_zero()) return *this;
  if (!is_zero() && degree_ != o.degree_) throw DomainError("adding forms of different degree");
  if (is_zero()) {
    degree_ = o.degree_;
    if (!chart_) chart_ = o.chart_;
  }
  for (const auto& [idx, c] : o.comps_) add_term(idx, c);
  return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& o) { return *this += -o; }

DiffForm operator*(const LaurentPoly& f, const DiffForm& w) {
  DiffForm r(w.chart_, w.degree_);
  for (const auto& [idx, c] : w.comps_) r.add_term(idx, f * c);
  return r;
}

DiffForm DiffForm::operator-() const { return LaurentPoly(Rational(-1)) * *this; }

bool operator==(const DiffForm& a, const DiffForm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree_ != b.degree_ || a.comps_.size() != b.comps_.size()) return false;
  for (const auto& [idx, c] : a.comps_) {
    auto it = b.comps_.find(idx);
    if (it == b.comps_.end() || !(it->second == c)) return false;
  }
  return true;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  DiffForm r(a.chart_ ? a.chart_ : b.chart_, a.degree_ + b.degree_);
  for (const auto& [ia, ca] : a.comps_)
    for (const auto& [ib, cb] : b.comps_) {
      DiffForm::Index idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(std::move(idx), ca * cb);
    }
  return r;
}

DiffForm DiffForm::d() const {
  DiffForm r(chart_, degree_ + 1);
  for (const auto& [idx, c] : comps_) {
    LaurentPoly cc = c.on_chart(chart_);
    for (size_t j = 0; j < chart_->size(); ++j) {
      LaurentPoly dc = cc.partial(j);
      if (dc.is_zero()) continue;
      Index ni{j};
      ni.insert(ni.end(), idx.begin(), idx.end());
      r.add_term(std::move(ni), dc);
    }
  }
  return r;
}

DiffForm DiffForm::interior(const VectorField& x) const {
  if (degree_ == 0) return DiffForm(chart_, 0);
  DiffForm r(chart_, degree_ - 1);
  for (const auto& [idx, c] : comps_)
    for (size_t a = 0; a < idx.size(); ++a) {
      const LaurentPoly& xa = x[idx[a]];
      if (xa.is_zero()) continue;
      Index rest = idx;
      rest.erase(rest.begin() + static_cast<long>(a));
      LaurentPoly term = c * xa;
      r.add_term(std::move(rest), a % 2 ? -term : term);
    }
  return r;
}

DiffForm DiffForm::lie(const VectorField& x) const {
  DiffForm a = d().interior(x);
  if (degree_ == 0) return a;
  return a + interior(x).d();
}

LaurentPoly DiffForm::evaluate(const std::vector<VectorField>& args) const {
  if (static_cast<int>(args.size()) != degree_) throw DomainError("form evaluated on wrong number of fields");
  LaurentPoly total;
  for (const auto& [idx, c] : comps_) {
    if (degree_ == 0) {
      total += c;
      continue;
    }
    // Determinant of dx^{idx[a]}(args[b]) by permutation expansion (degree is small).
    std::vector<size_t> perm(idx.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    LaurentPoly det;
    do {
      int inversions = 0;
      for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
          if (perm[i] > perm[j]) ++inversions;
      LaurentPoly prod(Rational(1));
      bool zero = false;
      for (size_t a = 0; a < idx.size() && !zero; ++a) {
        const LaurentPoly& v = args[perm[a]][idx[a]];
        if (v.is_zero()) zero = true;
        else prod *= v;
      }
      if (!zero) det += inversions % 2 ? -prod : prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += c * det;
  }
  return total;
}

std::string DiffForm::str() const {
  if (comps_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : comps_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    for (size_t a = 0; a < idx.size(); ++a) out += (a ? "^d" : "*d") + (*chart_)[idx[a]].name;
  }
  return out;
}

}  // namespace tpsgeo::diffgeo
