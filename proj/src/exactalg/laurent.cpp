#include "tpsgeo/exactalg/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "tpsgeo/errors.hpp"

namespace tpsgeo::exactalg {

Chart::Chart(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  for (size_t i = 0; i < symbols_.size(); ++i)
    for (size_t j = i + 1; j < symbols_.size(); ++j)
      if (symbols_[i].name == symbols_[j].name)
        throw DomainError("duplicate symbol '" + symbols_[i].name + "' in chart");
}

std::optional<size_t> Chart::find(std::string_view name) const {
  for (size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

size_t Chart::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw DomainError("unknown symbol '" + std::string(name) + "'");
  return *i;
}

std::vector<std::string> Chart::names() const {
  std::vector<std::string> out;
  out.reserve(symbols_.size());
  for (const auto& s : symbols_) out.push_back(s.name);
  return out;
}

bool operator==(const Chart& a, const Chart& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].name != b[i].name || a[i].invertible != b[i].invertible) return false;
  return true;
}

ChartPtr make_chart(std::vector<Symbol> symbols) {
  return std::make_shared<const Chart>(std::move(symbols));
}

bool same_chart(const ChartPtr& a, const ChartPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

ChartPtr union_chart(const ChartPtr& a, const ChartPtr& b) {
  if (!a) return b;
  if (!b || same_chart(a, b)) return a;
  std::vector<Symbol> syms = a->symbols();
  bool grew = false;
  for (const auto& s : b->symbols()) {
    auto i = a->find(s.name);
    if (i) {
      if ((*a)[*i].invertible != s.invertible)
        throw DomainError("symbol '" + s.name + "' has conflicting invertibility");
    } else {
      syms.push_back(s);
      grew = true;
    }
  }
  return grew ? make_chart(std::move(syms)) : a;
}

namespace {

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

void accumulate(LaurentPoly::Terms& terms, const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

std::string pretty_term(const ChartPtr& chart, const Exponents& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += (*chart)[i].name;
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

class LaurentAccess {
 public:
  static LaurentPoly make(ChartPtr chart, LaurentPoly::Terms terms) {
    return LaurentPoly(std::move(chart), std::move(terms), LaurentPoly::Unchecked{});
  }
};

LaurentPoly::LaurentPoly(ChartPtr chart, Terms terms, Unchecked)
    : chart_(std::move(chart)), terms_(std::move(terms)) {}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

LaurentPoly::LaurentPoly(ChartPtr chart, const Rational& c) : chart_(std::move(chart)) {
  if (!c.is_zero()) terms_.emplace(Exponents(nvars(), 0), c);
}

LaurentPoly LaurentPoly::variable(ChartPtr chart, size_t index, int power) {
  if (!chart || index >= chart->size()) throw DomainError("variable index out of range");
  Exponents e(chart->size(), 0);
  e[index] = power;
  return monomial(std::move(chart), std::move(e), Rational(1));
}

LaurentPoly LaurentPoly::variable(ChartPtr chart, std::string_view name, int power) {
  if (!chart) throw DomainError("unknown symbol '" + std::string(name) + "'");
  size_t i = chart->index(name);
  return variable(std::move(chart), i, power);
}

LaurentPoly LaurentPoly::monomial(ChartPtr chart, Exponents exps, const Rational& coeff) {
  Terms t;
  if (!coeff.is_zero()) t.emplace(std::move(exps), coeff);
  return from_terms(std::move(chart), std::move(t));
}

LaurentPoly LaurentPoly::from_terms(ChartPtr chart, Terms terms) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second.is_zero())
      it = terms.erase(it);
    else
      ++it;
  }
  LaurentPoly p(std::move(chart), std::move(terms), Unchecked{});
  p.validate();
  return p;
}

void LaurentPoly::validate() const {
  for (const auto& [e, c] : terms_) {
    if (e.size() != nvars()) throw DomainError("exponent tuple length does not match chart");
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 && !(*chart_)[i].invertible)
        throw DomainError("negative exponent on non-invertible symbol '" + (*chart_)[i].name + "'");
  }
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

std::optional<Rational> LaurentPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational LaurentPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::total_degree() const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int v : e) d += v;
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

int LaurentPoly::min_total_degree() const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int v : e) d += v;
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

bool LaurentPoly::has_negative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (int v : e)
      if (v < 0) return true;
  return false;
}

LaurentPoly LaurentPoly::on_chart(const ChartPtr& target) const {
  if (same_chart(chart_, target)) return LaurentPoly(target, terms_, Unchecked{});
  size_t m = target ? target->size() : 0;
  std::vector<size_t> where(nvars());
  for (size_t i = 0; i < nvars(); ++i) {
    auto j = target ? target->find((*chart_)[i].name) : std::nullopt;
    if (!j) {
      bool used = std::any_of(terms_.begin(), terms_.end(),
                              [i](const auto& t) { return t.first[i] != 0; });
      if (used) throw DomainError("symbol '" + (*chart_)[i].name + "' missing from target chart");
      where[i] = m;
    } else {
      if ((*target)[*j].invertible != (*chart_)[i].invertible)
        throw DomainError("symbol '" + (*chart_)[i].name + "' has conflicting invertibility");
      where[i] = *j;
    }
  }
  Terms out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(m, 0);
    for (size_t i = 0; i < e.size(); ++i)
      if (where[i] < m) ne[where[i]] = e[i];
    out.emplace(std::move(ne), c);
  }
  return LaurentPoly(target, std::move(out), Unchecked{});
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (!same_chart(chart_, o.chart_)) {
    ChartPtr u = union_chart(chart_, o.chart_);
    *this = on_chart(u);
    LaurentPoly ob = o.on_chart(u);
    for (const auto& [e, c] : ob.terms_) accumulate(terms_, e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (!same_chart(chart_, o.chart_)) {
    ChartPtr u = union_chart(chart_, o.chart_);
    *this = on_chart(u);
    return *this *= o.on_chart(u);
  }
  Terms out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) accumulate(out, add_exps(ea, eb), ca * cb);
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial()) throw DomainError("negative power of a non-monomial polynomial");
    const auto& [ex, c] = *terms_.begin();
    Exponents ne(ex.size());
    for (size_t i = 0; i < ex.size(); ++i) ne[i] = ex[i] * e;
    return monomial(chart_, std::move(ne), c.pow(e));
  }
  LaurentPoly result(chart_, Rational(1));
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (same_chart(a.chart_, b.chart_) || a.is_constant() || b.is_constant()) {
    if (a.is_constant() && b.is_constant()) return a.constant_value() == b.constant_value();
    if (!same_chart(a.chart_, b.chart_)) return false;
    return a.terms_ == b.terms_;
  }
  ChartPtr u = union_chart(a.chart_, b.chart_);
  return a.on_chart(u).terms_ == b.on_chart(u).terms_;
}

LaurentPoly LaurentPoly::partial(size_t index) const {
  if (index >= nvars()) throw DomainError("partial derivative index out of range");
  Terms out;
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents ne = e;
    ne[index] -= 1;
    accumulate(out, ne, c * Rational(e[index]));
  }
  return LaurentPoly(chart_, std::move(out), Unchecked{});
}

LaurentPoly LaurentPoly::partial(std::string_view name) const {
  if (!chart_) {
    // A constant has zero derivative, but the symbol must still be known.
    throw DomainError("unknown symbol '" + std::string(name) + "'");
  }
  return partial(chart_->index(name));
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const {
  if (chart_ && point.size() != nvars()) throw DomainError("evaluation point has wrong dimension");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && point[i].is_zero())
        throw DomainError("evaluation of negative power of '" + (*chart_)[i].name + "' at zero");
      t *= point[i].pow(e[i]);
    }
    sum += t;
  }
  return sum;
}

double LaurentPoly::evaluate(std::span<const double> point) const {
  if (chart_ && point.size() != nvars()) throw DomainError("evaluation point has wrong dimension");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double();
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0 && point[i] == 0.0)
        throw DomainError("evaluation of negative power of '" + (*chart_)[i].name + "' at zero");
      t *= std::pow(point[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

LaurentPoly LaurentPoly::substitute(const std::vector<LaurentPoly>& images,
                                    const ChartPtr& target) const {
  if (images.size() != nvars()) throw DomainError("substitution needs one image per symbol");
  std::vector<LaurentPoly> imgs;
  imgs.reserve(images.size());
  for (const auto& im : images) imgs.push_back(im.on_chart(target));
  // Cache powers per symbol.
  std::vector<std::map<int, LaurentPoly>> powers(images.size());
  auto power_of = [&](size_t i, int e) -> const LaurentPoly& {
    auto it = powers[i].find(e);
    if (it != powers[i].end()) return it->second;
    if (e < 0 && !imgs[i].is_monomial())
      throw DomainError("negative power of '" + (*chart_)[i].name + "' needs a monomial image");
    return powers[i].emplace(e, imgs[i].pow(e)).first->second;
  };
  LaurentPoly out(target, Rational(0));
  for (const auto& [e, c] : terms_) {
    LaurentPoly t(target, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= power_of(i, e[i]);
    out += t;
  }
  return out;
}

std::pair<Exponents, Rational> LaurentPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return *terms_.rbegin();
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = pretty_term(chart_, e);
    Rational mag = c.abs();
    std::string coeff = mag.str();
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (mono.empty())
      out += coeff;
    else if (mag.is_one())
      out += mono;
    else
      out += coeff + "*" + mono;
    first = false;
  }
  return out;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  ChartPtr u = union_chart(a.chart(), b.chart());
  if (a.is_zero()) return LaurentPoly(u, Rational(0));
  LaurentPoly A = a.on_chart(u), B = b.on_chart(u);
  size_t m = u ? u->size() : 0;
  auto min_exps = [m](const LaurentPoly& p) {
    Exponents mn(m, 0);
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
      for (size_t i = 0; i < m; ++i) mn[i] = first ? e[i] : std::min(mn[i], e[i]);
      first = false;
    }
    return mn;
  };
  Exponents ma = min_exps(A), mb = min_exps(B);
  auto shifted = [m](const LaurentPoly& p, const Exponents& s) {
    LaurentPoly::Terms t;
    for (const auto& [e, c] : p.terms()) {
      Exponents ne(m);
      for (size_t i = 0; i < m; ++i) ne[i] = e[i] - s[i];
      t.emplace(std::move(ne), c);
    }
    return t;
  };
  LaurentPoly::Terms R = shifted(A, ma), Bs = shifted(B, mb), Q;
  const auto [lb_e, lb_c] = *Bs.rbegin();
  while (!R.empty()) {
    const auto [lr_e, lr_c] = *R.rbegin();
    Exponents d(m);
    for (size_t i = 0; i < m; ++i) {
      d[i] = lr_e[i] - lb_e[i];
      if (d[i] < 0) return std::nullopt;
    }
    Rational c = lr_c / lb_c;
    accumulate(Q, d, c);
    for (const auto& [e, v] : Bs) accumulate(R, add_exps(e, d), -(c * v));
  }
  LaurentPoly::Terms out;
  for (const auto& [e, c] : Q) {
    Exponents ne(m);
    for (size_t i = 0; i < m; ++i) {
      ne[i] = e[i] + ma[i] - mb[i];
      if (ne[i] < 0 && !(*u)[i].invertible) return std::nullopt;
    }
    out.emplace(std::move(ne), c);
  }
  return LaurentAccess::make(u, std::move(out));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace tpsgeo::exactalg
