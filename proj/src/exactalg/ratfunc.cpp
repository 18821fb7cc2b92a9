#include "tpsgeo/exactalg/ratfunc.hpp"

#include "tpsgeo/errors.hpp"

namespace tpsgeo::exactalg {

RationalFunction::RationalFunction(LaurentPoly num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(Rational(1));
    return;
  }
  if (auto q = divide_exact(num_, den_)) {
    num_ = std::move(*q);
    den_ = LaurentPoly(Rational(1));
    return;
  }
  Rational lead = den_.leading_term().second;
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

std::optional<LaurentPoly> RationalFunction::as_laurent() const {
  if (auto c = den_.constant_value()) return num_ * c->inverse();
  return divide_exact(num_, den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw DomainError("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational d = den_.is_constant() ? *den_.constant_value() : den_.evaluate(point);
  if (d.is_zero()) throw DomainError("rational function evaluated on its pole set");
  Rational n = num_.is_constant() ? *num_.constant_value() : num_.evaluate(point);
  return n / d;
}

RationalFunction RationalFunction::substitute(const std::vector<LaurentPoly>& images,
                                              const ChartPtr& target) const {
  auto sub = [&](const LaurentPoly& p) {
    if (p.is_constant()) return LaurentPoly(target, *p.constant_value());
    return p.substitute(images, target);
  };
  return RationalFunction(sub(num_), sub(den_));
}

std::string RationalFunction::str() const {
  if (den_.is_constant()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace tpsgeo::exactalg
