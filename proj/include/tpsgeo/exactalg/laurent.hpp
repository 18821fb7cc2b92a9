#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tpsgeo/exactalg/rational.hpp"

namespace tpsgeo::exactalg {

struct Symbol {
  std::string name;
  bool invertible = false;
};

// Ordered list of coordinate symbols shared by polynomials, matrices and fields.
class Chart {
 public:
  explicit Chart(std::vector<Symbol> symbols);

  size_t size() const { return symbols_.size(); }
  const Symbol& operator[](size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  std::optional<size_t> find(std::string_view name) const;
  size_t index(std::string_view name) const;
  std::vector<std::string> names() const;

  friend bool operator==(const Chart& a, const Chart& b);

 private:
  std::vector<Symbol> symbols_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<Symbol> symbols);
bool same_chart(const ChartPtr& a, const ChartPtr& b);

using Exponents = std::vector<int>;

// Polynomial in the chart symbols with rational coefficients; negative
// exponents are allowed only on symbols flagged invertible. A polynomial
// with a null chart is a constant.
class LaurentPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(ChartPtr chart, const Rational& c);

  static LaurentPoly variable(ChartPtr chart, size_t index, int power = 1);
  static LaurentPoly variable(ChartPtr chart, std::string_view name, int power = 1);
  static LaurentPoly monomial(ChartPtr chart, Exponents exps, const Rational& coeff);
  static LaurentPoly from_terms(ChartPtr chart, Terms terms);

  const ChartPtr& chart() const { return chart_; }
  const Terms& terms() const { return terms_; }
  size_t nvars() const { return chart_ ? chart_->size() : 0; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<Rational> constant_value() const;
  Rational coefficient(const Exponents& exps) const;
  bool is_monomial() const { return terms_.size() == 1; }
  int total_degree() const;
  int min_total_degree() const;
  bool has_negative_exponents() const;

  // Re-expresses this polynomial over a chart containing all of its symbols.
  LaurentPoly on_chart(const ChartPtr& target) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  friend LaurentPoly operator*(LaurentPoly a, long c) { return a *= Rational(c); }
  friend LaurentPoly operator*(long c, LaurentPoly a) { return a *= Rational(c); }
  LaurentPoly operator-() const;
  LaurentPoly pow(int e) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly partial(size_t index) const;
  LaurentPoly partial(std::string_view name) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  // Replaces chart symbol i by images[i]; all images share one target chart.
  LaurentPoly substitute(const std::vector<LaurentPoly>& images, const ChartPtr& target) const;

  // Largest exponent tuple under lexicographic order.
  std::pair<Exponents, Rational> leading_term() const;

  std::string str() const;

 private:
  struct Unchecked {};
  LaurentPoly(ChartPtr chart, Terms terms, Unchecked);
  void validate() const;
  friend class LaurentAccess;

  ChartPtr chart_;
  Terms terms_;
};

// Common chart of two polynomials: the first chart extended by missing names.
ChartPtr union_chart(const ChartPtr& a, const ChartPtr& b);

// a / b when the quotient is again a Laurent polynomial on the chart.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

}  // namespace tpsgeo::exactalg
