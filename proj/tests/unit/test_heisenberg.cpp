#include <doctest.h>

#include "tpsgeo/errors.hpp"
#include "tpsgeo/heisenberg/heisenberg.hpp"

using namespace tpsgeo;
using namespace tpsgeo::heisenberg;

namespace {

void require_all(const std::vector<report::Check>& checks) {
  REQUIRE(!checks.empty());
  for (const auto& c : checks) {
    INFO(c.claim << " :: " << c.witness.dump());
    CHECK(c.passed());
  }
}

std::vector<Rational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("group law examples") {
  HeisElement g{ints({1}), ints({2}), 0}, h{ints({3}), ints({4}), 0};
  CHECK(multiply(g, h) == HeisElement{ints({4}), ints({6}), 4});
  CHECK(from_matrix(matrix_product(to_matrix(g), to_matrix(h))) == multiply(g, h));
  CHECK(multiply(g, identity(1)) == g);
  CHECK(multiply(g, inverse(g)) == identity(1));
  CHECK(inverse(HeisElement{ints({1, 2}), ints({3, 4}), 5}).c == Rational(-5 + 11));
  CHECK_THROWS_AS(multiply(g, HeisElement{ints({1, 2}), ints({3, 4}), 0}), InputError);
}

TEST_CASE("exponential and logarithm") {
  HeisAlgElement x{ints({2}), ints({3}), 0};
  CHECK(exp(x).c == Rational(3));
  CHECK(exp_series(x) == exp(x));
  CHECK(exp(HeisAlgElement{ints({0, 0}), ints({0, 0}), 0}) == identity(2));
  CHECK(log(exp(x)) == x);
}

TEST_CASE("chi and the left action") {
  HeisElement g{ints({1, 2}), ints({3, 4}), 5};
  CHECK(chi(g) == ints({-5, 3, 4, 1, 2}));
  CHECK(chi_inv(chi(g)) == g);
  HeisElement t{ints({1, -1}), ints({2, 0}), 3};
  auto m = ints({7, 3, 4, 1, 2});
  // x0 - c - <a, p> = 7 - 3 - (3 - 4)
  CHECK(left_action(t, m) == ints({5, 5, 4, 2, 1}));
  CHECK_THROWS_AS(chi_inv(ints({1, 2})), InputError);
}

TEST_CASE("matrix shape and json input validation") {
  RationalMatrix bad = to_matrix(HeisElement{ints({1}), ints({2}), 3});
  bad[1][0] = Rational(1);
  CHECK_THROWS_AS(from_matrix(bad), InputError);
  HeisElement g{ints({1, 2}), {Rational(1, 3), Rational(-4)}, Rational(7, 2)};
  CHECK(element_from_json(nlohmann::json::parse(to_json(g).dump())) == g);
  CHECK_THROWS_AS(element_from_json(nlohmann::json{{"a", {"1"}}, {"b", {"1", "2"}}, {"c", "0"}}), InputError);
  CHECK_THROWS_AS(element_from_json(nlohmann::json{{"a", {"1"}}}), InputError);
}

TEST_CASE("group axioms on random samples") {
  for (int n = 1; n <= 3; ++n) require_all(group_checks(n, 200, 42 + n));
}

TEST_CASE("invariant fields, contact form and metric") {
  for (int n = 1; n <= 3; ++n) require_all(invariant_fields_and_checks(n));
}
