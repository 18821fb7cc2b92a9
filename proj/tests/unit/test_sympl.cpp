#include <doctest.h>

#include "test_support.hpp"
#include "tpsgeo/diffgeo/killing.hpp"
#include "tpsgeo/errors.hpp"
#include "tpsgeo/sympl/sympl.hpp"

using namespace tpsgeo;
using namespace tpsgeo::sympl;

namespace {

void require_all(const std::vector<report::Check>& checks) {
  REQUIRE(!checks.empty());
  for (const auto& c : checks) {
    INFO(c.claim << " :: " << c.witness.dump());
    CHECK(c.passed());
  }
}

}  // namespace

TEST_CASE("symplectization metric basics") {
  for (int n = 1; n <= 3; ++n) require_all(verify_sympl_basics(n));
  CHECK_THROWS_AS(build_sympl(0), DomainError);
}

TEST_CASE("embedding pulls back the contact data") {
  for (int n = 1; n <= 3; ++n) require_all(embed_and_pullback(n));
}

TEST_CASE("canonical frame") {
  for (int n = 1; n <= 3; ++n) require_all(verify_canonical_frame_sympl(n));
}

TEST_CASE("curvature of the symplectization metric") {
  for (int n = 1; n <= 2; ++n) require_all(curvature_suite_sympl(n));
}

TEST_CASE("killing catalog and solver agree") {
  for (int n = 1; n <= 2; ++n) {
    require_all(verify_killing_catalog_sympl(n));
    auto basis = diffgeo::killing_solve(build_sympl(n).metric, 2);
    size_t expect = static_cast<size_t>((n + 2) * (n + 2) - 1);
    CHECK(basis.size() == expect);
    std::vector<VectorField> cat;
    for (const auto& e : killing_catalog_sympl(n)) cat.push_back(e.field);
    CHECK(cat.size() == expect);
    CHECK(diffgeo::same_span(basis, cat));
  }
}

TEST_CASE("nijenhuis tensor and non-parallel structure") {
  for (int n = 1; n <= 2; ++n) require_all(nijenhuis_check(n));
}

TEST_CASE("hyperbolic rotation") {
  for (int n = 1; n <= 2; ++n) require_all(hyperbolic_rotation_check(n));
}

TEST_CASE("projectivization charts") {
  for (int n = 1; n <= 2; ++n) require_all(projectivization_check(n, 12, 11));
  std::vector<Rational> origin(4, Rational(0));
  CHECK_THROWS_AS(proj_chart(1, origin), DomainError);
  std::vector<Rational> pt{Rational(0), Rational(2), Rational(3), Rational(5)};
  auto pc = proj_chart(1, pt);
  CHECK(pc.id.str() == "U1");
  CHECK(pc.coords.size() == 3);
}

TEST_CASE("cells and their restricted metrics") {
  require_all(verify_cells(2));
  require_all(verify_cells(3));
  auto cell = cell_restrict(1, 2);
  CHECK(cell.G_k == cell_block_reference(1, 2));
}

TEST_CASE("ideal gas lies on the lifted quadric") {
  require_all(ideal_gas_check(Rational(8314, 1000), 10, 3));
  require_all(ideal_gas_check(Rational(1), 10, 5));
}

TEST_CASE("quadric signature") {
  auto s1 = quadric_signature(1);
  CHECK((s1.plus == 2 && s1.minus == 2 && s1.zero == 0));
  auto s2 = quadric_signature(2);
  CHECK((s2.plus == 3 && s2.minus == 3 && s2.zero == 0));
  for (int n = 1; n <= 3; ++n) require_all(verify_quadric(n));
}

TEST_CASE("affine group model") {
  for (int n = 0; n <= 2; ++n) require_all(affine_symplecto(n));
}
