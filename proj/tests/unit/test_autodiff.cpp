#include <doctest.h>

#include <cmath>

#include "tpsgeo/autodiff/jet.hpp"
#include "tpsgeo/errors.hpp"

using namespace tpsgeo;
using namespace tpsgeo::autodiff;

TEST_CASE("jet arithmetic") {
  std::vector<Jet3> u = Jet3::seed(std::vector<double>{2.0, 3.0});
  Jet3 f = u[0] * u[1];
  CHECK(f.value() == 6);
  CHECK(f.grad(0) == 3);
  CHECK(f.grad(1) == 2);
  CHECK(f.hess(0, 1) == 1);
  CHECK(f.hess(1, 0) == 1);
  CHECK(f.hess(0, 0) == 0);
  CHECK(f.third(0, 0, 1) == 0);

  Jet3 g = u[0] * u[0] * u[1];
  CHECK(g.third(0, 0, 1) == 2);
  CHECK(g.third(0, 1, 0) == 2);
  CHECK(g.third(1, 0, 0) == 2);
  CHECK(g.third(0, 0, 0) == 0);

  Jet3 q = 1.0 / u[0];
  CHECK(q.value() == doctest::Approx(0.5));
  CHECK(q.grad(0) == doctest::Approx(-0.25));
  CHECK(q.hess(0, 0) == doctest::Approx(0.25));
  CHECK(q.third(0, 0, 0) == doctest::Approx(-6.0 / 16));

  std::vector<size_t> idx{0, 1};
  CHECK(f.partial(idx) == 1);
  std::vector<size_t> bad{0, 5};
  CHECK_THROWS_AS(f.partial(bad), InputError);
  CHECK_THROWS_AS(u[0] + Jet3::variable(3, 0, 1.0), InputError);
}

TEST_CASE("elementary functions") {
  Jet3 x = Jet3::variable(1, 0, 0.0);
  Jet3 e = exp(x);
  CHECK(e.value() == 1);
  CHECK(e.grad(0) == 1);
  CHECK(e.hess(0, 0) == 1);
  CHECK(e.third(0, 0, 0) == 1);

  Jet3 l = log(Jet3::variable(1, 0, 2.0));
  CHECK(l.grad(0) == doctest::Approx(0.5));
  CHECK(l.hess(0, 0) == doctest::Approx(-0.25));
  CHECK(l.third(0, 0, 0) == doctest::Approx(0.25));

  Jet3 p = pow(Jet3::variable(1, 0, 4.0), 0.5);
  CHECK(p.value() == doctest::Approx(2));
  CHECK(p.grad(0) == doctest::Approx(0.25));
  CHECK(p.third(0, 0, 0) == doctest::Approx(3.0 / 8 * std::pow(4.0, -2.5)));

  CHECK_THROWS_AS(log(Jet3::variable(1, 0, -1.0)), NumericDomainError);
  CHECK_THROWS_AS(pow(Jet3::variable(1, 0, -1.0), 0.5), NumericDomainError);
  CHECK_THROWS_AS(Jet3::variable(1, 0, 1.0) / Jet3::constant(1, 0.0), NumericDomainError);
  CHECK(pow(Jet3::variable(1, 0, -2.0), 3.0).value() == -8);
}

TEST_CASE("quad-precision finite differences") {
  QuadFunction cube = [](std::span<const Quad> u) { return u[0] * u[0] * u[0]; };
  std::vector<double> pt{1.0};
  std::vector<size_t> i3{0, 0, 0}, i1{0};
  CHECK(close(fd_oracle(cube, pt, i3).value, 6.0, 1e-10, 1e-12));
  CHECK(close(fd_oracle(cube, pt, i1).value, 3.0, 1e-12, 1e-14));

  QuadFunction constant = [](std::span<const Quad>) { return static_cast<Quad>(4); };
  std::vector<double> pt2{0.3, -0.7};
  std::vector<size_t> i01{0, 1};
  CHECK(std::abs(fd_oracle(constant, pt2, i01).value) < 1e-12);

  QuadFunction mixed = [](std::span<const Quad> u) { return expq(u[0]) * u[1] * u[1]; };
  std::vector<size_t> i011{0, 1, 1};
  CHECK(close(fd_oracle(mixed, pt2, i011).value, 2 * std::exp(0.3), 1e-10, 1e-12));

  std::vector<size_t> i4{0, 0, 0, 0};
  CHECK_THROWS_AS(fd_oracle(cube, pt, i4), InputError);
  QuadFunction bad = [](std::span<const Quad> u) { return logq(u[0]); };
  std::vector<double> zero{0.0};
  CHECK_THROWS_AS(fd_oracle(bad, zero, i1), NumericDomainError);
}

TEST_CASE("tolerance comparison") {
  CHECK(close(1.0, 1.0 + 1e-12, 1e-10, 0));
  CHECK(!close(1.0, 1.1, 1e-10, 0));
  CHECK(close(1e-12, 0.0, 1e-10, 1e-10));
  CHECK(!close(NAN, 0.0, 1, 1));
}
