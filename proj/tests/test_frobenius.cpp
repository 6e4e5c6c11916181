#include <random>

#include "doctest.h"
#include "recurconv/errors.hpp"
#include "recurconv/frobenius.hpp"
#include "recurconv/heun.hpp"
#include "support.hpp"

using namespace recurconv;

namespace {

ODESpec ode(std::initializer_list<PolynomialInN> coeffs) { return ODESpec{std::vector<PolynomialInN>(coeffs)}; }

ODESpec bessel(complex nu) { return ode({{-nu * nu, 0.0, 1.0}, {0.0, 1.0}, {0.0, 0.0, 1.0}}); }

}  // namespace

TEST_CASE("first-order exponential") {
  const auto e = ode({{-1.0}, {1.0}});
  const auto roots = indicial_exponents(e);
  REQUIRE(roots.size() == 1);
  CHECK(std::abs(roots[0]) < 1e-15);
  const auto spec = derive_recurrence(e, 0.0);
  REQUIRE(spec.k() == 1);
  for (std::int64_t n = 0; n < 20; ++n) CHECK(std::abs(spec.coefficients[0](n) - 1.0 / (n + 1.0)) < 1e-16);
}

TEST_CASE("y'' - y with a vanishing first coefficient") {
  const auto spec = derive_recurrence(ode({{-1.0}, {}, {1.0}}), 0.0);
  REQUIRE(spec.k() == 2);
  CHECK(spec.coefficients[0].is_zero());
  CHECK(spec.coefficients[1].n_min() == 1);
  for (std::int64_t n = 1; n < 20; ++n)
    CHECK(std::abs(spec.coefficients[1](n) - 1.0 / ((n + 1.0) * n)) < 1e-16);
  // Even terms of cosh.
  const auto d = run_variable(spec, 8).values;
  CHECK(std::abs(d[2] - 0.5) < 1e-16);
  CHECK(std::abs(d[4] - 1.0 / 24.0) < 1e-16);
  CHECK(d[3] == complex(0.0));
}

TEST_CASE("Bessel exponents") {
  const auto roots = indicial_exponents(bessel(1.0 / 3.0));
  REQUIRE(roots.size() == 2);
  CHECK(std::abs(roots[0] - 1.0 / 3.0) < 1e-14);
  CHECK(std::abs(roots[1] + 1.0 / 3.0) < 1e-14);
  CHECK_THROWS_AS(derive_recurrence(bessel(1.0 / 3.0), 0.2), NotAnIndicialRoot);
}

TEST_CASE("integer exponent differences") {
  // ν = 1/2: the second series exists because the coefficient at the resonant step vanishes.
  const auto spec = derive_recurrence(bessel(0.5), -0.5);
  CHECK(spec.coefficients[0].is_zero());
  const auto d = run_variable(spec, 6).values;
  CHECK(std::abs(d[2] + 0.5) < 1e-15);  // x^{-1/2} cos x
  // ν = 1: the λ = -1 series breaks down at n = 1.
  CHECK_THROWS_AS(derive_recurrence(bessel(1.0), -1.0), UnsupportedExpansionPoint);
  CHECK_NOTHROW(derive_recurrence(bessel(1.0), 1.0));
}

TEST_CASE("irregular singular point") {
  CHECK_THROWS_AS(indicial_polynomial(ode({{-1.0}, {0.0, 0.0, 1.0}})), UnsupportedExpansionPoint);
  CHECK_THROWS_AS(derive_recurrence(ode({{-1.0}, {0.0, 0.0, 1.0}}), 0.0), UnsupportedExpansionPoint);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(derive_recurrence(ode({{1.0}}), 0.0), ValidationError);
  CHECK_THROWS_AS(derive_recurrence(ode({{1.0}, {}}), 0.0), ValidationError);
}

TEST_CASE("Heun round trip") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    HeunParams p;
    do p.a = testsupport::random_complex(rng, 4.0);
    while (std::abs(p.a) < 0.2);
    p.alpha = testsupport::random_complex(rng, 2.0);
    p.beta = testsupport::random_complex(rng, 2.0);
    p.gamma = testsupport::random_complex(rng, 2.0) + complex(0.0, 0.25);
    p.delta = testsupport::random_complex(rng, 2.0);
    p.q = testsupport::random_complex(rng, 2.0);
    const auto e = heun_ode(p);
    const auto exps = indicial_exponents(e);
    REQUIRE(exps.size() == 2);
    const auto [l0, l1] = indicial_roots(p);
    for (const complex lambda : {l0, l1}) {
      const auto derived = derive_recurrence(e, lambda);
      const auto direct = heun_recurrence(p, lambda);
      REQUIRE(derived.k() == 2);
      for (std::int64_t n = 0; n <= 50; ++n)
        for (int l = 0; l < 2; ++l)
          CHECK(testsupport::relative_error(derived.coefficients[l].at(static_cast<double>(n)), direct.coefficients[l].at(static_cast<double>(n))) <= 1e-10);
    }
  }
}

TEST_CASE("residual of the truncated series") {
  SUBCASE("Bessel away from the origin") {
    const auto e = bessel(1.0 / 3.0);
    for (const complex lambda : indicial_exponents(e)) {
      const auto spec = derive_recurrence(e, lambda);
      const auto seq = run_variable(spec, 199);
      const auto r = ode_residual(e, seq, lambda, 1.5, 200);
      CHECK(r.relative() <= 1e-12);
    }
  }
  SUBCASE("Heun a = 2") {
    HeunParams p;
    p.gamma = 0.5;
    p.q = 0.3;
    const auto e = heun_ode(p);
    for (const complex lambda : {complex(0.0), complex(0.5)}) {
      const auto spec = derive_recurrence(e, lambda);
      const double r = heun_domain(p).abs_radius;
      const auto res = ode_residual(e, run_variable(spec, 199), lambda, 0.5 * r, 200);
      CHECK(res.relative() <= 1e-12);
    }
  }
  SUBCASE("a wrong series leaves a residual") {
    const auto e = ode({{-1.0}, {1.0}});
    SequenceWindow w;
    w.values.assign(50, complex(1.0));
    CHECK(ode_residual(e, w, 0.0, 0.5, 50).relative() > 1e-3);
  }
}
