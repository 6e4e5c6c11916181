#include <random>

#include "doctest.h"
#include "recurconv/coefficient_model.hpp"
#include "recurconv/errors.hpp"
#include "recurconv/heun.hpp"
#include "support.hpp"

using namespace recurconv;

namespace {

RationalIndexFunction ratio(std::initializer_list<complex> num, std::initializer_list<complex> den, std::int64_t n_min = 0) {
  return {PolynomialInN(num), PolynomialInN(den), n_min};
}

}  // namespace

TEST_CASE("construction rejects bad coefficient functions") {
  CHECK_THROWS_AS(ratio({1.0}, {}), ValidationError);
  CHECK_THROWS_AS(ratio({1.0}, {1.0}, -1), ValidationError);
  CHECK_THROWS_AS(ratio({1.0}, {-3.0, 1.0}), CoefficientPole);  // 1/(n-3)
  CHECK_NOTHROW(ratio({1.0}, {-3.0, 1.0}, 4));
  CHECK_THROWS_AS(ratio({1.0}, {-3.0, 1.0}, 4)(2), CoefficientPole);
  CHECK_NOTHROW(ratio({1.0}, {-2.5, 1.0}));  // pole between integers
  CHECK_THROWS_AS(ratio({std::nan("")}, {1.0}), ValidationError);
}

TEST_CASE("limit_of") {
  CHECK(limit_of(ratio({0.0, 1.0}, {1.0, 1.0})) == complex(1.0));
  CHECK(limit_of(ratio({3.0, 2.0}, {1.0, 0.0, 1.0})) == complex(0.0));
  CHECK(limit_of(ratio({0.0, complex(0, 3)}, {1.0, 2.0})) == complex(0, 1.5));
  CHECK(limit_of(RationalIndexFunction::zero()) == complex(0.0));
  CHECK_THROWS_AS(limit_of(ratio({0.0, 0.0, 1.0}, {1.0, 1.0})), DivergentLimit);

  SUBCASE("Heun normalized first coefficient tends to one") {
    HeunParams p;
    p.a = complex(0.3, 1.2);
    p.gamma = 0.5;
    p.q = complex(0.2, -0.1);
    const auto spec = heun_recurrence(p, 0.0);
    const complex a_bar_limit = limit_of(spec.coefficients[0]) / ((1.0 + p.a) / p.a);
    CHECK(std::abs(a_bar_limit - 1.0) < 1e-14);
  }
}

TEST_CASE("certify_tail examples") {
  SUBCASE("(n+5)/(n+1) at 5%") {
    CHECK(certify_tail(ratio({5.0, 1.0}, {1.0, 1.0}), 1.0, 0.05, kDefaultHorizon) == 79);
    const auto oracle = testsupport::scan_tail([](double n) { return (n + 5.0) / (n + 1.0); }, 1.05, 0, 10'000);
    CHECK(oracle == 79);
  }
  SUBCASE("constant coefficient is certified at n_min") {
    CHECK(certify_tail(RationalIndexFunction::constant(1.0, 3), 1.0, 0.05, kDefaultHorizon) == 3);
    CHECK(certify_tail(RationalIndexFunction::constant(1.0), 1.0, 1e-9, kDefaultHorizon) == 0);
  }
  SUBCASE("Heun second normalized coefficient with default exponents") {
    // B̄_n = n²/(n+1)² stays below its limit, so the oracle scan and the certificate agree on n_min.
    const auto spec = heun_recurrence(HeunParams{}, 0.0);
    const auto& b = spec.coefficients[1];
    const complex B = -0.5;
    const testsupport::HeunOracle oracle{HeunParams{}, 0.0};
    const auto scanned = testsupport::scan_tail([&](double n) { return oracle.b_bar(n); }, 1.05, 0, 100'000);
    CHECK(scanned == 0);
    CHECK(certify_tail(b, B, 0.05, kDefaultHorizon) == scanned);
  }
  SUBCASE("zero limit uses the absolute bound") {
    // 3/(n+1) ≤ 0.05 ⇔ n ≥ 59
    CHECK(certify_tail(ratio({3.0}, {1.0, 1.0}), 0.0, 0.05, kDefaultHorizon) == 59);
    CHECK(tail_bound(0.0, 0.05) == 0.05);
    CHECK(tail_bound(complex(0, 2), 0.05) == doctest::Approx(2.1));
  }
  SUBCASE("failures") {
    // (n+5)/(n+1) needs N = 79, beyond a horizon of 50
    CHECK_THROWS_AS(certify_tail(ratio({5.0, 1.0}, {1.0, 1.0}), 1.0, 0.05, 50), CertificationFailed);
    CHECK_THROWS_AS(certify_tail(ratio({5.0, 1.0}, {1.0, 1.0}), 1.0, 0.0, kDefaultHorizon), ValidationError);
    // Approaches 1 from above forever at ε -> 0: 1 + 4/(n+1) > 1 + 1e-9 until n ≈ 4e9.
    CHECK_THROWS_AS(certify_tail(ratio({5.0, 1.0}, {1.0, 1.0}), 1.0, 1e-9, kDefaultHorizon), CertificationFailed);
  }
  SUBCASE("a bump beyond the horizon is caught by the monotonicity certificate") {
    // 1 + n/(n² + 10^8) peaks near n = 10^4 at 1 + 5e-5, above 1 + 1e-5; the horizon stops at 100.
    const auto f = ratio({1e8, 1.0, 1.0}, {1e8, 0.0, 1.0});
    CHECK_THROWS_AS(certify_tail(f, 1.0, 1e-5, 100), CertificationFailed);
    CHECK_NOTHROW(certify_tail(f, 1.0, 1e-5, 1'000'000));
  }
}

TEST_CASE("largest_integer_root") {
  const auto p = testsupport::product_of_linear({-3.0, -7.0, 0.5});  // roots 3, 7, -0.5
  CHECK(largest_integer_root(p, 0) == 7);
  CHECK(largest_integer_root(p, 8) == 7);  // from - 1
  CHECK(largest_integer_root(PolynomialInN{1.0}, 0) == -1);
}

TEST_CASE("certify_profile takes the largest index and inflates limits") {
  const std::vector<RationalIndexFunction> fs{ratio({5.0, 1.0}, {1.0, 1.0}), ratio({3.0}, {1.0, 1.0}, 1)};
  const auto profile = certify_profile(fs, 0.05, kDefaultHorizon, 1);
  CHECK(profile.tail_index == 79);
  REQUIRE(profile.coefficient_tail_index.size() == 2);
  CHECK(profile.coefficient_tail_index[1] == 59);
  CHECK(profile.inflated[0] == complex(1.05));
  CHECK(profile.inflated[1] == complex(0.05));
  CHECK(profile.inflated_moduli()[0] == doctest::Approx(1.05));
}

TEST_CASE("property: certified tails hold on samples up to ten horizons") {
  std::mt19937_64 rng(4242);
  const std::int64_t horizon = 20'000;
  int certified = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const bool zero_limit = trial % 5 == 0;
    const complex limit = testsupport::random_complex(rng, 2.0) + 0.2;
    const auto f = testsupport::random_coefficient(rng, limit, zero_limit, 0);
    const complex L = limit_of(f);
    std::int64_t n = 0;
    try {
      n = certify_tail(f, L, 0.05, horizon);
    } catch (const CertificationFailed&) {
      continue;
    }
    ++certified;
    const double bound = tail_bound(L, 0.05);
    CHECK(n == testsupport::scan_tail([&](double x) { return f.at(x); }, bound, 0, horizon));
    std::uniform_int_distribution<std::int64_t> pick(n, 10 * horizon);
    for (int s = 0; s < 1000; ++s) {
      const auto m = pick(rng);
      CHECK(std::abs(f(m)) <= bound);
    }
    // Larger ε never needs a larger N.
    std::int64_t previous = n;
    for (double eps : {0.1, 0.2, 0.5, 1.0}) {
      const auto next = certify_tail(f, L, eps, horizon);
      CHECK(next <= previous);
      previous = next;
    }
  }
  CHECK(certified >= 50);
}

TEST_CASE("property: perturbing low-order terms never changes a zero limit") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<complex> num{testsupport::random_complex(rng, 5.0), testsupport::random_complex(rng, 5.0) + 0.01};
    std::vector<complex> den{testsupport::random_complex(rng, 5.0) + 6.0, testsupport::random_complex(rng, 5.0),
                             testsupport::random_complex(rng, 2.0) + 0.1};
    const RationalIndexFunction f{PolynomialInN(num), PolynomialInN(den), 0};
    CHECK(limit_of(f) == complex(0.0));
    num[0] += testsupport::random_complex(rng, 100.0);
    den[1] += testsupport::random_complex(rng, 100.0);
    CHECK(limit_of(RationalIndexFunction(PolynomialInN(num), PolynomialInN(den), 50)) == complex(0.0));
  }
}
