#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "polysamp/oracle.hpp"
#include "polysamp/rng.hpp"

using namespace polysamp;

TEST_CASE("uniform_real range and mean") {
  RandomSource rng(1);
  const long n = 1000000;
  double sum = 0.0;
  for (long i = 0; i < n; ++i) {
    double u = rng.uniform_real();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) < 0.002);
}

TEST_CASE("uniform_real Kolmogorov-Smirnov") {
  RandomSource rng(2);
  const long n = 100000;
  std::vector<double> xs(n);
  for (auto& x : xs) x = rng.uniform_real();
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  for (long i = 0; i < n; ++i) {
    double lo = static_cast<double>(i) / n;
    double hi = static_cast<double>(i + 1) / n;
    d = std::max({d, std::abs(xs[i] - lo), std::abs(xs[i] - hi)});
  }
  // 0.999 critical value ~ 1.95 / sqrt(n)
  CHECK(d < 1.95 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("uniform_int bounds and bias") {
  RandomSource rng(3);
  CHECK(rng.uniform_int(1) == 0);

  SUBCASE("bound 6 within binomial 3 sigma") {
    RandomSource r(4);
    const long n = 600000;
    std::vector<long> counts(6, 0);
    for (long i = 0; i < n; ++i) ++counts[r.uniform_int(6)];
    for (long c : counts) CHECK(std::abs(c - 100000) < 1500);
  }

  SUBCASE("bound 3 max deviation within 4 sigma") {
    RandomSource r(5);
    const long n = 3000000;
    std::vector<long> counts(3, 0);
    for (long i = 0; i < n; ++i) ++counts[r.uniform_int(3)];
    const double expect = n / 3.0;
    const double sigma = std::sqrt(expect * (2.0 / 3.0));
    for (long c : counts) CHECK(std::abs(c - expect) < 4.0 * sigma);
  }

  SUBCASE("large bound covers the top half") {
    RandomSource r(6);
    const std::uint64_t bound = (1ULL << 40) + 1;
    bool above = false;
    for (int i = 0; i < 1000 && !above; ++i) {
      above = r.uniform_int(bound) > (1ULL << 39);
    }
    CHECK(above);
  }
}

TEST_CASE("bernoulli endpoints and rational mode") {
  RandomSource rng(7);
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(rng.bernoulli(0.0));
    CHECK(rng.bernoulli(1.0));
    CHECK_FALSE(rng.bernoulli_rational(mpq_class(0)));
    CHECK(rng.bernoulli_rational(mpq_class(1)));
  }
  const long n = 300000;
  long hits = 0;
  mpq_class third(1, 3);
  for (long i = 0; i < n; ++i) hits += rng.bernoulli_rational(third) ? 1 : 0;
  CHECK(std::abs(hits / static_cast<double>(n) - 1.0 / 3.0) < 0.003);
}

TEST_CASE("determinism per seed and split independence") {
  RandomSource a(42), b(42);
  for (int i = 0; i < 1000; ++i) REQUIRE(a.uniform_real() == b.uniform_real());

  // Chi-square on value pairs from two split streams.
  RandomSource base(99);
  RandomSource s0 = base.split(0);
  RandomSource s1 = base.split(1);
  const long n = 200000;
  const long cells = 16;
  std::vector<long> joint(cells * cells, 0);
  for (long i = 0; i < n; ++i) {
    ++joint[s0.uniform_int(cells) * cells + s1.uniform_int(cells)];
  }
  std::vector<double> expected(cells * cells, 1.0 / (cells * cells));
  auto res = chi_square_test(joint, expected, n);
  CHECK(res.pass);
}
