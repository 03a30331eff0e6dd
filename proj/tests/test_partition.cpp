#include <doctest.h>

#include <cmath>
#include <vector>

#include "polysamp/partition.hpp"
#include "polysamp/rng.hpp"

using namespace polysamp;
using doctest::Approx;

TEST_CASE("z_exact_log small cases from enumeration") {
  CHECK(z_exact_log({2, 1.0}) == Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(z_exact_log({3, 1.0}) == Approx(std::log(11.0)).epsilon(1e-12));
  CHECK(z_exact_log({2, 2.0}) == Approx(std::log(5.0)).epsilon(1e-12));
}

TEST_CASE("z_exact_log agrees with rational evaluation up to n = 200") {
  for (long n : {5L, 17L, 60L, 200L}) {
    for (double lambda : {0.05, 0.7, 1.0, 3.0}) {
      mpq_class lam_q;
      lam_q = lambda;  // dyadic doubles convert exactly
      mpq_class z = z_exact_rational(n, lam_q);
      double zlog = z_exact_log({n, lambda});
      double reference = std::log(mpf_class(z, 256).get_d());
      CHECK(zlog == Approx(reference).epsilon(1e-10));
    }
  }
}

TEST_CASE("z_exact_rational examples") {
  CHECK(z_exact_rational(2, mpq_class(1)) == 3);
  CHECK(z_exact_rational(3, mpq_class(1, 2)) == mpq_class(19, 4));
  // k = 1 term is lambda-free and equals 1
  CHECK(z_exact_rational(6, mpq_class(1, 1000000)) > 1);
  CHECK_THROWS_AS(z_exact_rational(301, mpq_class(1)), std::invalid_argument);
}

TEST_CASE("monotone in lambda") {
  for (long n : {4L, 23L, 147L}) {
    double prev = -1e300;
    for (double lambda : {0.01, 0.1, 0.5, 1.0, 2.0, 8.0}) {
      double z = z_exact_log({n, lambda});
      CHECK(z > prev);
      prev = z;
    }
  }
}

TEST_CASE("f_aux values and signs at the bracket ends") {
  ModelParams p{100, 0.01};
  CHECK(f_aux(1.0, p) == Approx(1.0 + p.lambda));
  double xi_minus = std::exp(0.0101);
  CHECK(f_aux(xi_minus, p) == Approx(1.0 + 0.01 * xi_minus - 1.01));
  CHECK(f_aux(xi_minus, p) > 0.0);
  double xi_plus = std::exp((1.0 + std::exp(0.02) * 0.01) / 100.0);
  CHECK(f_aux(xi_plus, p) < 0.0);
}

TEST_CASE("log_F closed form and derivative identity") {
  CHECK(log_F(0.5, {4, 1.0}) == Approx(6.5 * std::log(3.0)).epsilon(1e-12));

  RandomSource rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    long n = 5 + static_cast<long>(rng.uniform_int(2000));
    double alpha = 0.05 + 0.4 * rng.uniform_real();
    double lambda = 0.001 + 2.0 * rng.uniform_real();
    ModelParams p{n, lambda};
    double x = alpha * alpha / ((1.0 - alpha * alpha) * lambda);
    double h = 1e-6;
    double fd = (log_F(alpha + h, p) - log_F(alpha - h, p)) / (2.0 * h);
    double f = f_aux(x, p);
    CHECK(std::abs(fd - f) <= 1e-6 * std::max(1.0, std::abs(f)));
  }

  // at the maximizer the derivative vanishes
  ModelParams p{1000, 0.01};
  MaximizerBracket b = maximizer(p);
  double h = 1e-7;
  double fd = (log_F(b.alpha_max + h, p) - log_F(b.alpha_max - h, p)) / (2.0 * h);
  CHECK(std::abs(fd) < 1e-2 * p.n);  // scale of log_F' is O(n)
  CHECK(std::abs(f_aux(b.x_max, p)) < 1e-9);
}

TEST_CASE("stirling corrections") {
  auto c21 = stirling_corrections(2, 1);
  CHECK(c21.a_plus == Approx(1.0 / 24 - 1.0 / 13 - 1.0 / 13).epsilon(1e-14));
  CHECK(c21.a_minus == Approx(1.0 / 25 - 1.0 / 12 - 1.0 / 12).epsilon(1e-14));
  CHECK_THROWS_AS(stirling_corrections(5, 5), std::invalid_argument);

  for (long n = 2; n <= 200; ++n) {
    for (long k = 1; k <= n - 1; ++k) {
      auto c = stirling_corrections(n, k);
      CHECK(c.a_plus < 0.0);
      CHECK(c.a_minus < 0.0);
      if (n >= 4) {
        CHECK(c.a_plus >= -1.0 / 12);
        CHECK(c.a_minus >= -1.0 / 11);
      }
    }
  }
}

TEST_CASE("maximizer bracket") {
  ModelParams p{100, 0.01};
  MaximizerBracket b = maximizer(p);
  CHECK(b.xi_minus <= b.x_max);
  CHECK(b.x_max <= b.xi_plus);
  CHECK(b.alpha_max == Approx(0.1000).epsilon(1e-2));
  CHECK(b.alpha_max >= std::sqrt(p.lambda / (1 + p.lambda)));
  double lam_hi = std::exp(2.0 / p.n) * p.lambda;
  CHECK(b.alpha_max <= std::sqrt(lam_hi / (1 + lam_hi)));
  CHECK(std::abs(f_aux(b.x_max, p)) < 1e-9);

  SUBCASE("bracket width bound") {
    for (long n : {2L, 10L, 100L, 5000L}) {
      for (double lambda : {0.001, 0.05, 0.3}) {
        if (lambda >= std::exp(-2.0 / n)) continue;
        double xm = std::exp((1.0 + lambda) / n);
        double xp = std::exp((1.0 + std::exp(2.0 / n) * lambda) / n);
        CHECK(xp - xm <= 16.0 * lambda / (static_cast<double>(n) * n));
      }
    }
  }

  SUBCASE("regime errors") {
    CHECK_THROWS_AS(maximizer({3, 0.01}), RegimeError);
    CHECK_THROWS_AS(maximizer({1000, 5.0}), RegimeError);  // lambda e^{2/n} >= 1
  }
}

TEST_CASE("mid-regime bounds sandwich the exact value") {
  for (long n : {500L, 2000L}) {
    for (double lambda : {0.01, 0.05, 0.2}) {
      ModelParams p{n, lambda};
      ZEstimate est = z_bounds_mid(p);
      double z = z_exact_log(p);
      CHECK(est.log_lower <= z);
      CHECK(z <= est.log_upper);
      CHECK(est.regime == Regime::Mid);
      // upper-bound work stays within the truncated window
      MaximizerBracket b = maximizer(p);
      CHECK(est.compute_cost_terms <=
            static_cast<long>(std::ceil(1.25 * b.alpha_max * n)) + 2);
    }
  }
  CHECK_THROWS_AS(z_bounds_mid({2000, 0.4}), RegimeError);
  CHECK_THROWS_AS(z_bounds_mid({2000, 1e-7}), RegimeError);
}

TEST_CASE("mid-regime ratio shrinks like 1/(n^2 lambda)") {
  const double lambda = 0.01;
  for (long n : {1000L, 10000L}) {
    ZEstimate est = z_bounds_mid({n, lambda});
    double ratio_minus_1 = std::expm1(est.log_upper - est.log_lower);
    CHECK(ratio_minus_1 * static_cast<double>(n) * n * lambda < 100.0);
  }
}

TEST_CASE("small-lambda bounds sandwich the exact value") {
  for (double lambda : {1e-9, 1e-6}) {
    ModelParams p{10000, lambda};
    ZEstimate est = z_bounds_small(p);
    double z = z_exact_log(p);
    CHECK(est.log_lower <= z);
    CHECK(z <= est.log_upper);
    long omega = static_cast<long>(
        std::ceil(4.0 * std::log(static_cast<double>(p.n)) +
                  10.0 * p.n * std::sqrt(lambda)));
    CHECK(est.compute_cost_terms == omega + 1);
  }
  CHECK(z_bounds_small({10000, 1e-9}).regime == Regime::SmallL2);
  CHECK(z_bounds_small({10000, 1e-5}).regime == Regime::SmallL1);
  CHECK_THROWS_AS(z_bounds_small({10000, 0.01}), RegimeError);
  // truncation index would exceed n/2
  CHECK_THROWS_AS(z_bounds_small({60, 1.0 / 60}), RegimeError);
}

TEST_CASE("dispatch rules and upper-bound validity") {
  CHECK(z_upper_dispatch({50, 1.0}).regime == Regime::Exact);
  CHECK(z_upper_dispatch({100000, 1e-4}).regime == Regime::Mid);
  CHECK(z_upper_dispatch({100000, 1e-11}).regime == Regime::SmallL2);
  CHECK(z_upper_dispatch({100000, 1e-6}).regime == Regime::SmallL1);
  CHECK(z_upper_dispatch({20000, 0.5}).regime == Regime::Exact);

  ZEstimate exact = z_upper_dispatch({50, 1.0});
  CHECK(exact.log_lower == exact.log_upper);

  // bound regimes stay above the exact value (checkable while n is small
  // enough for the full summation)
  for (double lambda : {2e-3, 1e-5, 1e-9}) {
    ModelParams p{20000, lambda};
    ZEstimate est = z_upper_dispatch(p);
    CHECK(est.regime != Regime::Exact);
    CHECK(est.log_upper >= z_exact_log(p));
    CHECK(est.log_lower <= est.log_upper);
  }
}

TEST_CASE("expected diagonal count") {
  CHECK(expected_diagonals_exact({3, 1.0}) == Approx(15.0 / 11).epsilon(1e-12));
  CHECK(expected_diagonals_exact({2, 1.0}) == Approx(2.0 / 3).epsilon(1e-12));

  // growth proportional to n sqrt(lambda) at fixed lambda
  const double lambda = 0.01;
  for (long n : {100L, 1000L, 10000L}) {
    double mean = expected_diagonals_exact({n, lambda});
    CHECK(mean / (n * std::sqrt(lambda)) < 3.0);
    CHECK(mean > 0.0);
  }
}
