#include "polysamp/partition.hpp"

#include <algorithm>
#include <cmath>

#include "polysamp/combinat.hpp"
#include "polysamp/logsum.hpp"

namespace polysamp {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Dispatch thresholds. Exact summation is cheap enough up to this size, and
// lambda >= kLambdaExact makes the exact route the fast one anyway.
constexpr long kExactMaxN = 10000;
constexpr double kLambdaExact = 0.1;

// Own validity limits of the bound constructions.
constexpr double kMidLambdaMax = 0.25;
constexpr double kSmallBFactor = 4.0;  // omega = ceil(B log n + 10 n sqrt(lambda))
constexpr double kSmallCorrection = 8.0;

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void check_params(const ModelParams& p) {
  if (p.n < 1) throw std::invalid_argument("ModelParams: need n >= 1");
  if (!(p.lambda > 0.0)) throw std::invalid_argument("ModelParams: need lambda > 0");
}

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Exact: return "exact";
    case Regime::Mid: return "mid";
    case Regime::SmallL1: return "small-l1";
    case Regime::SmallL2: return "small-l2";
  }
  return "?";
}

std::vector<double> log_weight_series(const ModelParams& params) {
  check_params(params);
  const long n = params.n;
  const double log_lambda = std::log(params.lambda);
  std::vector<double> terms(static_cast<std::size_t>(n));
  const double lg_np1 = std::log(static_cast<double>(n + 1));
  for (long k = 1; k <= n; ++k) {
    double t = log_binomial(n + k, k) + log_binomial(n - 1, k - 1) - lg_np1 +
               static_cast<double>(k - 1) * log_lambda;
    terms[static_cast<std::size_t>(k - 1)] = t;
  }
  return terms;
}

double z_exact_log(const ModelParams& params) {
  LogSumAccumulator acc;
  for (double t : log_weight_series(params)) acc.add(t);
  return acc.result();
}

mpq_class z_exact_rational(long n, const mpq_class& lambda, long cap) {
  if (n < 1) throw std::invalid_argument("z_exact_rational: need n >= 1");
  if (n > cap) throw std::invalid_argument("z_exact_rational: n exceeds cap");
  if (lambda <= 0) throw std::invalid_argument("z_exact_rational: need lambda > 0");
  mpq_class z = 0;
  mpq_class lambda_pow = 1;  // lambda^(k-1)
  for (long k = 1; k <= n; ++k) {
    z += mpq_class(count_partial_triangulations(n, k)) * lambda_pow;
    lambda_pow *= lambda;
  }
  return z;
}

double f_aux(double x, const ModelParams& params) {
  if (!(x > 0.0)) throw std::invalid_argument("f_aux: need x > 0");
  return 1.0 + params.lambda * x - static_cast<double>(params.n) * std::log(x);
}

double log_F(double alpha, const ModelParams& params) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("log_F: need alpha in (0,1)");
  }
  const double n = static_cast<double>(params.n);
  return (n + 0.5) * (std::log1p(alpha) - std::log1p(-alpha)) +
         alpha * n * std::log((1.0 - alpha * alpha) * params.lambda / (alpha * alpha));
}

StirlingCorrections stirling_corrections(long n, long k) {
  if (k < 1 || k > n - 1) {
    throw std::invalid_argument("stirling_corrections: need 1 <= k <= n-1");
  }
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  StirlingCorrections c;
  c.a_plus = 1.0 / (12.0 * nd) - 1.0 / (12.0 * kd + 1.0) -
             1.0 / (12.0 * (nd - kd) + 1.0);
  c.a_minus = 1.0 / (12.0 * nd + 1.0) - 1.0 / (12.0 * kd) -
              1.0 / (12.0 * (nd - kd));
  return c;
}

MaximizerBracket maximizer(const ModelParams& params) {
  check_params(params);
  const long n = params.n;
  const double lambda = params.lambda;
  if (n < 4) throw RegimeError("maximizer: need n >= 4");

  MaximizerBracket b;
  b.xi_minus = std::exp((1.0 + lambda) / static_cast<double>(n));
  b.xi_plus = std::exp((1.0 + std::exp(2.0 / static_cast<double>(n)) * lambda) /
                       static_cast<double>(n));
  if (!(f_aux(b.xi_minus, params) > 0.0) || !(f_aux(b.xi_plus, params) < 0.0)) {
    throw RegimeError("maximizer: sign conditions violated");
  }

  double lo = b.xi_minus, hi = b.xi_plus;
  const double tol = 1e-12 * b.xi_plus;
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (f_aux(mid, params) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  b.x_max = 0.5 * (lo + hi);
  b.alpha_max = std::sqrt(lambda * b.x_max / (1.0 + lambda * b.x_max));
  return b;
}

ZEstimate z_bounds_mid(const ModelParams& params, bool with_lower) {
  check_params(params);
  const long n = params.n;
  const double lambda = params.lambda;
  if (n < 4 || lambda < 8.0 / (static_cast<double>(n) * n) ||
      lambda > kMidLambdaMax) {
    throw RegimeError("z_bounds_mid: outside the mid regime");
  }
  MaximizerBracket bracket = maximizer(params);
  const double amax = bracket.alpha_max;
  const double nd = static_cast<double>(n);

  // Denominator (2 pi)^2 lambda n (n+1) applied to the lattice sums.
  const double log_denom = std::log(4.0 * kPi * kPi) + std::log(lambda) +
                           std::log(nd) + std::log(nd + 1.0);

  auto log_m_term = [&](double correction) {
    return nd * std::log(4.0 * lambda) + correction - std::log(kPi) -
           std::log(lambda) - 0.5 * std::log(2.0 * nd) - std::log(nd + 1.0);
  };
  StirlingCorrections center = stirling_corrections(2 * n, n);

  const long i_hi_upper =
      std::min<long>(n - 1, static_cast<long>(std::floor(1.25 * amax * nd)));

  LogSumAccumulator s_plus;
  for (long i = 2; i <= i_hi_upper; ++i) {
    double alpha = static_cast<double>(i) / nd;
    StirlingCorrections outer = stirling_corrections(n + i, i);
    StirlingCorrections inner = stirling_corrections(n, i);
    s_plus.add(log_F(alpha, params) + outer.a_plus + inner.a_plus);
  }
  double log_tail = std::log(8.0 / (amax * nd)) + (63.0 / 32.0) * amax * nd +
                    (8.0 / 5.0) * amax * amax * amax * nd;

  LogSumAccumulator upper;
  upper.add(0.0);  // the lambda-free first term
  upper.add(log_m_term(center.a_plus));
  upper.add(s_plus.result() - log_denom);
  upper.add(log_tail - log_denom);

  ZEstimate est;
  est.regime = Regime::Mid;
  est.log_upper = upper.result();
  est.compute_cost_terms = std::max<long>(0, i_hi_upper - 1);

  if (with_lower) {
    LogSumAccumulator s_minus;
    for (long i = 2; i <= n - 1; ++i) {
      double alpha = static_cast<double>(i) / nd;
      StirlingCorrections outer = stirling_corrections(n + i, i);
      StirlingCorrections inner = stirling_corrections(n, i);
      s_minus.add(log_F(alpha, params) + outer.a_minus + inner.a_minus);
    }
    LogSumAccumulator lower;
    lower.add(0.0);
    lower.add(log_m_term(center.a_minus));
    lower.add(s_minus.result() - log_denom);
    est.log_lower = lower.result();
  } else {
    est.log_lower = 0.0;  // Z >= 1 always
  }
  return est;
}

ZEstimate z_bounds_small(const ModelParams& params) {
  check_params(params);
  const long n = params.n;
  const double lambda = params.lambda;
  const double nd = static_cast<double>(n);
  if (lambda > 1.0 / nd) {
    throw RegimeError("z_bounds_small: lambda too large");
  }
  const long omega = static_cast<long>(
      std::ceil(kSmallBFactor * std::log(nd) + 10.0 * nd * std::sqrt(lambda)));
  if (omega > n / 2) {
    throw RegimeError("z_bounds_small: truncation index too large for n");
  }

  const double log_mu = std::log(nd * nd * lambda);
  // base_j = (n^2 lambda)^j / ((j+1)! j!), iterated in the log domain.
  double log_base = 0.0;
  LogSumAccumulator main_sum;   // sum of base_j * (1 + (j+1)/n)
  LogSumAccumulator cubic_sum;  // sum of base_j * j^3
  for (long j = 0; j <= omega; ++j) {
    if (j > 0) {
      log_base += log_mu - std::log(static_cast<double>(j + 1)) -
                  std::log(static_cast<double>(j));
    }
    main_sum.add(log_base + std::log1p(static_cast<double>(j + 1) / nd));
    if (j >= 1) {
      cubic_sum.add(log_base + 3.0 * std::log(static_cast<double>(j)));
    }
  }
  const double log_scale = std::log(nd) - std::log(nd + 1.0);
  const double log_L = log_scale + main_sum.result();
  const double log_delta = std::log(kSmallCorrection) - std::log(nd) -
                           std::log(nd + 1.0) + cubic_sum.result();
  // Geometric cover of the truncated tail.
  const double log_tail = std::log(4.0) + static_cast<double>(omega) * (2.0 - std::log(100.0));

  ZEstimate est;
  est.regime = (lambda < 8.0 / (nd * nd)) ? Regime::SmallL2 : Regime::SmallL1;
  est.compute_cost_terms = omega + 1;

  LogSumAccumulator upper;
  upper.add(log_L);
  upper.add(log_tail);
  upper.add(log_delta);
  est.log_upper = upper.result();

  est.log_lower = log_diff_exp(log_L, log_delta);
  if (std::isinf(est.log_lower)) {
    throw RegimeError("z_bounds_small: degenerate lower bound");
  }
  return est;
}

Regime pick_regime(const ModelParams& params) {
  check_params(params);
  const double nd = static_cast<double>(params.n);
  if (params.n <= kExactMaxN || params.lambda >= kLambdaExact) return Regime::Exact;
  if (params.lambda < 8.0 / (nd * nd)) return Regime::SmallL2;
  if (params.lambda <= 1.0 / nd) return Regime::SmallL1;
  return Regime::Mid;
}

ZEstimate z_upper_dispatch(const ModelParams& params) {
  const Regime regime = pick_regime(params);
  auto exact = [&]() {
    double z = z_exact_log(params);
    return ZEstimate{z, z, Regime::Exact, params.n};
  };
  if (regime == Regime::Exact) return exact();
  try {
    ZEstimate est = (regime == Regime::Mid)
                        ? z_bounds_mid(params, /*with_lower=*/false)
                        : z_bounds_small(params);
    // Absorb floating-point rounding of the bound evaluation; only the
    // rejection rate changes, never correctness.
    est.log_upper += std::log1p(1e-9);
    return est;
  } catch (const RegimeError&) {
    return exact();
  }
}

double expected_diagonals_exact(const ModelParams& params) {
  check_params(params);
  if (params.n > 100000) {
    throw std::invalid_argument("expected_diagonals_exact: n too large");
  }
  std::vector<double> terms = log_weight_series(params);
  LogSumAccumulator num, den;
  for (long k = 1; k <= params.n; ++k) {
    double t = terms[static_cast<std::size_t>(k - 1)];
    den.add(t);
    if (k >= 2) num.add(std::log(static_cast<double>(k - 1)) + t);
  }
  double r = num.result() - den.result();
  return std::isinf(r) && r < 0 ? 0.0 : std::exp(r);
}

}  // namespace polysamp
