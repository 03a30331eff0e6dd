#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace polysamp {

/// Weighted model on the convex (n+2)-gon: each configuration sigma has
/// weight lambda^(number of diagonals).
struct ModelParams {
  long n = 1;          // polygon has n+2 sides
  double lambda = 1.0; // weight per diagonal, > 0
};

enum class Regime { Exact, Mid, SmallL1, SmallL2 };

const char* regime_name(Regime r);

/// Log-domain value of Z or of rigorous bounds on it. In the Exact regime
/// log_lower == log_upper.
struct ZEstimate {
  double log_lower = 0.0;
  double log_upper = 0.0;
  Regime regime = Regime::Exact;
  long compute_cost_terms = 0;
};

/// Bracket for the maximizer of F along the summation lattice.
/// alpha_max = sqrt(lambda*x_max / (1 + lambda*x_max)).
struct MaximizerBracket {
  double xi_minus = 0.0;
  double xi_plus = 0.0;
  double x_max = 0.0;
  double alpha_max = 0.0;
};

struct StirlingCorrections {
  double a_plus = 0.0;
  double a_minus = 0.0;
};

/// Raised when a bound construction does not apply at the given (n, lambda);
/// callers fall back to exact summation.
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// log of t_k = |Omega_{n,k}| * lambda^(k-1) for k = 1..n. The partition
/// function is the sum of the t_k; sharing this vector between Z and the
/// pmf makes the normalization cancel exactly.
std::vector<double> log_weight_series(const ModelParams& params);

/// log Z via stable log-domain summation of the full series.
double z_exact_log(const ModelParams& params);

/// Exact rational Z; oracle-grade. Throws std::invalid_argument past the cap.
mpq_class z_exact_rational(long n, const mpq_class& lambda, long cap = 300);

/// f(x) = 1 + lambda*x - n*log(x), x > 0. Strictly decreasing on the
/// bracketing interval used by maximizer().
double f_aux(double x, const ModelParams& params);

/// log F(alpha) = (n+1/2)(log(1+a) - log(1-a)) + a*n*log((1-a^2)*lambda/a^2),
/// 0 < alpha < 1. Its alpha-derivative equals f_aux at
/// x = alpha^2/((1-alpha^2)*lambda).
double log_F(double alpha, const ModelParams& params);

/// A+(n,k) = 1/(12n) - 1/(12k+1) - 1/(12(n-k)+1)
/// A-(n,k) = 1/(12n+1) - 1/(12k) - 1/(12(n-k))
/// Requires 1 <= k <= n-1. Both are strictly negative.
StirlingCorrections stirling_corrections(long n, long k);

/// Bisection root of f_aux inside [xi_minus, xi_plus], where
/// xi_minus = exp((1+lambda)/n), xi_plus = exp((1+e^{2/n}*lambda)/n).
/// Throws RegimeError when the sign conditions f(xi_minus) > 0 > f(xi_plus)
/// fail or n < 4.
MaximizerBracket maximizer(const ModelParams& params);

/// Two-sided bound on Z for the mid regime (roughly 8/n^2 <= lambda <= 1/4).
/// The upper bound sums O(n*sqrt(lambda)) terms plus a closed-form tail; the
/// lower bound costs O(n) and is skipped when with_lower is false (log_lower
/// then carries the trivial bound log 1 = 0).
ZEstimate z_bounds_mid(const ModelParams& params, bool with_lower = true);

/// Two-sided bound on Z for small lambda (lambda <= 1/n), via the truncated
/// factorial series with explicit correction and tail terms.
ZEstimate z_bounds_small(const ModelParams& params);

/// Regime selection used by z_upper_dispatch.
Regime pick_regime(const ModelParams& params);

/// Upper bound on Z feeding the count sampler. Exact when n <= 10^4 or
/// lambda >= 0.1; otherwise a bound regime with a (1 + 1e-9) safety factor,
/// falling back to exact summation if the bound construction rejects.
ZEstimate z_upper_dispatch(const ModelParams& params);

/// Exact E[number of diagonals] via the series; n <= 1e5.
double expected_diagonals_exact(const ModelParams& params);

}  // namespace polysamp
