#pragma once

#include <gmpxx.h>

#include <vector>

#include "polysamp/partition.hpp"
#include "polysamp/rng.hpp"

namespace polysamp {

struct DiagonalCountSample {
  long diagonals = 0;        // in [0, n-1]
  long rounds_used = 1;      // outer rejection rounds
  long iterations_total = 0; // inner comparisons across all rounds
};

struct CountSamplerDiagnostics {
  long clamp_events = 0;     // emissions that had to be clamped into [0,1]
};

/// Emits p_0 = 1/Z+ and then p_{k+1} from p_k via the O(1) recurrence
///   p_{k+1} = (n+k+2)(n-k-1) / ((k+1)(k+2)) * lambda * p_k / (1 - p_k).
/// The state is kept in the log domain so that p_0 = 1/Z+ survives even when
/// log Z+ is far beyond double range. Emitted values are clamped to [0,1];
/// clamp events are counted. Only call next() for k = 0..n-1.
class HazardSequence {
 public:
  HazardSequence(const ModelParams& params, double log_z_upper);

  /// k-th call returns p_{k-1} (first call returns p_0).
  double next();

  long clamp_events() const { return clamp_events_; }

 private:
  long n_;
  double lambda_;
  double log_p_;
  long index_ = 0;
  long clamp_events_ = 0;
};

/// pi-perp(k) = |Omega_{n,k+1}| lambda^k / Z for k = 0..n-1.
/// zlog must be z_exact_log(params); n <= 1e5.
std::vector<double> pi_perp_pmf(const ModelParams& params, double zlog);

/// Round-based rejection sampler for the diagonal count. Requires
/// exp(zupper.log_upper) >= Z. Output is exact with respect to the
/// double-rounded hazard sequence.
DiagonalCountSample sample_diagonal_count(const ModelParams& params,
                                          const ZEstimate& zupper,
                                          RandomSource& rng,
                                          CountSamplerDiagnostics* diag = nullptr);

/// Exact-rational mode (n <= 30): hazards kept as exact rationals computed
/// from a rational Z+ >= Z, decided by lazy random-bit comparisons.
DiagonalCountSample sample_diagonal_count_rational(long n,
                                                   const mpq_class& lambda,
                                                   const mpq_class& z_upper,
                                                   RandomSource& rng);

}  // namespace polysamp
