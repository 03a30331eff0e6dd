#include "polysamp/count_sampler.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polysamp/combinat.hpp"
#include "polysamp/logsum.hpp"

namespace polysamp {

HazardSequence::HazardSequence(const ModelParams& params, double log_z_upper)
    : n_(params.n), lambda_(params.lambda), log_p_(-log_z_upper) {
  if (log_z_upper < 0.0) {
    throw std::invalid_argument("HazardSequence: Z+ must be >= 1");
  }
}

double HazardSequence::next() {
  if (index_ > 0) {
    // p_{k+1} from p_k; the ratio of consecutive configuration counts is
    // (n+k+2)(n-k-1)/((k+1)(k+2)) at k = index_-1.
    const long k = index_ - 1;
    const double ratio = static_cast<double>(n_ + k + 2) *
                         static_cast<double>(n_ - k - 1) /
                         (static_cast<double>(k + 1) * static_cast<double>(k + 2));
    const double one_minus_p = -std::expm1(log_p_);
    if (one_minus_p <= 0.0) {
      log_p_ = std::numeric_limits<double>::infinity();
    } else {
      log_p_ += std::log(ratio * lambda_) - std::log(one_minus_p);
    }
  }
  ++index_;
  if (log_p_ > 0.0) {
    ++clamp_events_;
    log_p_ = 0.0;
  }
  return std::exp(log_p_);
}

std::vector<double> pi_perp_pmf(const ModelParams& params, double zlog) {
  if (params.n > 100000) throw std::invalid_argument("pi_perp_pmf: n too large");
  std::vector<double> terms = log_weight_series(params);
  std::vector<double> pmf(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    pmf[i] = std::exp(terms[i] - zlog);
  }
  return pmf;
}

DiagonalCountSample sample_diagonal_count(const ModelParams& params,
                                          const ZEstimate& zupper,
                                          RandomSource& rng,
                                          CountSamplerDiagnostics* diag) {
  const long n = params.n;
  DiagonalCountSample out;
  out.rounds_used = 0;
  out.iterations_total = 0;
  while (true) {
    ++out.rounds_used;
    HazardSequence hazards(params, zupper.log_upper);
    for (long k = 0; k < n; ++k) {
      ++out.iterations_total;
      const double p = hazards.next();
      if (rng.uniform_real() < p) {
        out.diagonals = k;
        if (diag) diag->clamp_events += hazards.clamp_events();
        return out;
      }
    }
    if (diag) diag->clamp_events += hazards.clamp_events();
  }
}

DiagonalCountSample sample_diagonal_count_rational(long n,
                                                   const mpq_class& lambda,
                                                   const mpq_class& z_upper,
                                                   RandomSource& rng) {
  if (n < 1 || n > 30) {
    throw std::invalid_argument("sample_diagonal_count_rational: need 1 <= n <= 30");
  }
  if (lambda <= 0) {
    throw std::invalid_argument("sample_diagonal_count_rational: need lambda > 0");
  }
  // Exact hazards: p_k = a_k / Q_k with a_k the weight of count k and
  // Q_{k+1} = Q_k - a_k the mass not yet assigned.
  std::vector<mpq_class> weight(static_cast<std::size_t>(n));
  mpq_class lambda_pow = 1;
  mpq_class total = 0;
  for (long k = 0; k < n; ++k) {
    weight[static_cast<std::size_t>(k)] =
        mpq_class(count_partial_triangulations(n, k + 1)) * lambda_pow;
    total += weight[static_cast<std::size_t>(k)];
    lambda_pow *= lambda;
  }
  if (z_upper < total) {
    throw std::invalid_argument("sample_diagonal_count_rational: Z+ below Z");
  }

  DiagonalCountSample out;
  out.rounds_used = 0;
  out.iterations_total = 0;
  while (true) {
    ++out.rounds_used;
    mpq_class remaining = z_upper;
    for (long k = 0; k < n; ++k) {
      ++out.iterations_total;
      mpq_class p = weight[static_cast<std::size_t>(k)] / remaining;
      if (rng.bernoulli_rational(p)) {
        out.diagonals = k;
        return out;
      }
      remaining -= weight[static_cast<std::size_t>(k)];
    }
  }
}

}  // namespace polysamp
