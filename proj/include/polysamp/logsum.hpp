#pragma once

#include <cmath>
#include <limits>

namespace polysamp {

/// Streaming log-sum-exp accumulator with Kahan-compensated mantissa sum.
/// Feed natural-log terms; result() returns log(sum of exp(terms)).
class LogSumAccumulator {
 public:
  void add(double log_term) {
    if (std::isinf(log_term) && log_term < 0) return;  // exp == 0
    if (log_term <= max_) {
      kahan_add(std::exp(log_term - max_));
    } else {
      // rescale existing sum to the new maximum
      double scale = std::exp(max_ - log_term);
      sum_ = sum_ * scale + comp_ * scale;
      comp_ = 0.0;
      max_ = log_term;
      kahan_add(1.0);
    }
    ++count_;
  }

  double result() const {
    if (count_ == 0) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(sum_ + comp_);
  }

  long count() const { return count_; }

 private:
  void kahan_add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }

  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
  double comp_ = 0.0;
  long count_ = 0;
};

/// log(exp(a) - exp(b)) for a > b; -inf when the difference is non-positive.
inline double log_diff_exp(double a, double b) {
  if (!(a > b)) return -std::numeric_limits<double>::infinity();
  return a + std::log1p(-std::exp(b - a));
}

}  // namespace polysamp
