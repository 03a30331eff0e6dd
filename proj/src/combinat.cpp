#include "polysamp/combinat.hpp"

#include <stdexcept>

namespace polysamp {

namespace {

/// Exact division with a hard error on any remainder; formula transcription
/// bugs surface here instead of silently corrupting counts.
BigCount exact_div(const BigCount& num, const BigCount& den) {
  BigCount q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) throw std::logic_error("combinat: inexact division");
  return q;
}

}  // namespace

BigCount binomial(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  BigCount result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigCount catalan(long m) {
  if (m < 0) throw std::invalid_argument("catalan: negative argument");
  return exact_div(binomial(2 * m, m), BigCount(m + 1));
}

BigCount count_partial_triangulations(long n, long k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::invalid_argument("count_partial_triangulations: need 1 <= k <= n");
  }
  return exact_div(binomial(n + k, k) * binomial(n - 1, k - 1), BigCount(n + 1));
}

BigCount count_strings(long m, long j) {
  if (m < 1) throw std::invalid_argument("count_strings: need m >= 1");
  if (j < 0) throw std::invalid_argument("count_strings: negative zero count");
  BigCount num = catalan(m) * binomial(2 * m + j, j) * m * (m + 1);
  return exact_div(num, BigCount(m + j) * (m + j + 1));
}

BigCount count_dyck_with_excursions(long m, long k) {
  if (m < 1 || k < 1 || k > m) {
    throw std::invalid_argument("count_dyck_with_excursions: need 1 <= k <= m");
  }
  return exact_div(binomial(2 * m - k, m) * k, BigCount(2 * m - k));
}

BigCount total_partial_triangulations(long n) {
  if (n < 1) throw std::invalid_argument("total_partial_triangulations: need n >= 1");
  BigCount total = 0;
  for (long k = 1; k <= n; ++k) total += count_partial_triangulations(n, k);
  return total;
}

}  // namespace polysamp
