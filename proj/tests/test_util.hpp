#pragma once

#include <gmpxx.h>

#include <cmath>

namespace polysamp::testutil {

/// Natural log of a positive rational, safe for values far beyond double range.
inline double log_mpq(const mpq_class& q) {
  signed long e_num = 0, e_den = 0;
  double m_num = mpz_get_d_2exp(&e_num, q.get_num().get_mpz_t());
  double m_den = mpz_get_d_2exp(&e_den, q.get_den().get_mpz_t());
  return std::log(m_num) - std::log(m_den) +
         static_cast<double>(e_num - e_den) * std::log(2.0);
}

}  // namespace polysamp::testutil
