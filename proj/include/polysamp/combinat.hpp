#pragma once

#include <gmpxx.h>

#include <string>

namespace polysamp {

/// Arbitrary-precision nonnegative count. Values such as C(2n,n) overflow
/// machine words long before the sizes exercised here (n up to 1e4).
using BigCount = mpz_class;

inline std::string to_decimal(const BigCount& c) { return c.get_str(); }

/// C(n,k); 0 when k > n.
BigCount binomial(long n, long k);

/// C(2m,m)/(m+1).
BigCount catalan(long m);

/// Number of partitions of a convex (n+2)-gon into k parts (k-1 diagonals):
/// C(n+k,k) * C(n-1,k-1) / (n+1). Requires 1 <= k <= n; the division is
/// asserted exact.
BigCount count_partial_triangulations(long n, long k);

/// Number of balanced strings with m parenthesis pairs and j zeros, every
/// zero nested inside a pair: C_m * C(2m+j,j) * m(m+1)/((m+j)(m+j+1)).
/// Requires m >= 1; divisions asserted exact.
BigCount count_strings(long m, long j);

/// Number of Dyck paths of semilength m with exactly k excursions:
/// k/(2m-k) * C(2m-k,m). Requires 1 <= k <= m.
BigCount count_dyck_with_excursions(long m, long k);

/// Sum over k of count_partial_triangulations(n,k).
BigCount total_partial_triangulations(long n);

}  // namespace polysamp
