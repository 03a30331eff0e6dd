#include <doctest.h>

#include <gmpxx.h>

#include "polysamp/combinat.hpp"
#include "polysamp/oracle.hpp"

using namespace polysamp;

namespace {

// Independent route for C(n,k): multiplicative product evaluated in the
// opposite order (descending factors), exact at every step.
BigCount binomial_product_desc(long n, long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount num = 1, den = 1;
  for (long i = k; i >= 1; --i) {
    num *= n - k + i;
    den *= i;
  }
  return num / den;
}

}  // namespace

TEST_CASE("binomial basics and cross-evaluation") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 9) == 0);

  BigCount big = binomial(2000, 1000);
  CHECK(to_decimal(big).size() == 601);
  CHECK(big == binomial_product_desc(2000, 1000));
  CHECK(binomial(123, 45) == binomial_product_desc(123, 45));
}

TEST_CASE("catalan values and recurrence") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(4) == 14);

  // C_{m+1} = sum C_i C_{m-i}
  std::vector<BigCount> cat{catalan(0)};
  for (long m = 0; m < 12; ++m) {
    BigCount next = 0;
    for (long i = 0; i <= m; ++i) next += cat[i] * cat[m - i];
    cat.push_back(next);
    CHECK(catalan(m + 1) == next);
  }
  CHECK(cat[8] == 1430);
}

TEST_CASE("partial triangulation counts match enumeration") {
  CHECK(count_partial_triangulations(7, 1) == 1);
  CHECK(count_partial_triangulations(4, 4) == 14);
  CHECK(count_partial_triangulations(4, 3) == 21);
  CHECK(count_partial_triangulations(3, 2) == 5);
  CHECK_THROWS_AS(count_partial_triangulations(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(count_partial_triangulations(3, 0), std::invalid_argument);

  for (long n = 1; n <= 9; ++n) {
    for (long k = 1; k <= n; ++k) {
      auto direct = enumerate_triangulations_direct(n, k);
      CHECK(count_partial_triangulations(n, k) == BigCount(direct.size()));
    }
  }
}

TEST_CASE("alternate product form of the counting formula") {
  // C_k * C(n+k, n-k) * (k+1)k / ((n+1)n), evaluated with exact division.
  for (long n = 1; n <= 40; ++n) {
    for (long k = 1; k <= n; ++k) {
      BigCount alt = catalan(k) * binomial(n + k, n - k) * (k + 1) * k;
      BigCount den = BigCount(n + 1) * n;
      REQUIRE(alt % den == 0);
      CHECK(alt / den == count_partial_triangulations(n, k));
    }
  }
}

TEST_CASE("string family counts") {
  CHECK(count_strings(1, 0) == 1);
  CHECK(count_strings(3, 1) == 21);
  CHECK(count_strings(2, 2) == 9);
  CHECK_THROWS_AS(count_strings(0, 3), std::invalid_argument);

  SUBCASE("equals enumeration") {
    for (long m = 1; m <= 8; ++m) {
      for (long j = 0; j <= 6; ++j) {
        auto strings = enumerate_strings(m, j);
        CHECK(count_strings(m, j) == BigCount(strings.size()));
      }
    }
  }

  SUBCASE("identity with triangulation counts") {
    for (long n = 1; n <= 30; ++n) {
      for (long k = 1; k <= n; ++k) {
        CHECK(count_strings(k, n - k) == count_partial_triangulations(n, k));
      }
    }
  }
}

TEST_CASE("Dyck paths by excursion count") {
  CHECK(count_dyck_with_excursions(2, 1) == 1);  // UUDD
  CHECK(count_dyck_with_excursions(2, 2) == 1);  // UDUD
  CHECK(count_dyck_with_excursions(3, 1) == 2);
  CHECK_THROWS_AS(count_dyck_with_excursions(3, 4), std::invalid_argument);

  for (long m = 1; m <= 12; ++m) {
    BigCount total = 0;
    for (long k = 1; k <= m; ++k) total += count_dyck_with_excursions(m, k);
    CHECK(total == catalan(m));
  }

  // Also consistent with the skeleton census: the number of k-pair
  // parenthesizations with l excursions.
  for (long k = 1; k <= 7; ++k) {
    std::vector<long> census(static_cast<std::size_t>(k + 1), 0);
    for (const std::string& p : enumerate_parenthesizations(k)) {
      long depth = 0, exc = 0;
      for (char c : p) {
        depth += c == '(' ? 1 : -1;
        if (depth == 0) ++exc;
      }
      ++census[static_cast<std::size_t>(exc)];
    }
    for (long l = 1; l <= k; ++l) {
      CHECK(count_dyck_with_excursions(k, l) == BigCount(census[static_cast<std::size_t>(l)]));
    }
  }
}

TEST_CASE("totals across k") {
  CHECK(total_partial_triangulations(2) == 3);
  CHECK(total_partial_triangulations(3) == 11);
  CHECK(total_partial_triangulations(4) == 45);
  CHECK(total_partial_triangulations(5) == 197);
  for (long n = 1; n <= 7; ++n) {
    CHECK(total_partial_triangulations(n) ==
          BigCount(enumerate_all_triangulations(n).size()));
  }
}
