#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "polysamp/geometry.hpp"
#include "polysamp/structure_sampler.hpp"

namespace polysamp {

/// Canonical lookup key for a triangulation's diagonal set.
std::string diagonal_key(const PartialTriangulation& tri);

/// All encodings with k pairs and j zeros, no duplicates. Throws past `cap`.
std::vector<Encoding> enumerate_strings(long k, long j, std::size_t cap = 1000000);

/// All balanced parenthesizations with k pairs, lexicographic order.
std::vector<std::string> enumerate_parenthesizations(long k);

/// Brute-force enumeration of k-part triangulations of the (n+2)-gon by
/// backtracking over non-crossing diagonal sets; independent of the string
/// bijection. n <= 9.
std::vector<PartialTriangulation> enumerate_triangulations_direct(long n, long k);

/// All partial triangulations of the (n+2)-gon, canonical order.
std::vector<PartialTriangulation> enumerate_all_triangulations(long n);

/// Exact rational distribution over all partial triangulations of the
/// (n+2)-gon with weight lambda^(diagonal count). n <= 8.
struct ExactDistribution {
  std::vector<PartialTriangulation> support;
  std::vector<mpq_class> probs;
  std::unordered_map<std::string, long> index;

  /// Index of a configuration in the support; -1 if absent.
  long index_of(const PartialTriangulation& tri) const;

  /// Probabilities rounded to double, support order.
  std::vector<double> probs_as_double() const;
};

ExactDistribution exact_distribution(long n, const mpq_class& lambda);

struct ChiSquareResult {
  double statistic = 0.0;
  long dof = 0;
  double threshold = 0.0;
  bool pass = false;
};

/// Pearson statistic of observed counts against expected probabilities;
/// passes when below the given chi-square quantile at dof = cells - 1.
ChiSquareResult chi_square_test(const std::vector<long>& observed,
                                const std::vector<double>& expected_probs,
                                long total, double quantile = 0.999);

/// Total variation distance between two distributions on a common support.
double tv_distance(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace polysamp
