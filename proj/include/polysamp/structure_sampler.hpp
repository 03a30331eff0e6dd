#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "polysamp/rng.hpp"

namespace polysamp {

/// Full binary tree stored as index arrays; leaves have children == -1.
struct BinaryTree {
  std::vector<int> left;
  std::vector<int> right;
  int root = -1;
  long internal_count = 0;
};

/// Uniform full binary tree with k internal nodes (k >= 1) by incremental
/// leaf grafting: at step j pick one of the 2j-1 existing nodes and a side,
/// splice a new internal node above it with a new leaf on the chosen side.
BinaryTree remy_tree(long k, RandomSource& rng);

/// Fixed bijection to balanced parenthesizations with k pairs:
/// leaf -> "", internal (L,R) -> "(" + enc(L) + ")" + enc(R).
std::string tree_to_parens(const BinaryTree& tree);

/// Number of admissible positions of a balanced parenthesization: internal
/// gaps at nesting depth >= 1. Computed by a direct depth scan and checked
/// against the excursion formula 2k - (#returns to depth zero).
long admissible_positions(const std::string& parens);

/// log of w/M with w = C(n-k+r-1, r-1), M = C(n+k-2, 2k-2), evaluated by the
/// O(k) product form. Requires 1 <= r <= 2k-1 and k <= n.
double log_acceptance_prob(long n, long k, long r);

/// Exact rational w/M for oracle-grade checks.
mpq_class acceptance_prob_rational(long n, long k, long r);

/// Uniform size-`size` subset of {1..universe}, sorted ascending.
std::vector<long> floyd_subset(long universe, long size, RandomSource& rng);

/// Gaps of a sorted (r-1)-subset of {1..total+r-1} as a weak composition of
/// `total` into r nonnegative parts: c_1 = s_1-1, c_i = s_i - s_{i-1} - 1,
/// c_r = total + r - 1 - s_{r-1}.
std::vector<long> subset_to_composition(const std::vector<long>& subset,
                                        long total, long r);

/// Compressed representation of a balanced-parentheses-with-zeros string:
/// the parenthesis skeleton plus the zero count in each admissible gap
/// (left-to-right). Sum of gap_counts must equal n - pairs().
struct Encoding {
  long n = 0;
  std::string parens;
  std::vector<long> gap_counts;

  long pairs() const { return static_cast<long>(parens.size()) / 2; }
  long zeros() const { return n - pairs(); }

  /// Expanded string over '(', ')', '0'. O(n) output.
  std::string expand() const;
};

/// Throws std::invalid_argument if enc is not a valid encoding.
void check_encoding(const Encoding& enc);

struct EncodingSample {
  Encoding enc;
  long trials = 1;  // skeleton proposals until acceptance
};

/// Uniform sample over the strings with k pairs and n-k zeros, via a random
/// binary tree proposal accepted with probability w(P)/M and a uniform weak
/// composition for the zeros. Expected trials <= 4. Requires 1 <= k <= n.
EncodingSample sample_encoding(long n, long k, RandomSource& rng);

}  // namespace polysamp
