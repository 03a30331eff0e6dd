#include "polysamp/structure_sampler.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "polysamp/combinat.hpp"

namespace polysamp {

BinaryTree remy_tree(long k, RandomSource& rng) {
  if (k < 1) throw std::invalid_argument("remy_tree: need k >= 1");
  BinaryTree t;
  const long total = 2 * k + 1;
  t.left.assign(static_cast<std::size_t>(total), -1);
  t.right.assign(static_cast<std::size_t>(total), -1);
  std::vector<int> parent(static_cast<std::size_t>(total), -1);
  t.root = 0;
  long nodes = 1;  // node 0 starts as the lone leaf
  for (long step = 1; step <= k; ++step) {
    const int victim = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(nodes)));
    const bool leaf_on_left = rng.random_bit();
    const int internal = static_cast<int>(nodes);
    const int leaf = static_cast<int>(nodes + 1);
    nodes += 2;

    const int up = parent[static_cast<std::size_t>(victim)];
    if (up < 0) {
      t.root = internal;
    } else if (t.left[static_cast<std::size_t>(up)] == victim) {
      t.left[static_cast<std::size_t>(up)] = internal;
    } else {
      t.right[static_cast<std::size_t>(up)] = internal;
    }
    parent[static_cast<std::size_t>(internal)] = up;
    if (leaf_on_left) {
      t.left[static_cast<std::size_t>(internal)] = leaf;
      t.right[static_cast<std::size_t>(internal)] = victim;
    } else {
      t.left[static_cast<std::size_t>(internal)] = victim;
      t.right[static_cast<std::size_t>(internal)] = leaf;
    }
    parent[static_cast<std::size_t>(victim)] = internal;
    parent[static_cast<std::size_t>(leaf)] = internal;
  }
  t.internal_count = k;
  return t;
}

std::string tree_to_parens(const BinaryTree& tree) {
  std::string out;
  out.reserve(static_cast<std::size_t>(2 * tree.internal_count));
  // enc(leaf) = "", enc(internal) = "(" enc(left) ")" enc(right).
  // Explicit stack; trees can be deep.
  enum class Op : unsigned char { Visit, Emit };
  std::vector<std::pair<int, Op>> stack;
  stack.emplace_back(tree.root, Op::Visit);
  while (!stack.empty()) {
    auto [node, op] = stack.back();
    stack.pop_back();
    if (op == Op::Emit) {
      out.push_back(')');
      continue;
    }
    if (tree.left[static_cast<std::size_t>(node)] < 0) continue;  // leaf
    out.push_back('(');
    stack.emplace_back(tree.right[static_cast<std::size_t>(node)], Op::Visit);
    stack.emplace_back(node, Op::Emit);
    stack.emplace_back(tree.left[static_cast<std::size_t>(node)], Op::Visit);
  }
  return out;
}

long admissible_positions(const std::string& parens) {
  const long len = static_cast<long>(parens.size());
  if (len == 0 || len % 2 != 0) {
    throw std::invalid_argument("admissible_positions: not a parenthesization");
  }
  long depth = 0;
  long gaps = 0;        // internal gaps at depth >= 1
  long excursions = 0;  // returns of the depth to zero
  for (long i = 0; i < len; ++i) {
    const char c = parens[static_cast<std::size_t>(i)];
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      --depth;
      if (depth == 0) ++excursions;
      if (depth < 0) throw std::invalid_argument("admissible_positions: unbalanced");
    } else {
      throw std::invalid_argument("admissible_positions: bad symbol");
    }
    if (i < len - 1 && depth >= 1) ++gaps;
  }
  if (depth != 0) throw std::invalid_argument("admissible_positions: unbalanced");
  if (gaps != len - excursions) {  // gap scan vs excursion formula
    throw std::logic_error("admissible_positions: route disagreement");
  }
  return gaps;
}

double log_acceptance_prob(long n, long k, long r) {
  if (k < 1 || k > n || r < 1 || r > 2 * k - 1) {
    throw std::invalid_argument("log_acceptance_prob: parameter out of range");
  }
  // w/M = prod_{j=0}^{2k-2-r} (r+j) / prod_{j=0}^{2k-2-r} (n-k+r+j)
  double log_p = 0.0;
  for (long j = 0; j <= 2 * k - 2 - r; ++j) {
    log_p += std::log(static_cast<double>(r + j)) -
             std::log(static_cast<double>(n - k + r + j));
  }
  return log_p;
}

mpq_class acceptance_prob_rational(long n, long k, long r) {
  if (k < 1 || k > n || r < 1 || r > 2 * k - 1) {
    throw std::invalid_argument("acceptance_prob_rational: parameter out of range");
  }
  mpq_class p(1);
  for (long j = 0; j <= 2 * k - 2 - r; ++j) {
    p *= mpq_class(r + j, n - k + r + j);
  }
  p.canonicalize();
  return p;
}

std::vector<long> floyd_subset(long universe, long size, RandomSource& rng) {
  if (size < 0 || size > universe) {
    throw std::invalid_argument("floyd_subset: need 0 <= size <= universe");
  }
  std::unordered_set<long> chosen;
  chosen.reserve(static_cast<std::size_t>(size) * 2 + 1);
  for (long j = universe - size + 1; j <= universe; ++j) {
    long t = static_cast<long>(rng.uniform_int(static_cast<std::uint64_t>(j))) + 1;
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  std::vector<long> out(chosen.begin(), chosen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> subset_to_composition(const std::vector<long>& subset,
                                        long total, long r) {
  if (r < 1 || static_cast<long>(subset.size()) != r - 1) {
    throw std::invalid_argument("subset_to_composition: size mismatch");
  }
  std::vector<long> parts(static_cast<std::size_t>(r));
  long prev = 0;
  for (long i = 0; i < r - 1; ++i) {
    const long s = subset[static_cast<std::size_t>(i)];
    if (s <= prev || s > total + r - 1) {
      throw std::invalid_argument("subset_to_composition: malformed subset");
    }
    parts[static_cast<std::size_t>(i)] = s - prev - 1;
    prev = s;
  }
  parts[static_cast<std::size_t>(r - 1)] = total + r - 1 - prev;
  return parts;
}

std::string Encoding::expand() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n + pairs()));
  const long len = static_cast<long>(parens.size());
  long depth = 0;
  std::size_t gap = 0;
  for (long i = 0; i < len; ++i) {
    if (i >= 1 && depth >= 1) {
      const long c = gap < gap_counts.size() ? gap_counts[gap] : 0;
      out.append(static_cast<std::size_t>(c), '0');
      ++gap;
    }
    const char ch = parens[static_cast<std::size_t>(i)];
    out.push_back(ch);
    depth += (ch == '(') ? 1 : -1;
  }
  return out;
}

void check_encoding(const Encoding& enc) {
  const long r = admissible_positions(enc.parens);  // also validates balance
  if (static_cast<long>(enc.gap_counts.size()) != r) {
    throw std::invalid_argument("encoding: gap count vector size != r");
  }
  long sum = 0;
  for (long c : enc.gap_counts) {
    if (c < 0) throw std::invalid_argument("encoding: negative zero count");
    sum += c;
  }
  if (sum != enc.n - enc.pairs()) {
    throw std::invalid_argument("encoding: zero counts do not sum to n - k");
  }
}

EncodingSample sample_encoding(long n, long k, RandomSource& rng) {
  if (k < 1 || k > n) throw std::invalid_argument("sample_encoding: need 1 <= k <= n");
  EncodingSample out;
  out.trials = 0;
  std::string parens;
  long r = 0;
  while (true) {
    ++out.trials;
    parens = tree_to_parens(remy_tree(k, rng));
    r = admissible_positions(parens);
    if (r == 2 * k - 1) break;  // w(P) == M, accepted with probability 1
    if (rng.bernoulli(std::exp(log_acceptance_prob(n, k, r)))) break;
  }
  std::vector<long> subset = floyd_subset(n - k + r - 1, r - 1, rng);
  out.enc.n = n;
  out.enc.parens = std::move(parens);
  out.enc.gap_counts = subset_to_composition(subset, n - k, r);
  return out;
}

}  // namespace polysamp
