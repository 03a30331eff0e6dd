#include "polysamp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

#include "polysamp/combinat.hpp"

namespace polysamp {

namespace {

void gen_parens(long open_left, long close_left, std::string& current,
                std::vector<std::string>& out) {
  if (open_left == 0 && close_left == 0) {
    out.push_back(current);
    return;
  }
  if (open_left > 0) {
    current.push_back('(');
    gen_parens(open_left - 1, close_left + 1, current, out);
    current.pop_back();
  }
  if (close_left > 0) {
    current.push_back(')');
    gen_parens(open_left, close_left - 1, current, out);
    current.pop_back();
  }
}

void gen_compositions(long total, long parts, std::vector<long>& current,
                      const std::function<void(const std::vector<long>&)>& sink) {
  if (parts == 1) {
    current.push_back(total);
    sink(current);
    current.pop_back();
    return;
  }
  for (long head = 0; head <= total; ++head) {
    current.push_back(head);
    gen_compositions(total - head, parts - 1, current, sink);
    current.pop_back();
  }
}

bool crosses(std::pair<long, long> d, std::pair<long, long> e) {
  if (d.first > e.first) std::swap(d, e);
  return d.first < e.first && e.first < d.second && d.second < e.second;
}

}  // namespace

std::vector<std::string> enumerate_parenthesizations(long k) {
  if (k < 1) throw std::invalid_argument("enumerate_parenthesizations: need k >= 1");
  std::vector<std::string> out;
  std::string current;
  gen_parens(k, 0, current, out);
  return out;
}

std::vector<Encoding> enumerate_strings(long k, long j, std::size_t cap) {
  if (k < 1 || j < 0) throw std::invalid_argument("enumerate_strings: bad (k, j)");
  BigCount expected = count_strings(k, j);
  if (expected > BigCount(static_cast<unsigned long>(cap))) {
    throw std::invalid_argument("enumerate_strings: family exceeds cap");
  }
  std::vector<Encoding> out;
  for (const std::string& parens : enumerate_parenthesizations(k)) {
    const long r = admissible_positions(parens);
    std::vector<long> current;
    gen_compositions(j, r, current, [&](const std::vector<long>& counts) {
      Encoding enc;
      enc.n = k + j;
      enc.parens = parens;
      enc.gap_counts = counts;
      out.push_back(std::move(enc));
    });
  }
  return out;
}

std::vector<PartialTriangulation> enumerate_triangulations_direct(long n, long k) {
  if (n < 1 || n > 9 || k < 1 || k > n) {
    throw std::invalid_argument("enumerate_triangulations_direct: bad (n, k)");
  }
  std::vector<std::pair<long, long>> candidates;
  for (long a = 0; a <= n + 1; ++a) {
    for (long b = a + 2; b <= n + 1; ++b) {
      if (a == 0 && b == n + 1) continue;  // the rooted edge
      candidates.emplace_back(a, b);
    }
  }
  const long want = k - 1;
  std::vector<PartialTriangulation> out;
  std::vector<std::pair<long, long>> chosen;

  // Backtracking over candidate indices in lexicographic order; only
  // mutually non-crossing extensions are explored, so each set is visited
  // exactly once.
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<long>(chosen.size()) == want) {
      PartialTriangulation tri;
      tri.n = n;
      tri.diagonals = chosen;
      std::sort(tri.diagonals.begin(), tri.diagonals.end());
      out.push_back(std::move(tri));
      return;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      bool ok = true;
      for (const auto& d : chosen) {
        if (crosses(d, candidates[i])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(candidates[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const PartialTriangulation& a, const PartialTriangulation& b) {
              return a.diagonals < b.diagonals;
            });
  return out;
}

std::vector<PartialTriangulation> enumerate_all_triangulations(long n) {
  std::vector<PartialTriangulation> all;
  for (long k = 1; k <= n; ++k) {
    auto part = enumerate_triangulations_direct(n, k);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

std::string diagonal_key(const PartialTriangulation& tri) {
  std::ostringstream key;
  for (auto [a, b] : tri.diagonals) key << a << "-" << b << ";";
  return key.str();
}

long ExactDistribution::index_of(const PartialTriangulation& tri) const {
  auto it = index.find(diagonal_key(tri));
  return it == index.end() ? -1 : it->second;
}

std::vector<double> ExactDistribution::probs_as_double() const {
  std::vector<double> out(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) out[i] = probs[i].get_d();
  return out;
}

ExactDistribution exact_distribution(long n, const mpq_class& lambda) {
  if (n < 1 || n > 8) throw std::invalid_argument("exact_distribution: need n <= 8");
  if (lambda <= 0) throw std::invalid_argument("exact_distribution: need lambda > 0");
  ExactDistribution dist;
  dist.support = enumerate_all_triangulations(n);
  dist.probs.reserve(dist.support.size());
  mpq_class z = 0;
  for (const auto& tri : dist.support) {
    mpq_class w = 1;
    for (std::size_t i = 0; i < tri.diagonals.size(); ++i) w *= lambda;
    dist.probs.push_back(w);
    z += w;
  }
  mpq_class check = 0;
  for (auto& p : dist.probs) {
    p /= z;
    check += p;
  }
  if (check != 1) throw std::logic_error("exact_distribution: probabilities do not sum to 1");
  for (std::size_t i = 0; i < dist.support.size(); ++i) {
    dist.index[diagonal_key(dist.support[i])] = static_cast<long>(i);
  }
  return dist;
}

ChiSquareResult chi_square_test(const std::vector<long>& observed,
                                const std::vector<double>& expected_probs,
                                long total, double quantile) {
  if (observed.size() != expected_probs.size() || observed.empty() || total <= 0) {
    throw std::invalid_argument("chi_square_test: degenerate input");
  }
  ChiSquareResult result;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (!(expected_probs[i] > 0.0)) {
      throw std::invalid_argument("chi_square_test: nonpositive expected probability");
    }
    const double expected = expected_probs[i] * static_cast<double>(total);
    const double diff = static_cast<double>(observed[i]) - expected;
    result.statistic += diff * diff / expected;
  }
  result.dof = static_cast<long>(observed.size()) - 1;
  boost::math::chi_squared_distribution<double> dist(static_cast<double>(result.dof));
  result.threshold = boost::math::quantile(dist, quantile);
  result.pass = result.statistic < result.threshold;
  return result;
}

double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("tv_distance: support mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

}  // namespace polysamp
