#include "polysamp/geometry.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polysamp {

namespace {

// Token stream for the string codec; zeros stay run-length encoded so the
// decoder cost is O(pairs), not O(n).
struct Token {
  enum class Kind : unsigned char { Open, Close, Zeros } kind;
  long count = 0;  // zeros only
};

std::vector<Token> encoding_to_tokens(const Encoding& enc) {
  std::vector<Token> toks;
  toks.reserve(enc.parens.size() + enc.gap_counts.size());
  long depth = 0;
  std::size_t gap = 0;
  const long len = static_cast<long>(enc.parens.size());
  for (long i = 0; i < len; ++i) {
    if (i >= 1 && depth >= 1) {
      const long c = enc.gap_counts[gap++];
      if (c > 0) toks.push_back({Token::Kind::Zeros, c});
    }
    const char ch = enc.parens[static_cast<std::size_t>(i)];
    toks.push_back({ch == '(' ? Token::Kind::Open : Token::Kind::Close, 0});
    depth += (ch == '(') ? 1 : -1;
  }
  return toks;
}

class Decoder {
 public:
  Decoder(const std::vector<Token>& toks, std::vector<std::pair<long, long>>& out)
      : toks_(toks), out_(out) {}

  // Parses the group run starting at vertex a (cursor at an Open token) and
  // returns the end vertex; the caller owns the edge (a, end).
  long parse_run(long a) {
    expect(Token::Kind::Open);
    long v = parse_child(a);
    while (peek() == Token::Kind::Zeros) {
      const long c = toks_[pos_++].count;
      v += c - 1;            // zeros with nothing after them are boundary edges
      v = parse_child(v);    // content of the last zero in the run
    }
    expect(Token::Kind::Close);
    return parse_child(v);   // trailing child after the close
  }

  bool done() const { return pos_ == toks_.size(); }

 private:
  // One child: either a nested sub-triangulation (a diagonal spans it) or a
  // single boundary edge.
  long parse_child(long v) {
    if (peek() == Token::Kind::Open) {
      const long w = parse_run(v);
      out_.emplace_back(v, w);
      return w;
    }
    return v + 1;
  }

  Token::Kind peek() const {
    if (pos_ >= toks_.size()) return Token::Kind::Close;  // sentinel; expect() rejects
    return toks_[pos_].kind;
  }

  void expect(Token::Kind k) {
    if (pos_ >= toks_.size() || toks_[pos_].kind != k) {
      throw std::invalid_argument("encoding_to_triangulation: malformed encoding");
    }
    ++pos_;
  }

  const std::vector<Token>& toks_;
  std::vector<std::pair<long, long>>& out_;
  std::size_t pos_ = 0;
};

// Emits tokens for the sub-triangulation on vertex range [lo, hi].
// out_diagonals[a] holds the diagonals from a, sorted descending by far end.
class Encoder {
 public:
  explicit Encoder(const std::vector<std::vector<long>>& adj) : adj_(adj) {}

  void emit_range(long lo, long hi, std::vector<Token>& out) {
    // Walk the face adjacent to the rooted edge (lo,hi): from each face
    // vertex the next face edge is the longest diagonal that stays inside.
    std::vector<std::pair<long, long>> children;
    long v = lo;
    while (v < hi) {
      long m = v + 1;
      for (long b : adj_[static_cast<std::size_t>(v)]) {
        if (b > hi) continue;
        if (b == hi && v == lo) continue;  // the rooted edge itself
        m = std::max(m, b);
        break;  // descending order: first in-range entry is the largest
      }
      children.emplace_back(v, m);
      v = m;
    }
    const std::size_t t = children.size();
    out.push_back({Token::Kind::Open, 0});
    emit_child(children[0], out);
    for (std::size_t i = 1; i + 1 < t; ++i) {
      append_zero(out);
      emit_child(children[i], out);
    }
    out.push_back({Token::Kind::Close, 0});
    emit_child(children[t - 1], out);
  }

 private:
  void emit_child(std::pair<long, long> edge, std::vector<Token>& out) {
    if (edge.second > edge.first + 1) emit_range(edge.first, edge.second, out);
  }

  void append_zero(std::vector<Token>& out) {
    if (!out.empty() && out.back().kind == Token::Kind::Zeros) {
      ++out.back().count;
    } else {
      out.push_back({Token::Kind::Zeros, 1});
    }
  }

  const std::vector<std::vector<long>>& adj_;
};

}  // namespace

ValidationReport validate(const PartialTriangulation& tri) {
  ValidationReport report;
  auto flag = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };
  if (tri.n < 1) flag("n must be >= 1");
  const long top = tri.n + 1;
  if (static_cast<long>(tri.diagonals.size()) > tri.n - 1) {
    flag("more than n-1 diagonals");
  }
  for (auto [a, b] : tri.diagonals) {
    std::ostringstream name;
    name << "(" << a << "," << b << ")";
    if (a < 0 || b > top) flag("vertex out of range on " + name.str());
    if (b - a < 2) flag("not a diagonal: " + name.str());
    if (a == 0 && b == top) flag("rooted edge used as diagonal");
  }
  if (!std::is_sorted(tri.diagonals.begin(), tri.diagonals.end())) {
    flag("diagonals not in canonical order");
  }
  if (std::adjacent_find(tri.diagonals.begin(), tri.diagonals.end()) !=
      tri.diagonals.end()) {
    flag("duplicate diagonal");
  }
  // Non-crossing: a laminar-family stack check. Touching endpoints are
  // allowed, so order by (a asc, b desc) to keep same-origin chords nested.
  std::vector<std::pair<long, long>> sorted = tri.diagonals;
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second > y.second;
  });
  std::vector<long> open_ends;
  for (auto [a, b] : sorted) {
    while (!open_ends.empty() && open_ends.back() <= a) open_ends.pop_back();
    if (!open_ends.empty() && b > open_ends.back()) {
      std::ostringstream msg;
      msg << "crossing at (" << a << "," << b << ")";
      flag(msg.str());
    }
    open_ends.push_back(b);
  }
  return report;
}

PartialTriangulation encoding_to_triangulation(const Encoding& enc) {
  check_encoding(enc);
  PartialTriangulation tri;
  tri.n = enc.n;
  const std::vector<Token> toks = encoding_to_tokens(enc);
  Decoder decoder(toks, tri.diagonals);
  const long end = decoder.parse_run(0);
  if (end != enc.n + 1 || !decoder.done()) {
    throw std::invalid_argument("encoding_to_triangulation: malformed encoding");
  }
  std::sort(tri.diagonals.begin(), tri.diagonals.end());
  return tri;
}

Encoding triangulation_to_string(const PartialTriangulation& tri) {
  ValidationReport report = validate(tri);
  if (!report.ok) {
    throw std::invalid_argument("triangulation_to_string: " + report.violations.front());
  }
  std::vector<std::vector<long>> adj(static_cast<std::size_t>(tri.n + 2));
  for (auto [a, b] : tri.diagonals) adj[static_cast<std::size_t>(a)].push_back(b);
  for (auto& v : adj) std::sort(v.rbegin(), v.rend());

  std::vector<Token> toks;
  Encoder encoder(adj);
  encoder.emit_range(0, tri.n + 1, toks);

  Encoding enc;
  enc.n = tri.n;
  long depth = 0;
  long pending_zeros = 0;
  for (const Token& tok : toks) {
    if (tok.kind == Token::Kind::Zeros) {
      pending_zeros += tok.count;
      continue;
    }
    if (!enc.parens.empty()) {
      // gap before this symbol; admissible iff currently nested
      if (depth >= 1) {
        enc.gap_counts.push_back(pending_zeros);
      } else if (pending_zeros > 0) {
        throw std::logic_error("triangulation_to_string: zeros outside parens");
      }
      pending_zeros = 0;
    }
    if (tok.kind == Token::Kind::Open) {
      enc.parens.push_back('(');
      ++depth;
    } else {
      enc.parens.push_back(')');
      --depth;
    }
  }
  check_encoding(enc);
  return enc;
}

ZEstimate z_upper_bounds_forced(const ModelParams& params) {
  const double nd = static_cast<double>(params.n);
  ZEstimate est;
  if (params.lambda < 8.0 / (nd * nd)) {
    est = z_bounds_small(params);
  } else if (params.lambda <= 1.0 / nd) {
    est = z_bounds_small(params);
  } else {
    est = z_bounds_mid(params, /*with_lower=*/true);
  }
  est.log_upper += std::log1p(1e-9);
  return est;
}

TriangulationSampler::TriangulationSampler(ModelParams params, Mode mode)
    : params_(params) {
  switch (mode) {
    case Mode::Auto:
      z_ = z_upper_dispatch(params_);
      break;
    case Mode::Exact: {
      const double z = z_exact_log(params_);
      z_ = ZEstimate{z, z, Regime::Exact, params_.n};
      break;
    }
    case Mode::Bounds:
      z_ = z_upper_bounds_forced(params_);
      break;
  }
}

DrawResult TriangulationSampler::draw(RandomSource& rng) {
  DrawResult result;
  result.count = sample_diagonal_count(params_, z_, rng, &diag_);
  EncodingSample enc = sample_encoding(params_.n, result.count.diagonals + 1, rng);
  result.structure_trials = enc.trials;
  result.tri = encoding_to_triangulation(enc.enc);
  return result;
}

PartialTriangulation sample_partial_triangulation(const ModelParams& params,
                                                  RandomSource& rng) {
  TriangulationSampler sampler(params);
  return sampler.draw(rng).tri;
}

std::string triangulation_json(const PartialTriangulation& tri) {
  nlohmann::json j;
  j["n"] = tri.n;
  auto& diags = j["diagonals"] = nlohmann::json::array();
  for (auto [a, b] : tri.diagonals) diags.push_back({a, b});
  j["string"] = triangulation_to_string(tri).expand();
  return j.dump();
}

}  // namespace polysamp
