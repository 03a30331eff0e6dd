#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polysamp/count_sampler.hpp"
#include "polysamp/partition.hpp"
#include "polysamp/rng.hpp"
#include "polysamp/structure_sampler.hpp"

namespace polysamp {

/// Partial triangulation of the convex (n+2)-gon. Vertices 0..n+1 clockwise;
/// the root edge is (0, n+1) and is never a diagonal. Diagonals are stored
/// as (a,b) with a < b, b - a >= 2, sorted lexicographically.
struct PartialTriangulation {
  long n = 0;
  std::vector<std::pair<long, long>> diagonals;

  long parts() const { return static_cast<long>(diagonals.size()) + 1; }
  bool operator==(const PartialTriangulation& o) const {
    return n == o.n && diagonals == o.diagonals;
  }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Structural checks: label ranges, the root-edge exclusion, pairwise
/// non-crossing, diagonal-count bound. Never throws.
ValidationReport validate(const PartialTriangulation& tri);

/// Decode an encoding into the triangulation it represents. Boundary edge
/// (i, i+1) is the i-th leaf of the depth-first face walk; zeros are
/// consumed as counts so the cost is O(pairs). Inverse of
/// triangulation_to_string. Throws std::invalid_argument on malformed input.
PartialTriangulation encoding_to_triangulation(const Encoding& enc);

/// Encode a triangulation: the face adjacent to the root edge contributes
/// "(" children ")" trailing-child, recursively. Inverse of
/// encoding_to_triangulation.
Encoding triangulation_to_string(const PartialTriangulation& tri);

/// One draw of the two-stage pipeline plus its per-stage diagnostics.
struct DrawResult {
  PartialTriangulation tri;
  DiagonalCountSample count;
  long structure_trials = 1;
};

/// Samples exact configurations from the weighted distribution: diagonal
/// count by rejection against Z+, then a uniform structure with that count.
/// The Z estimate is computed once and shared across draws.
class TriangulationSampler {
 public:
  enum class Mode { Auto, Exact, Bounds };

  explicit TriangulationSampler(ModelParams params, Mode mode = Mode::Auto);

  DrawResult draw(RandomSource& rng);

  const ZEstimate& z_estimate() const { return z_; }
  const CountSamplerDiagnostics& diagnostics() const { return diag_; }
  const ModelParams& params() const { return params_; }

 private:
  ModelParams params_;
  ZEstimate z_;
  CountSamplerDiagnostics diag_;
};

/// Regime selection when bound mode is forced (no exact fallback).
/// Throws RegimeError if no bound regime covers (n, lambda).
ZEstimate z_upper_bounds_forced(const ModelParams& params);

/// Convenience one-shot sampler (recomputes the Z estimate per call).
PartialTriangulation sample_partial_triangulation(const ModelParams& params,
                                                  RandomSource& rng);

/// Canonical JSON for a triangulation:
/// {"diagonals":[[a,b],...], "n":n, "string":"(...)"}. Deterministic bytes
/// for identical input.
std::string triangulation_json(const PartialTriangulation& tri);

}  // namespace polysamp
