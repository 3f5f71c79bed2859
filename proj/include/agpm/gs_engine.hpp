#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "agpm/csr_graph.hpp"
#include "agpm/exact_engine.hpp"
#include "agpm/plan.hpp"

namespace agpm {

/// Sparsify, exact-count the sample, scale back: p^-l for Bernoulli edges,
/// c^(k-1) for colors (all pattern vertices must land in one color class).
struct GsEstimate {
  double estimate = 0.0;
  uint64_t raw_count = 0;
  double scale = 1.0;
  SparsifyParams params;
  double preprocess_seconds = 0.0;
  double search_seconds = 0.0;
  uint64_t search_work_units = 0;
};

GsEstimate gs_estimate(const CsrGraph& g, const ExecutionPlan& plan, const SparsifyParams& params,
                       int threads = 1);

struct ReadKBoundInputs {
  double epsilon = 0.1;
  double delta = 0.01;
  double count_estimate = 0.0;  // rough C
  double gamma_estimate = 1.0;  // max matches incident to one edge
};

struct KeepProbability {
  double p = 1.0;
  bool sparsification_useless = false;  // C estimate was zero
  uint32_t color_count() const;         // floor(1/p), clamped to >= 1
};

/// Read-k Chernoff bound: p = min(1, -3 ln(delta/2) gamma / (eps^2 C)).
KeepProbability choose_keep_probability(const ReadKBoundInputs& inputs);

/// Analytic variance of the Bernoulli estimator on a small graph, from the
/// full match list: per-match term C (p^-l - 1) plus the pairwise covariance
/// p^-s - 1 over both orderings of every match pair sharing s edges. t_z
/// histograms pairs by shared vertex count for the profile.
struct GsVarianceDiagnostic {
  double analytic_variance = 0.0;
  uint64_t match_count = 0;
  std::map<int, uint64_t> t_z;  // unordered match pairs sharing z >= 1 vertices
};

GsVarianceDiagnostic gs_variance_diagnostic(const CsrGraph& g, const Pattern& pattern,
                                            double keep_probability);

/// Max matches through any of `probe_edges` uniformly sampled edges; a lower
/// bound on the true gamma. Probing stops early once the rooted searches
/// have spent `work_budget` candidate inspections.
uint64_t estimate_gamma(const CsrView& g, const Pattern& pattern, uint64_t probe_edges,
                        uint64_t seed, int64_t work_budget = 50000000);

/// Exhaustive gamma over every edge (diagnostic / oracle).
uint64_t exact_gamma(const CsrView& g, const Pattern& pattern);

/// All matches as (sorted vertex tuple, edge-key set); the diagnostic and
/// unbiasedness oracles enumerate from it. Small graphs only.
struct MatchRecord {
  std::vector<uint32_t> vertices;
  std::vector<uint64_t> edge_keys;  // min*2^32+max per mapped pattern edge
};
std::vector<MatchRecord> list_matches(const CsrGraph& g, const Pattern& pattern);

}  // namespace agpm
