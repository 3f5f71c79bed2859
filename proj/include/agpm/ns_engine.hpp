#pragma once

#include <cstdint>
#include <vector>

#include "agpm/csr_graph.hpp"
#include "agpm/plan.hpp"
#include "agpm/rng.hpp"
#include "agpm/stats.hpp"

namespace agpm {

/// One scaled sample: value is the inverse of the decision-path probability
/// on a hit (seed factor times every candidate-set size), 0 on a miss.
struct SampledCount {
  double value = 0.0;
  bool hit = false;
  uint64_t work_units = 0;
};

/// Cumulative arc index so a uniform seed arc is one bounded draw plus a
/// binary search; works for plain and color-sparsified views alike.
class SeedIndex {
 public:
  explicit SeedIndex(const CsrView& g);
  uint64_t total_arcs() const { return prefix_.back(); }
  std::pair<uint32_t, uint32_t> arc(const CsrView& g, uint64_t index) const;

 private:
  std::vector<uint64_t> prefix_;
};

SampledCount draw_sample(const CsrView& g, const SeedIndex& seeds, const ExecutionPlan& plan,
                         CounterRng& rng);

/// Convenience overload building the seed index on the fly.
SampledCount draw_sample(const CsrView& g, const ExecutionPlan& plan, CounterRng& rng);

struct OnlinePolicy {
  uint64_t n_min = 1000;            // floor per convergence window
  uint64_t max_samples = 1000000000;  // zero-match guard
  uint64_t profiled_n_samples = 0;  // when set, window = 10% of it
};

struct OnlineResult {
  ConvergenceReport report;
  SampleAccumulator accumulator;
  uint64_t windows = 0;
  uint64_t work_units = 0;
};

/// Draw samples in windows, merge per-worker accumulators at each barrier,
/// and stop once the predicted error drops to eps (or the cap is hit, in
/// which case converged stays false). Bit-reproducible for fixed seed with
/// one worker; per-sample streams are keyed on (seed, worker, index).
OnlineResult run_ns_online(const CsrView& g, const ExecutionPlan& plan, double eps, double delta,
                           const OnlinePolicy& policy, uint64_t seed, int workers = 1);

/// Fixed-budget accumulator (misses included); hit_rate_report is its
/// hits/budget fraction.
SampleAccumulator run_fixed_budget(const CsrView& g, const ExecutionPlan& plan, uint64_t budget,
                                   uint64_t seed, int workers = 1);
double hit_rate_report(const CsrView& g, const ExecutionPlan& plan, uint64_t sample_budget,
                       uint64_t seed, int workers = 1);

}  // namespace agpm
