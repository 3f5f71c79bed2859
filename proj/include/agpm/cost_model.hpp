#pragma once

#include <cstdint>
#include <string>

#include "agpm/csr_graph.hpp"
#include "agpm/plan.hpp"

namespace agpm {

/// Measured seconds per work unit (one set-operation comparison), cached per
/// machine. Re-runs with a doubled workload if the timer resolution is too
/// coarse (< 10 ms total).
double calibrate_hardware_constant(const std::string& cache_path, bool force = false);
std::string default_hw_cache_path();

/// Two-slope linear model of NS time: the lower slope stops at the first
/// step that can break (its candidate set computed, found empty), the upper
/// slope pays the full plan with average-degree candidate sizes.
struct CostCone {
  double lower_slope = 0.0;  // seconds per sample
  double upper_slope = 0.0;
  uint64_t n_samples = 0;
  double lower_time = 0.0;
  double upper_time = 0.0;
};

CostCone ns_cost_cone(const CsrView& g, const ExecutionPlan& plan, uint64_t n_samples,
                      double hw_const);

/// Per-sample work in model units (upper slope / hw); exposed for tests.
double ns_model_step_work(const CsrView& g, const ExecutionPlan& plan, size_t step_index);

/// GS time model: preprocessing |E| (w1 + p w2) plus the nested exact-search
/// work with GraphPi-style cardinalities. Intersection levels of t lists use
/// |V| p1 p2^(t-1) with p1 = 2|E|p/|V|^2 and p2 = T|V|/(2|E|^2) (the T' = T p^2
/// and |E'| = |E| p substitutions cancel); single-list levels use the
/// |V|/(|E| p) bound.
struct GsCostEstimate {
  double preprocess_work = 0.0;
  double search_work = 0.0;
  double total_seconds = 0.0;
  uint32_t color_count = 1;
};

GsCostEstimate gs_cost_estimate(const CsrView& g, const ExecutionPlan& plan, uint32_t colors,
                                double hw_const, uint64_t triangle_count);

/// Fast profiler: sparsify to `profile_fraction`, converge NS online at the
/// fixed internal bound (50% error, 99% confidence), then rescale the
/// converged sample count to the user's error bound on the full graph. The
/// per-match sampling probability rho(P,G) is modeled as 1/(m Delta^(k-2)).
struct ProfileResult {
  double n_samples_estimate = 0.0;  // N_s for the NS cost model
  double mu_prime = 0.0;            // count estimate on the profile graph
  double scaled_count = 0.0;        // rescaled to G by the GS rule
  double epsilon_hat_final = 0.0;
  uint64_t n_converged = 0;  // N_o
  double fraction = 0.0;
  bool reliable = false;
  double seconds = 0.0;
};

ProfileResult fast_profile(const CsrGraph& g, const ExecutionPlan& plan, double profile_fraction,
                           double user_epsilon, uint64_t seed, int threads = 1,
                           uint64_t profiler_sample_cap = 1000000);

enum class Scheme { NS, GS };

/// Below the cone -> GS; inside or above -> NS (the overlap resolves toward
/// the scheme with the confidence guarantee).
Scheme select_scheme(const CostCone& cone, const GsCostEstimate& gs);

}  // namespace agpm
