#include "agpm/cost_model.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <vector>

#include "agpm/ns_engine.hpp"
#include "agpm/set_ops.hpp"

namespace agpm {

namespace {

// fixed model overheads in comparison units
constexpr double kSeedUnits = 16.0;
constexpr double kSampleUnits = 8.0;

double log2_ceil(double x) { return x <= 1.0 ? 1.0 : std::ceil(std::log2(x)); }

}  // namespace

std::string default_hw_cache_path() {
  if (const char* env = std::getenv("AGPM_HW_CACHE")) return env;
  if (const char* home = std::getenv("HOME")) return std::string(home) + "/.agpm_hwconst";
  return ".agpm_hwconst";
}

double calibrate_hardware_constant(const std::string& cache_path, bool force) {
  if (!force) {
    std::ifstream f(cache_path);
    double cached = 0.0;
    if (f >> cached && cached > 0.0) return cached;
  }

  // Random list contents keep the merge branches unpredictable, matching the
  // behavior of intersections over real adjacency lists; a trained-branch
  // loop would undershoot the constant several-fold.
  constexpr size_t kPairs = 64;
  constexpr size_t kLen = 2048;
  std::vector<std::vector<uint32_t>> pool(2 * kPairs);
  CounterRng rng(0x63616c69ull);
  for (auto& list : pool) {
    list.resize(kLen);
    for (auto& x : list) x = static_cast<uint32_t>(rng.next_below(1u << 20));
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  std::vector<uint32_t> out;
  out.reserve(kLen);

  uint64_t target = 50000000;  // comparisons per attempt
  double seconds = 0.0;
  uint64_t work = 0;
  uint64_t sink = 0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    work = 0;
    auto t0 = std::chrono::steady_clock::now();
    size_t i = 0;
    while (work < target) {
      intersect_into(pool[i], pool[i + 1], out, work);
      sink += out.size();
      i = (i + 2) % (2 * kPairs);
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (seconds >= 0.010) break;
    target *= 2;  // timer resolution too coarse, grow the workload
  }
  double constant = seconds / static_cast<double>(work);
  if (sink == uint64_t(-1)) constant += 0.0;  // keep the loop observable
  std::ofstream f(cache_path);
  if (f) f << constant << '\n';
  return constant;
}

double ns_model_step_work(const CsrView& g, const ExecutionPlan& plan, size_t step_index) {
  const double d = g.average_degree();
  const PlanStep& step = plan.steps[step_index];
  double setop;
  if (plan.verify_mode == VerifyMode::Eager) {
    auto t = static_cast<double>(step.in_positions.size());
    setop = (t <= 1.0 ? d : t * d) + static_cast<double>(step.out_positions.size()) * d;
  } else {
    // union over every bound vertex plus the tree-edge probe
    setop = static_cast<double>(step_index + 2) * d + log2_ceil(d);
  }
  return setop;
}

CostCone ns_cost_cone(const CsrView& g, const ExecutionPlan& plan, uint64_t n_samples,
                      double hw_const) {
  const double d = g.average_degree();
  double full = kSeedUnits;
  for (size_t si = 0; si < plan.steps.size(); ++si)
    full += ns_model_step_work(g, plan, si) + kSampleUnits;
  if (plan.verify_mode == VerifyMode::Lazy)
    full += static_cast<double>(plan.closure_edges.size()) * log2_ceil(d);
  double first_break = kSeedUnits;
  if (!plan.steps.empty()) first_break += ns_model_step_work(g, plan, 0);

  CostCone cone;
  cone.lower_slope = hw_const * first_break;
  cone.upper_slope = hw_const * full;
  cone.n_samples = n_samples;
  cone.lower_time = cone.lower_slope * static_cast<double>(n_samples);
  cone.upper_time = cone.upper_slope * static_cast<double>(n_samples);
  return cone;
}

GsCostEstimate gs_cost_estimate(const CsrView& g, const ExecutionPlan& plan, uint32_t colors,
                                double hw_const, uint64_t triangle_count) {
  if (colors == 0) throw std::invalid_argument("color count must be >= 1");
  const double p = 1.0 / static_cast<double>(colors);
  const double n = static_cast<double>(g.vertex_count);
  const double m = static_cast<double>(g.edge_count);
  const double t_count = static_cast<double>(triangle_count);

  GsCostEstimate est;
  est.color_count = colors;
  est.preprocess_work = m * (1.0 + p);

  const double p1 = 2.0 * m * p / (n * n);
  const double p2 = t_count * n / (2.0 * m * m);
  const double sparse_degree = n > 0 ? 2.0 * m * p / n : 0.0;

  // innermost-first: work_below(si) = o_si + |Z_si| * work_below(si+1)
  double below = 0.0;
  for (size_t idx = plan.steps.size(); idx-- > 0;) {
    const PlanStep& step = plan.steps[idx];
    auto t = static_cast<double>(step.in_positions.size());
    double op_cost = std::max(t, 1.0) * sparse_degree +
                     static_cast<double>(step.out_positions.size()) * sparse_degree;
    double level_size;
    if (t >= 2.0)
      level_size = n * p1 * std::pow(p2, t - 1.0);
    else
      level_size = m * p > 0 ? n / (m * p) : 0.0;
    below = op_cost + level_size * below;
  }
  est.search_work = m * p * below;
  est.total_seconds = (est.preprocess_work + est.search_work) * hw_const;
  return est;
}

ProfileResult fast_profile(const CsrGraph& g, const ExecutionPlan& plan, double profile_fraction,
                           double user_epsilon, uint64_t seed, int threads,
                           uint64_t profiler_sample_cap) {
  if (!(profile_fraction > 0.0) || !(profile_fraction < 1.0))
    throw std::invalid_argument("profile fraction must be inside (0,1)");
  constexpr double kInternalEps = 0.5;
  constexpr double kInternalDelta = 0.01;

  ProfileResult prof;
  prof.fraction = profile_fraction;
  auto t0 = std::chrono::steady_clock::now();

  CsrGraph sparse = bernoulli_sparsify(g, profile_fraction, derive_key(seed, 0x70726f66ull));
  if (sparse.edge_count() == 0) return prof;  // unreliable

  OnlinePolicy policy;
  policy.max_samples = profiler_sample_cap;
  OnlineResult run =
      run_ns_online(sparse.view(), plan, kInternalEps, kInternalDelta, policy, seed, threads);
  prof.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  prof.n_converged = run.report.n;
  prof.mu_prime = run.report.mu;
  prof.epsilon_hat_final = run.report.epsilon_hat;
  if (!run.report.converged || !(run.report.mu > 0.0)) return prof;  // cap hit: unreliable

  const int l = plan.pattern.edge_count();
  const int k = plan.k();
  prof.scaled_count = prof.mu_prime * std::pow(profile_fraction, -l);

  // rho(P,G) = 1/(m Delta^(k-2)); converged-sample scaling by variance:
  // N_s = N_o (eps_hat/eps)^2 (mu' rho') / (S rho)
  const double m_full = static_cast<double>(g.edge_count());
  const double m_sparse = static_cast<double>(sparse.edge_count());
  const double delta_full = static_cast<double>(g.view().max_degree());
  const double delta_sparse = static_cast<double>(sparse.view().max_degree());
  double rho_ratio = (m_full * std::pow(delta_full, k - 2)) /
                     (m_sparse * std::pow(delta_sparse, k - 2));
  double ratio = prof.epsilon_hat_final / user_epsilon;
  prof.n_samples_estimate = static_cast<double>(prof.n_converged) * ratio * ratio *
                            (prof.mu_prime / prof.scaled_count) * rho_ratio;
  if (prof.n_samples_estimate < 1.0) prof.n_samples_estimate = 1.0;
  prof.reliable = true;
  return prof;
}

Scheme select_scheme(const CostCone& cone, const GsCostEstimate& gs) {
  return gs.total_seconds < cone.lower_time ? Scheme::GS : Scheme::NS;
}

}  // namespace agpm
