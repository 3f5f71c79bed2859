#include "agpm/ns_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "agpm/set_ops.hpp"
#include "agpm/walker.hpp"

namespace agpm {

SeedIndex::SeedIndex(const CsrView& g) {
  prefix_.resize(static_cast<size_t>(g.vertex_count) + 1);
  prefix_[0] = 0;
  for (uint32_t u = 0; u < g.vertex_count; ++u) prefix_[u + 1] = prefix_[u] + g.degree(u);
}

std::pair<uint32_t, uint32_t> SeedIndex::arc(const CsrView& g, uint64_t index) const {
  auto it = std::upper_bound(prefix_.begin(), prefix_.end(), index);
  auto u = static_cast<uint32_t>((it - prefix_.begin()) - 1);
  uint32_t v = g.neighbors[g.begin[u] + (index - prefix_[u])];
  return {u, v};
}

namespace {

SampledCount draw_one(const CsrView& g, const SeedIndex& seeds, const ExecutionPlan& plan,
                      CounterRng& rng, std::vector<uint32_t>& binding,
                      std::vector<uint32_t>& cand, WalkScratch& scratch) {
  SampledCount out;
  auto [u, v] = seeds.arc(g, rng.next_below(seeds.total_arcs()));
  if (plan.seed_ordered && u > v) std::swap(u, v);  // fold arcs onto the canonical orientation
  binding.assign({u, v});
  double alpha = plan.seed_scale(g.edge_count);

  for (size_t si = 0; si < plan.steps.size(); ++si) {
    build_step_candidates(g, plan, si, binding, true, cand, out.work_units, scratch);
    if (cand.empty()) return out;  // miss, early break
    alpha *= static_cast<double>(cand.size());
    uint32_t pick = cand[rng.next_below(cand.size())];
    binding.push_back(pick);
    if (plan.verify_mode == VerifyMode::Lazy) {
      uint32_t parent = binding[plan.steps[si].tree_parent];
      if (!sorted_contains(g.neighbors_of(parent), pick, out.work_units)) return out;
    }
  }
  if (plan.verify_mode == VerifyMode::Lazy &&
      !lazy_terminal_ok(g, plan, binding, out.work_units))
    return out;
  out.hit = true;
  out.value = alpha;
  return out;
}

struct WorkerState {
  SampleAccumulator acc;
  uint64_t next_sample_index = 0;
  uint64_t work_units = 0;
};

// Each worker draws its slice of the window with streams keyed on
// (seed, worker, sample index); merging in worker order keeps the run
// deterministic for a fixed worker count.
void run_window(const CsrView& g, const SeedIndex& seeds, const ExecutionPlan& plan,
                uint64_t seed, std::vector<WorkerState>& states, uint64_t window) {
  const auto workers = static_cast<uint64_t>(states.size());
  auto draw_range = [&](uint64_t w, uint64_t count) {
    auto& st = states[w];
    std::vector<uint32_t> binding, cand;
    WalkScratch scratch;
    for (uint64_t i = 0; i < count; ++i) {
      CounterRng rng(seed, w, st.next_sample_index++);
      SampledCount s = draw_one(g, seeds, plan, rng, binding, cand, scratch);
      st.acc.add(s.value, s.hit);
      st.work_units += s.work_units;
    }
  };
  if (workers == 1) {
    draw_range(0, window);
    return;
  }
  std::vector<std::thread> pool;
  for (uint64_t w = 0; w < workers; ++w) {
    uint64_t count = window / workers + (w < window % workers ? 1 : 0);
    pool.emplace_back(draw_range, w, count);
  }
  for (auto& t : pool) t.join();
}

}  // namespace

SampledCount draw_sample(const CsrView& g, const SeedIndex& seeds, const ExecutionPlan& plan,
                         CounterRng& rng) {
  if (g.edge_count == 0) throw std::invalid_argument("cannot sample from an empty graph");
  if (g.oriented) throw std::invalid_argument("sampling runs on the symmetric graph");
  std::vector<uint32_t> binding, cand;
  WalkScratch scratch;
  return draw_one(g, seeds, plan, rng, binding, cand, scratch);
}

SampledCount draw_sample(const CsrView& g, const ExecutionPlan& plan, CounterRng& rng) {
  SeedIndex seeds(g);
  return draw_sample(g, seeds, plan, rng);
}

OnlineResult run_ns_online(const CsrView& g, const ExecutionPlan& plan, double eps, double delta,
                           const OnlinePolicy& policy, uint64_t seed, int workers) {
  if (!(eps > 0.0) || !(eps < 1.0)) throw std::invalid_argument("error bound must be inside (0,1)");
  if (!(delta > 0.0) || !(delta < 1.0)) throw std::invalid_argument("delta must be inside (0,1)");
  if (g.edge_count == 0) throw std::invalid_argument("cannot sample from an empty graph");
  if (workers < 1) workers = 1;

  SeedIndex seeds(g);
  std::vector<WorkerState> states(workers);
  uint64_t window = std::max<uint64_t>(policy.n_min, 10ull * static_cast<uint64_t>(workers));
  if (policy.profiled_n_samples > 0)
    window = std::max(window, policy.profiled_n_samples / 10);

  OnlineResult result;
  uint64_t drawn = 0;
  while (true) {
    uint64_t this_window = std::min(window, policy.max_samples - drawn);
    if (this_window == 0) break;
    run_window(g, seeds, plan, seed, states, this_window);
    drawn += this_window;
    ++result.windows;

    SampleAccumulator merged;
    for (const auto& st : states) merged.merge(st.acc);
    result.report = predicted_error(merged, delta);
    result.accumulator = merged;
    if (result.report.epsilon_hat <= eps) {
      result.report.converged = true;
      break;
    }
    if (drawn >= policy.max_samples) break;
  }
  for (const auto& st : states) result.work_units += st.work_units;
  return result;
}

SampleAccumulator run_fixed_budget(const CsrView& g, const ExecutionPlan& plan, uint64_t budget,
                                   uint64_t seed, int workers) {
  if (budget < 1) throw std::invalid_argument("sample budget must be >= 1");
  if (g.edge_count == 0) throw std::invalid_argument("cannot sample from an empty graph");
  if (workers < 1) workers = 1;
  SeedIndex seeds(g);
  std::vector<WorkerState> states(workers);
  run_window(g, seeds, plan, seed, states, budget);
  SampleAccumulator merged;
  for (const auto& st : states) merged.merge(st.acc);
  return merged;
}

double hit_rate_report(const CsrView& g, const ExecutionPlan& plan, uint64_t sample_budget,
                       uint64_t seed, int workers) {
  SampleAccumulator acc = run_fixed_budget(g, plan, sample_budget, seed, workers);
  return static_cast<double>(acc.hits) / static_cast<double>(acc.n);
}

}  // namespace agpm
