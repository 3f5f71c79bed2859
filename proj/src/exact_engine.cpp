#include "agpm/exact_engine.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "agpm/set_ops.hpp"
#include "agpm/walker.hpp"

namespace agpm {

namespace {

struct SearchFrame {
  std::vector<uint32_t> candidates;
};

// Depth-first interpretation below one seed edge.
void search_from_seed(const CsrView& g, const ExecutionPlan& plan, bool apply_bounds,
                      std::vector<uint32_t>& binding, std::vector<SearchFrame>& frames,
                      WalkScratch& scratch, uint64_t& count, uint64_t& work) {
  const size_t depth = plan.steps.size();
  if (depth == 0) {
    if (plan.verify_mode == VerifyMode::Lazy && !lazy_terminal_ok(g, plan, binding, work)) return;
    ++count;
    return;
  }
  size_t si = 0;
  std::vector<size_t> cursor(depth, 0);
  build_step_candidates(g, plan, 0, binding, apply_bounds, frames[0].candidates, work, scratch);
  while (true) {
    const bool last = si + 1 == depth;
    auto& cand = frames[si].candidates;
    if (last && plan.verify_mode == VerifyMode::Eager) {
      count += cand.size();  // eager plans have nothing left to verify at the leaf
      cand.clear();
    }
    if (cursor[si] >= cand.size()) {
      if (si == 0) return;
      cursor[si] = 0;
      --si;
      binding.pop_back();
      continue;
    }
    uint32_t v = cand[cursor[si]++];
    binding.push_back(v);
    if (plan.verify_mode == VerifyMode::Lazy) {
      uint32_t parent = binding[plan.steps[si].tree_parent];
      if (!sorted_contains(g.neighbors_of(parent), v, work)) {
        binding.pop_back();
        continue;
      }
    }
    if (last) {
      if (lazy_terminal_ok(g, plan, binding, work)) ++count;
      binding.pop_back();
      continue;
    }
    ++si;
    build_step_candidates(g, plan, si, binding, apply_bounds, frames[si].candidates, work, scratch);
  }
}

}  // namespace

ExactCountResult exact_count(const CsrView& g, const ExecutionPlan& plan, int threads) {
  const bool oriented_clique = g.oriented && plan.is_clique();
  if (g.oriented && !plan.is_clique())
    throw std::invalid_argument("oriented graphs are only valid for clique plans");
  if (g.oriented && plan.verify_mode == VerifyMode::Lazy)
    throw std::invalid_argument("oriented graphs require an eager plan");
  const bool apply_bounds = !oriented_clique;

  uint64_t count = 0, work = 0;
  const auto n = static_cast<int64_t>(g.vertex_count);
#pragma omp parallel num_threads(threads > 0 ? threads : 1) reduction(+ : count, work)
  {
    std::vector<uint32_t> binding;
    std::vector<SearchFrame> frames(plan.steps.size());
    WalkScratch scratch;
#pragma omp for schedule(dynamic, 16)
    for (int64_t u = 0; u < n; ++u) {
      for (uint32_t v : g.neighbors_of(static_cast<uint32_t>(u))) {
        if (!oriented_clique && plan.seed_ordered && static_cast<uint32_t>(u) > v) continue;
        binding.assign({static_cast<uint32_t>(u), v});
        search_from_seed(g, plan, apply_bounds, binding, frames, scratch, count, work);
      }
    }
  }
  return {count, work};
}

namespace {

// Backtracking over pattern vertices in id order; candidates are any unused
// graph vertices consistent with the already-assigned pattern edges (and
// non-edges when vertex-induced).
uint64_t count_injective_maps(const CsrView& g, const Pattern& p, std::vector<uint32_t>& image,
                              std::vector<bool>& used, int next) {
  if (next == p.vertex_count) return 1;
  uint64_t total = 0;
  uint64_t ignore = 0;
  for (uint32_t cand = 0; cand < g.vertex_count; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      bool want = p.has_edge(prev, next);
      if (!want && p.induced == InducedMode::Edge) continue;
      bool have = sorted_contains(g.neighbors_of(image[prev]), cand, ignore);
      if (want != have) ok = false;
    }
    if (!ok) continue;
    image[next] = cand;
    used[cand] = true;
    total += count_injective_maps(g, p, image, used, next + 1);
    used[cand] = false;
  }
  return total;
}

}  // namespace

uint64_t brute_force_count(const CsrGraph& g, const Pattern& pattern) {
  if (g.vertex_count() > 14)
    throw std::invalid_argument("brute-force oracle is limited to 14 vertices");
  Pattern p = pattern;
  p.normalize();
  std::vector<uint32_t> image(p.vertex_count);
  std::vector<bool> used(g.vertex_count(), false);
  uint64_t maps = count_injective_maps(g.view(), p, image, used, 0);
  uint64_t aut = p.automorphisms().size();
  return maps / aut;
}

uint64_t count_matches_through_edge(const CsrView& g, const Pattern& pattern, uint32_t u,
                                    uint32_t v, int64_t* work_budget) {
  Pattern p = pattern;
  p.normalize();
  uint64_t maps = 0;
  std::vector<uint32_t> image(p.vertex_count, 0);
  std::vector<bool> used(g.vertex_count, false);

  // Anchor each pattern edge onto (u,v) in both orientations and extend in a
  // BFS order from the anchor, so every placed vertex draws candidates from
  // an already-assigned neighbor's adjacency list instead of the whole
  // vertex set. Injectivity means a map covers (u,v) with exactly one
  // pattern edge, so the anchored counts add up without overlap.
  std::vector<int> ext_order;
  std::function<uint64_t(size_t, uint32_t)> extend = [&](size_t depth,
                                                         uint32_t assigned_mask) -> uint64_t {
    if (depth == ext_order.size()) return 1;
    if (work_budget && *work_budget <= 0) return 0;  // probe budget exhausted
    int pv = ext_order[depth];
    int pool_parent = -1;
    for (int prev = 0; prev < p.vertex_count; ++prev)
      if (((assigned_mask >> prev) & 1u) && p.has_edge(prev, pv)) {
        if (pool_parent < 0 ||
            g.degree(image[prev]) < g.degree(image[pool_parent]))
          pool_parent = prev;
      }
    uint64_t total = 0;
    uint64_t ignore = 0;
    auto pool = g.neighbors_of(image[pool_parent]);
    if (work_budget) *work_budget -= static_cast<int64_t>(pool.size());
    for (uint32_t cand : pool) {
      if (used[cand]) continue;
      bool ok = true;
      for (int prev = 0; prev < p.vertex_count && ok; ++prev) {
        if (prev == pool_parent || !((assigned_mask >> prev) & 1u)) continue;
        bool want = p.has_edge(prev, pv);
        if (!want && p.induced == InducedMode::Edge) continue;
        bool have = sorted_contains(g.neighbors_of(image[prev]), cand, ignore);
        if (want != have) ok = false;
      }
      if (!ok) continue;
      image[pv] = cand;
      used[cand] = true;
      total += extend(depth + 1, assigned_mask | (1u << pv));
      used[cand] = false;
    }
    return total;
  };

  uint64_t ignore = 0;
  for (auto [a, b] : p.edges) {
    ext_order.clear();
    uint32_t reached = (1u << a) | (1u << b);
    while (ext_order.size() + 2 < static_cast<size_t>(p.vertex_count)) {
      for (int pv = 0; pv < p.vertex_count; ++pv) {
        if ((reached >> pv) & 1u) continue;
        bool touches = false;
        for (int prev = 0; prev < p.vertex_count; ++prev)
          if (((reached >> prev) & 1u) && p.has_edge(prev, pv)) touches = true;
        if (touches) {
          ext_order.push_back(pv);
          reached |= 1u << pv;
          break;
        }
      }
    }
    for (int flip = 0; flip < 2; ++flip) {
      uint32_t da = flip ? v : u;
      uint32_t db = flip ? u : v;
      if (!sorted_contains(g.neighbors_of(da), db, ignore)) continue;
      image[a] = da;
      image[b] = db;
      used[da] = used[db] = true;
      maps += extend(0, (1u << a) | (1u << b));
      used[da] = used[db] = false;
    }
  }
  return maps / p.automorphisms().size();
}

}  // namespace agpm
