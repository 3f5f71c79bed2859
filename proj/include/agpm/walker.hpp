#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "agpm/csr_graph.hpp"
#include "agpm/plan.hpp"
#include "agpm/set_ops.hpp"

namespace agpm {

// Shared step interpreter: the exact engine enumerates candidate sets, the
// sampling engine draws from them, and the test oracles walk every decision
// path. All three must agree on the sets, so the construction lives here.

struct WalkScratch {
  std::vector<uint32_t> tmp;
  std::vector<std::span<const uint32_t>> lists;
};

/// Candidate set for plan.steps[step_index] given bound data vertices.
/// Eager: intersection of in-lists minus out-lists, bound vertices removed,
/// order constraints applied (unless apply_bounds is off, e.g. on oriented
/// clique searches where the orientation already canonicalizes).
/// Lazy: union of all bound neighborhoods minus bound vertices.
inline void build_step_candidates(const CsrView& g, const ExecutionPlan& plan, size_t step_index,
                                  const std::vector<uint32_t>& binding, bool apply_bounds,
                                  std::vector<uint32_t>& out, uint64_t& work,
                                  WalkScratch& scratch) {
  const PlanStep& step = plan.steps[step_index];
  out.clear();

  if (plan.verify_mode == VerifyMode::Eager) {
    scratch.lists.clear();
    for (int pos : step.in_positions) scratch.lists.push_back(g.neighbors_of(binding[pos]));
    std::sort(scratch.lists.begin(), scratch.lists.end(),
              [](const auto& a, const auto& b) { return a.size() < b.size(); });
    if (scratch.lists.size() == 1) {
      out.assign(scratch.lists[0].begin(), scratch.lists[0].end());
    } else {
      intersect_into(scratch.lists[0], scratch.lists[1], out, work);
      for (size_t i = 2; i < scratch.lists.size() && !out.empty(); ++i) {
        intersect_into(out, scratch.lists[i], scratch.tmp, work);
        std::swap(out, scratch.tmp);
      }
    }
    for (int pos : step.out_positions) {
      if (out.empty()) break;
      difference_into(out, g.neighbors_of(binding[pos]), scratch.tmp, work);
      std::swap(out, scratch.tmp);
    }
  } else {
    // subgraph neighborhood: union over every bound vertex
    for (size_t pos = 0; pos < binding.size(); ++pos) {
      union_into(out, g.neighbors_of(binding[pos]), scratch.tmp, work);
      std::swap(out, scratch.tmp);
    }
  }

  uint32_t lo = 0;
  uint32_t hi = std::numeric_limits<uint32_t>::max();
  if (apply_bounds && plan.verify_mode == VerifyMode::Eager) {
    for (int pos : step.greater_than) lo = std::max(lo, binding[pos] + 1);
    for (int pos : step.less_than) hi = std::min(hi, binding[pos]);
  }
  size_t kept = 0;
  for (uint32_t c : out) {
    ++work;
    if (c < lo || c >= hi) continue;
    bool is_bound = false;
    for (uint32_t b : binding)
      if (b == c) {
        is_bound = true;
        break;
      }
    if (!is_bound) out[kept++] = c;
  }
  out.resize(kept);
}

/// Lazy leaf verification: deferred closing edges, the symmetry constraints
/// not consumed by the seed orientation, and (vertex-induced) absent edges
/// for every pattern non-edge.
inline bool lazy_terminal_ok(const CsrView& g, const ExecutionPlan& plan,
                             const std::vector<uint32_t>& binding, uint64_t& work) {
  for (auto [a, b] : plan.closure_edges) {
    uint32_t da = binding[plan.pos_of[a]];
    uint32_t db = binding[plan.pos_of[b]];
    if (!sorted_contains(g.neighbors_of(da), db, work)) return false;
  }
  for (auto [a, b] : plan.terminal_constraints)
    if (!(binding[plan.pos_of[a]] < binding[plan.pos_of[b]])) return false;
  if (plan.pattern.induced == InducedMode::Vertex) {
    for (int a = 0; a < plan.k(); ++a)
      for (int b = a + 1; b < plan.k(); ++b) {
        if (plan.pattern.has_edge(a, b)) continue;
        uint32_t da = binding[plan.pos_of[a]];
        uint32_t db = binding[plan.pos_of[b]];
        if (sorted_contains(g.neighbors_of(da), db, work)) return false;
      }
  }
  return true;
}

/// Walks every (seed, choice...) decision path of the sampler on a symmetric
/// graph and reports each leaf with its probability and scaled value (0 on a
/// miss). Drives the unbiasedness and bijection oracles; exact expectation is
/// the sum of prob*value over all leaves.
template <class Fn>
void for_each_decision_path(const CsrView& g, const ExecutionPlan& plan, Fn&& fn) {
  if (g.oriented) throw std::invalid_argument("decision-path enumeration needs a symmetric graph");
  const double m = static_cast<double>(g.edge_count);
  if (g.edge_count == 0) return;
  std::vector<uint32_t> binding;
  WalkScratch scratch;
  uint64_t work = 0;

  std::function<void(size_t, double, double)> descend = [&](size_t si, double prob, double alpha) {
    if (si == plan.steps.size()) {
      double value = alpha;
      if (plan.verify_mode == VerifyMode::Lazy && !lazy_terminal_ok(g, plan, binding, work))
        value = 0.0;
      fn(binding, prob, value);
      return;
    }
    std::vector<uint32_t> cand;
    build_step_candidates(g, plan, si, binding, true, cand, work, scratch);
    if (cand.empty()) {
      fn(binding, prob, 0.0);
      return;
    }
    double branch_prob = prob / static_cast<double>(cand.size());
    double branch_alpha = alpha * static_cast<double>(cand.size());
    for (uint32_t c : cand) {
      binding.push_back(c);
      if (plan.verify_mode == VerifyMode::Lazy) {
        uint32_t parent = binding[plan.steps[si].tree_parent];
        if (!sorted_contains(g.neighbors_of(parent), c, work)) {
          fn(binding, branch_prob, 0.0);
          binding.pop_back();
          continue;
        }
      }
      descend(si + 1, branch_prob, branch_alpha);
      binding.pop_back();
    }
  };

  for (uint32_t u = 0; u < g.vertex_count; ++u) {
    for (uint32_t v : g.neighbors_of(u)) {
      if (plan.seed_ordered && u > v) continue;
      binding.assign({u, v});
      double seed_prob = plan.seed_ordered ? 1.0 / m : 1.0 / (2.0 * m);
      descend(0, seed_prob, plan.seed_scale(g.edge_count));
    }
  }
}

}  // namespace agpm
