#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agpm/csr_graph.hpp"
#include "agpm/pattern.hpp"

namespace agpm {

enum class VerifyMode { Eager, Lazy };

/// One matching-order position past the seed edge. `in_positions` name the
/// earlier positions whose data-vertex neighborhoods refine the candidate
/// set (intersection when eager, union of all bound when lazy);
/// `out_positions` are subtracted for vertex-induced eager plans. Bound
/// lists carry symmetry-breaking order constraints against earlier
/// positions. Each pattern edge is certified exactly once across the seed,
/// the steps, and the lazy closure.
struct PlanStep {
  int pattern_vertex = -1;
  std::vector<int> in_positions;
  std::vector<int> out_positions;
  std::vector<int> greater_than;  // candidate id must exceed binding[pos]
  std::vector<int> less_than;     // candidate id must stay below binding[pos]
  int tree_parent = -1;           // lazy: position whose edge is checked at this step
  std::vector<std::pair<int, int>> verify_edges;  // pattern edges certified here
};

/// Interpreted matching program for one pattern. Positions 0 and 1 come from
/// the seed edge; `seed_ordered` says a symmetry constraint orients it (seed
/// space m undirected edges, otherwise all 2m arcs). Immutable once compiled.
struct ExecutionPlan {
  Pattern pattern;
  VerifyMode verify_mode = VerifyMode::Eager;
  std::vector<int> order;   // pattern vertex per matching position
  std::vector<int> pos_of;  // inverse of order
  bool seed_ordered = false;
  bool symmetry_enabled = true;
  std::vector<PlanStep> steps;  // one per position 2..k-1
  std::vector<std::pair<int, int>> closure_edges;       // lazy terminal pattern edges
  std::vector<std::pair<int, int>> constraints;         // pattern-vertex pairs, first < second
  std::vector<std::pair<int, int>> terminal_constraints;  // lazy: checked at the leaf

  int k() const { return pattern.vertex_count; }
  bool is_clique() const { return pattern.is_clique(); }
  /// Per-sample scaling factor before step products: m when the seed is
  /// oriented by a constraint, 2m otherwise.
  double seed_scale(uint64_t edge_count) const {
    return seed_ordered ? static_cast<double>(edge_count)
                        : 2.0 * static_cast<double>(edge_count);
  }
  std::string scaling_rule_text() const;
};

/// Compile the interpreted plan: seed on a max-degree pattern edge, remaining
/// vertices by descending bound-neighbor count (ties by pattern id),
/// automorphism-derived order constraints. `enable_symmetry=false` strips
/// constraints (every match is then reached once per automorphism).
ExecutionPlan compile_plan(const Pattern& pattern, VerifyMode mode, bool enable_symmetry = true);

/// True iff seed + step + closure certificates cover every pattern edge
/// exactly once (holds for every compiled plan by construction).
bool plan_verifies_each_edge_once(const ExecutionPlan& plan);

/// Exhaustively walks the plan's subgraph tree on a small graph (<= 12
/// vertices) and checks the leaf-to-match mapping is a bijection.
bool plan_leaf_bijection_check(const ExecutionPlan& plan, const CsrGraph& g);

}  // namespace agpm
