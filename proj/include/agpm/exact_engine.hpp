#pragma once

#include <cstdint>

#include "agpm/csr_graph.hpp"
#include "agpm/pattern.hpp"
#include "agpm/plan.hpp"

namespace agpm {

struct ExactCountResult {
  uint64_t count = 0;
  uint64_t work_units = 0;  // set-operation element comparisons, bit-reproducible
};

/// Interpret the plan as nested loops over candidate sets. Counts each match
/// once (the plan's symmetry constraints pick one representative tuple).
/// Cliques may run on a degree-oriented graph, in which case the orientation
/// replaces the order constraints. Deterministic and independent of threads.
ExactCountResult exact_count(const CsrView& g, const ExecutionPlan& plan, int threads = 1);

/// Ground-truth oracle, graphs up to 14 vertices: enumerate injective
/// mappings by backtracking, honor the induced mode, divide by the pattern's
/// automorphism count. Independent of the plan machinery.
uint64_t brute_force_count(const CsrGraph& g, const Pattern& pattern);

/// Matches whose edge set contains the data edge (u,v); used for gamma
/// probing. Counts anchored injective mappings and divides by |Aut|. A
/// work_budget (candidate inspections) turns the count into a lower bound:
/// branches stop once the budget runs out.
uint64_t count_matches_through_edge(const CsrView& g, const Pattern& pattern, uint32_t u,
                                    uint32_t v, int64_t* work_budget = nullptr);

}  // namespace agpm
