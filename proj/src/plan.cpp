#include "agpm/plan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "agpm/exact_engine.hpp"
#include "agpm/walker.hpp"

namespace agpm {

namespace {

// Grochow-Kellis style order constraints: walk vertices in matching order,
// force each one to take the minimum data id over its orbit under the
// remaining automorphism group, then stabilize. Exactly one tuple per match
// survives the constraint set.
std::vector<std::pair<int, int>> symmetry_constraints(const Pattern& pattern,
                                                      const std::vector<int>& order) {
  auto group = pattern.automorphisms();
  std::vector<std::pair<int, int>> conds;
  for (int u : order) {
    if (group.size() <= 1) break;
    std::set<int> orbit;
    for (const auto& a : group) orbit.insert(a[u]);
    if (orbit.size() > 1) {
      for (int w : orbit)
        if (w != u) conds.emplace_back(u, w);
    }
    std::vector<std::vector<int>> stabilizer;
    for (auto& a : group)
      if (a[u] == u) stabilizer.push_back(std::move(a));
    group = std::move(stabilizer);
  }
  return conds;
}

std::pair<int, int> pick_seed_edge(const Pattern& pattern) {
  int best_a = -1, best_b = -1, best_score = -1;
  for (auto [a, b] : pattern.edges) {
    int score = pattern.degree(a) + pattern.degree(b);
    if (score > best_score) {
      best_score = score;
      best_a = a;
      best_b = b;
    }
  }
  // higher-degree endpoint first, ties by smaller id (edges are a<b sorted)
  if (pattern.degree(best_b) > pattern.degree(best_a)) std::swap(best_a, best_b);
  return {best_a, best_b};
}

}  // namespace

ExecutionPlan compile_plan(const Pattern& pattern, VerifyMode mode, bool enable_symmetry) {
  Pattern p = pattern;
  p.normalize();  // also rejects disconnected patterns
  const int k = p.vertex_count;

  ExecutionPlan plan;
  plan.pattern = p;
  plan.verify_mode = mode;
  plan.symmetry_enabled = enable_symmetry;

  auto [s0, s1] = pick_seed_edge(p);
  plan.order = {s0, s1};
  std::vector<bool> bound(k, false);
  bound[s0] = bound[s1] = true;
  while (static_cast<int>(plan.order.size()) < k) {
    int best = -1, best_cnt = -1;
    for (int v = 0; v < k; ++v) {
      if (bound[v]) continue;
      int cnt = 0;
      for (int b : plan.order)
        if (p.has_edge(v, b)) ++cnt;
      if (cnt > best_cnt) {
        best_cnt = cnt;
        best = v;
      }
    }
    bound[best] = true;
    plan.order.push_back(best);
  }
  plan.pos_of.assign(k, -1);
  for (int pos = 0; pos < k; ++pos) plan.pos_of[plan.order[pos]] = pos;

  if (enable_symmetry) plan.constraints = symmetry_constraints(p, plan.order);
  for (auto [a, b] : plan.constraints)
    if ((a == s0 && b == s1) || (a == s1 && b == s0)) plan.seed_ordered = true;

  for (int pos = 2; pos < k; ++pos) {
    PlanStep step;
    step.pattern_vertex = plan.order[pos];
    for (int prev = 0; prev < pos; ++prev) {
      int pv = plan.order[prev];
      if (p.has_edge(step.pattern_vertex, pv))
        step.in_positions.push_back(prev);
      else if (p.induced == InducedMode::Vertex && mode == VerifyMode::Eager)
        step.out_positions.push_back(prev);
    }
    if (mode == VerifyMode::Eager) {
      for (int prev : step.in_positions)
        step.verify_edges.emplace_back(std::min(step.pattern_vertex, plan.order[prev]),
                                       std::max(step.pattern_vertex, plan.order[prev]));
      if (enable_symmetry) {
        for (auto [a, b] : plan.constraints) {
          // a < b on data ids; apply at the later-bound endpoint's step
          if (b == step.pattern_vertex && plan.pos_of[a] < pos)
            step.greater_than.push_back(plan.pos_of[a]);
          if (a == step.pattern_vertex && plan.pos_of[b] < pos)
            step.less_than.push_back(plan.pos_of[b]);
        }
      }
    } else {
      step.tree_parent = step.in_positions.front();  // earliest bound pattern neighbor
      step.verify_edges.emplace_back(std::min(step.pattern_vertex, plan.order[step.tree_parent]),
                                     std::max(step.pattern_vertex, plan.order[step.tree_parent]));
    }
    plan.steps.push_back(std::move(step));
  }

  if (mode == VerifyMode::Lazy) {
    std::set<std::pair<int, int>> covered;
    covered.insert({std::min(s0, s1), std::max(s0, s1)});
    for (const auto& step : plan.steps)
      for (auto e : step.verify_edges) covered.insert(e);
    for (auto e : p.edges)
      if (!covered.count(e)) plan.closure_edges.push_back(e);
    for (auto [a, b] : plan.constraints) {
      bool at_seed = (a == s0 && b == s1) || (a == s1 && b == s0);
      if (!at_seed) plan.terminal_constraints.emplace_back(a, b);
    }
  }
  return plan;
}

std::string ExecutionPlan::scaling_rule_text() const {
  std::ostringstream out;
  out << (seed_ordered ? "m" : "2m");
  for (size_t i = 0; i < steps.size(); ++i)
    out << (verify_mode == VerifyMode::Eager ? " * |S_" : " * c_") << i + 2
        << (verify_mode == VerifyMode::Eager ? "|" : "");
  if (verify_mode == VerifyMode::Lazy && !closure_edges.empty())
    out << " (terminal closure of " << closure_edges.size() << " edges)";
  return out.str();
}

bool plan_verifies_each_edge_once(const ExecutionPlan& plan) {
  std::map<std::pair<int, int>, int> seen;
  auto s0 = plan.order[0], s1 = plan.order[1];
  seen[{std::min(s0, s1), std::max(s0, s1)}]++;
  for (const auto& step : plan.steps)
    for (auto e : step.verify_edges) seen[e]++;
  for (auto e : plan.closure_edges) seen[e]++;
  if (seen.size() != plan.pattern.edges.size()) return false;
  for (auto e : plan.pattern.edges) {
    auto it = seen.find(e);
    if (it == seen.end() || it->second != 1) return false;
  }
  return true;
}

bool plan_leaf_bijection_check(const ExecutionPlan& plan, const CsrGraph& g) {
  if (g.vertex_count() > 12) throw std::invalid_argument("bijection check is limited to 12 vertices");
  uint64_t expected = brute_force_count(g, plan.pattern);
  std::set<std::vector<uint32_t>> hit_tuples;
  uint64_t hit_paths = 0;
  for_each_decision_path(g.view(), plan,
                         [&](const std::vector<uint32_t>& binding, double /*prob*/, double value) {
                           if (value > 0.0) {
                             ++hit_paths;
                             hit_tuples.insert(binding);
                           }
                         });
  return hit_paths == expected && hit_tuples.size() == hit_paths;
}

}  // namespace agpm
