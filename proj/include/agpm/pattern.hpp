#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace agpm {

enum class InducedMode { Edge, Vertex };

/// Small connected query pattern, k >= 2, at most 9 vertices.
struct Pattern {
  std::string name;
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // a < b, sorted, no duplicates
  InducedMode induced = InducedMode::Edge;

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int a, int b) const { return (adjacency[a] >> b) & 1u; }
  int degree(int v) const { return __builtin_popcount(adjacency[v]); }
  bool is_clique() const {
    return edge_count() == vertex_count * (vertex_count - 1) / 2;
  }
  bool connected() const;

  std::vector<uint32_t> adjacency;  // bitmask rows, filled by normalize()

  /// Sorts/dedups edges, fills adjacency, validates (connected, no loops).
  void normalize();

  /// All automorphisms as permutation vectors (identity included).
  std::vector<std::vector<int>> automorphisms() const;
};

/// Canonical named patterns: triangle, 4clique..9clique, 4cycle, 5path,
/// house, dumbbell, 3motif-{wedge,triangle},
/// 4motif-{path,star,cycle,tailedtriangle,diamond,clique}.
/// Motif variants are vertex-induced, the rest edge-induced.
Pattern builtin_pattern(const std::string& name);

std::vector<std::string> builtin_pattern_names();

/// Builtin name or "custom:k:a-b,a-b,..." (e.g. custom:4:0-1,1-2,2-3,3-0).
/// `induced_override`, when set, replaces the default mode.
Pattern parse_pattern_spec(const std::string& spec, const std::string& induced_override = "");

struct pattern_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace agpm
