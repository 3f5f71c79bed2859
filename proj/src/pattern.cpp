#include "agpm/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace agpm {

bool Pattern::connected() const {
  if (vertex_count == 0) return false;
  uint32_t reached = 1;
  uint32_t frontier = 1;
  while (frontier) {
    uint32_t next = 0;
    for (int v = 0; v < vertex_count; ++v)
      if ((frontier >> v) & 1u) next |= adjacency[v];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (1u << vertex_count) - 1;
}

void Pattern::normalize() {
  if (vertex_count < 2 || vertex_count > 9)
    throw pattern_error("pattern must have between 2 and 9 vertices");
  for (auto& [a, b] : edges) {
    if (a == b) throw pattern_error("pattern has a self-loop");
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
      throw pattern_error("pattern edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  adjacency.assign(vertex_count, 0);
  for (auto [a, b] : edges) {
    adjacency[a] |= 1u << b;
    adjacency[b] |= 1u << a;
  }
  if (!connected()) throw pattern_error("pattern must be connected");
}

std::vector<std::vector<int>> Pattern::automorphisms() const {
  std::vector<int> perm(vertex_count);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> autos;
  do {
    bool ok = true;
    for (auto [a, b] : edges)
      if (!has_edge(perm[a], perm[b])) {
        ok = false;
        break;
      }
    if (ok) autos.push_back(perm);  // edge count equal, so preserving edges suffices
  } while (std::next_permutation(perm.begin(), perm.end()));
  return autos;
}

namespace {

Pattern make(const std::string& name, int k, std::vector<std::pair<int, int>> edges,
             InducedMode induced) {
  Pattern p;
  p.name = name;
  p.vertex_count = k;
  p.edges = std::move(edges);
  p.induced = induced;
  p.normalize();
  return p;
}

std::vector<std::pair<int, int>> clique_edges(int k) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) e.emplace_back(a, b);
  return e;
}

std::vector<std::pair<int, int>> path_edges(int k) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a + 1 < k; ++a) e.emplace_back(a, a + 1);
  return e;
}

}  // namespace

std::vector<std::string> builtin_pattern_names() {
  return {"triangle",      "4clique",       "5clique",
          "6clique",       "7clique",       "8clique",
          "9clique",       "4cycle",        "5path",
          "house",         "dumbbell",      "3motif-wedge",
          "3motif-triangle", "4motif-path", "4motif-star",
          "4motif-cycle",  "4motif-tailedtriangle", "4motif-diamond",
          "4motif-clique"};
}

Pattern builtin_pattern(const std::string& name) {
  if (name == "triangle") return make(name, 3, clique_edges(3), InducedMode::Edge);
  for (int k = 4; k <= 9; ++k)
    if (name == std::to_string(k) + "clique")
      return make(name, k, clique_edges(k), InducedMode::Edge);
  if (name == "4cycle") return make(name, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, InducedMode::Edge);
  if (name == "5path") return make(name, 5, path_edges(5), InducedMode::Edge);
  // square 0-1-2-3 with roof apex 4 over the 0-1 edge
  if (name == "house")
    return make(name, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}}, InducedMode::Edge);
  // triangles {0,1,2} and {3,4,5} joined by 2-3
  if (name == "dumbbell")
    return make(name, 6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}},
                InducedMode::Edge);
  if (name == "3motif-wedge") return make(name, 3, path_edges(3), InducedMode::Vertex);
  if (name == "3motif-triangle") return make(name, 3, clique_edges(3), InducedMode::Vertex);
  if (name == "4motif-path") return make(name, 4, path_edges(4), InducedMode::Vertex);
  if (name == "4motif-star") return make(name, 4, {{0, 1}, {0, 2}, {0, 3}}, InducedMode::Vertex);
  if (name == "4motif-cycle")
    return make(name, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, InducedMode::Vertex);
  if (name == "4motif-tailedtriangle")
    return make(name, 4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}}, InducedMode::Vertex);
  if (name == "4motif-diamond")
    return make(name, 4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}, InducedMode::Vertex);
  if (name == "4motif-clique") return make(name, 4, clique_edges(4), InducedMode::Vertex);

  std::ostringstream msg;
  msg << "unknown pattern '" << name << "'; valid names:";
  for (const auto& n : builtin_pattern_names()) msg << ' ' << n;
  msg << " or custom:k:a-b,a-b,...";
  throw pattern_error(msg.str());
}

Pattern parse_pattern_spec(const std::string& spec, const std::string& induced_override) {
  Pattern p;
  if (spec.rfind("custom:", 0) == 0) {
    std::string rest = spec.substr(7);
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw pattern_error("custom pattern needs custom:k:edges");
    int k = 0;
    try {
      k = std::stoi(rest.substr(0, colon));
    } catch (const std::exception&) {
      throw pattern_error("custom pattern vertex count is not a number");
    }
    std::vector<std::pair<int, int>> edges;
    std::istringstream es(rest.substr(colon + 1));
    std::string item;
    while (std::getline(es, item, ',')) {
      auto dash = item.find('-');
      if (dash == std::string::npos) throw pattern_error("custom edge must look like a-b");
      try {
        edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
      } catch (const std::exception&) {
        throw pattern_error("custom edge endpoint is not a number");
      }
    }
    p = make("custom", k, std::move(edges), InducedMode::Edge);
  } else {
    p = builtin_pattern(spec);
  }
  if (induced_override == "edge")
    p.induced = InducedMode::Edge;
  else if (induced_override == "vertex")
    p.induced = InducedMode::Vertex;
  else if (!induced_override.empty())
    throw pattern_error("induced mode must be 'edge' or 'vertex'");
  return p;
}

}  // namespace agpm
