#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace agpm {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Non-owning CSR adjacency view. A plain graph exposes contiguous ranges
/// [begin[u], end[u]); a color-sparsified view points `end` at the same-color
/// split so no neighbor data is copied. Immutable and freely shared across
/// worker threads.
struct CsrView {
  uint32_t vertex_count = 0;
  uint64_t edge_count = 0;  // undirected edges (== stored arcs when oriented)
  const uint64_t* begin = nullptr;
  const uint64_t* end = nullptr;
  const uint32_t* neighbors = nullptr;
  bool oriented = false;

  std::span<const uint32_t> neighbors_of(uint32_t u) const {
    return {neighbors + begin[u], neighbors + end[u]};
  }
  uint64_t degree(uint32_t u) const { return end[u] - begin[u]; }
  uint64_t arc_count() const;  // sum of degrees
  uint64_t max_degree() const;
  bool has_arc(uint32_t u, uint32_t v) const;
  double average_degree() const {
    return vertex_count == 0 ? 0.0 : static_cast<double>(arc_count()) / vertex_count;
  }
};

/// Compressed sparse row undirected graph. Adjacency lists are strictly
/// ascending with no self-loops or duplicates; for every arc (u,v) the
/// reverse arc exists unless `oriented` is set. Immutable after construction.
class CsrGraph {
 public:
  CsrGraph() = default;
  CsrGraph(uint32_t n, std::vector<uint64_t> offsets, std::vector<uint32_t> neighbors,
           uint64_t edge_count, bool oriented = false);

  uint32_t vertex_count() const { return vertex_count_; }
  uint64_t edge_count() const { return edge_count_; }
  bool oriented() const { return oriented_; }
  std::span<const uint32_t> neighbors_of(uint32_t u) const {
    return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
  }
  uint64_t degree(uint32_t u) const { return offsets_[u + 1] - offsets_[u]; }
  const std::vector<uint64_t>& offsets() const { return offsets_; }
  const std::vector<uint32_t>& neighbors() const { return neighbors_; }

  CsrView view() const {
    return {vertex_count_, edge_count_, offsets_.data(), offsets_.data() + 1, neighbors_.data(),
            oriented_};
  }

  bool has_edge(uint32_t u, uint32_t v) const;

  /// Build from unordered endpoint pairs; drops self-loops and duplicates,
  /// stores both arcs, vertex_count = max id + 1 (or explicit minimum).
  static CsrGraph from_edges(std::vector<std::pair<uint32_t, uint32_t>> edges,
                             uint32_t min_vertex_count = 0);

 private:
  uint32_t vertex_count_ = 0;
  uint64_t edge_count_ = 0;
  std::vector<uint64_t> offsets_{0};
  std::vector<uint32_t> neighbors_;
  bool oriented_ = false;
};

/// Parse a whitespace edge list ("u v" per line, '#'/'%' comments, 0-based
/// ids). Duplicates and self-loops are dropped; ids are kept as given so
/// missing ids become isolated vertices. Empty input yields the empty graph.
CsrGraph load_edge_list(std::istream& in);
CsrGraph load_edge_list_file(const std::string& path);

/// Canonical "u v" lines, one undirected edge each, u < v, sorted.
void write_edge_list(const CsrGraph& g, std::ostream& out);

// Binary CSR: magic "AGPM", u32 version, u64 vertex_count, u64 edge_count,
// u64 offsets[n+1], u32 neighbors[...], little-endian throughout.
void write_binary_csr(const CsrGraph& g, const std::string& path);
CsrGraph load_binary_csr(const std::string& path);
CsrGraph load_graph_auto(const std::string& path);  // binary if magic matches, else text

/// Keep arc (u,v) iff (deg(u),u) < (deg(v),v); every undirected edge survives
/// exactly once and the result is acyclic. Only clique plans consume this.
CsrGraph orient_by_degree(const CsrGraph& g);

/// Each undirected edge kept independently with probability p. The decision
/// is a pure function of (seed, min(u,v), max(u,v)) so both arcs agree and
/// the pass parallelizes over vertices.
CsrGraph bernoulli_sparsify(const CsrGraph& g, double keep_probability, uint64_t seed);

enum class SparsifyScheme { BernoulliEdge, Color };

struct SparsifyParams {
  SparsifyScheme scheme = SparsifyScheme::Color;
  double keep_probability = 1.0;  // BernoulliEdge; Color uses 1/color_count
  uint32_t color_count = 1;
  uint64_t seed = 0;

  static SparsifyParams bernoulli(double p, uint64_t seed);
  static SparsifyParams color(uint32_t c, uint64_t seed);
};

/// Exact triangle count (degree orientation + intersection).
uint64_t triangle_count(const CsrGraph& g);
/// Same, memoized in a sidecar file next to the graph file.
uint64_t cached_triangle_count(const std::string& graph_path, const CsrGraph& g);

}  // namespace agpm
