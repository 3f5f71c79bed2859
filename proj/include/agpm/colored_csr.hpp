#pragma once

#include <cstdint>
#include <vector>

#include "agpm/csr_graph.hpp"

namespace agpm {

/// CSR whose per-vertex adjacency is permuted so same-color neighbors form a
/// sorted prefix ending at split_end[u]; the remainder stays sorted too, so
/// merging color groups is a stable partition plus an in-place merge per list.
/// Restricting every list to its prefix is exactly the color-sparsified
/// subgraph; the full neighbor multiset is unchanged.
class ColoredCsr {
 public:
  /// Uniform independent colors drawn from (seed, vertex).
  static ColoredCsr color_vertices(const CsrGraph& g, uint32_t color_count, uint64_t seed);
  /// Same layout for an explicit assignment (exhaustive tests drive this).
  static ColoredCsr with_colors(const CsrGraph& g, std::vector<uint32_t> colors,
                                uint32_t color_count);

  /// Coarsen colors by group_map (total on [0,c), surjective onto a
  /// contiguous [0,c')). Same-color prefixes only ever grow.
  ColoredCsr merge_colors(const std::vector<uint32_t>& group_map) const;

  /// Zero-copy view of the same-color subgraph: adjacency of u is
  /// [offsets[u], split_end[u]).
  CsrView sparsified_view() const;

  /// Note: the stored adjacency is color-partitioned, so base() lists are
  /// sorted within each partition but not globally.
  const CsrGraph& base() const { return base_; }
  const std::vector<uint32_t>& colors() const { return colors_; }
  const std::vector<uint64_t>& split_end() const { return split_end_; }
  uint32_t color_count() const { return color_count_; }
  uint64_t same_color_edge_count() const { return same_color_edges_; }

 private:
  ColoredCsr(CsrGraph base, std::vector<uint32_t> colors, std::vector<uint64_t> split_end,
             uint32_t color_count, uint64_t same_color_edges)
      : base_(std::move(base)),
        colors_(std::move(colors)),
        split_end_(std::move(split_end)),
        color_count_(color_count),
        same_color_edges_(same_color_edges) {}

  CsrGraph base_;
  std::vector<uint32_t> colors_;
  std::vector<uint64_t> split_end_;
  uint32_t color_count_ = 1;
  uint64_t same_color_edges_ = 0;
};

}  // namespace agpm
