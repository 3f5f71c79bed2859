#include "agpm/colored_csr.hpp"

#include <algorithm>
#include <stdexcept>

#include "agpm/rng.hpp"

namespace agpm {

namespace {

// Partition each sorted list into (same color | rest), both halves sorted.
// Returns split points and the same-color arc total.
uint64_t build_splits(uint32_t n, const std::vector<uint64_t>& offsets,
                      std::vector<uint32_t>& neighbors, const std::vector<uint32_t>& colors,
                      std::vector<uint64_t>& split_end) {
  split_end.assign(n, 0);
  uint64_t same_arcs = 0;
  for (uint32_t u = 0; u < n; ++u) {
    auto first = neighbors.begin() + offsets[u];
    auto last = neighbors.begin() + offsets[u + 1];
    auto mid = std::stable_partition(first, last,
                                     [&](uint32_t v) { return colors[v] == colors[u]; });
    split_end[u] = offsets[u] + static_cast<uint64_t>(mid - first);
    same_arcs += static_cast<uint64_t>(mid - first);
  }
  return same_arcs;
}

}  // namespace

ColoredCsr ColoredCsr::with_colors(const CsrGraph& g, std::vector<uint32_t> colors,
                                   uint32_t color_count) {
  if (color_count < 1) throw std::invalid_argument("color count must be >= 1");
  if (colors.size() != g.vertex_count()) throw std::invalid_argument("color array size mismatch");
  for (uint32_t c : colors)
    if (c >= color_count) throw std::invalid_argument("color id out of range");

  std::vector<uint64_t> offsets = g.offsets();
  std::vector<uint32_t> neighbors = g.neighbors();
  std::vector<uint64_t> split_end;
  uint64_t same_arcs = build_splits(g.vertex_count(), offsets, neighbors, colors, split_end);
  CsrGraph base(g.vertex_count(), std::move(offsets), std::move(neighbors), g.edge_count());
  return ColoredCsr(std::move(base), std::move(colors), std::move(split_end), color_count,
                    same_arcs / 2);
}

ColoredCsr ColoredCsr::color_vertices(const CsrGraph& g, uint32_t color_count, uint64_t seed) {
  if (color_count < 1) throw std::invalid_argument("color count must be >= 1");
  std::vector<uint32_t> colors(g.vertex_count());
  for (uint32_t v = 0; v < g.vertex_count(); ++v)
    colors[v] = vertex_color_decision(seed, v, color_count);
  return with_colors(g, std::move(colors), color_count);
}

ColoredCsr ColoredCsr::merge_colors(const std::vector<uint32_t>& group_map) const {
  if (group_map.size() != color_count_) throw std::invalid_argument("group map must cover every color");
  uint32_t coarse_count = 0;
  for (uint32_t gcol : group_map) coarse_count = std::max(coarse_count, gcol + 1);
  std::vector<bool> seen(coarse_count, false);
  for (uint32_t gcol : group_map) seen[gcol] = true;
  for (bool s : seen)
    if (!s) throw std::invalid_argument("group map must be surjective onto a contiguous range");

  std::vector<uint32_t> coarse(base_.vertex_count());
  for (uint32_t v = 0; v < base_.vertex_count(); ++v) coarse[v] = group_map[colors_[v]];

  // Advance each split point: pull newly same-group neighbors out of the
  // suffix (stable, both halves stay sorted) and merge them into the prefix.
  std::vector<uint64_t> offsets = base_.offsets();
  std::vector<uint32_t> neighbors = base_.neighbors();
  std::vector<uint64_t> split(base_.vertex_count());
  uint64_t same_arcs = 0;
  for (uint32_t u = 0; u < base_.vertex_count(); ++u) {
    auto first = neighbors.begin() + offsets[u];
    auto mid = neighbors.begin() + split_end_[u];
    auto last = neighbors.begin() + offsets[u + 1];
    auto new_mid = std::stable_partition(mid, last,
                                         [&](uint32_t v) { return coarse[v] == coarse[u]; });
    std::inplace_merge(first, mid, new_mid);
    split[u] = offsets[u] + static_cast<uint64_t>(new_mid - first);
    same_arcs += static_cast<uint64_t>(new_mid - first);
  }
  CsrGraph base(base_.vertex_count(), std::move(offsets), std::move(neighbors),
                base_.edge_count());
  return ColoredCsr(std::move(base), std::move(coarse), std::move(split), coarse_count,
                    same_arcs / 2);
}

CsrView ColoredCsr::sparsified_view() const {
  return {base_.vertex_count(), same_color_edges_, base_.offsets().data(), split_end_.data(),
          base_.neighbors().data(), false};
}

}  // namespace agpm
