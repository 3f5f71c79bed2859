#include "agpm/csr_graph.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "agpm/rng.hpp"
#include "agpm/set_ops.hpp"

namespace agpm {

uint64_t CsrView::arc_count() const {
  uint64_t total = 0;
  for (uint32_t u = 0; u < vertex_count; ++u) total += degree(u);
  return total;
}

uint64_t CsrView::max_degree() const {
  uint64_t best = 0;
  for (uint32_t u = 0; u < vertex_count; ++u) best = std::max(best, degree(u));
  return best;
}

bool CsrView::has_arc(uint32_t u, uint32_t v) const {
  auto ns = neighbors_of(u);
  return std::binary_search(ns.begin(), ns.end(), v);
}

CsrGraph::CsrGraph(uint32_t n, std::vector<uint64_t> offsets, std::vector<uint32_t> neighbors,
                   uint64_t edge_count, bool oriented)
    : vertex_count_(n),
      edge_count_(edge_count),
      offsets_(std::move(offsets)),
      neighbors_(std::move(neighbors)),
      oriented_(oriented) {}

bool CsrGraph::has_edge(uint32_t u, uint32_t v) const {
  if (u >= vertex_count_ || v >= vertex_count_) return false;
  auto ns = neighbors_of(u);
  return std::binary_search(ns.begin(), ns.end(), v);
}

CsrGraph CsrGraph::from_edges(std::vector<std::pair<uint32_t, uint32_t>> edges,
                              uint32_t min_vertex_count) {
  uint32_t n = min_vertex_count;
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    n = std::max(n, v + 1);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<uint64_t> offsets(static_cast<size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    ++offsets[u + 1];
    ++offsets[v + 1];
  }
  for (size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  std::vector<uint32_t> neighbors(offsets.back());
  std::vector<uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& [u, v] : edges) {
    neighbors[cursor[u]++] = v;
    neighbors[cursor[v]++] = u;
  }
  for (uint32_t u = 0; u < n; ++u)
    std::sort(neighbors.begin() + offsets[u], neighbors.begin() + offsets[u + 1]);
  return CsrGraph(n, std::move(offsets), std::move(neighbors), edges.size());
}

CsrGraph load_edge_list(std::istream& in) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#' || line[start] == '%') continue;
    std::istringstream ls(line);
    unsigned long long a, b;
    if (!(ls >> a >> b)) throw parse_error("edge list line " + std::to_string(line_no) + ": expected two vertex ids");
    std::string extra;
    if (ls >> extra) throw parse_error("edge list line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
    if (a > UINT32_MAX || b > UINT32_MAX)
      throw parse_error("edge list line " + std::to_string(line_no) + ": vertex id out of range");
    edges.emplace_back(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
  }
  return CsrGraph::from_edges(std::move(edges));
}

CsrGraph load_edge_list_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw io_error("cannot open graph file: " + path);
  return load_edge_list(f);
}

void write_edge_list(const CsrGraph& g, std::ostream& out) {
  for (uint32_t u = 0; u < g.vertex_count(); ++u)
    for (uint32_t v : g.neighbors_of(u))
      if (g.oriented() || u < v) out << u << ' ' << v << '\n';
}

namespace {

constexpr char kMagic[4] = {'A', 'G', 'P', 'M'};
constexpr uint32_t kVersion = 1;

template <class T>
void put_le(std::ostream& out, T value) {
  unsigned char buf[sizeof(T)];
  for (size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(value >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <class T>
T get_le(std::istream& in) {
  unsigned char buf[sizeof(T)];
  in.read(reinterpret_cast<char*>(buf), sizeof(T));
  if (!in) throw io_error("truncated binary CSR file");
  T value = 0;
  for (size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(buf[i]) << (8 * i);
  return value;
}

}  // namespace

void write_binary_csr(const CsrGraph& g, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot write file: " + path);
  f.write(kMagic, 4);
  put_le<uint32_t>(f, kVersion);
  put_le<uint64_t>(f, g.vertex_count());
  put_le<uint64_t>(f, g.edge_count());
  for (uint64_t off : g.offsets()) put_le<uint64_t>(f, off);
  for (uint32_t v : g.neighbors()) put_le<uint32_t>(f, v);
  if (!f) throw io_error("write failed: " + path);
}

CsrGraph load_binary_csr(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open graph file: " + path);
  char magic[4];
  f.read(magic, 4);
  if (!f || std::memcmp(magic, kMagic, 4) != 0) throw io_error("not a binary CSR file: " + path);
  uint32_t version = get_le<uint32_t>(f);
  if (version != kVersion) throw io_error("unsupported binary CSR version");
  auto n64 = get_le<uint64_t>(f);
  auto m = get_le<uint64_t>(f);
  if (n64 > UINT32_MAX) throw io_error("vertex count out of range");
  auto n = static_cast<uint32_t>(n64);
  std::vector<uint64_t> offsets(static_cast<size_t>(n) + 1);
  for (auto& off : offsets) off = get_le<uint64_t>(f);
  std::vector<uint32_t> neighbors(offsets.back());
  for (auto& v : neighbors) v = get_le<uint32_t>(f);
  return CsrGraph(n, std::move(offsets), std::move(neighbors), m);
}

CsrGraph load_graph_auto(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io_error("cannot open graph file: " + path);
  char magic[4] = {0, 0, 0, 0};
  f.read(magic, 4);
  f.close();
  if (std::memcmp(magic, kMagic, 4) == 0) return load_binary_csr(path);
  return load_edge_list_file(path);
}

CsrGraph orient_by_degree(const CsrGraph& g) {
  uint32_t n = g.vertex_count();
  auto rank_less = [&](uint32_t u, uint32_t v) {
    return std::make_pair(g.degree(u), u) < std::make_pair(g.degree(v), v);
  };
  std::vector<uint64_t> offsets(static_cast<size_t>(n) + 1, 0);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v : g.neighbors_of(u))
      if (rank_less(u, v)) ++offsets[u + 1];
  for (size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  std::vector<uint32_t> neighbors(offsets.back());
  std::vector<uint64_t> cursor(offsets.begin(), offsets.end() - 1);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v : g.neighbors_of(u))
      if (rank_less(u, v)) neighbors[cursor[u]++] = v;
  return CsrGraph(n, std::move(offsets), std::move(neighbors), g.edge_count(), true);
}

CsrGraph bernoulli_sparsify(const CsrGraph& g, double keep_probability, uint64_t seed) {
  if (!(keep_probability > 0.0) || keep_probability > 1.0)
    throw std::invalid_argument("keep probability must be in (0,1]");
  uint32_t n = g.vertex_count();
  std::vector<uint64_t> offsets(static_cast<size_t>(n) + 1, 0);
#pragma omp parallel for schedule(dynamic, 64)
  for (int64_t u = 0; u < static_cast<int64_t>(n); ++u) {
    uint64_t kept = 0;
    for (uint32_t v : g.neighbors_of(static_cast<uint32_t>(u)))
      if (edge_keep_decision(seed, static_cast<uint32_t>(u), v, keep_probability)) ++kept;
    offsets[u + 1] = kept;
  }
  for (size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  std::vector<uint32_t> neighbors(offsets.back());
#pragma omp parallel for schedule(dynamic, 64)
  for (int64_t u = 0; u < static_cast<int64_t>(n); ++u) {
    uint64_t at = offsets[u];
    for (uint32_t v : g.neighbors_of(static_cast<uint32_t>(u)))
      if (edge_keep_decision(seed, static_cast<uint32_t>(u), v, keep_probability))
        neighbors[at++] = v;
  }
  uint64_t kept_edges = neighbors.size() / 2;
  return CsrGraph(n, std::move(offsets), std::move(neighbors), kept_edges);
}

SparsifyParams SparsifyParams::bernoulli(double p, uint64_t seed) {
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("keep probability must be in (0,1]");
  return {SparsifyScheme::BernoulliEdge, p, 1, seed};
}

SparsifyParams SparsifyParams::color(uint32_t c, uint64_t seed) {
  if (c < 1) throw std::invalid_argument("color count must be >= 1");
  return {SparsifyScheme::Color, 1.0 / c, c, seed};
}

uint64_t triangle_count(const CsrGraph& g) {
  CsrGraph oriented = g.oriented() ? g : orient_by_degree(g);
  uint64_t total = 0;
  uint64_t work = 0;
  std::vector<uint32_t> common;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total) private(common) firstprivate(work)
  for (int64_t u = 0; u < static_cast<int64_t>(oriented.vertex_count()); ++u) {
    for (uint32_t v : oriented.neighbors_of(static_cast<uint32_t>(u))) {
      intersect_into(oriented.neighbors_of(static_cast<uint32_t>(u)), oriented.neighbors_of(v),
                     common, work);
      total += common.size();
    }
  }
  return total;
}

uint64_t cached_triangle_count(const std::string& graph_path, const CsrGraph& g) {
  std::string cache_path = graph_path + ".tri";
  {
    std::ifstream f(cache_path);
    uint64_t edges = 0, triangles = 0;
    if (f >> edges >> triangles && edges == g.edge_count()) return triangles;
  }
  uint64_t t = triangle_count(g);
  std::ofstream f(cache_path);
  if (f) f << g.edge_count() << ' ' << t << '\n';
  return t;
}

}  // namespace agpm
