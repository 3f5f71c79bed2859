#include "agpm/gs_engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <stdexcept>

#include "agpm/colored_csr.hpp"
#include "agpm/rng.hpp"
#include "agpm/set_ops.hpp"

namespace agpm {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

uint32_t KeepProbability::color_count() const {
  if (p >= 1.0) return 1;
  auto c = static_cast<uint32_t>(1.0 / p);
  return std::max<uint32_t>(c, 1);
}

KeepProbability choose_keep_probability(const ReadKBoundInputs& in) {
  if (!(in.epsilon > 0.0) || !(in.epsilon < 1.0))
    throw std::invalid_argument("epsilon must be inside (0,1)");
  if (!(in.delta > 0.0) || !(in.delta < 1.0))
    throw std::invalid_argument("delta must be inside (0,1)");
  if (in.gamma_estimate <= 0.0) throw std::invalid_argument("gamma estimate must be positive");
  if (in.count_estimate <= 0.0) return {1.0, true};
  double p = -3.0 * std::log(in.delta / 2.0) * in.gamma_estimate /
             (in.epsilon * in.epsilon * in.count_estimate);
  return {std::min(1.0, p), false};
}

GsEstimate gs_estimate(const CsrGraph& g, const ExecutionPlan& plan, const SparsifyParams& params,
                       int threads) {
  if (params.scheme == SparsifyScheme::BernoulliEdge &&
      plan.pattern.induced == InducedMode::Vertex)
    throw std::invalid_argument(
        "edge sparsification supports edge-induced counting only; use the color scheme");

  GsEstimate out;
  out.params = params;
  const int k = plan.k();
  const int l = plan.pattern.edge_count();

  auto t0 = std::chrono::steady_clock::now();
  ExactCountResult counted;
  if (params.scheme == SparsifyScheme::BernoulliEdge) {
    CsrGraph sample = bernoulli_sparsify(g, params.keep_probability, params.seed);
    out.preprocess_seconds = seconds_since(t0);
    auto t1 = std::chrono::steady_clock::now();
    counted = exact_count(sample.view(), plan, threads);
    out.search_seconds = seconds_since(t1);
    out.scale = std::pow(params.keep_probability, -l);
  } else {
    ColoredCsr colored = ColoredCsr::color_vertices(g, params.color_count, params.seed);
    out.preprocess_seconds = seconds_since(t0);
    auto t1 = std::chrono::steady_clock::now();
    counted = exact_count(colored.sparsified_view(), plan, threads);
    out.search_seconds = seconds_since(t1);
    out.scale = std::pow(static_cast<double>(params.color_count), k - 1);
  }
  out.raw_count = counted.count;
  out.search_work_units = counted.work_units;
  out.estimate = static_cast<double>(counted.count) * out.scale;
  return out;
}

std::vector<MatchRecord> list_matches(const CsrGraph& g, const Pattern& pattern) {
  if (g.vertex_count() > 12)
    throw std::invalid_argument("match listing is limited to 12 vertices");
  Pattern p = pattern;
  p.normalize();
  CsrView view = g.view();

  std::set<std::vector<uint64_t>> edge_sets;  // dedups automorphic images
  std::vector<uint32_t> image(p.vertex_count);
  std::vector<bool> used(g.vertex_count(), false);
  uint64_t ignore = 0;

  std::function<void(int)> assign = [&](int next) {
    if (next == p.vertex_count) {
      std::vector<uint64_t> keys;
      for (auto [a, b] : p.edges) {
        uint64_t lo = std::min(image[a], image[b]);
        uint64_t hi = std::max(image[a], image[b]);
        keys.push_back((lo << 32) | hi);
      }
      std::sort(keys.begin(), keys.end());
      edge_sets.insert(std::move(keys));
      return;
    }
    for (uint32_t cand = 0; cand < g.vertex_count(); ++cand) {
      if (used[cand]) continue;
      bool ok = true;
      for (int prev = 0; prev < next && ok; ++prev) {
        bool want = p.has_edge(prev, next);
        if (!want && p.induced == InducedMode::Edge) continue;
        bool have = sorted_contains(view.neighbors_of(image[prev]), cand, ignore);
        if (want != have) ok = false;
      }
      if (!ok) continue;
      image[next] = cand;
      used[cand] = true;
      assign(next + 1);
      used[cand] = false;
    }
  };
  assign(0);

  std::vector<MatchRecord> matches;
  for (const auto& keys : edge_sets) {
    MatchRecord rec;
    rec.edge_keys = keys;
    std::set<uint32_t> verts;
    for (uint64_t key : keys) {
      verts.insert(static_cast<uint32_t>(key >> 32));
      verts.insert(static_cast<uint32_t>(key & 0xffffffffu));
    }
    rec.vertices.assign(verts.begin(), verts.end());
    matches.push_back(std::move(rec));
  }
  return matches;
}

GsVarianceDiagnostic gs_variance_diagnostic(const CsrGraph& g, const Pattern& pattern,
                                            double keep_probability) {
  if (!(keep_probability > 0.0) || keep_probability > 1.0)
    throw std::invalid_argument("keep probability must be in (0,1]");
  Pattern p = pattern;
  p.normalize();
  if (p.induced == InducedMode::Vertex)
    throw std::invalid_argument("the Bernoulli variance diagnostic is edge-induced only");

  auto matches = list_matches(g, p);
  GsVarianceDiagnostic diag;
  diag.match_count = matches.size();
  const double pr = keep_probability;
  const int l = p.edge_count();
  diag.analytic_variance =
      static_cast<double>(matches.size()) * (std::pow(pr, -l) - 1.0);
  for (size_t i = 0; i < matches.size(); ++i) {
    for (size_t j = i + 1; j < matches.size(); ++j) {
      std::vector<uint32_t> shared_v;
      std::set_intersection(matches[i].vertices.begin(), matches[i].vertices.end(),
                            matches[j].vertices.begin(), matches[j].vertices.end(),
                            std::back_inserter(shared_v));
      std::vector<uint64_t> shared_e;
      std::set_intersection(matches[i].edge_keys.begin(), matches[i].edge_keys.end(),
                            matches[j].edge_keys.begin(), matches[j].edge_keys.end(),
                            std::back_inserter(shared_e));
      if (!shared_v.empty()) diag.t_z[static_cast<int>(shared_v.size())]++;
      if (!shared_e.empty())
        diag.analytic_variance +=
            2.0 * (std::pow(pr, -static_cast<double>(shared_e.size())) - 1.0);
    }
  }
  return diag;
}

uint64_t exact_gamma(const CsrView& g, const Pattern& pattern) {
  uint64_t best = 0;
  for (uint32_t u = 0; u < g.vertex_count; ++u)
    for (uint32_t v : g.neighbors_of(u)) {
      if (u > v) continue;
      best = std::max(best, count_matches_through_edge(g, pattern, u, v));
    }
  return best;
}

uint64_t estimate_gamma(const CsrView& g, const Pattern& pattern, uint64_t probe_edges,
                        uint64_t seed, int64_t work_budget) {
  if (probe_edges < 1) throw std::invalid_argument("probe count must be >= 1");
  if (g.edge_count == 0) return 0;
  std::vector<uint64_t> prefix(static_cast<size_t>(g.vertex_count) + 1, 0);
  for (uint32_t u = 0; u < g.vertex_count; ++u) prefix[u + 1] = prefix[u] + g.degree(u);
  CounterRng rng(seed, 0x67616d6dull);
  uint64_t best = 0;
  // a lower-bound heuristic either way, so running out of budget mid-probe
  // just stops early with whatever maximum has been seen
  for (uint64_t i = 0; i < probe_edges && work_budget > 0; ++i) {
    uint64_t idx = rng.next_below(prefix.back());
    auto it = std::upper_bound(prefix.begin(), prefix.end(), idx);
    auto u = static_cast<uint32_t>((it - prefix.begin()) - 1);
    uint32_t v = g.neighbors[g.begin[u] + (idx - prefix[u])];
    best = std::max(best, count_matches_through_edge(g, pattern, u, v, &work_budget));
  }
  return best;
}

}  // namespace agpm
