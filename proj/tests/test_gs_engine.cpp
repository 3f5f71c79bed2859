#include <cmath>

#include "agpm/colored_csr.hpp"
#include "agpm/exact_engine.hpp"
#include "agpm/gs_engine.hpp"
#include "agpm/pattern.hpp"
#include "agpm/plan.hpp"
#include "doctest.h"
#include "support/test_graphs.hpp"

using namespace agpm;
using namespace agpm::testing;

TEST_CASE("choose_keep_probability evaluates the read-k bound") {
  KeepProbability kp =
      choose_keep_probability({0.1, 0.05, 1e6, 50.0});
  CHECK(kp.p == doctest::Approx(0.05533).epsilon(2e-3));
  CHECK_FALSE(kp.sparsification_useless);
  CHECK(kp.color_count() == 18);  // floor(1/0.05533)

  // tiny count pushes the bound past 1
  KeepProbability clamped = choose_keep_probability({0.1, 0.05, 10.0, 50.0});
  CHECK(clamped.p == 1.0);
  CHECK(clamped.color_count() == 1);

  // linear in gamma before clamping
  KeepProbability g1 = choose_keep_probability({0.1, 0.05, 1e7, 20.0});
  KeepProbability g2 = choose_keep_probability({0.1, 0.05, 1e7, 40.0});
  CHECK(g2.p == doctest::Approx(2.0 * g1.p).epsilon(1e-12));

  KeepProbability useless = choose_keep_probability({0.1, 0.05, 0.0, 50.0});
  CHECK(useless.p == 1.0);
  CHECK(useless.sparsification_useless);
}

TEST_CASE("gs_estimate with no removal reproduces the exact count") {
  CsrGraph g = er_graph(60, 0.2, 17);
  for (const char* name : {"triangle", "4cycle", "house"}) {
    ExecutionPlan plan = compile_plan(builtin_pattern(name), VerifyMode::Eager);
    uint64_t truth = exact_count(g.view(), plan).count;
    GsEstimate color = gs_estimate(g, plan, SparsifyParams::color(1, 5));
    CHECK(color.estimate == doctest::Approx(static_cast<double>(truth)));
    CHECK(color.scale == 1.0);
    GsEstimate bern = gs_estimate(g, plan, SparsifyParams::bernoulli(1.0, 5));
    CHECK(bern.estimate == doctest::Approx(static_cast<double>(truth)));
  }
}

TEST_CASE("bernoulli scheme rejects vertex-induced plans") {
  CsrGraph g = er_graph(20, 0.3, 3);
  ExecutionPlan plan = compile_plan(builtin_pattern("4motif-path"), VerifyMode::Eager);
  CHECK_THROWS_AS(gs_estimate(g, plan, SparsifyParams::bernoulli(0.5, 1)),
                  std::invalid_argument);
  CHECK_NOTHROW(gs_estimate(g, plan, SparsifyParams::color(2, 1)));
}

TEST_CASE("triangle on T3 with two colors is unbiased over all colorings") {
  CsrGraph tri = complete_graph(3);
  ExecutionPlan plan = compile_plan(builtin_pattern("triangle"), VerifyMode::Eager);
  double total_raw = 0.0, total_scaled = 0.0;
  for (uint32_t bits = 0; bits < 8; ++bits) {
    std::vector<uint32_t> colors = {bits & 1u, (bits >> 1) & 1u, (bits >> 2) & 1u};
    ColoredCsr cg = ColoredCsr::with_colors(tri, colors, 2);
    auto raw = static_cast<double>(exact_count(cg.sparsified_view(), plan).count);
    total_raw += raw;
    total_scaled += raw * 4.0;  // c^(k-1) = 2^2
  }
  CHECK(total_raw / 8.0 == doctest::Approx(0.25));
  CHECK(total_scaled / 8.0 == doctest::Approx(1.0));
}

TEST_CASE("color-scheme estimate averaged over every coloring is exact") {
  // every coloring of every vertex, weighted uniformly: expectation must be
  // the true count with zero sampling noise
  std::vector<CsrGraph> corpus = {complete_graph(5), cycle_graph(6), er_graph(6, 0.5, 207)};
  for (const char* name : {"triangle", "4cycle", "4motif-path"}) {
    Pattern p = builtin_pattern(name);
    ExecutionPlan plan = compile_plan(p, VerifyMode::Eager);
    for (uint32_t c : {2u, 3u}) {
      for (const auto& g : corpus) {
        if (g.edge_count() == 0) continue;
        uint32_t n = g.vertex_count();
        double scale = std::pow(static_cast<double>(c), p.vertex_count - 1);
        double weighted = 0.0;
        uint64_t assignments = 1;
        for (uint32_t v = 0; v < n; ++v) assignments *= c;
        for (uint64_t code = 0; code < assignments; ++code) {
          std::vector<uint32_t> colors(n);
          uint64_t rest = code;
          for (uint32_t v = 0; v < n; ++v) {
            colors[v] = rest % c;
            rest /= c;
          }
          ColoredCsr cg = ColoredCsr::with_colors(g, colors, c);
          weighted += static_cast<double>(exact_count(cg.sparsified_view(), plan).count) * scale;
        }
        auto truth = static_cast<double>(brute_force_count(g, p));
        CAPTURE(name);
        CHECK(weighted / static_cast<double>(assignments) ==
              doctest::Approx(truth).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("bernoulli estimate averaged over every edge mask is exact") {
  CsrGraph g = er_graph(6, 0.5, 207);  // 6 vertices, few edges
  REQUIRE(g.edge_count() <= 8);
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t u = 0; u < g.vertex_count(); ++u)
    for (uint32_t v : g.neighbors_of(u))
      if (u < v) edges.emplace_back(u, v);

  for (const char* name : {"triangle", "4cycle"}) {
    Pattern p = builtin_pattern(name);
    ExecutionPlan plan = compile_plan(p, VerifyMode::Eager);
    const double keep = 0.4;
    const double scale = std::pow(keep, -p.edge_count());
    double weighted = 0.0;
    for (uint64_t mask = 0; mask < (1ull << edges.size()); ++mask) {
      std::vector<std::pair<uint32_t, uint32_t>> kept;
      double prob = 1.0;
      for (size_t e = 0; e < edges.size(); ++e) {
        if ((mask >> e) & 1ull) {
          kept.push_back(edges[e]);
          prob *= keep;
        } else {
          prob *= 1.0 - keep;
        }
      }
      CsrGraph sub = CsrGraph::from_edges(std::move(kept), g.vertex_count());
      weighted += prob * static_cast<double>(exact_count(sub.view(), plan).count) * scale;
    }
    auto truth = static_cast<double>(brute_force_count(g, p));
    CAPTURE(name);
    CHECK(weighted == doctest::Approx(truth).epsilon(1e-9));
  }
}

TEST_CASE("bernoulli estimate mean over many seeds approaches the truth") {
  CsrGraph k5 = complete_graph(5);
  ExecutionPlan plan = compile_plan(builtin_pattern("triangle"), VerifyMode::Eager);
  const int seeds = 20000;
  double sum = 0.0, sq = 0.0;
  for (int s = 0; s < seeds; ++s) {
    GsEstimate est = gs_estimate(k5, plan, SparsifyParams::bernoulli(0.5, 9000 + s));
    sum += est.estimate;
    sq += est.estimate * est.estimate;
  }
  double mean = sum / seeds;
  double var = sq / seeds - mean * mean;
  double se = std::sqrt(var / seeds);
  CHECK(std::abs(mean - 10.0) < 3.0 * se);
}

TEST_CASE("variance formula on a single-triangle graph") {
  GsVarianceDiagnostic d = gs_variance_diagnostic(complete_graph(3),
                                                  builtin_pattern("triangle"), 0.5);
  CHECK(d.match_count == 1);
  CHECK(d.analytic_variance == doctest::Approx(7.0));  // p^-3 - 1
  CHECK(d.t_z.empty());

  GsVarianceDiagnostic full = gs_variance_diagnostic(complete_graph(3),
                                                     builtin_pattern("triangle"), 1.0);
  CHECK(full.analytic_variance == doctest::Approx(0.0));
}

TEST_CASE("variance formula matches the empirical variance on K4") {
  CsrGraph k4 = complete_graph(4);
  Pattern tri = builtin_pattern("triangle");
  GsVarianceDiagnostic d = gs_variance_diagnostic(k4, tri, 0.5);
  CHECK(d.match_count == 4);
  CHECK(d.t_z.at(2) == 6);  // C(4,2) pairs, each sharing one edge
  CHECK(d.analytic_variance == doctest::Approx(40.0));  // 4*7 + 2*6*(2-1)

  ExecutionPlan plan = compile_plan(tri, VerifyMode::Eager);
  const int seeds = 200000;
  double sum = 0.0, sq = 0.0;
  std::vector<double> vals;
  vals.reserve(seeds);
  for (int s = 0; s < seeds; ++s) {
    GsEstimate est = gs_estimate(k4, plan, SparsifyParams::bernoulli(0.5, 40000 + s));
    sum += est.estimate;
    sq += est.estimate * est.estimate;
    vals.push_back(est.estimate);
  }
  double mean = sum / seeds;
  double var = sq / seeds - mean * mean;
  // standard error of the sample variance via the fourth central moment
  double m4 = 0.0;
  for (double v : vals) m4 += std::pow(v - mean, 4.0);
  m4 /= seeds;
  double se_var = std::sqrt((m4 - var * var) / seeds);
  CHECK(std::abs(var - d.analytic_variance) < 3.0 * se_var);
}

TEST_CASE("read-k keep probability holds in the non-clamped regime") {
  // dense enough that the bound lands strictly below 1
  CsrGraph g = er_graph(400, 0.25, 313);
  Pattern tri = builtin_pattern("triangle");
  ExecutionPlan plan = compile_plan(tri, VerifyMode::Eager);
  auto truth = static_cast<double>(exact_count(g.view(), plan, 2).count);
  uint64_t gamma = exact_gamma(g.view(), tri);
  KeepProbability kp = choose_keep_probability({0.1, 0.05, truth, static_cast<double>(gamma)});
  REQUIRE(kp.p < 1.0);
  REQUIRE(kp.p > 0.05);
  const int seeds = 300;
  int ok = 0;
  for (int s = 0; s < seeds; ++s) {
    GsEstimate est = gs_estimate(g, plan, SparsifyParams::bernoulli(kp.p, 31000 + s), 2);
    if (std::abs(est.estimate - truth) / truth <= 0.1) ++ok;
  }
  CHECK(ok >= static_cast<int>(0.95 * seeds));
}

TEST_CASE("estimate_gamma on reference graphs") {
  CsrGraph tri = complete_graph(3);
  CHECK(estimate_gamma(tri.view(), builtin_pattern("triangle"), 10, 1) == 1);
  CsrGraph k5 = complete_graph(5);
  CHECK(estimate_gamma(k5.view(), builtin_pattern("triangle"), 20, 1) == 3);

  CsrGraph g = er_graph(100, 0.1, 31);
  Pattern p = builtin_pattern("4clique");
  uint64_t truth = exact_gamma(g.view(), p);
  uint64_t probed = estimate_gamma(g.view(), p, 200, 5);
  CHECK(probed <= truth);
  CHECK(probed >= 1);
}
