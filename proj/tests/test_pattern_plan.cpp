#include <set>

#include "agpm/exact_engine.hpp"
#include "agpm/pattern.hpp"
#include "agpm/plan.hpp"
#include "agpm/walker.hpp"
#include "doctest.h"
#include "support/test_graphs.hpp"

using namespace agpm;
using namespace agpm::testing;

TEST_CASE("builtin pattern shapes") {
  Pattern c4 = builtin_pattern("4cycle");
  CHECK(c4.vertex_count == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.induced == InducedMode::Edge);
  std::set<std::pair<int, int>> want{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  CHECK(std::set<std::pair<int, int>>(c4.edges.begin(), c4.edges.end()) == want);

  Pattern house = builtin_pattern("house");
  CHECK(house.vertex_count == 5);
  CHECK(house.edge_count() == 6);

  Pattern dumbbell = builtin_pattern("dumbbell");
  CHECK(dumbbell.vertex_count == 6);
  CHECK(dumbbell.edge_count() == 7);

  Pattern motif = builtin_pattern("4motif-diamond");
  CHECK(motif.induced == InducedMode::Vertex);
  CHECK(motif.edge_count() == 5);

  CHECK(builtin_pattern("triangle").is_clique());
  CHECK(builtin_pattern("6clique").automorphisms().size() == 720);
}

TEST_CASE("unknown pattern error lists valid names") {
  try {
    builtin_pattern("pentagon");
    FAIL("expected pattern_error");
  } catch (const pattern_error& e) {
    std::string msg = e.what();
    CHECK(msg.find("4cycle") != std::string::npos);
    CHECK(msg.find("dumbbell") != std::string::npos);
  }
}

TEST_CASE("custom pattern spec parses and validates") {
  Pattern p = parse_pattern_spec("custom:4:0-1,1-2,2-3,3-0");
  CHECK(p.vertex_count == 4);
  CHECK(p.edge_count() == 4);
  CHECK(p.induced == InducedMode::Edge);

  Pattern v = parse_pattern_spec("custom:3:0-1,1-2", "vertex");
  CHECK(v.induced == InducedMode::Vertex);

  CHECK_THROWS_AS(parse_pattern_spec("custom:4:0-1"), pattern_error);      // disconnected
  CHECK_THROWS_AS(parse_pattern_spec("custom:3:0-0,1-2"), pattern_error);  // loop
  CHECK_THROWS_AS(parse_pattern_spec("custom:3:0-9"), pattern_error);      // out of range
  CHECK_THROWS_AS(parse_pattern_spec("triangle", "sideways"), pattern_error);
}

TEST_CASE("4cycle eager plan matches the reference shape") {
  ExecutionPlan plan = compile_plan(builtin_pattern("4cycle"), VerifyMode::Eager);
  REQUIRE(plan.steps.size() == 2);
  CHECK(plan.seed_ordered);
  // v2 extends from one bound neighborhood, v3 from the intersection of two
  CHECK(plan.steps[0].in_positions.size() == 1);
  CHECK(plan.steps[1].in_positions.size() == 2);
  CHECK(plan.closure_edges.empty());
  CHECK(plan_verifies_each_edge_once(plan));
}

TEST_CASE("triangle eager plan has a single intersection step") {
  ExecutionPlan plan = compile_plan(builtin_pattern("triangle"), VerifyMode::Eager);
  REQUIRE(plan.steps.size() == 1);
  CHECK(plan.steps[0].in_positions.size() == 2);
  CHECK(plan.seed_ordered);
  CHECK(plan.scaling_rule_text() == "m * |S_2|");
}

TEST_CASE("4clique lazy plan defers three closing edges") {
  ExecutionPlan plan = compile_plan(builtin_pattern("4clique"), VerifyMode::Lazy);
  REQUIRE(plan.steps.size() == 2);
  CHECK(plan.closure_edges.size() == 3);  // K4 edges minus spanning tree
  for (const auto& step : plan.steps) CHECK(step.tree_parent >= 0);
  CHECK(plan_verifies_each_edge_once(plan));
}

TEST_CASE("every builtin plan verifies each pattern edge exactly once") {
  for (const auto& name : builtin_pattern_names()) {
    Pattern p = builtin_pattern(name);
    for (auto mode : {VerifyMode::Eager, VerifyMode::Lazy}) {
      ExecutionPlan plan = compile_plan(p, mode);
      CAPTURE(name);
      CHECK(plan_verifies_each_edge_once(plan));
    }
  }
}

TEST_CASE("disconnected pattern is rejected by compile_plan") {
  Pattern p;
  p.name = "broken";
  p.vertex_count = 4;
  p.edges = {{0, 1}, {2, 3}};
  CHECK_THROWS_AS(compile_plan(p, VerifyMode::Eager), pattern_error);
}

TEST_CASE("bijection check on the reference cases") {
  CHECK(plan_leaf_bijection_check(compile_plan(builtin_pattern("4cycle"), VerifyMode::Eager),
                                  cycle_graph(4)));
  CHECK(plan_leaf_bijection_check(compile_plan(builtin_pattern("triangle"), VerifyMode::Eager),
                                  complete_graph(4)));
  CHECK(plan_leaf_bijection_check(compile_plan(builtin_pattern("triangle"), VerifyMode::Lazy),
                                  complete_graph(4)));
}

TEST_CASE("4cycle eager on C4: one hit path, expectation equals the count") {
  ExecutionPlan plan = compile_plan(builtin_pattern("4cycle"), VerifyMode::Eager);
  CsrGraph c4 = cycle_graph(4);
  uint64_t hits = 0;
  double expectation = 0.0, prob_total = 0.0;
  for_each_decision_path(c4.view(), plan,
                         [&](const std::vector<uint32_t>&, double prob, double value) {
                           prob_total += prob;
                           expectation += prob * value;
                           if (value > 0) ++hits;
                         });
  CHECK(hits == 1);
  CHECK(expectation == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(prob_total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("every builtin plan is leaf-bijective on small random graphs") {
  std::vector<CsrGraph> corpus;
  corpus.push_back(er_graph(9, 0.35, 101));
  corpus.push_back(er_graph(10, 0.45, 102));
  corpus.push_back(er_graph(11, 0.3, 103));
  corpus.push_back(complete_graph(6));
  for (const auto& name : builtin_pattern_names()) {
    Pattern p = builtin_pattern(name);
    for (auto mode : {VerifyMode::Eager, VerifyMode::Lazy}) {
      ExecutionPlan plan = compile_plan(p, mode);
      for (const auto& g : corpus) {
        if (g.edge_count() == 0) continue;
        CAPTURE(name);
        CHECK(plan_leaf_bijection_check(plan, g));
      }
    }
  }
}

TEST_CASE("symmetry breaking reduces leaf count by the automorphism order") {
  struct Case {
    const char* name;
    uint32_t max_extra;  // how far past K_k to push
  };
  // large cliques get only the tight cases to keep the walk affordable
  std::vector<Case> cases = {{"triangle", 2}, {"4cycle", 2},      {"5path", 2},
                             {"house", 2},    {"4clique", 2},     {"5clique", 2},
                             {"dumbbell", 1}, {"4motif-star", 2}, {"6clique", 1},
                             {"7clique", 0},  {"8clique", 0},     {"9clique", 0}};
  for (const auto& c : cases) {
    Pattern p = builtin_pattern(c.name);
    p.induced = InducedMode::Edge;  // complete graphs hold no induced motifs
    uint64_t aut = p.automorphisms().size();
    for (uint32_t extra = 0; extra <= c.max_extra; ++extra) {
      auto n = static_cast<uint32_t>(p.vertex_count) + extra;
      CsrGraph g = complete_graph(n);
      uint64_t with_sb = 0, without_sb = 0;
      ExecutionPlan on = compile_plan(p, VerifyMode::Eager, true);
      ExecutionPlan off = compile_plan(p, VerifyMode::Eager, false);
      for_each_decision_path(g.view(), on, [&](const std::vector<uint32_t>&, double, double v) {
        if (v > 0) ++with_sb;
      });
      for_each_decision_path(g.view(), off, [&](const std::vector<uint32_t>&, double, double v) {
        if (v > 0) ++without_sb;
      });
      CAPTURE(c.name);
      CAPTURE(n);
      CHECK(without_sb == with_sb * aut);
      CHECK(with_sb == brute_force_count(g, p));
    }
  }
}
