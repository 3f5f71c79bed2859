#include <chrono>
#include <thread>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "agpm/colored_csr.hpp"
#include "agpm/cost_model.hpp"
#include "agpm/csr_graph.hpp"
#include "agpm/exact_engine.hpp"
#include "agpm/gs_engine.hpp"
#include "agpm/ns_engine.hpp"
#include "agpm/pattern.hpp"
#include "agpm/plan.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitIo = 2;
constexpr int kExitPattern = 3;
constexpr int kExitNoConvergence = 4;

struct Clock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

struct RunConfig {
  std::string graph_path;
  std::string pattern_spec;
  std::string induced;  // "", "edge", "vertex"
  double error = 0.1;
  double confidence = 0.99;
  std::string mode = "strict";
  std::string scheme = "auto";
  std::string verify = "eager";
  uint64_t seed = 1;
  int threads = 0;
  std::string format = "json";
  uint64_t max_samples = 1000000000ull;
  uint64_t window_min = 1000;
  double profile_fraction = 0.1;
  uint32_t colors = 0;        // 0 = not set
  double keep_prob = 0.0;     // 0 = not set
  int repeats = 1;
  std::string hw_cache;
  bool omit_timing = false;   // timing fields are the only nondeterministic output
};

int effective_threads(int requested) {
  if (const char* env = std::getenv("AGPM_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

json config_json(const RunConfig& cfg) {
  return json{{"graph", cfg.graph_path},     {"pattern", cfg.pattern_spec},
              {"error", cfg.error},          {"confidence", cfg.confidence},
              {"mode", cfg.mode},            {"scheme", cfg.scheme},
              {"verify", cfg.verify},        {"seed", cfg.seed},
              {"threads", cfg.threads},      {"max_samples", cfg.max_samples}};
}

json cone_json(const agpm::CostCone& cone) {
  return json{{"lower_slope", cone.lower_slope},
              {"upper_slope", cone.upper_slope},
              {"n_samples", cone.n_samples},
              {"lower_time", cone.lower_time},
              {"upper_time", cone.upper_time}};
}

json gs_model_json(const agpm::GsCostEstimate& est) {
  return json{{"preprocess_work", est.preprocess_work},
              {"search_work", est.search_work},
              {"total_seconds", est.total_seconds},
              {"colors", est.color_count}};
}

json profile_json(const agpm::ProfileResult& prof, bool omit_timing) {
  json j{{"n_samples_estimate", prof.n_samples_estimate},
         {"mu_prime", prof.mu_prime},
         {"scaled_count", prof.scaled_count},
         {"epsilon_hat_final", std::isfinite(prof.epsilon_hat_final)
                                   ? json(prof.epsilon_hat_final)
                                   : json("inf")},
         {"n_converged", prof.n_converged},
         {"fraction", prof.fraction},
         {"reliable", prof.reliable}};
  if (!omit_timing) j["seconds"] = prof.seconds;
  return j;
}

void emit(const json& report, const std::string& format) {
  if (format == "csv") {
    std::vector<std::string> keys, values;
    for (auto it = report.begin(); it != report.end(); ++it) {
      if (it.value().is_structured()) continue;
      keys.push_back(it.key());
      values.push_back(it.value().is_string() ? it.value().get<std::string>()
                                              : it.value().dump());
    }
    for (size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << keys[i];
    std::cout << '\n';
    for (size_t i = 0; i < values.size(); ++i) std::cout << (i ? "," : "") << values[i];
    std::cout << '\n';
  } else {
    std::cout << report.dump(2) << '\n';
  }
}

agpm::ExecutionPlan make_plan(const RunConfig& cfg) {
  agpm::Pattern pattern = agpm::parse_pattern_spec(cfg.pattern_spec, cfg.induced);
  auto mode = cfg.verify == "lazy" ? agpm::VerifyMode::Lazy : agpm::VerifyMode::Eager;
  return agpm::compile_plan(pattern, mode);
}

int run_ns_mode(const RunConfig& cfg, const agpm::CsrGraph& g, const agpm::ExecutionPlan& plan,
                json extra, const Clock& clock) {
  Clock sampling_clock;
  agpm::OnlinePolicy policy;
  policy.n_min = cfg.window_min;
  policy.max_samples = cfg.max_samples;
  if (extra.contains("profile")) {
    double ns = extra["profile"]["n_samples_estimate"].get<double>();
    if (ns >= 1.0) policy.profiled_n_samples = static_cast<uint64_t>(ns);
  }
  agpm::OnlineResult run = agpm::run_ns_online(g.view(), plan, cfg.error, 1.0 - cfg.confidence,
                                               policy, cfg.seed, cfg.threads);
  json report{{"scheme", "ns"},
              {"verify", cfg.verify},
              {"estimate", run.report.mu},
              {"predicted_error", run.report.epsilon_hat == std::numeric_limits<double>::infinity()
                                      ? json("inf")
                                      : json(run.report.epsilon_hat)},
              {"confidence", cfg.confidence},
              {"samples", run.report.n},
              {"hit_rate", run.report.hit_rate},
              {"converged", run.report.converged},
              {"work_units", run.work_units},
              {"seed", cfg.seed},
              {"config", config_json(cfg)}};
  report.update(extra);
  if (!cfg.omit_timing) {
    double profile_s = extra.contains("profile") && extra["profile"].contains("seconds")
                           ? extra["profile"]["seconds"].get<double>()
                           : 0.0;
    report["timing"] = {{"profile", profile_s},
                        {"preprocess", 0.0},
                        {"sampling", sampling_clock.seconds()}};
    report["seconds"] = clock.seconds();
  }
  emit(report, cfg.format);
  return run.report.converged ? 0 : kExitNoConvergence;
}

int run_gs_mode(const RunConfig& cfg, const agpm::CsrGraph& g, const agpm::ExecutionPlan& plan,
                agpm::SparsifyParams params, json extra, const Clock& clock) {
  double estimate_sum = 0.0;
  agpm::GsEstimate last;
  int repeats = std::max(cfg.repeats, 1);
  for (int r = 0; r < repeats; ++r) {
    agpm::SparsifyParams p = params;
    p.seed = agpm::derive_key(params.seed, static_cast<uint64_t>(r));
    last = agpm::gs_estimate(g, plan, p, cfg.threads);
    estimate_sum += last.estimate;
  }
  json params_json{{"scheme", params.scheme == agpm::SparsifyScheme::Color ? "color" : "bernoulli"},
                   {"keep_probability", params.keep_probability},
                   {"colors", params.color_count},
                   {"seed", params.seed}};
  json report{{"scheme", "gs"},
              {"estimate", estimate_sum / repeats},
              {"raw_count", last.raw_count},
              {"scale", last.scale},
              {"repeats", repeats},
              {"params", params_json},
              {"seed", cfg.seed},
              {"config", config_json(cfg)}};
  report.update(extra);
  if (!cfg.omit_timing) {
    report["preprocess_seconds"] = last.preprocess_seconds;
    report["search_seconds"] = last.search_seconds;
    double profile_s = extra.contains("profile") && extra["profile"].contains("seconds")
                           ? extra["profile"]["seconds"].get<double>()
                           : 0.0;
    report["timing"] = {{"profile", profile_s},
                        {"preprocess", last.preprocess_seconds},
                        {"sampling", last.search_seconds}};
    report["seconds"] = clock.seconds();
  }
  emit(report, cfg.format);
  return 0;
}

agpm::SparsifyParams gs_params_from_flags(const RunConfig& cfg, uint32_t derived_colors) {
  if (cfg.keep_prob > 0.0) return agpm::SparsifyParams::bernoulli(cfg.keep_prob, cfg.seed);
  if (cfg.colors > 0) return agpm::SparsifyParams::color(cfg.colors, cfg.seed);
  return agpm::SparsifyParams::color(derived_colors, cfg.seed);
}

// profiler + read-k parameter choice shared by `count --scheme gs` and loose mode
struct GsDerived {
  agpm::ProfileResult profile;
  double gamma = 1.0;
  agpm::KeepProbability keep;
};

GsDerived derive_gs_parameters(const RunConfig& cfg, const agpm::CsrGraph& g,
                               const agpm::ExecutionPlan& plan) {
  GsDerived d;
  d.profile = agpm::fast_profile(g, plan, cfg.profile_fraction, cfg.error, cfg.seed, cfg.threads);
  if (!d.profile.reliable) {
    // no count estimate, so the read-k bound degrades to p = 1 regardless of
    // gamma; skip the probing work
    d.keep = agpm::choose_keep_probability({cfg.error, 1.0 - cfg.confidence, 0.0, 1.0});
    return d;
  }
  uint64_t probes = std::min<uint64_t>(1000, std::max<uint64_t>(g.edge_count(), 1));
  // heuristic lower bound, doubled for safety
  d.gamma = 2.0 * std::max<uint64_t>(
                      1, agpm::estimate_gamma(g.view(), plan.pattern, probes, cfg.seed + 17));
  agpm::ReadKBoundInputs inputs{cfg.error, 1.0 - cfg.confidence, d.profile.scaled_count, d.gamma};
  d.keep = agpm::choose_keep_probability(inputs);
  return d;
}

int cmd_count(const RunConfig& cfg_in) {
  RunConfig cfg = cfg_in;
  cfg.threads = effective_threads(cfg.threads);
  Clock clock;
  agpm::CsrGraph g = agpm::load_graph_auto(cfg.graph_path);
  agpm::ExecutionPlan plan = make_plan(cfg);

  if (cfg.scheme == "ns" || (cfg.scheme == "auto" && cfg.mode == "strict"))
    return run_ns_mode(cfg, g, plan, json::object(), clock);

  if (cfg.scheme == "gs") {
    if (cfg.keep_prob > 0.0 || cfg.colors > 0)
      return run_gs_mode(cfg, g, plan, gs_params_from_flags(cfg, 1), json::object(), clock);
    GsDerived d = derive_gs_parameters(cfg, g, plan);
    json extra{{"profile", profile_json(d.profile, cfg.omit_timing)},
               {"gamma_estimate", d.gamma},
               {"keep_probability_bound", d.keep.p}};
    return run_gs_mode(cfg, g, plan, gs_params_from_flags(cfg, d.keep.color_count()), extra,
                       clock);
  }

  // loose mode: profiler feeds both cost models, selector picks the engine
  double hw = agpm::calibrate_hardware_constant(
      cfg.hw_cache.empty() ? agpm::default_hw_cache_path() : cfg.hw_cache);
  uint64_t tri = agpm::cached_triangle_count(cfg.graph_path, g);
  GsDerived d = derive_gs_parameters(cfg, g, plan);
  json extra{{"mode", "loose"}, {"profile", profile_json(d.profile, cfg.omit_timing)}};

  if (!d.profile.reliable) {
    extra["decision"] = "ns";
    extra["decision_reason"] = "profiler unreliable, strict fallback";
    return run_ns_mode(cfg, g, plan, extra, clock);
  }

  auto n_samples = static_cast<uint64_t>(std::max(1.0, d.profile.n_samples_estimate));
  agpm::CostCone cone = agpm::ns_cost_cone(g.view(), plan, n_samples, hw);
  uint32_t model_colors = std::max<uint32_t>(2, d.keep.color_count());
  agpm::GsCostEstimate gs_model = agpm::gs_cost_estimate(g.view(), plan, model_colors, hw, tri);
  agpm::Scheme choice = agpm::select_scheme(cone, gs_model);

  extra["cone"] = cone_json(cone);
  extra["gs_model"] = gs_model_json(gs_model);
  extra["gamma_estimate"] = d.gamma;
  extra["decision"] = choice == agpm::Scheme::GS ? "gs" : "ns";
  if (choice == agpm::Scheme::GS)  // run at the color count the model priced
    return run_gs_mode(cfg, g, plan, gs_params_from_flags(cfg, model_colors), extra, clock);
  return run_ns_mode(cfg, g, plan, extra, clock);
}

int cmd_exact(const std::string& graph_path, const std::string& pattern_spec,
              const std::string& induced, int threads, bool no_orient,
              const std::string& format) {
  Clock clock;
  agpm::CsrGraph g = agpm::load_graph_auto(graph_path);
  agpm::Pattern pattern = agpm::parse_pattern_spec(pattern_spec, induced);
  agpm::ExecutionPlan plan = agpm::compile_plan(pattern, agpm::VerifyMode::Eager);
  int t = effective_threads(threads);

  agpm::ExactCountResult result;
  if (pattern.is_clique() && !no_orient) {
    agpm::CsrGraph oriented = agpm::orient_by_degree(g);
    result = agpm::exact_count(oriented.view(), plan, t);
  } else {
    result = agpm::exact_count(g.view(), plan, t);
  }
  emit(json{{"count", result.count},
            {"work_units", result.work_units},
            {"seconds", clock.seconds()},
            {"pattern", pattern.name},
            {"threads", t}},
       format);
  return 0;
}

int cmd_profile(const std::string& graph_path, const std::string& pattern_spec,
                const std::string& induced, double fraction, double error, uint64_t seed,
                int threads, const std::string& format) {
  agpm::CsrGraph g = agpm::load_graph_auto(graph_path);
  agpm::Pattern pattern = agpm::parse_pattern_spec(pattern_spec, induced);
  agpm::ExecutionPlan plan = agpm::compile_plan(pattern, agpm::VerifyMode::Eager);
  agpm::ProfileResult prof =
      agpm::fast_profile(g, plan, fraction, error, seed, effective_threads(threads));
  emit(profile_json(prof, false), format);
  return 0;
}

int cmd_sparsify(const std::string& graph_path, const std::string& out_path, uint32_t colors,
                 double keep_prob, uint64_t seed) {
  agpm::CsrGraph g = agpm::load_graph_auto(graph_path);
  if (keep_prob > 0.0) {
    agpm::CsrGraph sparse = agpm::bernoulli_sparsify(g, keep_prob, seed);
    agpm::write_binary_csr(sparse, out_path);
  } else {
    agpm::ColoredCsr colored = agpm::ColoredCsr::color_vertices(g, std::max(colors, 1u), seed);
    agpm::CsrView v = colored.sparsified_view();
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (uint32_t u = 0; u < v.vertex_count; ++u)
      for (uint32_t w : v.neighbors_of(u))
        if (u < w) edges.emplace_back(u, w);
    agpm::write_binary_csr(agpm::CsrGraph::from_edges(std::move(edges), v.vertex_count), out_path);
  }
  std::cout << "wrote " << out_path << '\n';
  return 0;
}

int cmd_convert(const std::string& in_path, const std::string& out_path, std::string to) {
  agpm::CsrGraph g;
  bool input_binary = true;
  try {
    g = agpm::load_binary_csr(in_path);
  } catch (const agpm::io_error&) {
    g = agpm::load_edge_list_file(in_path);
    input_binary = false;
  }
  if (to.empty()) to = input_binary ? "text" : "binary";
  if (to == "binary") {
    agpm::write_binary_csr(g, out_path);
  } else {
    std::ofstream f(out_path);
    if (!f) throw agpm::io_error("cannot write file: " + out_path);
    agpm::write_edge_list(g, f);
  }
  std::cout << "wrote " << out_path << " (" << to << ")\n";
  return 0;
}

struct BenchRow {
  std::string graph, pattern, scheme, verify;
  double epsilon = 0.1, delta = 0.01;
  int repeats = 1;
};

int cmd_bench(const std::string& corpus_path, const std::string& out_path, uint64_t seed,
              int threads) {
  std::ifstream corpus(corpus_path);
  if (!corpus) throw agpm::io_error("cannot open corpus file: " + corpus_path);
  std::vector<BenchRow> rows;
  std::string line;
  while (std::getline(corpus, line)) {
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    BenchRow row;
    std::string eps, delta, repeats;
    if (!std::getline(ls, row.graph, ',') || !std::getline(ls, row.pattern, ',') ||
        !std::getline(ls, eps, ',') || !std::getline(ls, delta, ',') ||
        !std::getline(ls, row.scheme, ','))
      throw agpm::parse_error("corpus line needs graph,pattern,epsilon,delta,scheme[,verify[,repeats]]");
    if (!std::getline(ls, row.verify, ',')) row.verify = "eager";
    if (std::getline(ls, repeats, ',')) row.repeats = std::max(1, std::atoi(repeats.c_str()));
    row.epsilon = std::atof(eps.c_str());
    row.delta = std::atof(delta.c_str());
    rows.push_back(row);
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw agpm::io_error("cannot write file: " + out_path);
    out = &file;
  }
  *out << "graph,pattern,scheme,verify,repeat,estimate,true_count,actual_error,"
          "predicted_error,samples,hit_rate,seconds,status\n";

  int t = effective_threads(threads);
  for (const auto& row : rows) {
    // per-row setup shared by every repeat
    std::string row_error;
    agpm::CsrGraph g;
    agpm::ExecutionPlan plan;
    std::string true_count_s;
    double true_count = -1.0;
    try {
      g = agpm::load_graph_auto(row.graph);
      agpm::Pattern pattern = agpm::parse_pattern_spec(row.pattern);
      auto mode = row.verify == "lazy" ? agpm::VerifyMode::Lazy : agpm::VerifyMode::Eager;
      plan = agpm::compile_plan(pattern, mode);
      if (g.vertex_count() <= 200000 && g.edge_count() <= 5000000) {
        agpm::ExecutionPlan eplan = agpm::compile_plan(pattern, agpm::VerifyMode::Eager);
        agpm::ExactCountResult exact;
        if (pattern.is_clique()) {
          agpm::CsrGraph oriented = agpm::orient_by_degree(g);
          exact = agpm::exact_count(oriented.view(), eplan, t);
        } else {
          exact = agpm::exact_count(g.view(), eplan, t);
        }
        true_count = static_cast<double>(exact.count);
        true_count_s = std::to_string(exact.count);
      }
    } catch (const std::exception& e) {
      row_error = e.what();
    }

    for (int rep = 0; rep < row.repeats; ++rep) {
      std::string prefix = row.graph + "," + row.pattern + "," + row.scheme + "," + row.verify +
                           "," + std::to_string(rep);
      try {
        if (!row_error.empty()) throw agpm::io_error(row_error);
        std::string actual_error_s;
        Clock clock;
        uint64_t cell_seed = agpm::derive_key(seed, std::hash<std::string>{}(prefix), rep);
        if (row.scheme == "gs") {
          RunConfig cfg;
          cfg.error = row.epsilon;
          cfg.confidence = 1.0 - row.delta;
          cfg.seed = cell_seed;
          cfg.threads = t;
          GsDerived d = derive_gs_parameters(cfg, g, plan);
          agpm::SparsifyParams params =
              agpm::SparsifyParams::color(d.keep.color_count(), cell_seed);
          agpm::GsEstimate est = agpm::gs_estimate(g, plan, params, t);
          if (true_count > 0.0)
            actual_error_s = std::to_string(std::abs(est.estimate - true_count) / true_count);
          *out << prefix << ',' << est.estimate << ',' << true_count_s << ',' << actual_error_s
               << ",,,," << clock.seconds() << ",ok\n";
        } else {
          agpm::OnlinePolicy policy;
          agpm::OnlineResult run = agpm::run_ns_online(g.view(), plan, row.epsilon, row.delta,
                                                       policy, cell_seed, t);
          if (true_count > 0.0)
            actual_error_s = std::to_string(std::abs(run.report.mu - true_count) / true_count);
          *out << prefix << ',' << run.report.mu << ',' << true_count_s << ',' << actual_error_s
               << ',' << run.report.epsilon_hat << ',' << run.report.n << ','
               << run.report.hit_rate << ',' << clock.seconds() << ','
               << (run.report.converged ? "ok" : "cap") << '\n';
        }
      } catch (const std::exception& e) {
        std::string msg = e.what();
        for (auto& ch : msg)
          if (ch == ',' || ch == '\n') ch = ';';
        *out << prefix << ",,,,,,,," << "error: " << msg << '\n';
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"agpm: approximate graph pattern mining with online convergence detection"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto* count = app.add_subcommand("count", "estimate a pattern count under an error bound");
  count->add_option("--graph", cfg.graph_path)->required();
  count->add_option("--pattern", cfg.pattern_spec)->required();
  count->add_option("--induced", cfg.induced)->check(CLI::IsMember({"edge", "vertex"}));
  count->add_option("--error", cfg.error);
  count->add_option("--confidence", cfg.confidence);
  count->add_option("--mode", cfg.mode)->check(CLI::IsMember({"strict", "loose"}));
  count->add_option("--scheme", cfg.scheme)->check(CLI::IsMember({"auto", "ns", "gs"}));
  count->add_option("--verify", cfg.verify)->check(CLI::IsMember({"eager", "lazy"}));
  count->add_option("--seed", cfg.seed);
  count->add_option("--threads", cfg.threads);
  count->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  count->add_option("--max-samples", cfg.max_samples);
  count->add_option("--window-min", cfg.window_min);
  count->add_option("--profile-fraction", cfg.profile_fraction);
  count->add_option("--colors", cfg.colors);
  count->add_option("--keep-prob", cfg.keep_prob);
  count->add_option("--repeats", cfg.repeats);
  count->add_option("--hw-cache", cfg.hw_cache);
  count->add_flag("--omit-timing", cfg.omit_timing,
                  "drop wall-clock fields for byte-reproducible output");

  std::string x_graph, x_pattern, x_induced, x_format = "json";
  int x_threads = 0;
  bool x_no_orient = false;
  auto* exact = app.add_subcommand("exact", "exact pattern count");
  exact->add_option("--graph", x_graph)->required();
  exact->add_option("--pattern", x_pattern)->required();
  exact->add_option("--induced", x_induced)->check(CLI::IsMember({"edge", "vertex"}));
  exact->add_option("--threads", x_threads);
  exact->add_option("--format", x_format)->check(CLI::IsMember({"json", "csv"}));
  exact->add_flag("--no-orient", x_no_orient, "skip degree orientation for cliques");

  std::string p_graph, p_pattern, p_induced, p_format = "json";
  double p_fraction = 0.1, p_error = 0.1;
  uint64_t p_seed = 1;
  int p_threads = 0;
  auto* profile = app.add_subcommand("profile", "fast profiler for the cost models");
  profile->add_option("--graph", p_graph)->required();
  profile->add_option("--pattern", p_pattern)->required();
  profile->add_option("--induced", p_induced)->check(CLI::IsMember({"edge", "vertex"}));
  profile->add_option("--fraction", p_fraction);
  profile->add_option("--error", p_error);
  profile->add_option("--seed", p_seed);
  profile->add_option("--threads", p_threads);
  profile->add_option("--format", p_format)->check(CLI::IsMember({"json", "csv"}));

  std::string s_graph, s_out;
  uint32_t s_colors = 0;
  double s_keep = 0.0;
  uint64_t s_seed = 1;
  auto* sparsify = app.add_subcommand("sparsify", "emit a sparsified graph as binary CSR");
  sparsify->add_option("--graph", s_graph)->required();
  sparsify->add_option("--out", s_out)->required();
  sparsify->add_option("--colors", s_colors);
  sparsify->add_option("--keep-prob", s_keep);
  sparsify->add_option("--seed", s_seed);

  std::string c_in, c_out, c_to;
  auto* convert = app.add_subcommand("convert", "convert between text edge list and binary CSR");
  convert->add_option("--in", c_in)->required();
  convert->add_option("--out", c_out)->required();
  convert->add_option("--to", c_to)->check(CLI::IsMember({"text", "binary"}));

  std::string b_corpus, b_out;
  uint64_t b_seed = 1;
  int b_threads = 0;
  auto* bench = app.add_subcommand("bench", "run a corpus matrix and emit CSV");
  bench->add_option("--corpus", b_corpus)->required();
  bench->add_option("--out", b_out);
  bench->add_option("--seed", b_seed);
  bench->add_option("--threads", b_threads);

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) return cmd_count(cfg);
    if (exact->parsed())
      return cmd_exact(x_graph, x_pattern, x_induced, x_threads, x_no_orient, x_format);
    if (profile->parsed())
      return cmd_profile(p_graph, p_pattern, p_induced, p_fraction, p_error, p_seed, p_threads,
                         p_format);
    if (sparsify->parsed()) return cmd_sparsify(s_graph, s_out, s_colors, s_keep, s_seed);
    if (convert->parsed()) return cmd_convert(c_in, c_out, c_to);
    if (bench->parsed()) return cmd_bench(b_corpus, b_out, b_seed, b_threads);
  } catch (const agpm::pattern_error& e) {
    std::cerr << "pattern error: " << e.what() << '\n';
    return kExitPattern;
  } catch (const agpm::io_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const agpm::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
