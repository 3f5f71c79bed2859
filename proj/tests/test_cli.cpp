#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "agpm/csr_graph.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support/test_graphs.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(AGPM_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  CliResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  f << content;
}

const char* kTriangleFile = "cli_triangle.txt";
const char* kStarFile = "cli_star.txt";

struct Fixture {
  Fixture() {
    write_file(kTriangleFile, "0 1\n0 2\n1 2\n");
    write_file(kStarFile, "0 1\n0 2\n0 3\n0 4\n");
  }
  ~Fixture() {
    std::remove(kTriangleFile);
    std::remove(kStarFile);
  }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "exact subcommand counts the triangle") {
  CliResult res = run_cli(std::string("exact --graph ") + kTriangleFile + " --pattern triangle");
  CHECK(res.exit_code == 0);
  json j = json::parse(res.out);
  CHECK(j["count"] == 1);
  CHECK(j["work_units"].get<uint64_t>() > 0);
}

TEST_CASE_FIXTURE(Fixture, "count strict mode on the triangle") {
  CliResult res = run_cli(std::string("count --graph ") + kTriangleFile +
                          " --pattern triangle --error 0.1 --seed 5 --threads 1 --omit-timing");
  CHECK(res.exit_code == 0);
  json j = json::parse(res.out);
  CHECK(j["scheme"] == "ns");
  CHECK(j["converged"] == true);
  double mu = j["estimate"].get<double>();
  CHECK(mu > 0.8);
  CHECK(mu < 1.2);
  // report round-trips through the parser
  json again = json::parse(j.dump());
  CHECK(again == j);
}

TEST_CASE_FIXTURE(Fixture, "gs with one color reproduces exact output") {
  CliResult exact = run_cli(std::string("exact --graph ") + kTriangleFile + " --pattern triangle");
  CliResult gs = run_cli(std::string("count --graph ") + kTriangleFile +
                         " --pattern triangle --scheme gs --colors 1 --omit-timing");
  CHECK(gs.exit_code == 0);
  json je = json::parse(exact.out);
  json jg = json::parse(gs.out);
  CHECK(jg["estimate"].get<double>() == doctest::Approx(je["count"].get<double>()));
  CHECK(jg["scale"] == 1.0);
}

TEST_CASE_FIXTURE(Fixture, "fixed seed single thread output is byte-identical") {
  std::string args = std::string("count --graph ") + kTriangleFile +
                     " --pattern triangle --seed 11 --threads 1 --omit-timing";
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE_FIXTURE(Fixture, "exit codes: io, pattern, non-convergence") {
  CHECK(run_cli("count --graph does_not_exist.txt --pattern triangle").exit_code == 2);
  CHECK(run_cli(std::string("count --graph ") + kTriangleFile + " --pattern pentagon").exit_code ==
        3);
  CliResult capped = run_cli(std::string("count --graph ") + kStarFile +
                             " --pattern triangle --max-samples 4000 --omit-timing");
  CHECK(capped.exit_code == 4);
  json j = json::parse(capped.out);  // partial report still emitted
  CHECK(j["converged"] == false);
  CHECK(j["samples"] == 4000);
}

TEST_CASE_FIXTURE(Fixture, "convert round trips text and binary") {
  CliResult to_bin = run_cli(std::string("convert --in ") + kTriangleFile +
                             " --out cli_tri.bin --to binary");
  CHECK(to_bin.exit_code == 0);
  CliResult back = run_cli("convert --in cli_tri.bin --out cli_tri_back.txt --to text");
  CHECK(back.exit_code == 0);
  std::ifstream f("cli_tri_back.txt");
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "0 1\n0 2\n1 2\n");
  CliResult exact = run_cli("exact --graph cli_tri.bin --pattern triangle");
  CHECK(json::parse(exact.out)["count"] == 1);
  std::remove("cli_tri.bin");
  std::remove("cli_tri_back.txt");
}

TEST_CASE_FIXTURE(Fixture, "sparsify emits a loadable binary csr") {
  CliResult res = run_cli(std::string("sparsify --graph ") + kTriangleFile +
                          " --out cli_sparse.bin --colors 1 --seed 2");
  CHECK(res.exit_code == 0);
  CliResult exact = run_cli("exact --graph cli_sparse.bin --pattern triangle");
  CHECK(json::parse(exact.out)["count"] == 1);  // one color keeps everything
  std::remove("cli_sparse.bin");
}

TEST_CASE_FIXTURE(Fixture, "profile subcommand reports the estimate fields") {
  CliResult res = run_cli(std::string("profile --graph ") + kTriangleFile +
                          " --pattern triangle --fraction 0.9 --seed 3");
  CHECK(res.exit_code == 0);
  json j = json::parse(res.out);
  CHECK(j.contains("n_samples_estimate"));
  CHECK(j.contains("mu_prime"));
  CHECK(j.contains("n_converged"));
}

TEST_CASE_FIXTURE(Fixture, "bench runs a 2x2 corpus") {
  write_file("cli_corpus.csv",
             "# graph,pattern,epsilon,delta,scheme\n"
             "cli_triangle.txt,triangle,0.2,0.05,ns,eager\n"
             "cli_triangle.txt,triangle,0.2,0.05,ns,lazy\n"
             "cli_triangle.txt,triangle,0.2,0.05,gs\n"
             "missing.txt,triangle,0.2,0.05,ns\n");
  CliResult res = run_cli("bench --corpus cli_corpus.csv --seed 4");
  CHECK(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string line;
  int rows = 0, errors = 0;
  std::getline(lines, line);
  CHECK(line.find("graph,pattern,scheme") == 0);  // header
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    if (line.find("error:") != std::string::npos) ++errors;
  }
  CHECK(rows == 4);
  CHECK(errors == 1);  // the missing graph becomes a status row, not an abort
  std::remove("cli_corpus.csv");
}

TEST_CASE_FIXTURE(Fixture, "bench repetition rows keep predicted error above actual") {
  // seeded ER graph: triangle estimation converges quickly, the predicted
  // error must upper-bound the actual error in at least 1-delta-0.03 of rows
  std::ofstream g("cli_er.txt");
  uint64_t seed = 424242;
  for (uint32_t u = 0; u < 100; ++u)
    for (uint32_t v = u + 1; v < 100; ++v) {
      seed = seed * 6364136223846793005ull + 1442695040888963407ull;
      if (static_cast<double>(seed >> 11) * 0x1.0p-53 < 0.15) g << u << ' ' << v << '\n';
    }
  g.close();
  write_file("cli_corpus_rep.csv", "cli_er.txt,triangle,0.2,0.05,ns,eager,100\n");
  CliResult res = run_cli("bench --corpus cli_corpus_rep.csv --seed 6");
  CHECK(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string line;
  std::getline(lines, line);  // header
  int rows = 0, bounded = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    // columns: graph,pattern,scheme,verify,repeat,estimate,true,actual,predicted,...
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() >= 9);
    double actual = std::stod(fields[7]);
    double predicted = std::stod(fields[8]);
    ++rows;
    if (predicted >= actual) ++bounded;
  }
  CHECK(rows == 100);
  CHECK(bounded >= 92);  // 1 - delta - 0.03 of rows
  std::remove("cli_er.txt");
  std::remove("cli_corpus_rep.csv");
}

TEST_CASE_FIXTURE(Fixture, "loose mode can decide for GS and reports the trail") {
  // dense pattern on a dense-enough graph: NS needs many samples, the
  // sparsified exact search is cheap, the selector should flip to GS
  {
    agpm::CsrGraph g = agpm::testing::er_graph(400, 0.3, 4217);
    std::ofstream f("cli_dense.txt");
    agpm::write_edge_list(g, f);
  }
  CliResult res = run_cli(
      "count --graph cli_dense.txt --pattern 6clique --mode loose "
      "--profile-fraction 0.7 --seed 2 --threads 2 --omit-timing");
  CHECK(res.exit_code == 0);
  json j = json::parse(res.out);
  CHECK(j["decision"] == "gs");
  CHECK(j["scheme"] == "gs");
  CHECK(j["profile"]["reliable"] == true);
  CHECK(j["cone"]["lower_time"].get<double>() > j["gs_model"]["total_seconds"].get<double>());
  CHECK(j["params"]["colors"].get<int>() >= 2);

  CliResult exact = run_cli("exact --graph cli_dense.txt --pattern 6clique");
  double truth = json::parse(exact.out)["count"].get<double>();
  CHECK(std::abs(j["estimate"].get<double>() - truth) / truth < 0.5);  // loose, no guarantee
  std::remove("cli_dense.txt");
  std::remove("cli_dense.txt.tri");
}

TEST_CASE_FIXTURE(Fixture, "AGPM_THREADS environment variable overrides --threads") {
  std::string cmd = std::string("AGPM_THREADS=1 ") + AGPM_CLI_PATH + " exact --graph " +
                    kTriangleFile + " --pattern triangle --threads 7 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  json j = json::parse(out);
  CHECK(j["threads"] == 1);
}

TEST_CASE_FIXTURE(Fixture, "csv format emits a header and one row") {
  CliResult res = run_cli(std::string("count --graph ") + kTriangleFile +
                          " --pattern triangle --seed 5 --format csv --omit-timing");
  CHECK(res.exit_code == 0);
  std::istringstream lines(res.out);
  std::string header, row;
  REQUIRE(std::getline(lines, header));
  REQUIRE(std::getline(lines, row));
  CHECK(header.find("estimate") != std::string::npos);
  CHECK(header.find("scheme") != std::string::npos);
}
