// Exercises the command-line surface end to end: exit codes, JSON output,
// the golden corpus, and byte-level determinism.
//
// argv[1] = path to the witgen binary, argv[2] = corpus directory.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

std::string g_cli;
std::string g_corpus;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_raw(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run(const std::string& args) {
  return run_raw(g_cli + " " + args + " 2>/dev/null");
}

std::string manifold(const std::string& entry) {
  return g_corpus + "/" + entry + "/manifold.json";
}

} // namespace

TEST_CASE("genus on the vanishing corpus exits 0 with verdict vanishes") {
  const RunResult r =
      run("genus --manifold " + manifold("cp11-222") + " --bundle 2 2 2 --q-order 5 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("verdict") == "vanishes");
  CHECK(j.at("paths_agree") == true);
  for (const auto& c : j.at("coefficients")) CHECK(c.get<std::string>() == "0");
}

TEST_CASE("genus on the quartic starts with 2 and reports nonzero") {
  const RunResult r =
      run("genus --manifold " + manifold("cp3-quartic") + " --bundle 4 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("coefficients")[0] == "2");
  CHECK(j.at("verdict") == "nonzero");
}

TEST_CASE("check --require-string fails with the p1 witnesses") {
  const RunResult r = run("check --manifold " + manifold("cp3-quartic") +
                          " --bundle 4 --require-string --format json");
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("w2_match") == true);
  CHECK(j.at("p1_match") == false);
  CHECK(j.at("witnesses").at("pretty").at("p1_bundle") == "16*u^2");
  CHECK(j.at("witnesses").at("pretty").at("p1_manifold") == "4*u^2");
}

TEST_CASE("input errors exit 2") {
  CHECK(run("genus --manifold /does/not/exist.json").exit_code == 2);
  CHECK(run("genus --manifold " + manifold("cp3xcp3") + " --bundle 2 0 1").exit_code == 2);
  // O(3) on CP^3 breaks the w2 precondition: X not spin.
  CHECK(run("genus --manifold " + manifold("cp3-quartic") + " --bundle 3").exit_code == 2);
  // elliptic needs a spin manifold; CP^2 is not.
  const fs::path tmp = fs::temp_directory_path() / "witgen_cp2.json";
  {
    std::ofstream out(tmp);
    out << R"({"name":"cp2","generators":["u"],
               "relations":[{"lead":["u",3],"rhs":[]}],
               "tangent_roots":[[1],[1],[1]],"rank_offset":1,
               "metadata":{"b1":0,"b2":1,"torus_dim":2,"homogeneous":true,
                           "simply_connected":true,"has_fixed_point":true}})";
  }
  CHECK(run("elliptic --manifold " + tmp.string()).exit_code == 2);
  fs::remove(tmp);
}

TEST_CASE("search streams the sorted configurations") {
  const RunResult r = run("search --manifold " + manifold("cp1xcp1-tm") +
                          " --max-degree 2 --max-bundles 2 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  bool has_tm = false;
  for (const auto& roots : j.at("found"))
    if (roots == nlohmann::json::parse("[[0,2],[2,0]]")) has_tm = true;
  CHECK(has_tm);
}

TEST_CASE("the zero-generator point model works through the CLI") {
  const RunResult r = run("genus --manifold " + manifold("point") + " --format json");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out).at("coefficients")[0] == "1");
}

TEST_CASE("fano reports the positivity arithmetic") {
  const RunResult r =
      run("fano --manifold " + manifold("cp11-222") + " --bundle 2 2 2 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("c1_coefficient") == 6);
  CHECK(j.at("fano") == true);
}

TEST_CASE("WITTEN_Q_ORDER sets the default truncation") {
  const RunResult plain = run("genus --manifold " + manifold("cp3-quadric") +
                              " --bundle 2 --format json");
  CHECK(nlohmann::json::parse(plain.out).at("q_order") == 5);
  const RunResult env = run_raw("WITTEN_Q_ORDER=2 " + g_cli + " genus --manifold " +
                                manifold("cp3-quadric") + " --bundle 2 --format json 2>/dev/null");
  CHECK(env.exit_code == 0);
  CHECK(nlohmann::json::parse(env.out).at("q_order") == 2);
  const RunResult bad = run_raw("WITTEN_Q_ORDER=soon " + g_cli + " genus --manifold " +
                                manifold("cp3-quadric") + " --bundle 2 2>/dev/null");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("corpus verification passes and is byte-deterministic") {
  const RunResult a = run("corpus --dir " + g_corpus + " --format json");
  CHECK(a.exit_code == 0);
  CHECK(nlohmann::json::parse(a.out).at("all_pass") == true);
  const RunResult b = run("corpus --dir " + g_corpus + " --format json");
  const RunResult c = run("corpus --dir " + g_corpus + " --jobs 4 --format json");
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("corrupted expected file is a named failure with exit 1") {
  const fs::path tmp = fs::temp_directory_path() / "witgen_corrupt_corpus";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  fs::copy(fs::path(g_corpus) / "point", tmp / "point", fs::copy_options::recursive);
  {
    std::ofstream bad(tmp / "point" / "expected.json");
    bad << "{\"results\": []}\n";
  }
  const RunResult r = run("corpus --dir " + tmp.string() + " --format json");
  CHECK(r.exit_code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("all_pass") == false);
  CHECK(j.at("entries")[0].at("name") == "point");
  CHECK(j.at("entries")[0].at("pass") == false);
  fs::remove_all(tmp);
}

TEST_CASE("missing or empty corpus directory exits 2") {
  CHECK(run("corpus --dir /does/not/exist").exit_code == 2);
  const fs::path tmp = fs::temp_directory_path() / "witgen_empty_corpus";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  CHECK(run("corpus --dir " + tmp.string()).exit_code == 2);
  fs::remove_all(tmp);
}

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_tests <witgen-binary> <corpus-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_corpus = argv[2];
  doctest::Context ctx;
  return ctx.run();
}
