// Command-line surface for the twisted-index engine: load a manifold
// description, run genus computations and condition checks, emit text or
// canonical JSON, verify the golden corpus.
//
// Exit codes: 0 success; 1 a checked condition failed; 2 input or parse
// error; 3 internal invariant violation (always a bug).

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "witgen/runner.hpp"

namespace {

using namespace witgen;

struct CliOptions {
  std::string manifold_file;
  std::vector<long> bundle_flat;
  std::vector<long> w_bundle_flat;
  std::vector<long> c1c_flat;
  int q_order = -1; // resolved against WITTEN_Q_ORDER / default 5
  std::string format = "text";
  bool require_string = false;
  int max_degree = 2;
  int max_bundles = 2;
};

int default_q_order() {
  if (const char* env = std::getenv("WITTEN_Q_ORDER")) {
    try {
      return std::stoi(env);
    } catch (...) {
      throw parse_error("WITTEN_Q_ORDER is not an integer");
    }
  }
  return 5;
}

std::vector<std::vector<long>> chunk_roots(const std::vector<long>& flat, int gens,
                                           const std::string& flag) {
  if (flat.empty()) return {};
  if (gens == 0)
    throw parse_error(flag + " given but the model has no generators");
  if (flat.size() % static_cast<size_t>(gens) != 0)
    throw parse_error(flag + " expects groups of " + std::to_string(gens) +
                      " integers (one vector per line bundle)");
  std::vector<std::vector<long>> roots;
  for (size_t i = 0; i + static_cast<size_t>(gens) <= flat.size();
       i += static_cast<size_t>(gens))
    roots.emplace_back(flat.begin() + static_cast<long>(i),
                       flat.begin() + static_cast<long>(i) + gens);
  return roots;
}

void print_series_text(std::ostream& os, const Json& out) {
  os << out.at("manifold").get<std::string>() << "  path=" << out.at("path").get<std::string>()
     << "  q-order=" << out.at("q_order").get<int>() << "\n";
  os << "  coefficients:";
  for (const auto& c : out.at("coefficients")) os << " " << c.get<std::string>();
  os << "\n  verdict: " << out.at("verdict").get<std::string>() << "\n";
}

void print_text(std::ostream& os, const std::string& command, const Json& out) {
  if (command == "genus" || command == "phi-c" || command == "elliptic") {
    print_series_text(os, out);
    return;
  }
  if (command == "check") {
    const auto& pretty = out.at("witnesses").at("pretty");
    os << "w2_match: " << (out.at("w2_match").get<bool>() ? "yes" : "no")
       << "  (w2(M) = " << pretty.at("w2_manifold").get<std::string>()
       << ", w2(V) = " << pretty.at("w2_bundle").get<std::string>() << ")\n";
    os << "p1_match: " << (out.at("p1_match").get<bool>() ? "yes" : "no")
       << "  (p1(M) = " << pretty.at("p1_manifold").get<std::string>()
       << ", p1(V) = " << pretty.at("p1_bundle").get<std::string>() << ")\n";
    os << "x_spin: " << (out.at("x_spin").get<bool>() ? "yes" : "no") << "\n";
    os << "theorem: " << out.at("theorem_applicable").get<std::string>() << "\n";
    const auto notes = out.at("notes").get<std::string>();
    if (!notes.empty()) os << "notes: " << notes << "\n";
    return;
  }
  if (command == "fano") {
    os << "c1(X) coefficient: " << out.at("c1_coefficient").get<long>()
       << "  fano: " << (out.at("fano").get<bool>() ? "yes" : "no")
       << "  exceptional: " << (out.at("exceptional").get<bool>() ? "yes" : "no") << "\n";
    return;
  }
  if (command == "search") {
    os << "found " << out.at("count").get<size_t>() << " string configuration(s)\n";
    for (const auto& roots : out.at("found")) {
      os << " ";
      for (const auto& root : roots) {
        os << " (";
        for (size_t i = 0; i < root.size(); ++i) os << (i ? "," : "") << root[i].get<long>();
        os << ")";
      }
      os << "\n";
    }
    return;
  }
  os << out.dump(2) << "\n";
}

int run_command(const std::string& command, const CliOptions& opt) {
  const ManifoldModel M = load_model(opt.manifold_file);
  JobSpec job;
  job.command = command;
  job.bundle = chunk_roots(opt.bundle_flat, M.generator_count(), "--bundle");
  job.w_bundle = chunk_roots(opt.w_bundle_flat, M.generator_count(), "--w-bundle");
  if (!opt.c1c_flat.empty()) {
    if (static_cast<int>(opt.c1c_flat.size()) != M.generator_count())
      throw parse_error("--c1c expects exactly " + std::to_string(M.generator_count()) +
                        " integers");
    job.c1c = opt.c1c_flat;
  }
  job.q_order = opt.q_order >= 0 ? opt.q_order : default_q_order();
  job.require_string = opt.require_string;
  job.max_degree = opt.max_degree;
  job.max_bundles = opt.max_bundles;

  const JobOutcome outcome = run_job(M, job);
  if (opt.format == "json")
    std::cout << canonical_dump(outcome.output);
  else
    print_text(std::cout, command, outcome.output);
  return outcome.exit_code;
}

int run_corpus(const std::string& dir, int jobs, const std::string& format) {
  const CorpusSummary summary = corpus_verify(dir, jobs);
  if (format == "json") {
    Json j;
    Json entries = Json::array();
    for (const auto& e : summary.entries)
      entries.push_back({{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
    j["entries"] = std::move(entries);
    j["all_pass"] = summary.all_pass;
    std::cout << canonical_dump(j);
  } else {
    for (const auto& e : summary.entries)
      std::cout << (e.pass ? "PASS" : "FAIL") << "  " << e.name
                << (e.detail.empty() ? "" : "  (" + e.detail + ")") << "\n";
    std::cout << (summary.all_pass ? "corpus: all entries pass" : "corpus: FAILURES") << "\n";
  }
  return summary.all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact twisted Spin^c indices and Witten genera of generalized "
               "complete intersections"};
  app.require_subcommand(1);

  CliOptions opt;
  std::string corpus_dir = "corpus";
  int corpus_jobs = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_manifold = true) {
    if (needs_manifold)
      cmd->add_option("--manifold", opt.manifold_file, "manifold description file")->required();
    cmd->add_option("--q-order", opt.q_order, "q truncation order (default 5, env WITTEN_Q_ORDER)");
    cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* genus = app.add_subcommand(
      "genus", "Witten genus of the intersection cut by V; runs both evaluation routes");
  add_common(genus);
  genus->add_option("--bundle", opt.bundle_flat, "roots of V, flattened");
  genus->add_option("--c1c", opt.c1c_flat, "must equal c1(V); use phi-c to override");

  CLI::App* phic = app.add_subcommand("phi-c", "twisted index phi^c(M;V,W)");
  add_common(phic);
  phic->add_option("--bundle", opt.bundle_flat, "roots of V, flattened");
  phic->add_option("--w-bundle", opt.w_bundle_flat, "roots of W, flattened");
  phic->add_option("--c1c", opt.c1c_flat, "Spin^c class (default c1(V))");

  CLI::App* ell = app.add_subcommand("elliptic", "elliptic genus phi^c(M;0,TM)");
  add_common(ell);

  CLI::App* check = app.add_subcommand("check", "string condition report for (M, V)");
  add_common(check);
  check->add_option("--bundle", opt.bundle_flat, "roots of V, flattened");
  check->add_flag("--require-string", opt.require_string,
                  "exit 1 when the string conditions fail");

  CLI::App* fano = app.add_subcommand("fano", "Fano positivity arithmetic in CP^n");
  add_common(fano);
  fano->add_option("--bundle", opt.bundle_flat, "defining degrees");

  CLI::App* search = app.add_subcommand("search", "enumerate string configurations");
  add_common(search);
  search->add_option("--max-degree", opt.max_degree, "largest root entry (default 2)");
  search->add_option("--max-bundles", opt.max_bundles, "largest summand count (default 2)");

  CLI::App* corpus = app.add_subcommand("corpus", "verify the golden corpus");
  corpus->add_option("--dir", corpus_dir, "corpus directory (default ./corpus)");
  corpus->add_option("--jobs", corpus_jobs, "worker threads");
  corpus->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (corpus->parsed()) return run_corpus(corpus_dir, corpus_jobs, opt.format);
    for (CLI::App* cmd : {genus, phic, ell, check, fano, search})
      if (cmd->parsed()) return run_command(cmd->get_name(), opt);
    return 2;
  } catch (const internal_error& e) {
    Json err{{"error", e.what()}, {"kind", "internal"}};
    std::cerr << (opt.format == "json" ? canonical_dump(err) : std::string(e.what()) + "\n");
    return 3;
  } catch (const std::exception& e) {
    Json err{{"error", e.what()}, {"kind", "input"}};
    std::cerr << (opt.format == "json" ? canonical_dump(err) : std::string(e.what()) + "\n");
    return 2;
  }
}
