#include "witgen/runner.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace witgen {

namespace fs = std::filesystem;

JobSpec job_from_json(const Json& j) {
  JobSpec job;
  job.command = j.at("command").get<std::string>();
  if (j.contains("bundle")) job.bundle = j["bundle"].get<std::vector<std::vector<long>>>();
  if (j.contains("w_bundle")) job.w_bundle = j["w_bundle"].get<std::vector<std::vector<long>>>();
  if (j.contains("c1c")) job.c1c = j["c1c"].get<std::vector<long>>();
  if (j.contains("q_order")) job.q_order = j["q_order"].get<int>();
  if (j.contains("require_string")) job.require_string = j["require_string"].get<bool>();
  if (j.contains("max_degree")) job.max_degree = j["max_degree"].get<int>();
  if (j.contains("max_bundles")) job.max_bundles = j["max_bundles"].get<int>();
  return job;
}

Json job_to_json(const JobSpec& job) {
  Json j;
  j["command"] = job.command;
  if (!job.bundle.empty()) j["bundle"] = job.bundle;
  if (!job.w_bundle.empty()) j["w_bundle"] = job.w_bundle;
  if (job.c1c) j["c1c"] = *job.c1c;
  j["q_order"] = job.q_order;
  if (job.require_string) j["require_string"] = true;
  if (job.command == "search") {
    j["max_degree"] = job.max_degree;
    j["max_bundles"] = job.max_bundles;
  }
  return j;
}

namespace {

IntClass c1c_or_default(const ManifoldModel& M, const JobSpec& job, const LineBundleSum& V) {
  if (job.c1c) return c1(std::vector<std::vector<long>>{*job.c1c}, M);
  // The generalized-complete-intersection convention: c1c = c1(V).
  return c1(V.roots, M);
}

JobOutcome run_genus(const ManifoldModel& M, const JobSpec& job) {
  const LineBundleSum V{job.bundle};
  const GenusResult lemma = witten_of_gci(M, V, job.q_order);
  if (job.c1c && c1(std::vector<std::vector<long>>{*job.c1c}, M) != lemma.c1c_used)
    throw parse_error("genus fixes c1c = c1(V); use phi-c for a custom Spin^c structure");
  const GenusResult direct = phi_c(M, V, RootBundle{}, lemma.c1c_used, job.q_order);
  if (direct.series != lemma.series)
    throw internal_error("dual-path mismatch on '" + M.name() +
                         "': the direct and Euler-class evaluations disagree");
  Json out = genus_to_json(lemma);
  out["paths_agree"] = true;
  return {out, 0};
}

JobOutcome run_phi_c(const ManifoldModel& M, const JobSpec& job) {
  const LineBundleSum V{job.bundle};
  const RootBundle W{job.w_bundle, 0};
  const GenusResult r = phi_c(M, V, W, c1c_or_default(M, job, V), job.q_order);
  Json out = genus_to_json(r);
  if (!job.w_bundle.empty()) out["w_bundle"] = job.w_bundle;
  out["c1c"] = class_to_json(r.c1c_used);
  return {out, 0};
}

JobOutcome run_elliptic(const ManifoldModel& M, const JobSpec& job) {
  return {genus_to_json(elliptic(M, job.q_order)), 0};
}

JobOutcome run_check(const ManifoldModel& M, const JobSpec& job) {
  const ConditionReport r = check_string_gci(M, LineBundleSum{job.bundle});
  Json out = report_to_json(r, M);
  const int code = (job.require_string && !r.is_string()) ? 1 : 0;
  return {out, code};
}

JobOutcome run_fano(const ManifoldModel& M, const JobSpec& job) {
  if (M.generator_count() != 1)
    throw parse_error("fano expects an ambient CP^n model (one generator), got '" +
                      M.name() + "'");
  std::vector<long> degrees;
  for (const auto& root : job.bundle) {
    if (root.size() != 1)
      throw parse_error("fano bundle roots must be single degrees");
    degrees.push_back(root[0]);
  }
  const FanoCheck f = fano_c1_check(M.complex_dimension(), degrees);
  Json out = fano_to_json(f);
  out["manifold"] = M.name();
  out["degrees"] = degrees;
  return {out, 0};
}

JobOutcome run_search(const ManifoldModel& M, const JobSpec& job) {
  const auto found = search_string(M, job.max_degree, job.max_bundles);
  Json arr = Json::array();
  for (const LineBundleSum& V : found) arr.push_back(V.roots);
  Json out;
  out["manifold"] = M.name();
  out["max_degree"] = job.max_degree;
  out["max_bundles"] = job.max_bundles;
  out["found"] = std::move(arr);
  out["count"] = found.size();
  return {out, 0};
}

} // namespace

JobOutcome run_job(const ManifoldModel& M, const JobSpec& job) {
  for (const auto& root : job.bundle)
    if (static_cast<int>(root.size()) != M.generator_count())
      throw parse_error("bundle root length " + std::to_string(root.size()) +
                        " does not match the " + std::to_string(M.generator_count()) +
                        " generators of '" + M.name() + "'");
  if (job.q_order < 0) throw parse_error("q_order must be nonnegative");

  if (job.command == "genus") return run_genus(M, job);
  if (job.command == "phi-c") return run_phi_c(M, job);
  if (job.command == "elliptic") return run_elliptic(M, job);
  if (job.command == "check") return run_check(M, job);
  if (job.command == "fano") return run_fano(M, job);
  if (job.command == "search") return run_search(M, job);
  throw parse_error("unknown command '" + job.command + "'");
}

std::string corpus_entry_actual(const std::string& entry_dir) {
  const ManifoldModel M = load_model(entry_dir + "/manifold.json");
  std::ifstream in(entry_dir + "/jobs.json");
  if (!in) throw parse_error("cannot open '" + entry_dir + "/jobs.json'");
  Json jobs_json;
  try {
    in >> jobs_json;
  } catch (const Json::exception& e) {
    throw parse_error("invalid JSON in '" + entry_dir + "/jobs.json': " + e.what());
  }
  Json results = Json::array();
  for (const Json& jj : jobs_json.at("jobs")) {
    const JobSpec job = job_from_json(jj);
    const JobOutcome outcome = run_job(M, job);
    Json row;
    row["job"] = job_to_json(job);
    row["result"] = outcome.output;
    row["exit_code"] = outcome.exit_code;
    results.push_back(std::move(row));
  }
  Json payload;
  payload["results"] = std::move(results);
  return canonical_dump(payload);
}

CorpusSummary corpus_verify(const std::string& dir, int jobs) {
  if (!fs::is_directory(dir))
    throw parse_error("corpus directory '" + dir + "' does not exist");
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_directory()) names.push_back(entry.path().filename().string());
  std::sort(names.begin(), names.end());
  if (names.empty())
    throw parse_error("corpus directory '" + dir + "' has no entries");

  CorpusSummary summary;
  summary.entries.resize(names.size());

  std::atomic<size_t> next{0};
  auto worker = [&] {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= names.size()) return;
      CorpusEntryResult& out = summary.entries[i];
      out.name = names[i];
      const std::string entry_dir = dir + "/" + names[i];
      try {
        std::ifstream exp(entry_dir + "/expected.json", std::ios::binary);
        if (!exp) {
          out.detail = "missing expected.json";
          continue;
        }
        std::ostringstream expected;
        expected << exp.rdbuf();
        const std::string actual = corpus_entry_actual(entry_dir);
        if (actual == expected.str()) {
          out.pass = true;
        } else {
          out.detail = "output differs from expected.json";
        }
      } catch (const std::exception& e) {
        out.detail = e.what();
      }
    }
  };

  const int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  summary.all_pass = std::all_of(summary.entries.begin(), summary.entries.end(),
                                 [](const CorpusEntryResult& e) { return e.pass; });
  return summary;
}

} // namespace witgen
