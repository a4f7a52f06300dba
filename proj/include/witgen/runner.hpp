#ifndef WITGEN_RUNNER_HPP
#define WITGEN_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "witgen/json_io.hpp"

namespace witgen {

// One unit of work: a command plus its bundle/structure data. This is the
// shape shared by the command line and the corpus job files.
struct JobSpec {
  std::string command; // genus | phi-c | elliptic | check | fano | search
  std::vector<std::vector<long>> bundle;
  std::vector<std::vector<long>> w_bundle;
  std::optional<std::vector<long>> c1c;
  int q_order = 5;
  bool require_string = false;
  int max_degree = 2;
  int max_bundles = 2;
};

JobSpec job_from_json(const Json& j);
Json job_to_json(const JobSpec& job);

struct JobOutcome {
  Json output;
  int exit_code = 0; // 0 ok, 1 a required condition failed
};

// Dispatches one job against a loaded model. The genus command always
// evaluates both genus routes and throws internal_error on disagreement.
JobOutcome run_job(const ManifoldModel& M, const JobSpec& job);

// Golden-corpus verification: recomputes every entry under
// dir/<name>/{manifold.json, jobs.json} and byte-compares the canonical
// dump against expected.json.
struct CorpusEntryResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CorpusSummary {
  std::vector<CorpusEntryResult> entries;
  bool all_pass = false;
};

CorpusSummary corpus_verify(const std::string& dir, int jobs = 1);

// The canonical recomputed payload for one corpus entry.
std::string corpus_entry_actual(const std::string& entry_dir);

} // namespace witgen

#endif
