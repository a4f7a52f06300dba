#include <doctest.h>

#include "helpers.hpp"
#include "witgen/json_io.hpp"
#include "witgen/runner.hpp"

using namespace witgen;
using namespace witgen::testing;

namespace {

const char* kHirzebruchJson = R"({
  "name": "hirzebruch1",
  "generators": ["u", "v"],
  "relations": [
    {"lead": ["u", 2], "rhs": []},
    {"lead": ["v", 2], "rhs": [{"coeff": "-1", "exponents": [1, 1]}]}
  ],
  "tangent_roots": [[1, 0], [1, 0], [0, 1], [1, 1]],
  "rank_offset": 2,
  "metadata": {"b1": 0, "b2": 2, "torus_dim": 2, "homogeneous": false,
               "simply_connected": false, "has_fixed_point": false}
})";

} // namespace

TEST_CASE("manifold files load into working models") {
  const ManifoldModel M = model_from_json(Json::parse(kHirzebruchJson));
  CHECK(M.complex_dimension() == 2);
  CHECK(M.generator_count() == 2);
  // Behaves like the factory-built tower: v^2 = -uv.
  CohomClass expected(2);
  expected.add_term({1, 1}, Rational(-1));
  CHECK(reduce(gen_power(M, 1, 2), M) == expected);
  CHECK(integrate(gen_power(M, 1, 2), M) == -1);
}

TEST_CASE("model json round trip") {
  for (const auto& M : {projective_space(3), product_of_projective_spaces({3, 3}),
                        bott_cp1_cp2()}) {
    const ManifoldModel back = model_from_json(model_to_json(M));
    CHECK(back.name() == M.name());
    CHECK(back.generator_count() == M.generator_count());
    CHECK(back.complex_dimension() == M.complex_dimension());
    CHECK(back.tangent_roots() == M.tangent_roots());
    for (int j = 0; j < M.generator_count(); ++j) {
      CHECK(back.relation_for(j).power == M.relation_for(j).power);
      CHECK(back.relation_for(j).rhs == M.relation_for(j).rhs);
    }
  }
}

TEST_CASE("schema violations raise parse errors") {
  CHECK_THROWS_AS(model_from_json(Json::parse(R"({"name": "x"})")), parse_error);
  Json bad = Json::parse(kHirzebruchJson);
  bad["relations"][1]["rhs"][0]["coeff"] = "1/0";
  CHECK_THROWS_AS(model_from_json(bad), parse_error);
  bad = Json::parse(kHirzebruchJson);
  bad["relations"][1]["rhs"][0]["exponents"] = {1, 1, 1};
  CHECK_THROWS_AS(model_from_json(bad), parse_error);
  CHECK_THROWS_AS(load_model("/nonexistent/file.json"), parse_error);
}

TEST_CASE("rational string forms") {
  CHECK(rational_to_string(rat(-3, 6)) == "-1/2");
  CHECK(rational_to_string(Rational(7)) == "7");
  CHECK(rational_from_string("-22/11") == -2);
  CHECK_THROWS_AS(rational_from_string("1/0"), parse_error);
  CHECK_THROWS_AS(rational_from_string("pi"), parse_error);
}

TEST_CASE("genus results serialize with verdicts and exact strings") {
  const ManifoldModel cp3 = projective_space(3);
  const GenusResult r = witten_of_gci(cp3, LineBundleSum{{{4}}}, 2);
  const Json j = genus_to_json(r);
  CHECK(j.at("manifold") == "cp3");
  CHECK(j.at("path") == "lemma");
  CHECK(j.at("verdict") == "nonzero");
  CHECK(j.at("coefficients")[0] == "2");
  CHECK(j.at("q_order") == 2);

  const GenusResult z = witten_of_gci(projective_space(12), LineBundleSum{{{3}, {2}}}, 1);
  CHECK(genus_to_json(z).at("verdict") == "vanishes");
}

TEST_CASE("run_job dispatch and canonical output") {
  const ManifoldModel cp3 = projective_space(3);
  JobSpec job;
  job.command = "genus";
  job.bundle = {{4}};
  job.q_order = 3;
  const JobOutcome out = run_job(cp3, job);
  CHECK(out.exit_code == 0);
  CHECK(out.output.at("paths_agree") == true);
  // Byte-identical across repeated runs.
  CHECK(canonical_dump(out.output) == canonical_dump(run_job(cp3, job).output));

  JobSpec check;
  check.command = "check";
  check.bundle = {{4}};
  check.require_string = true;
  CHECK(run_job(cp3, check).exit_code == 1);
  check.bundle = {{2}};
  CHECK(run_job(cp3, check).exit_code == 0);

  JobSpec bad;
  bad.command = "nope";
  CHECK_THROWS_AS(run_job(cp3, bad), parse_error);

  JobSpec mismatch;
  mismatch.command = "genus";
  mismatch.bundle = {{1, 2}};
  CHECK_THROWS_AS(run_job(cp3, mismatch), parse_error);
}
