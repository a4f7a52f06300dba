#ifndef WITGEN_JSON_IO_HPP
#define WITGEN_JSON_IO_HPP

#include <json.hpp>
#include <string>

#include "witgen/conditions.hpp"
#include "witgen/genus.hpp"

namespace witgen {

using Json = nlohmann::json;

// Polynomials serialize as arrays of {coeff: "p/q", exponents: [int]},
// sorted by exponent vector.
Json class_to_json(const CohomClass& x);
Json class_to_json(const IntClass& x);
Json class_to_json(const Mod2Class& x);
CohomClass class_from_json(const Json& j, int gens);

// Manifold description files.
ManifoldModel model_from_json(const Json& j);
ManifoldModel load_model(const std::string& path);
Json model_to_json(const ManifoldModel& M);

Json genus_to_json(const GenusResult& r);
Json report_to_json(const ConditionReport& r, const ManifoldModel& M);
Json fano_to_json(const FanoCheck& f);
Json series_to_json(const RatSeries& s);

// Canonical text form used everywhere a byte-stable dump is required:
// sorted keys, exact rational strings, two-space indent, trailing newline.
std::string canonical_dump(const Json& j);

} // namespace witgen

#endif
