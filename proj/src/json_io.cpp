#include "witgen/json_io.hpp"

#include <fstream>

namespace witgen {

namespace {

template <class C, class Fmt>
Json terms_to_json(const std::map<Exponents, C>& terms, Fmt&& fmt) {
  Json arr = Json::array();
  for (const auto& [e, c] : terms) {
    Json t;
    t["coeff"] = fmt(c);
    t["exponents"] = e;
    arr.push_back(std::move(t));
  }
  return arr;
}

const Json& expect(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw parse_error(std::string("missing field '") + key + "'");
  return *it;
}

} // namespace

Json class_to_json(const CohomClass& x) {
  return terms_to_json(x.terms(), [](const Rational& c) { return rational_to_string(c); });
}

Json class_to_json(const IntClass& x) {
  return terms_to_json(x.terms(), [](const Integer& c) { return c.get_str(); });
}

Json class_to_json(const Mod2Class& x) {
  std::map<Exponents, int> ones;
  for (const auto& e : x.monomials) ones.emplace(e, 1);
  return terms_to_json(ones, [](int) { return "1"; });
}

CohomClass class_from_json(const Json& j, int gens) {
  if (!j.is_array())
    throw parse_error("polynomial must be an array of {coeff, exponents}");
  CohomClass x(gens);
  for (const Json& t : j) {
    const Rational c = rational_from_string(expect(t, "coeff").get<std::string>());
    const auto e = expect(t, "exponents").get<Exponents>();
    if (static_cast<int>(e.size()) != gens)
      throw parse_error("exponent vector of length " + std::to_string(e.size()) +
                        ", expected " + std::to_string(gens));
    for (int k : e)
      if (k < 0) throw parse_error("negative exponent in polynomial");
    x.add_term(e, c);
  }
  return x;
}

ManifoldModel model_from_json(const Json& j) {
  try {
    const auto name = expect(j, "name").get<std::string>();
    const auto gens = expect(j, "generators").get<std::vector<std::string>>();
    const int m = static_cast<int>(gens.size());

    std::vector<Relation> rels;
    for (const Json& rj : expect(j, "relations")) {
      const Json& lead = expect(rj, "lead");
      if (!lead.is_array() || lead.size() != 2)
        throw parse_error("relation lead must be [generator, power]");
      int gi;
      if (lead[0].is_string()) {
        const auto gname = lead[0].get<std::string>();
        gi = -1;
        for (int i = 0; i < m; ++i)
          if (gens[static_cast<size_t>(i)] == gname) gi = i;
        if (gi < 0) throw parse_error("relation lead names unknown generator '" + gname + "'");
      } else {
        gi = lead[0].get<int>();
      }
      rels.emplace_back(gi, lead[1].get<int>(), class_from_json(expect(rj, "rhs"), m));
    }

    auto roots = expect(j, "tangent_roots").get<std::vector<std::vector<long>>>();
    const int offset = expect(j, "rank_offset").get<int>();

    ModelMetadata md;
    const Json& mj = expect(j, "metadata");
    md.b1 = expect(mj, "b1").get<int>();
    md.b2 = expect(mj, "b2").get<int>();
    md.torus_dim = expect(mj, "torus_dim").get<int>();
    md.homogeneous = expect(mj, "homogeneous").get<bool>();
    md.simply_connected = expect(mj, "simply_connected").get<bool>();
    md.has_fixed_point = expect(mj, "has_fixed_point").get<bool>();

    return ManifoldModel(name, gens, std::move(rels), std::move(roots), offset, md);
  } catch (const Json::exception& e) {
    throw parse_error(std::string("malformed manifold description: ") + e.what());
  }
}

ManifoldModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open manifold file '" + path + "'");
  Json j;
  try {
    in >> j;
  } catch (const Json::exception& e) {
    throw parse_error("invalid JSON in '" + path + "': " + e.what());
  }
  return model_from_json(j);
}

Json model_to_json(const ManifoldModel& M) {
  Json j;
  j["name"] = M.name();
  j["generators"] = M.generators();
  Json rels = Json::array();
  for (const Relation& r : M.relations()) {
    Json rj;
    rj["lead"] = Json::array({M.generators()[static_cast<size_t>(r.generator)], r.power});
    rj["rhs"] = class_to_json(r.rhs);
    rels.push_back(std::move(rj));
  }
  j["relations"] = std::move(rels);
  j["tangent_roots"] = M.tangent_roots();
  j["rank_offset"] = M.rank_offset();
  j["metadata"] = {
      {"b1", M.metadata().b1},
      {"b2", M.metadata().b2},
      {"torus_dim", M.metadata().torus_dim},
      {"homogeneous", M.metadata().homogeneous},
      {"simply_connected", M.metadata().simply_connected},
      {"has_fixed_point", M.metadata().has_fixed_point},
  };
  return j;
}

Json series_to_json(const RatSeries& s) {
  Json arr = Json::array();
  for (int k = 0; k <= s.order(); ++k) arr.push_back(rational_to_string(s[k]));
  return arr;
}

Json genus_to_json(const GenusResult& r) {
  Json j;
  j["manifold"] = r.manifold_id;
  j["bundle"] = r.bundle;
  j["q_order"] = r.q_order;
  j["path"] = to_string(r.path);
  j["coefficients"] = series_to_json(r.series);
  j["verdict"] = r.vanishes() ? "vanishes" : "nonzero";
  return j;
}

Json report_to_json(const ConditionReport& r, const ManifoldModel& M) {
  Json j;
  j["w2_match"] = r.w2_match;
  j["p1_match"] = r.p1_match;
  j["x_spin"] = r.x_spin;
  j["string"] = r.is_string();
  j["theorem_applicable"] = to_string(r.theorem_applicable);
  j["witnesses"] = {
      {"w2_manifold", class_to_json(r.w2_m)},
      {"w2_bundle", class_to_json(r.w2_v)},
      {"p1_manifold", class_to_json(r.p1_m)},
      {"p1_bundle", class_to_json(r.p1_v)},
      {"pretty", {{"w2_manifold", M.format_class(r.w2_m)},
                  {"w2_bundle", M.format_class(r.w2_v)},
                  {"p1_manifold", M.format_class(r.p1_m)},
                  {"p1_bundle", M.format_class(r.p1_v)}}},
  };
  j["notes"] = r.notes;
  return j;
}

Json fano_to_json(const FanoCheck& f) {
  Json j;
  j["c1_coefficient"] = f.c1_coefficient;
  j["fano"] = f.fano;
  j["exceptional"] = f.exceptional;
  return j;
}

std::string canonical_dump(const Json& j) {
  return j.dump(2) + "\n";
}

} // namespace witgen
