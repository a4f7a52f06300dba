#include "witgen/models.hpp"

#include <numeric>

namespace witgen {

namespace {

std::string stage_generator_name(size_t j, size_t count) {
  if (count == 1) return "u";
  return "u" + std::to_string(j + 1);
}

} // namespace

ManifoldModel point_model() {
  ModelMetadata md;
  md.torus_dim = 0;
  md.simply_connected = true;
  md.has_fixed_point = true;
  return ManifoldModel("point", {}, {}, {}, 0, md);
}

ManifoldModel projective_space(int n) {
  if (n < 1) throw model_error("projective_space: need n >= 1");
  // u^{n+1} = 0; TM + C = (n+1) O(1).
  std::vector<Relation> rels;
  rels.emplace_back(0, n + 1, CohomClass(1));
  std::vector<std::vector<long>> roots(static_cast<size_t>(n) + 1, {1});
  ModelMetadata md;
  md.b2 = 1;
  md.torus_dim = n;
  md.homogeneous = true; // SU(n+1)/U(n), U(n) is not a maximal torus
  md.simply_connected = true;
  md.has_fixed_point = true;
  return ManifoldModel("cp" + std::to_string(n), {"u"}, std::move(rels), std::move(roots), 1, md);
}

ManifoldModel product_of_projective_spaces(const std::vector<int>& dims) {
  if (dims.empty()) throw model_error("product_of_projective_spaces: need at least one factor");
  const int m = static_cast<int>(dims.size());
  std::vector<std::string> gens;
  std::vector<Relation> rels;
  std::vector<std::vector<long>> roots;
  std::string name;
  for (int j = 0; j < m; ++j) {
    if (dims[static_cast<size_t>(j)] < 1)
      throw model_error("product_of_projective_spaces: factors need dimension >= 1");
    gens.push_back(stage_generator_name(static_cast<size_t>(j), dims.size()));
    rels.emplace_back(j, dims[static_cast<size_t>(j)] + 1, CohomClass(m));
    std::vector<long> root(static_cast<size_t>(m), 0);
    root[static_cast<size_t>(j)] = 1;
    for (int i = 0; i <= dims[static_cast<size_t>(j)]; ++i) roots.push_back(root);
    if (!name.empty()) name += "x";
    name += "cp" + std::to_string(dims[static_cast<size_t>(j)]);
  }
  ModelMetadata md;
  md.b2 = m;
  md.torus_dim = std::accumulate(dims.begin(), dims.end(), 0);
  // G/H with H a maximal torus exactly when every factor is CP^1; Theorem
  // 1.1 requires non-toral isotropy.
  md.homogeneous = std::any_of(dims.begin(), dims.end(), [](int n) { return n > 1; });
  md.simply_connected = true;
  md.has_fixed_point = md.homogeneous;
  return ManifoldModel(name, std::move(gens), std::move(rels), std::move(roots), m, md);
}

ManifoldModel bott_tower(const std::vector<BottStage>& stages, const std::string& name) {
  const int m = static_cast<int>(stages.size());
  std::vector<std::string> gens;
  std::vector<Relation> rels;
  std::vector<std::vector<long>> roots;
  for (int j = 0; j < m; ++j) {
    const BottStage& st = stages[static_cast<size_t>(j)];
    if (st.fiber_dim < 1) throw model_error("bott_tower: fiber dimension must be >= 1");
    if (static_cast<int>(st.twists.size()) != st.fiber_dim)
      throw model_error("bott_tower: stage needs one twist vector per fiber dimension");
    gens.push_back(stage_generator_name(static_cast<size_t>(j), stages.size()));

    // Relation: v_j * prod_i (v_j + l_i) = 0 with l_i the twist classes.
    Exponents vj(static_cast<size_t>(m), 0);
    vj[static_cast<size_t>(j)] = 1;
    CohomClass product = CohomClass::monomial(m, vj, Rational(1));
    std::vector<long> plain(static_cast<size_t>(m), 0);
    plain[static_cast<size_t>(j)] = 1;
    roots.push_back(plain); // the untwisted O summand
    for (const auto& twist : st.twists) {
      if (static_cast<int>(twist.size()) != j)
        throw model_error("bott_tower: twist vector must cover exactly the previous stages");
      std::vector<long> full(static_cast<size_t>(m), 0);
      for (int i = 0; i < j; ++i) full[static_cast<size_t>(i)] = twist[static_cast<size_t>(i)];
      CohomClass factor = to_rational(IntClass::linear(full));
      Exponents e(static_cast<size_t>(m), 0);
      e[static_cast<size_t>(j)] = 1;
      factor.add_term(e, Rational(1)); // v_j + l_i
      // Multiply without reduction: the model does not exist yet, and the
      // raw product is what defines the relation.
      CohomClass next(m);
      for (const auto& [ea, ca] : product.terms())
        for (const auto& [eb, cb] : factor.terms()) {
          Exponents sum = ea;
          for (size_t i = 0; i < sum.size(); ++i) sum[i] += eb[i];
          next.add_term(sum, ca * cb);
        }
      product = std::move(next);
      full[static_cast<size_t>(j)] = 1;
      roots.push_back(full); // O(1) tensor the twist line
    }
    // product = v_j^{d+1} + lower powers of v_j; move the tail across.
    Exponents lead(static_cast<size_t>(m), 0);
    lead[static_cast<size_t>(j)] = st.fiber_dim + 1;
    CohomClass rhs(m);
    for (const auto& [e, c] : product.terms())
      if (e != lead) rhs.add_term(e, -c);
    rels.emplace_back(j, st.fiber_dim + 1, std::move(rhs));
  }
  ModelMetadata md;
  md.b2 = m;
  md.torus_dim = 0;
  for (const auto& st : stages) md.torus_dim += st.fiber_dim;
  md.homogeneous = false;
  md.simply_connected = false;
  md.has_fixed_point = false;
  return ManifoldModel(name, std::move(gens), std::move(rels), std::move(roots), m, md);
}

} // namespace witgen
