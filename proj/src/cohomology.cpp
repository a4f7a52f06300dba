#include "witgen/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace witgen {

int total_degree(const Exponents& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

CohomClass to_rational(const IntClass& x) {
  CohomClass r(x.gens());
  for (const auto& [e, c] : x.terms()) r.add_term(e, Rational(c));
  return r;
}

Mod2Class mod2(const IntClass& x) {
  Mod2Class r;
  r.gens = x.gens();
  for (const auto& [e, c] : x.terms())
    if (mpz_odd_p(c.get_mpz_t())) r.monomials.insert(e);
  return r;
}

ManifoldModel::ManifoldModel(std::string name, std::vector<std::string> generators,
                             std::vector<Relation> relations,
                             std::vector<std::vector<long>> tangent_roots,
                             int rank_offset, ModelMetadata metadata)
    : name_(std::move(name)),
      generators_(std::move(generators)),
      relations_(std::move(relations)),
      tangent_roots_(std::move(tangent_roots)),
      rank_offset_(rank_offset),
      metadata_(metadata),
      complex_dimension_(0) {
  // Sort relations into generator order before validating.
  std::sort(relations_.begin(), relations_.end(),
            [](const Relation& a, const Relation& b) { return a.generator < b.generator; });
  for (const Relation& r : relations_) complex_dimension_ += r.power - 1;
  fundamental_monomial_.assign(generators_.size(), 0);
  for (size_t j = 0; j < relations_.size(); ++j)
    fundamental_monomial_[j] = relations_[j].power - 1;
  validate();
}

void ManifoldModel::validate() const {
  const int m = generator_count();
  if (static_cast<int>(relations_.size()) != m)
    throw model_error("model '" + name_ + "': need exactly one relation per generator");
  for (int j = 0; j < m; ++j) {
    const Relation& r = relations_[static_cast<size_t>(j)];
    if (r.generator != j)
      throw model_error("model '" + name_ + "': duplicate or missing relation for generator " +
                        std::to_string(j));
    if (r.power < 2)
      throw model_error("model '" + name_ + "': relation lead power must be at least 2");
    if (r.rhs.gens() != m)
      throw model_error("model '" + name_ + "': relation rhs over wrong generator count");
    for (const auto& [e, c] : r.rhs.terms()) {
      // Triangular normal form: rhs monomials use generators of index <= j,
      // with the g_j power strictly below the lead power, and stay
      // homogeneous of the lead degree (the ring is graded).
      if (total_degree(e) != r.power)
        throw model_error("model '" + name_ + "': relation for generator '" +
                          generators_[static_cast<size_t>(j)] + "' is not homogeneous");
      if (e[static_cast<size_t>(j)] >= r.power)
        throw model_error("model '" + name_ + "': relation rhs not below its lead power");
      for (int i = j + 1; i < m; ++i)
        if (e[static_cast<size_t>(i)] != 0)
          throw model_error("model '" + name_ + "': relation for generator '" +
                            generators_[static_cast<size_t>(j)] +
                            "' involves a later generator (not triangular)");
    }
  }
  for (const auto& root : tangent_roots_)
    if (static_cast<int>(root.size()) != m)
      throw model_error("model '" + name_ + "': tangent root of wrong length");
  if (static_cast<int>(tangent_roots_.size()) - rank_offset_ != complex_dimension_)
    throw model_error("model '" + name_ + "': |tangent_roots| - rank_offset != complex dimension");
  if (metadata_.b2 != m)
    throw model_error("model '" + name_ + "': metadata b2 must equal the generator count");
}

int ManifoldModel::generator_index(const std::string& gname) const {
  for (size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == gname) return static_cast<int>(i);
  throw model_error("model '" + name_ + "': unknown generator '" + gname + "'");
}

namespace {

// Substitutes the lead of relations[j] into monomial e once, feeding the
// rewritten terms to `emit`. Precondition: e[j] >= relation power.
template <class Emit>
void apply_relation(const Exponents& e, const Relation& rel, Emit&& emit) {
  Exponents base = e;
  base[static_cast<size_t>(rel.generator)] -= rel.power;
  for (const auto& [re, rc] : rel.rhs.terms()) {
    Exponents out = base;
    for (size_t i = 0; i < out.size(); ++i) out[i] += re[i];
    emit(std::move(out), rc);
  }
}

template <class Fmt, class C>
std::string format_terms(const ManifoldModel& M, const std::map<Exponents, C>& terms, Fmt&& fmt) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) os << " + ";
    first = false;
    std::string coeff = fmt(c);
    bool unit = coeff == "1" && total_degree(e) > 0;
    if (!unit) os << coeff;
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any || !unit) os << "*";
      any = true;
      os << M.generators()[i];
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

} // namespace

CohomClass reduce(const CohomClass& x, const ManifoldModel& M) {
  if (x.gens() != M.generator_count())
    throw model_error("class does not belong to model '" + M.name() + "'");
  const int n = M.complex_dimension();
  CohomClass out(x.gens());
  std::vector<std::pair<Exponents, Rational>> work(x.terms().begin(), x.terms().end());
  while (!work.empty()) {
    auto [e, c] = std::move(work.back());
    work.pop_back();
    if (c == 0) continue;
    if (total_degree(e) > n) continue; // graded ring: H^{>2n} = 0
    int j = -1;
    for (int i = M.generator_count() - 1; i >= 0; --i) {
      if (e[static_cast<size_t>(i)] >= M.relation_for(i).power) {
        j = i;
        break;
      }
    }
    if (j < 0) {
      out.add_term(e, c);
      continue;
    }
    apply_relation(e, M.relation_for(j), [&](Exponents&& ne, const Rational& rc) {
      work.emplace_back(std::move(ne), c * rc);
    });
  }
  return out;
}

CohomClass multiply(const CohomClass& a, const CohomClass& b, const ManifoldModel& M) {
  if (a.gens() != M.generator_count() || b.gens() != M.generator_count())
    throw model_error("class does not belong to model '" + M.name() + "'");
  const int n = M.complex_dimension();
  CohomClass raw(a.gens());
  for (const auto& [ea, ca] : a.terms()) {
    const int da = total_degree(ea);
    if (da > n) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) > n) continue;
      Exponents e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      raw.add_term(e, ca * cb);
    }
  }
  return reduce(raw, M);
}

Rational integrate(const CohomClass& x, const ManifoldModel& M) {
  return reduce(x, M).coefficient(M.fundamental_monomial());
}

std::string ManifoldModel::format_class(const CohomClass& x) const {
  return format_terms(*this, x.terms(), [](const Rational& c) { return rational_to_string(c); });
}

std::string ManifoldModel::format_class(const IntClass& x) const {
  return format_terms(*this, x.terms(), [](const Integer& c) { return c.get_str(); });
}

std::string ManifoldModel::format_class(const Mod2Class& x) const {
  std::map<Exponents, int> ones;
  for (const auto& e : x.monomials) ones.emplace(e, 1);
  return format_terms(*this, ones, [](int) { return std::string("1"); });
}

} // namespace witgen
