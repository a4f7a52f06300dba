#ifndef WITGEN_COHOMOLOGY_HPP
#define WITGEN_COHOMOLOGY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "witgen/errors.hpp"
#include "witgen/rational.hpp"

namespace witgen {

// Exponent vector of a monomial in the degree-2 generators g_1..g_m.
// All vectors inside one class (and one model) have the same length m.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Sparse polynomial over an exact coefficient ring, graded by total
// generator degree (each generator has cohomological degree 2).
// Zero coefficients are never stored.
template <class C>
class Poly {
public:
  using Terms = std::map<Exponents, C>;

  explicit Poly(int gens) : gens_(gens) {}

  static Poly constant(int gens, const C& v) {
    Poly p(gens);
    p.add_term(Exponents(static_cast<size_t>(gens), 0), v);
    return p;
  }

  static Poly monomial(int gens, Exponents e, const C& v) {
    Poly p(gens);
    p.add_term(std::move(e), v);
    return p;
  }

  // Degree-2 class sum_i coeffs[i] * g_i.
  static Poly linear(const std::vector<long>& coeffs) {
    Poly p(static_cast<int>(coeffs.size()));
    for (size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(std::move(e), C(coeffs[i]));
    }
    return p;
  }

  int gens() const { return gens_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  C coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  C constant_term() const {
    return coefficient(Exponents(static_cast<size_t>(gens_), 0));
  }

  bool has_constant_term() const { return constant_term() != 0; }

  void add_term(const Exponents& e, const C& v) {
    if (v == 0) return;
    if (static_cast<int>(e.size()) != gens_)
      throw model_error("exponent vector length mismatch");
    auto [it, fresh] = terms_.emplace(e, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, C(-c));
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  Poly operator-() const {
    Poly r(gens_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, C(-c));
    return r;
  }

  Poly scaled(const C& s) const {
    Poly r(gens_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, C(c * s));
    return r;
  }

  bool operator==(const Poly& o) const {
    return gens_ == o.gens_ && terms_ == o.terms_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

private:
  void check_same(const Poly& o) const {
    if (gens_ != o.gens_)
      throw model_error("mixing classes over different models");
  }

  int gens_;
  Terms terms_;
};

using CohomClass = Poly<Rational>;
using IntClass = Poly<Integer>;

CohomClass to_rational(const IntClass& x);

// Z_2 coefficients: the set of monomials with odd coefficient.
struct Mod2Class {
  int gens = 0;
  std::set<Exponents> monomials;

  bool is_zero() const { return monomials.empty(); }
  bool operator==(const Mod2Class& o) const = default;
};

Mod2Class mod2(const IntClass& x);

struct ModelMetadata {
  int b1 = 0;
  int b2 = 0;
  int torus_dim = 0;
  // Trusted group-action facts; the engine never verifies these.
  // homogeneous: M = G/H with G compact simply connected and H not a
  // maximal torus.
  bool homogeneous = false;
  // simply_connected + has_fixed_point: a simply connected compact group
  // acts almost effectively with nonempty fixed point set.
  bool simply_connected = false;
  bool has_fixed_point = false;
};

// Rewrite rule g_j^power -> rhs, with rhs lexicographically below the lead.
struct Relation {
  int generator = 0;
  int power = 0;
  CohomClass rhs;

  Relation(int generator_, int power_, CohomClass rhs_)
      : generator(generator_), power(power_), rhs(std::move(rhs_)) {}
};

// Torsion-free cohomology ring presentation for products of projective
// spaces and generalized Bott manifolds, plus the tangent-root data and
// the metadata flags the condition checks consume.
//
// Immutable after construction; safe to share across threads.
class ManifoldModel {
public:
  ManifoldModel(std::string name, std::vector<std::string> generators,
                std::vector<Relation> relations,
                std::vector<std::vector<long>> tangent_roots, int rank_offset,
                ModelMetadata metadata);

  const std::string& name() const { return name_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  int complex_dimension() const { return complex_dimension_; }
  const Exponents& fundamental_monomial() const { return fundamental_monomial_; }
  const std::vector<std::vector<long>>& tangent_roots() const { return tangent_roots_; }
  int rank_offset() const { return rank_offset_; }
  const ModelMetadata& metadata() const { return metadata_; }

  // Relation with lead generator j (one per generator, in order).
  const Relation& relation_for(int j) const { return relations_[static_cast<size_t>(j)]; }

  int generator_index(const std::string& name) const;

  std::string format_class(const CohomClass& x) const;
  std::string format_class(const IntClass& x) const;
  std::string format_class(const Mod2Class& x) const;

private:
  void validate() const;

  std::string name_;
  std::vector<std::string> generators_;
  std::vector<Relation> relations_;
  std::vector<std::vector<long>> tangent_roots_;
  int rank_offset_;
  ModelMetadata metadata_;
  int complex_dimension_;
  Exponents fundamental_monomial_;
};

// Normal form in the quotient ring. Total function: every monomial
// rewrites to a combination of monomials below the relation leads, and
// anything of total degree > complex_dimension collapses to zero.
CohomClass reduce(const CohomClass& x, const ManifoldModel& M);

// Reduced product. Commutative: all generators have even degree.
CohomClass multiply(const CohomClass& a, const CohomClass& b, const ManifoldModel& M);

// Pairing with the fundamental class: the coefficient of the fundamental
// monomial in the normal form of x.
Rational integrate(const CohomClass& x, const ManifoldModel& M);

} // namespace witgen

#endif
