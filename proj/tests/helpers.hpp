#ifndef WITGEN_TEST_HELPERS_HPP
#define WITGEN_TEST_HELPERS_HPP

#include <random>

#include "witgen/models.hpp"
#include "witgen/qseries.hpp"

namespace witgen::testing {

inline Rational rat(long num, long den = 1) { return make_rational(num, den); }

// Hirzebruch-type Bott model P(O + O(1)) over CP^1: u^2 = 0, v^2 = -uv.
inline ManifoldModel hirzebruch() {
  return bott_tower({BottStage{1, {{}}}, BottStage{1, {{1}}}}, "hirzebruch1");
}

// Two-stage generalized Bott manifold with CP^2 fiber: u^2 = 0, v^3 = -uv^2.
inline ManifoldModel bott_cp1_cp2() {
  return bott_tower({BottStage{1, {{}}}, BottStage{2, {{1}, {0}}}}, "bott12");
}

inline CohomClass gen_power(const ManifoldModel& M, int gen, int power) {
  Exponents e(static_cast<size_t>(M.generator_count()), 0);
  e[static_cast<size_t>(gen)] = power;
  return CohomClass::monomial(M.generator_count(), e, Rational(1));
}

// Random reduced class with small rational coefficients.
inline CohomClass random_class(const ManifoldModel& M, std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  CohomClass x(M.generator_count());
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    Exponents e(static_cast<size_t>(M.generator_count()), 0);
    for (int i = 0; i < M.generator_count(); ++i) {
      std::uniform_int_distribution<int> exp(0, M.relation_for(i).power - 1);
      e[static_cast<size_t>(i)] = exp(rng);
    }
    x.add_term(e, rat(num(rng), den(rng)));
  }
  return reduce(x, M);
}

inline std::vector<long> random_root(const ManifoldModel& M, std::mt19937& rng, int lo = -2,
                                     int hi = 3) {
  std::uniform_int_distribution<long> coeff(lo, hi);
  std::vector<long> root(static_cast<size_t>(M.generator_count()));
  for (auto& v : root) v = coeff(rng);
  return root;
}

inline std::vector<std::vector<long>> random_roots(const ManifoldModel& M, std::mt19937& rng,
                                                   int count, int lo = -2, int hi = 3) {
  std::vector<std::vector<long>> roots;
  for (int i = 0; i < count; ++i) roots.push_back(random_root(M, rng, lo, hi));
  return roots;
}

} // namespace witgen::testing

#endif
