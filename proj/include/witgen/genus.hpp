#ifndef WITGEN_GENUS_HPP
#define WITGEN_GENUS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "witgen/charclass.hpp"

namespace witgen {

enum class EvalPath { direct, lemma };

const char* to_string(EvalPath p);

// A computed twisted index: a rational q-series with provenance. On valid
// Spin^c data every coefficient is an integer; the rationals are kept so
// that integrality can be asserted rather than assumed.
struct GenusResult {
  RatSeries series;
  std::string manifold_id;
  EvalPath path = EvalPath::direct;
  int q_order = 0;
  IntClass c1c_used;
  std::vector<std::vector<long>> bundle; // V roots, for provenance

  GenusResult() : series(0), c1c_used(0) {}

  bool vanishes() const { return series.is_zero(); }
  bool integral() const { return series.is_integral(); }
};

// The twisted index phi^c(M;V,W) for the Spin^c structure with first
// Chern class c1c: the pairing of
//   e^{c1c/2} Q1(TM) Q2(V) Q3(W) A-hat(TM)
// with the fundamental class, coefficient by coefficient in q.
// Preconditions: mod2(c1c) = w2(M), and W spin of even rank.
GenusResult phi_c(const ManifoldModel& M, const LineBundleSum& V, const RootBundle& W,
                  const IntClass& c1c, int q_order);

// Witten genus phi^c(M;0,0) for the canonical structure; requires M spin.
GenusResult witten(const ManifoldModel& M, int q_order);

// Elliptic genus phi^c(M;0,TM); requires M spin.
GenusResult elliptic(const ManifoldModel& M, int q_order);

// Witten genus of the generalized complete intersection cut out by V,
// evaluated in the ambient manifold through the Euler class:
//   < e(V) Q1(TM) A-hat(TM) / (Q1(V) A-hat(V)), [M] >,
// an independent code path from phi_c(M, V, 0, c1(V), .).
// Precondition: mod2(c1(V)) = w2(M) (X spin for the induced structure).
GenusResult witten_of_gci(const ManifoldModel& M, const LineBundleSum& V, int q_order);

// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n,
// weight restricted to {4, 6}.
RatSeries eisenstein(int weight, int q_order);

// Exact decomposition of a series in the monomial basis E4^a E6^b of the
// given weight, or failure when the series does not lie in that space.
struct ModularFit {
  bool modular = false;
  // (a, b) exponent pairs with their rational coefficients.
  std::vector<std::pair<std::pair<int, int>, Rational>> coefficients;
};

ModularFit modular_fit(const RatSeries& series, int weight);

} // namespace witgen

#endif
