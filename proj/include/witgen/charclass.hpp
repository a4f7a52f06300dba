#ifndef WITGEN_CHARCLASS_HPP
#define WITGEN_CHARCLASS_HPP

#include <vector>

#include "witgen/qseries.hpp"

namespace witgen {

// V = L_1 + ... + L_k given by the first Chern classes of the summands,
// each a degree-2 integral class written in generator coordinates.
// The empty list is the zero bundle.
struct LineBundleSum {
  std::vector<std::vector<long>> roots;

  size_t rank() const { return roots.size(); }
};

// Root data for real/stable bundles (TM): one entry per +-x pair plus the
// number of stably-trivial summands that were subtracted. Q1 and A-hat do
// not see trivial summands; the spinor factor of Q3 does, which is what
// rank_offset corrects for.
struct RootBundle {
  std::vector<std::vector<long>> roots;
  int rank_offset = 0;
};

RootBundle tangent_bundle(const ManifoldModel& M);
RootBundle as_root_bundle(const LineBundleSum& V);

// The degree-2 class of a single root.
CohomClass root_class(const std::vector<long>& root, const ManifoldModel& M);

// Multiplicative A-hat class: product over roots of the even series
// x/(e^{x/2} - e^{-x/2}) = 1 - x^2/24 + 7x^4/5760 - ..., truncated by
// nilpotency. Trivial summands contribute 1.
CohomClass a_hat(const RootBundle& E, const ManifoldModel& M);

// Universal coefficient series of the single-root A-hat factor, generated
// from the exact exponential series (no hard-coded table) and cached.
RatSeries a_hat_root_series(int order);

// Q1(E) = prod_i prod_{k>=1} (1-q^k)^2 / ((1-e^{x_i}q^k)(1-e^{-x_i}q^k)).
QSeries q1(const RootBundle& E, const ManifoldModel& M, int q_order);

// Q2(V) = prod_i (1-e^{-v_i}) prod_{k>=1} (1-e^{v_i}q^k)(1-e^{-v_i}q^k)/(1-q^k)^2.
QSeries q2(const LineBundleSum& V, const ManifoldModel& M, int q_order);

// Q3(W) = 2^{-rank_offset} prod_i (e^{w_i/2}+e^{-w_i/2})
//         prod_{k>=1} (1+e^{w_i}q^k)(1+e^{-w_i}q^k)/(1+q^k)^2.
// Rank-0 W gives the constant 1; a genuine trivial +-0 pair doubles the
// spinor factor, so stable root data must carry its rank_offset.
QSeries q3(const RootBundle& W, const ManifoldModel& M, int q_order);

// Euler class prod_i v_i, reduced.
CohomClass euler(const LineBundleSum& V, const ManifoldModel& M);

// First Pontryagin class sum_i x_i^2, reduced.
CohomClass pontryagin_p1(const std::vector<std::vector<long>>& roots, const ManifoldModel& M);

// c1 = sum of roots; w2 = mod-2 reduction of c1.
IntClass c1(const std::vector<std::vector<long>>& roots, const ManifoldModel& M);
Mod2Class w2(const std::vector<std::vector<long>>& roots, const ManifoldModel& M);

Mod2Class w2_tangent(const ManifoldModel& M);

} // namespace witgen

#endif
