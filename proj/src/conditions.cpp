#include "witgen/conditions.hpp"

#include <algorithm>
#include <sstream>

namespace witgen {

const char* to_string(TheoremTag t) {
  switch (t) {
    case TheoremTag::homogeneous: return "thm-homogeneous";
    case TheoremTag::fixed_point: return "thm-fixed-point";
    case TheoremTag::torus: return "thm-torus";
    case TheoremTag::corollary_bott: return "corollary-bott";
    case TheoremTag::none: return "none";
  }
  return "none";
}

TheoremTag classify_theorem(const ManifoldModel& M) {
  const ModelMetadata& md = M.metadata();
  if (md.homogeneous) return TheoremTag::homogeneous;
  if (md.simply_connected && md.has_fixed_point) return TheoremTag::fixed_point;
  if (md.b1 == 0 && md.torus_dim > md.b2) return TheoremTag::torus;
  return TheoremTag::none;
}

ConditionReport check_string_gci(const ManifoldModel& M, const LineBundleSum& V) {
  ConditionReport r;
  r.w2_m = w2_tangent(M);
  r.w2_v = w2(V.roots, M);
  r.p1_m = pontryagin_p1(M.tangent_roots(), M);
  r.p1_v = pontryagin_p1(V.roots, M);
  r.w2_match = r.w2_m == r.w2_v;
  r.p1_match = r.p1_m == r.p1_v;
  // w2(X) = w2(M)|_X - w2(V)|_X, so the restriction of a match is zero.
  r.x_spin = r.w2_match;
  r.theorem_applicable = classify_theorem(M);

  std::ostringstream notes;
  const int dim_x = M.complex_dimension() - static_cast<int>(V.rank());
  if (r.is_string() && dim_x > 0 && dim_x % 2 != 0)
    notes << "dim_C X = " << dim_x
          << " is odd: the Witten genus vanishes for dimension-parity reasons; ";
  if (r.is_string() && r.theorem_applicable != TheoremTag::none)
    notes << "string conditions hold and " << to_string(r.theorem_applicable)
          << " applies: vanishing predicted";
  else if (r.is_string())
    notes << "string conditions hold but no theorem hypothesis is flagged";
  r.notes = notes.str();
  return r;
}

FanoCheck fano_c1_check(int n, const std::vector<long>& degrees) {
  for (long l : degrees)
    if (l <= 0) throw error("fano_c1_check: degrees must be positive");
  const long m = n + 1;
  long sum = 0;
  for (long l : degrees) sum += l;
  FanoCheck f;
  f.c1_coefficient = m - sum;
  f.fano = f.c1_coefficient > 0;
  f.exceptional = static_cast<long>(degrees.size()) == m && m >= n - 1;
  return f;
}

Integer search_space_size(const ManifoldModel& M, int max_degree, int max_bundles) {
  // Nonzero candidate roots: (max_degree+1)^m - 1. Multisets of size <= K:
  // sum_k C(R + k - 1, k).
  Integer roots(1);
  for (int i = 0; i < M.generator_count(); ++i) roots *= max_degree + 1;
  roots -= 1;
  Integer total(0);
  Integer binom(1); // C(R + k - 1, k), k = 0
  for (int k = 1; k <= max_bundles; ++k) {
    binom = binom * (roots + k - 1) / k;
    total += binom;
  }
  return total;
}

namespace {

void enumerate_roots(int gens, int max_degree, std::vector<std::vector<long>>& out) {
  std::vector<long> cur(static_cast<size_t>(gens), 0);
  while (true) {
    bool zero = std::all_of(cur.begin(), cur.end(), [](long v) { return v == 0; });
    if (!zero) out.push_back(cur);
    int i = gens - 1;
    while (i >= 0 && cur[static_cast<size_t>(i)] == max_degree) {
      cur[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<size_t>(i)];
  }
}

} // namespace

std::vector<LineBundleSum> search_string(const ManifoldModel& M, int max_degree,
                                         int max_bundles) {
  if (max_degree < 0 || max_bundles < 1)
    throw error("search_string: need max_degree >= 0 and max_bundles >= 1");
  constexpr long kGuard = 2'000'000;
  const Integer size = search_space_size(M, max_degree, max_bundles);
  if (size > kGuard)
    throw search_error("search space has " + size.get_str() + " candidates (limit " +
                       std::to_string(kGuard) + "); tighten the bounds");

  std::vector<std::vector<long>> candidates;
  enumerate_roots(M.generator_count(), max_degree, candidates);
  std::sort(candidates.begin(), candidates.end());

  std::vector<LineBundleSum> found;
  std::vector<size_t> pick;
  // Non-decreasing index sequences enumerate each multiset exactly once.
  auto rec = [&](auto&& self, size_t from) -> void {
    if (!pick.empty()) {
      LineBundleSum V;
      for (size_t idx : pick) V.roots.push_back(candidates[idx]);
      if (check_string_gci(M, V).is_string()) found.push_back(std::move(V));
    }
    if (static_cast<int>(pick.size()) == max_bundles) return;
    for (size_t i = from; i < candidates.size(); ++i) {
      pick.push_back(i);
      self(self, i);
      pick.pop_back();
    }
  };
  rec(rec, 0);

  std::sort(found.begin(), found.end(), [](const LineBundleSum& a, const LineBundleSum& b) {
    if (a.roots.size() != b.roots.size()) return a.roots.size() < b.roots.size();
    return a.roots < b.roots;
  });
  return found;
}

} // namespace witgen
