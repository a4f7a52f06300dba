#ifndef WITGEN_CONDITIONS_HPP
#define WITGEN_CONDITIONS_HPP

#include <string>
#include <vector>

#include "witgen/charclass.hpp"

namespace witgen {

// Which vanishing statement applies to a model, decided purely from the
// trusted metadata flags.
enum class TheoremTag {
  homogeneous,    // G/H with H not a maximal torus
  fixed_point,    // simply connected group action with M^G nonempty
  torus,          // b1 = 0 and torus_dim > b2
  corollary_bott, // reserved for report consumers; never auto-assigned
  none,
};

const char* to_string(TheoremTag t);

struct ConditionReport {
  bool w2_match = false;
  bool p1_match = false;
  bool x_spin = false;
  TheoremTag theorem_applicable = TheoremTag::none;
  Mod2Class w2_m, w2_v;
  CohomClass p1_m, p1_v;
  std::string notes;

  ConditionReport() : p1_m(0), p1_v(0) {}

  bool is_string() const { return w2_match && p1_match; }
};

// The two hypotheses of the vanishing theorems on concrete (M, V) data:
// w2(V) = w2(M) and p1(V) = p1(M) as reduced classes. Never blocks a
// genus computation; reporting only.
ConditionReport check_string_gci(const ManifoldModel& M, const LineBundleSum& V);

TheoremTag classify_theorem(const ManifoldModel& M);

// Fano positivity arithmetic for complete intersections in CP^n with
// ambient c1 = (n+1)u and defining degrees l_i.
struct FanoCheck {
  long c1_coefficient = 0; // m - sum l_i with m = n+1
  bool fano = false;
  bool exceptional = false; // k = m >= n-1, excluded when dim X >= 4
};

FanoCheck fano_c1_check(int n, const std::vector<long>& degrees);

// All multisets of nonzero root vectors with entries in [0, max_degree],
// at most max_bundles summands, passing both string conditions.
// Canonicalized (roots sorted) and returned in deterministic order.
std::vector<LineBundleSum> search_string(const ManifoldModel& M, int max_degree,
                                         int max_bundles);

// Size of the search space the above would enumerate; the guard value.
Integer search_space_size(const ManifoldModel& M, int max_degree, int max_bundles);

} // namespace witgen

#endif
