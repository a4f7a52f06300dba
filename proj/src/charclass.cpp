#include "witgen/charclass.hpp"

#include <map>
#include <mutex>

namespace witgen {

RootBundle tangent_bundle(const ManifoldModel& M) {
  return RootBundle{M.tangent_roots(), M.rank_offset()};
}

RootBundle as_root_bundle(const LineBundleSum& V) {
  return RootBundle{V.roots, 0};
}

CohomClass root_class(const std::vector<long>& root, const ManifoldModel& M) {
  if (static_cast<int>(root.size()) != M.generator_count())
    throw model_error("root vector length does not match model '" + M.name() + "'");
  return to_rational(IntClass::linear(root));
}

RatSeries a_hat_root_series(int order) {
  static std::mutex mu;
  static std::map<int, RatSeries> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  // e^{t/2} - e^{-t/2} = t * G(t) with G(t) = sum_m t^{2m} / (4^m (2m+1)!),
  // so the A-hat factor is G^{-1}.
  RatSeries g(order);
  Rational term(1);
  g[0] = 1;
  for (int m = 1; 2 * m <= order; ++m) {
    term /= 4 * (2 * m) * (2 * m + 1);
    g[2 * m] = term;
  }
  RatSeries f = rs_invert(g);
  cache.emplace(order, f);
  return f;
}

namespace {

// Evaluates a univariate series at a nilpotent degree-2 class.
CohomClass evaluate_series(const RatSeries& s, const CohomClass& x, const ManifoldModel& M) {
  CohomClass acc = CohomClass::constant(x.gens(), s[0]);
  CohomClass power = CohomClass::constant(x.gens(), Rational(1));
  for (int k = 1; k <= s.order(); ++k) {
    power = multiply(power, x, M);
    if (power.is_zero()) break;
    if (s[k] != 0) acc += power.scaled(s[k]);
  }
  return acc;
}

bool is_zero_root(const std::vector<long>& root) {
  for (long c : root)
    if (c != 0) return false;
  return true;
}

// (1 + s * e^y q^k) as a q-series, with s = +-1.
QSeries linear_factor(const CohomClass& exp_y, int k, int sign, int gens, int Q) {
  QSeries f = QSeries::one(gens, Q);
  if (k <= Q) f[k] = sign > 0 ? exp_y : -exp_y;
  return f;
}

} // namespace

CohomClass a_hat(const RootBundle& E, const ManifoldModel& M) {
  const RatSeries f = a_hat_root_series(M.complex_dimension());
  CohomClass acc = CohomClass::constant(M.generator_count(), Rational(1));
  for (const auto& root : E.roots) {
    if (is_zero_root(root)) continue;
    acc = multiply(acc, evaluate_series(f, root_class(root, M), M), M);
  }
  return acc;
}

QSeries q1(const RootBundle& E, const ManifoldModel& M, int q_order) {
  const int gens = M.generator_count();
  QSeries num = QSeries::one(gens, q_order);
  QSeries den = QSeries::one(gens, q_order);
  const CohomClass one = CohomClass::constant(gens, Rational(1));
  for (const auto& root : E.roots) {
    if (is_zero_root(root)) continue; // factor is exactly 1
    const CohomClass x = root_class(root, M);
    const CohomClass ep = exp_nilpotent(x, M);
    const CohomClass em = exp_nilpotent(-x, M);
    for (int k = 1; k <= q_order; ++k) {
      num = qs_mul(num, linear_factor(one, k, -1, gens, q_order), M);
      num = qs_mul(num, linear_factor(one, k, -1, gens, q_order), M);
      den = qs_mul(den, linear_factor(ep, k, -1, gens, q_order), M);
      den = qs_mul(den, linear_factor(em, k, -1, gens, q_order), M);
    }
  }
  return qs_mul(num, qs_invert(den, M), M);
}

QSeries q2(const LineBundleSum& V, const ManifoldModel& M, int q_order) {
  const int gens = M.generator_count();
  QSeries num = QSeries::one(gens, q_order);
  QSeries den = QSeries::one(gens, q_order);
  const CohomClass one = CohomClass::constant(gens, Rational(1));
  for (const auto& root : V.roots) {
    const CohomClass v = root_class(root, M);
    const CohomClass ep = exp_nilpotent(v, M);
    const CohomClass em = exp_nilpotent(-v, M);
    CohomClass front = CohomClass::constant(gens, Rational(1));
    front -= em; // 1 - e^{-v}
    num = qs_mul(num, QSeries::constant(front, q_order), M);
    for (int k = 1; k <= q_order; ++k) {
      num = qs_mul(num, linear_factor(ep, k, -1, gens, q_order), M);
      num = qs_mul(num, linear_factor(em, k, -1, gens, q_order), M);
      den = qs_mul(den, linear_factor(one, k, -1, gens, q_order), M);
      den = qs_mul(den, linear_factor(one, k, -1, gens, q_order), M);
    }
  }
  return qs_mul(num, qs_invert(den, M), M);
}

QSeries q3(const RootBundle& W, const ManifoldModel& M, int q_order) {
  const int gens = M.generator_count();
  QSeries num = QSeries::one(gens, q_order);
  QSeries den = QSeries::one(gens, q_order);
  const CohomClass one = CohomClass::constant(gens, Rational(1));
  for (const auto& root : W.roots) {
    const CohomClass half = root_class(root, M).scaled(make_rational(1, 2));
    const CohomClass ep2 = exp_nilpotent(half, M);
    const CohomClass em2 = exp_nilpotent(-half, M);
    const CohomClass ep = multiply(ep2, ep2, M);  // e^{w}
    const CohomClass em = multiply(em2, em2, M);  // e^{-w}
    num = qs_mul(num, QSeries::constant(ep2 + em2, q_order), M);
    for (int k = 1; k <= q_order; ++k) {
      num = qs_mul(num, linear_factor(ep, k, +1, gens, q_order), M);
      num = qs_mul(num, linear_factor(em, k, +1, gens, q_order), M);
      den = qs_mul(den, linear_factor(one, k, +1, gens, q_order), M);
      den = qs_mul(den, linear_factor(one, k, +1, gens, q_order), M);
    }
  }
  QSeries r = qs_mul(num, qs_invert(den, M), M);
  // Undo the spinor doubling of the stably-trivial summands.
  if (W.rank_offset != 0) {
    Rational scale(1);
    for (int i = 0; i < W.rank_offset; ++i) scale /= 2;
    for (int i = W.rank_offset; i < 0; ++i) scale *= 2;
    r = qs_scale(r, CohomClass::constant(gens, scale), M);
  }
  return r;
}

CohomClass euler(const LineBundleSum& V, const ManifoldModel& M) {
  CohomClass acc = CohomClass::constant(M.generator_count(), Rational(1));
  for (const auto& root : V.roots) acc = multiply(acc, root_class(root, M), M);
  return acc;
}

CohomClass pontryagin_p1(const std::vector<std::vector<long>>& roots, const ManifoldModel& M) {
  CohomClass acc(M.generator_count());
  for (const auto& root : roots) {
    const CohomClass x = root_class(root, M);
    acc += multiply(x, x, M);
  }
  return reduce(acc, M);
}

IntClass c1(const std::vector<std::vector<long>>& roots, const ManifoldModel& M) {
  IntClass acc(M.generator_count());
  for (const auto& root : roots) {
    if (static_cast<int>(root.size()) != M.generator_count())
      throw model_error("root vector length does not match model '" + M.name() + "'");
    acc += IntClass::linear(root);
  }
  return acc;
}

Mod2Class w2(const std::vector<std::vector<long>>& roots, const ManifoldModel& M) {
  return mod2(c1(roots, M));
}

Mod2Class w2_tangent(const ManifoldModel& M) {
  return w2(M.tangent_roots(), M);
}

} // namespace witgen
