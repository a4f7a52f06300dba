#include "witgen/genus.hpp"

namespace witgen {

const char* to_string(EvalPath p) {
  return p == EvalPath::direct ? "direct" : "lemma";
}

namespace {

void require_spinc(const ManifoldModel& M, const IntClass& c1c) {
  if (c1c.gens() != M.generator_count())
    throw model_error("c1c does not belong to model '" + M.name() + "'");
  if (mod2(c1c) != w2_tangent(M))
    throw spinc_error("no Spin^c structure with c1c = " + M.format_class(c1c) +
                      " on '" + M.name() + "': mod-2 reduction differs from w2(M) = " +
                      M.format_class(w2_tangent(M)));
}

void require_spin_w(const ManifoldModel& M, const RootBundle& W) {
  if (!w2(W.roots, M).is_zero())
    throw spinc_error("W is not spin on '" + M.name() + "': w2(W) = " +
                      M.format_class(w2(W.roots, M)));
}

void require_spin_manifold(const ManifoldModel& M) {
  if (!w2_tangent(M).is_zero())
    throw spinc_error("'" + M.name() + "' is not spin: w2(M) = " +
                      M.format_class(w2_tangent(M)));
}

RatSeries integrate_series(const QSeries& s, const ManifoldModel& M) {
  RatSeries r(s.q_order());
  for (int k = 0; k <= s.q_order(); ++k) r[k] = integrate(s[k], M);
  return r;
}

GenusResult make_result(const ManifoldModel& M, RatSeries series, EvalPath path, int q_order,
                        IntClass c1c, std::vector<std::vector<long>> bundle) {
  GenusResult r;
  r.series = std::move(series);
  r.manifold_id = M.name();
  r.path = path;
  r.q_order = q_order;
  r.c1c_used = std::move(c1c);
  r.bundle = std::move(bundle);
  return r;
}

} // namespace

GenusResult phi_c(const ManifoldModel& M, const LineBundleSum& V, const RootBundle& W,
                  const IntClass& c1c, int q_order) {
  require_spinc(M, c1c);
  require_spin_w(M, W);

  const RootBundle TM = tangent_bundle(M);
  const CohomClass front =
      multiply(exp_nilpotent(to_rational(c1c).scaled(make_rational(1, 2)), M), a_hat(TM, M), M);

  QSeries s = q1(TM, M, q_order);
  if (!V.roots.empty()) s = qs_mul(s, q2(V, M, q_order), M);
  if (!W.roots.empty() || W.rank_offset != 0) s = qs_mul(s, q3(W, M, q_order), M);
  s = qs_scale(s, front, M);

  return make_result(M, integrate_series(s, M), EvalPath::direct, q_order, c1c, V.roots);
}

GenusResult witten(const ManifoldModel& M, int q_order) {
  require_spin_manifold(M);
  return phi_c(M, LineBundleSum{}, RootBundle{}, IntClass(M.generator_count()), q_order);
}

GenusResult elliptic(const ManifoldModel& M, int q_order) {
  require_spin_manifold(M);
  GenusResult r = phi_c(M, LineBundleSum{}, tangent_bundle(M), IntClass(M.generator_count()),
                        q_order);
  r.bundle.clear();
  return r;
}

GenusResult witten_of_gci(const ManifoldModel& M, const LineBundleSum& V, int q_order) {
  const IntClass c1v = c1(V.roots, M);
  if (mod2(c1v) != w2_tangent(M))
    throw spinc_error("X not spin: w2(V) = " + M.format_class(mod2(c1v)) +
                      " differs from w2(M) = " + M.format_class(w2_tangent(M)) +
                      " on '" + M.name() + "'");

  const RootBundle TM = tangent_bundle(M);
  const RootBundle VR = as_root_bundle(V);

  QSeries numerator = q1(TM, M, q_order);
  numerator = qs_scale(numerator, multiply(euler(V, M), a_hat(TM, M), M), M);
  QSeries denominator = qs_scale(q1(VR, M, q_order), a_hat(VR, M), M);
  QSeries s = qs_mul(numerator, qs_invert(denominator, M), M);

  return make_result(M, integrate_series(s, M), EvalPath::lemma, q_order, c1v, V.roots);
}

namespace {

// Bernoulli numbers via sum_{j<=m} C(m+1, j) B_j = 0.
Rational bernoulli(int m) {
  std::vector<Rational> b(static_cast<size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) {
    if (i == 0) {
      b[0] = 1;
      continue;
    }
    Rational s(0);
    Integer binom(1); // C(i+1, j), starting at j = 0
    for (int j = 0; j < i; ++j) {
      s += Rational(binom) * b[static_cast<size_t>(j)];
      binom = binom * (i + 1 - j) / (j + 1);
    }
    b[static_cast<size_t>(i)] = -s / Rational(i + 1);
  }
  return b[static_cast<size_t>(m)];
}

Integer sigma(int power, int n) {
  Integer s(0);
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    Integer dp(1);
    for (int i = 0; i < power; ++i) dp *= d;
    s += dp;
  }
  return s;
}

} // namespace

RatSeries eisenstein(int weight, int q_order) {
  if (weight != 4 && weight != 6)
    throw series_error("eisenstein weight must be 4 or 6");
  const Rational factor = Rational(-2 * weight) / bernoulli(weight);
  RatSeries e = RatSeries::one(q_order);
  for (int n = 1; n <= q_order; ++n) e[n] = factor * Rational(sigma(weight - 1, n));
  return e;
}

ModularFit modular_fit(const RatSeries& series, int weight) {
  if (weight < 0 || weight % 2 != 0)
    throw series_error("modular_fit weight must be even and nonnegative");
  std::vector<std::pair<int, int>> basis;
  for (int a = 0; 4 * a <= weight; ++a)
    if ((weight - 4 * a) % 6 == 0) basis.emplace_back(a, (weight - 4 * a) / 6);

  const int Q = series.order();
  const int dim = static_cast<int>(basis.size());
  if (Q <= dim)
    throw series_error("modular_fit needs q-order above the space dimension " +
                       std::to_string(dim));

  // Column per basis monomial, rows = q-coefficients; exact elimination.
  std::vector<RatSeries> cols;
  for (auto [a, b] : basis)
    cols.push_back(rs_mul(rs_pow(eisenstein(4, Q), a), rs_pow(eisenstein(6, Q), b)));

  const int rows = Q + 1;
  std::vector<std::vector<Rational>> aug(static_cast<size_t>(rows),
                                         std::vector<Rational>(static_cast<size_t>(dim) + 1));
  for (int r = 0; r < rows; ++r) {
    for (int cidx = 0; cidx < dim; ++cidx) aug[r][static_cast<size_t>(cidx)] = cols[static_cast<size_t>(cidx)][r];
    aug[r][static_cast<size_t>(dim)] = series[r];
  }

  std::vector<int> pivot_row(static_cast<size_t>(dim), -1);
  int rank = 0;
  for (int cidx = 0; cidx < dim && rank < rows; ++cidx) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (aug[r][static_cast<size_t>(cidx)] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(aug[static_cast<size_t>(rank)], aug[static_cast<size_t>(pr)]);
    const Rational inv = 1 / aug[static_cast<size_t>(rank)][static_cast<size_t>(cidx)];
    for (auto& v : aug[static_cast<size_t>(rank)]) v *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Rational f = aug[static_cast<size_t>(r)][static_cast<size_t>(cidx)];
      if (f == 0) continue;
      for (int k = cidx; k <= dim; ++k)
        aug[static_cast<size_t>(r)][static_cast<size_t>(k)] -=
            f * aug[static_cast<size_t>(rank)][static_cast<size_t>(k)];
    }
    pivot_row[static_cast<size_t>(cidx)] = rank;
    ++rank;
  }

  ModularFit fit;
  for (int r = rank; r < rows; ++r)
    if (aug[static_cast<size_t>(r)][static_cast<size_t>(dim)] != 0) return fit; // inconsistent
  fit.modular = true;
  for (int cidx = 0; cidx < dim; ++cidx) {
    Rational v(0);
    if (pivot_row[static_cast<size_t>(cidx)] >= 0)
      v = aug[static_cast<size_t>(pivot_row[static_cast<size_t>(cidx)])][static_cast<size_t>(dim)];
    fit.coefficients.emplace_back(basis[static_cast<size_t>(cidx)], v);
  }
  return fit;
}

} // namespace witgen
