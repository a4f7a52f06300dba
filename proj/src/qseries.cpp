#include "witgen/qseries.hpp"

namespace witgen {

namespace {

void check_orders(const QSeries& a, const QSeries& b) {
  if (a.q_order() != b.q_order())
    throw series_error("q-order mismatch: " + std::to_string(a.q_order()) + " vs " +
                       std::to_string(b.q_order()));
  if (a.gens() != b.gens())
    throw model_error("mixing series over different models");
}

} // namespace

QSeries qs_mul(const QSeries& a, const QSeries& b, const ManifoldModel& M) {
  check_orders(a, b);
  const int Q = a.q_order();
  QSeries r(a.gens(), Q);
  for (int i = 0; i <= Q; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= Q; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += multiply(a[i], b[j], M);
    }
  }
  return r;
}

CohomClass invert_unit(const CohomClass& u, const ManifoldModel& M) {
  const Rational c = reduce(u, M).constant_term();
  if (c == 0)
    throw series_error("inversion of a non-unit (zero constant term)");
  // u = c(1 + eta/c); invert the nilpotent part with a geometric series.
  CohomClass eta = reduce(u, M);
  eta.add_term(Exponents(static_cast<size_t>(u.gens()), 0), -c);
  eta = eta.scaled(1 / c);
  CohomClass acc = CohomClass::constant(u.gens(), Rational(1));
  CohomClass power = CohomClass::constant(u.gens(), Rational(1));
  for (int k = 1; k <= M.complex_dimension(); ++k) {
    power = multiply(power, eta, M);
    if (power.is_zero()) break;
    acc += (k % 2 == 0) ? power : -power;
  }
  return acc.scaled(1 / c);
}

QSeries qs_invert(const QSeries& a, const ManifoldModel& M) {
  const int Q = a.q_order();
  const CohomClass lead_inv = invert_unit(a[0], M); // throws if not a unit
  QSeries r(a.gens(), Q);
  r[0] = lead_inv;
  for (int k = 1; k <= Q; ++k) {
    CohomClass s(a.gens());
    for (int i = 1; i <= k; ++i) s += multiply(a[i], r[k - i], M);
    r[k] = -multiply(lead_inv, s, M);
  }
  return r;
}

QSeries qs_scale(const QSeries& a, const CohomClass& c, const ManifoldModel& M) {
  QSeries r(a.gens(), a.q_order());
  for (int k = 0; k <= a.q_order(); ++k) r[k] = multiply(a[k], c, M);
  return r;
}

QSeries qs_truncate(const QSeries& a, int q_order) {
  if (q_order > a.q_order())
    throw series_error("cannot truncate to a higher q-order");
  QSeries r(a.gens(), q_order);
  for (int k = 0; k <= q_order; ++k) r[k] = a[k];
  return r;
}

CohomClass exp_nilpotent(const CohomClass& x, const ManifoldModel& M) {
  CohomClass xr = reduce(x, M);
  if (xr.has_constant_term())
    throw series_error("exp of a class with nonzero constant term");
  CohomClass acc = CohomClass::constant(xr.gens(), Rational(1));
  CohomClass power = acc;
  Rational factorial(1);
  for (int k = 1; k <= M.complex_dimension(); ++k) {
    power = multiply(power, xr, M);
    if (power.is_zero()) break;
    factorial *= k;
    acc += power.scaled(1 / factorial);
  }
  return acc;
}

bool RatSeries::is_zero() const {
  for (const Rational& c : coeff_)
    if (c != 0) return false;
  return true;
}

bool RatSeries::is_integral() const {
  for (const Rational& c : coeff_)
    if (!is_integer(c)) return false;
  return true;
}

RatSeries rs_mul(const RatSeries& a, const RatSeries& b) {
  if (a.order() != b.order())
    throw series_error("series order mismatch");
  const int Q = a.order();
  RatSeries r(Q);
  for (int i = 0; i <= Q; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= Q; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

RatSeries rs_invert(const RatSeries& a) {
  if (a[0] == 0)
    throw series_error("inversion of a series with zero constant term");
  const int Q = a.order();
  RatSeries r(Q);
  r[0] = 1 / a[0];
  for (int k = 1; k <= Q; ++k) {
    Rational s(0);
    for (int i = 1; i <= k; ++i) s += a[i] * r[k - i];
    r[k] = -s / a[0];
  }
  return r;
}

RatSeries rs_pow(const RatSeries& a, int k) {
  RatSeries r = RatSeries::one(a.order());
  for (int i = 0; i < k; ++i) r = rs_mul(r, a);
  return r;
}

} // namespace witgen
