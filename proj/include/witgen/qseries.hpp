#ifndef WITGEN_QSERIES_HPP
#define WITGEN_QSERIES_HPP

#include <vector>

#include "witgen/cohomology.hpp"

namespace witgen {

// Truncated power series in the formal variable q with CohomClass
// coefficients: c_0 + c_1 q + ... + c_Q q^Q. Dense in q, sparse in the
// cohomology coefficients. Arithmetic truncates beyond q^Q.
class QSeries {
public:
  QSeries(int gens, int q_order)
      : coeff_(static_cast<size_t>(q_order) + 1, CohomClass(gens)) {}

  static QSeries constant(const CohomClass& c, int q_order) {
    QSeries s(c.gens(), q_order);
    s.coeff_[0] = c;
    return s;
  }

  static QSeries one(int gens, int q_order) {
    return constant(CohomClass::constant(gens, Rational(1)), q_order);
  }

  int q_order() const { return static_cast<int>(coeff_.size()) - 1; }
  int gens() const { return coeff_[0].gens(); }

  const CohomClass& operator[](int k) const { return coeff_[static_cast<size_t>(k)]; }
  CohomClass& operator[](int k) { return coeff_[static_cast<size_t>(k)]; }

  bool operator==(const QSeries& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const QSeries& o) const { return !(*this == o); }

private:
  std::vector<CohomClass> coeff_;
};

// Cauchy product truncated at q^Q; throws on order or model mismatch.
QSeries qs_mul(const QSeries& a, const QSeries& b, const ManifoldModel& M);

// Multiplicative inverse of a series whose leading coefficient is a unit
// (nonzero rational constant plus nilpotent). qs_mul(a, qs_invert(a)) = 1.
QSeries qs_invert(const QSeries& a, const ManifoldModel& M);

// Scales every q-coefficient by the (reduced) class c.
QSeries qs_scale(const QSeries& a, const CohomClass& c, const ManifoldModel& M);

QSeries qs_truncate(const QSeries& a, int q_order);

// exp(x) = sum_{k<=n} x^k / k! for a class with no degree-0 part; such a
// class is nilpotent, so the sum is finite and exact.
CohomClass exp_nilpotent(const CohomClass& x, const ManifoldModel& M);

// Inverse of a unit u = c + nilpotent, c a nonzero rational: the finite
// geometric series c^{-1} sum (-eta/c)^k.
CohomClass invert_unit(const CohomClass& u, const ManifoldModel& M);

// ---------------------------------------------------------------------
// Univariate truncated power series over the exact rationals. Used for
// the universal characteristic-series coefficients, Eisenstein series and
// genus results.
class RatSeries {
public:
  explicit RatSeries(int order) : coeff_(static_cast<size_t>(order) + 1, Rational(0)) {}

  static RatSeries one(int order) {
    RatSeries s(order);
    s.coeff_[0] = 1;
    return s;
  }

  int order() const { return static_cast<int>(coeff_.size()) - 1; }
  const Rational& operator[](int k) const { return coeff_[static_cast<size_t>(k)]; }
  Rational& operator[](int k) { return coeff_[static_cast<size_t>(k)]; }

  bool is_zero() const;
  bool is_integral() const; // all denominators 1

  bool operator==(const RatSeries& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const RatSeries& o) const { return !(*this == o); }

private:
  std::vector<Rational> coeff_;
};

RatSeries rs_mul(const RatSeries& a, const RatSeries& b);
RatSeries rs_invert(const RatSeries& a); // requires a[0] != 0
RatSeries rs_pow(const RatSeries& a, int k);

} // namespace witgen

#endif
