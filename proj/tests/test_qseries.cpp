#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace witgen;
using namespace witgen::testing;

namespace {

QSeries geometric_series(const ManifoldModel& M, int q_order) {
  QSeries s(M.generator_count(), q_order);
  for (int k = 0; k <= q_order; ++k)
    s[k] = CohomClass::constant(M.generator_count(), Rational(1));
  return s;
}

QSeries random_series(const ManifoldModel& M, std::mt19937& rng, int q_order,
                      bool unit_leading) {
  QSeries s(M.generator_count(), q_order);
  for (int k = 0; k <= q_order; ++k) s[k] = random_class(M, rng);
  if (unit_leading) {
    CohomClass lead = s[0];
    Exponents zero(static_cast<size_t>(M.generator_count()), 0);
    lead.add_term(zero, Rational(1) - lead.coefficient(zero));
    s[0] = lead;
  }
  return s;
}

} // namespace

TEST_CASE("qs_mul basics") {
  const ManifoldModel cp3 = projective_space(3);
  const CohomClass u = gen_power(cp3, 0, 1);

  SUBCASE("(1 + uq)(1 - uq) = 1 - u^2 q^2 at Q=2") {
    QSeries a = QSeries::one(1, 2);
    a[1] = u;
    QSeries b = QSeries::one(1, 2);
    b[1] = -u;
    const QSeries prod = qs_mul(a, b, cp3);
    QSeries expected = QSeries::one(1, 2);
    expected[2] = -multiply(u, u, cp3);
    CHECK(prod == expected);
  }
  SUBCASE("geometric series times (1-q) is 1 at Q=5") {
    QSeries one_minus_q = QSeries::one(1, 5);
    one_minus_q[1] = -CohomClass::constant(1, Rational(1));
    CHECK(qs_mul(geometric_series(cp3, 5), one_minus_q, cp3) == QSeries::one(1, 5));
  }
  SUBCASE("multiplicative identity on random series") {
    std::mt19937 rng(42);
    for (int t = 0; t < 10; ++t) {
      const QSeries a = random_series(cp3, rng, 4, false);
      CHECK(qs_mul(a, QSeries::one(1, 4), cp3) == a);
    }
  }
  SUBCASE("order mismatch throws") {
    CHECK_THROWS_AS(qs_mul(QSeries::one(1, 2), QSeries::one(1, 3), cp3), series_error);
  }
}

TEST_CASE("exp_nilpotent expands the finite exponential sum") {
  SUBCASE("exp(0) = 1") {
    const ManifoldModel cp2 = projective_space(2);
    CHECK(exp_nilpotent(CohomClass(1), cp2) == CohomClass::constant(1, Rational(1)));
  }
  SUBCASE("CP^2: exp(u) = 1 + u + u^2/2") {
    const ManifoldModel cp2 = projective_space(2);
    CohomClass expected = CohomClass::constant(1, Rational(1));
    expected.add_term({1}, Rational(1));
    expected.add_term({2}, rat(1, 2));
    CHECK(exp_nilpotent(gen_power(cp2, 0, 1), cp2) == expected);
  }
  SUBCASE("CP^3: exp(2u) = 1 + 2u + 2u^2 + 4u^3/3") {
    const ManifoldModel cp3 = projective_space(3);
    CohomClass expected = CohomClass::constant(1, Rational(1));
    expected.add_term({1}, Rational(2));
    expected.add_term({2}, Rational(2));
    expected.add_term({3}, rat(4, 3));
    CHECK(exp_nilpotent(gen_power(cp3, 0, 1).scaled(Rational(2)), cp3) == expected);
  }
  SUBCASE("nonzero constant term is rejected") {
    const ManifoldModel cp2 = projective_space(2);
    CHECK_THROWS_AS(exp_nilpotent(CohomClass::constant(1, Rational(1)), cp2), series_error);
  }
}

TEST_CASE("qs_invert") {
  const ManifoldModel cp3 = projective_space(3);
  const CohomClass u = gen_power(cp3, 0, 1);

  SUBCASE("invert(1) = 1") {
    CHECK(qs_invert(QSeries::one(1, 3), cp3) == QSeries::one(1, 3));
  }
  SUBCASE("invert(1 - uq) is the geometric series in uq") {
    QSeries a = QSeries::one(1, 3);
    a[1] = -u;
    QSeries expected = QSeries::one(1, 3);
    expected[1] = u;
    expected[2] = multiply(u, u, cp3);
    expected[3] = multiply(expected[2], u, cp3);
    CHECK(qs_invert(a, cp3) == expected);
  }
  SUBCASE("constant series 1+u inverts to 1 - u + u^2 in CP^2") {
    const ManifoldModel cp2 = projective_space(2);
    const CohomClass uu = gen_power(cp2, 0, 1);
    const QSeries a = QSeries::constant(CohomClass::constant(1, Rational(1)) + uu, 2);
    CohomClass inv = CohomClass::constant(1, Rational(1));
    inv.add_term({1}, Rational(-1));
    inv.add_term({2}, Rational(1));
    CHECK(qs_invert(a, cp2) == QSeries::constant(inv, 2));
    CHECK(qs_mul(a, qs_invert(a, cp2), cp2) == QSeries::one(1, 2));
  }
  SUBCASE("non-unit leading coefficient throws") {
    QSeries a(1, 2);
    a[1] = u;
    CHECK_THROWS_AS(qs_invert(a, cp3), series_error);
  }
  SUBCASE("random unit-leading series invert exactly") {
    std::mt19937 rng(777);
    const ManifoldModel M = bott_cp1_cp2();
    for (int t = 0; t < 15; ++t) {
      const QSeries a = random_series(M, rng, 4, true);
      CHECK(qs_mul(a, qs_invert(a, M), M) == QSeries::one(M.generator_count(), 4));
    }
  }
}

TEST_CASE("exp is additive on nilpotents") {
  std::mt19937 rng(2468);
  const ManifoldModel models[] = {projective_space(4), bott_cp1_cp2()};
  for (const auto& M : models) {
    for (int t = 0; t < 15; ++t) {
      CohomClass x = random_class(M, rng);
      CohomClass y = random_class(M, rng);
      Exponents zero(static_cast<size_t>(M.generator_count()), 0);
      x.add_term(zero, -x.coefficient(zero));
      y.add_term(zero, -y.coefficient(zero));
      CHECK(exp_nilpotent(x + y, M) ==
            multiply(exp_nilpotent(x, M), exp_nilpotent(y, M), M));
    }
  }
}

TEST_CASE("truncation consistency: compute high, truncate down") {
  std::mt19937 rng(11223);
  const ManifoldModel M = projective_space(3);
  for (int t = 0; t < 10; ++t) {
    QSeries a(1, 6), b(1, 6);
    for (int k = 0; k <= 6; ++k) {
      a[k] = random_class(M, rng);
      b[k] = random_class(M, rng);
    }
    const QSeries full = qs_mul(a, b, M);
    const QSeries low = qs_mul(qs_truncate(a, 3), qs_truncate(b, 3), M);
    CHECK(qs_truncate(full, 3) == low);
  }
}

TEST_CASE("univariate rational series arithmetic") {
  RatSeries a(3);
  a[0] = 1;
  a[1] = rat(-1, 2);
  const RatSeries inv = rs_invert(a);
  CHECK(rs_mul(a, inv) == RatSeries::one(3));
  CHECK(inv[1] == rat(1, 2));
  CHECK(inv[2] == rat(1, 4));
  CHECK(inv[3] == rat(1, 8));
  CHECK_THROWS_AS(rs_invert(RatSeries(2)), series_error);
}
