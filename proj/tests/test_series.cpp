#include "bmm/partition.hpp"
#include "bmm/series.hpp"

#include <doctest.h>

#include <random>

using namespace bmm;

namespace {

QSeries coeffs(std::initializer_list<long> c, Rational offset = 0) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QSeries::from_coefficients(std::move(v), std::move(offset));
}

QSeries random_series(std::mt19937& rng, int N) {
  std::uniform_int_distribution<int> d(-5, 5);
  QSeries s(N);
  for (int n = 0; n <= N; ++n) s[n] = make_rational(d(rng), 1 + std::abs(d(rng)));
  return s;
}

}  // namespace

TEST_CASE("products") {
  CHECK((coeffs({1, 1, 0}) * coeffs({1, -1, 0})) == coeffs({1, 0, -1}));
  QSeries a = coeffs({3, -1, 2});
  CHECK(a * QSeries::one(2) == a);
  BivariateSeries b = BivariateSeries::one(2, 2) + BivariateSeries::monomial(1, 1, 2, 2);
  BivariateSeries sq = b * b;
  CHECK(sq(0, 0) == 1);
  CHECK(sq(1, 1) == 2);
  CHECK(sq(2, 2) == 1);
  CHECK(sq(1, 2) == 0);
  // truncation is the minimum, offsets add
  QSeries x(5, make_rational(1, 3));
  QSeries y(3, make_rational(-1, 5));
  QSeries z = x * y;
  CHECK(z.truncation() == 3);
  CHECK(z.offset() == make_rational(2, 15));
}

TEST_CASE("inverse") {
  CHECK((coeffs({1, -1, 0, 0})).inverse() == coeffs({1, 1, 1, 1}));
  CHECK(QSeries::one(4).inverse() == QSeries::one(4));
  CHECK_THROWS_AS(QSeries::monomial(1, 4).inverse(), std::domain_error);
  QSeries off = coeffs({2, 1}, make_rational(3, 4));
  CHECK(off.inverse().offset() == make_rational(-3, 4));
  CHECK_THROWS_AS(BivariateSeries::monomial(1, 1, 2, 2).inverse(), std::domain_error);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(1, 3) == coeffs({1, -1, 0, 0}));
  CHECK(pochhammer(0, 3) == QSeries::one(3));
  CHECK(pochhammer_infinity(5) == coeffs({1, -1, -1, 0, 0, 1}));
}

TEST_CASE("restricted product") {
  CHECK(restricted_product(2, 2, 6) == coeffs({1, 1, 1, 1, 2, 2, 3}));
  CHECK(restricted_product(1, 1, 10) == QSeries::one(10));
  CHECK(restricted_product(2, 1, 6) == coeffs({1, 0, 1, 1, 1, 1, 2}));
  for (int s = 1; s <= 4; ++s)
    for (int i = 1; i <= s; ++i) {
      QSeries r = restricted_product(s, i, 30);
      for (int n = 0; n <= 30; ++n) CHECK(r[n] == count_A(s, i, n));
    }
  CHECK_THROWS_AS(restricted_product(2, 3, 5), std::invalid_argument);
}

TEST_CASE("ring laws up to truncation") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    QSeries a = random_series(rng, 8);
    QSeries b = random_series(rng, 6);
    QSeries c = random_series(rng, 7);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    if (a[0] != 0) CHECK(a * a.inverse() == QSeries::one(8));
  }
}

TEST_CASE("truncation contract") {
  QSeries a = coeffs({1, 2, 3});
  CHECK_THROWS_AS(a[3], std::out_of_range);
  CHECK_THROWS_AS(QSeries::first_mismatch(a, QSeries::one(5), 3), std::invalid_argument);
  CHECK_THROWS_AS(QSeries::first_mismatch(a, coeffs({1, 2, 3}, 1), 2), std::invalid_argument);
  CHECK(QSeries::first_mismatch(a, coeffs({1, 2, 4}), 2) == 2);
  CHECK_FALSE(QSeries::first_mismatch(a, coeffs({1, 2, 3, 9}), 2));
  CHECK_THROWS_AS(a += coeffs({1}, 1), std::invalid_argument);
}

TEST_CASE("rendering") {
  CHECK(coeffs({1, 0, -2}).str() == "1 - 2*q^2 + O(q^3)");
  CHECK(coeffs({0, 1}, make_rational(-1, 5)).str() == "q^(-1/5)*(q + O(q^2))");
  QSeries h(1);
  h[1] = make_rational(2, 3);
  CHECK(h.str() == "2/3*q + O(q^2)");
}

TEST_CASE("t = 1 specialization commutes with products") {
  BivariateSeries a = BivariateSeries::one(5, 5) - BivariateSeries::monomial(1, 2, 5, 5);
  BivariateSeries b = BivariateSeries::one(5, 5) + BivariateSeries::monomial(2, 3, 5, 5, 4);
  CHECK((a * b).at_t_equals_one() == a.at_t_equals_one() * b.at_t_equals_one());
  CHECK(a.inverse().at_t_equals_one() == a.at_t_equals_one().inverse());
}
