#include "bmm/characters.hpp"
#include "bmm/partition.hpp"

#include <doctest.h>

using namespace bmm;

namespace {

QSeries coeffs(std::initializer_list<long> c, Rational offset = 0) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QSeries::from_coefficients(std::move(v), std::move(offset));
}

// sum_k t^k q^{k^2 + (2-i) k} / (q)_k, the s = 2 sum written out directly.
BivariateSeries rogers_ramanujan_refined(int i, int T, int N) {
  BivariateSeries out(T, N);
  for (int k = 0; k * k <= N && k <= T; ++k) {
    QSeries term = QSeries::monomial(k * k + (2 - i) * k, N);
    for (int j = 1; j <= k; ++j) term = term * (QSeries::one(N) - QSeries::monomial(j, N)).inverse();
    for (int n = 0; n <= N; ++n) out(k, n) += term[n];
  }
  return out;
}

}  // namespace

TEST_CASE("model parameters") {
  auto ising = model_params(3, 4, 1, 1);
  CHECK(ising.c == make_rational(1, 2));
  CHECK(ising.h == 0);
  auto triv = model_params(2, 3, 1, 1);
  CHECK(triv.c == 0);
  CHECK(triv.h == 0);
  auto ly = model_params(2, 5, 1, 2);
  CHECK(ly.c == make_rational(-22, 5));
  CHECK(ly.h == make_rational(-1, 5));
  CHECK_THROWS_AS(model_params(2, 4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(model_params(2, 5, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(model_params(2, 5, 1, 5), std::invalid_argument);
  CHECK(boundary_params(3, 2).h == model_params(2, 7, 1, 2).h);
}

TEST_CASE("Nahm data") {
  NahmData d(3);
  CHECK(d.G == std::vector<std::vector<long>>{{2, 2}, {2, 4}});
  CHECK(d.B[0] == std::vector<long>{0, 0});
  CHECK(d.B[1] == std::vector<long>{0, 1});
  CHECK(d.B[2] == std::vector<long>{1, 2});
  CHECK(d.half_quadratic({1, 1}) == 5);
}

TEST_CASE("Gordon sums") {
  CHECK(gordon_lhs(2, 2, 6) == coeffs({1, 1, 1, 1, 2, 2, 3}));
  CHECK(gordon_lhs(1, 1, 7) == QSeries::one(7));
  CHECK(gordon_lhs(2, 1, 6) == coeffs({1, 0, 1, 1, 1, 1, 2}));
  CHECK(gordon_rhs(2, 2, 6) == coeffs({1, 1, 1, 1, 2, 2, 3}));
  for (int s = 1; s <= 4; ++s)
    for (int i = 1; i <= s; ++i) CHECK(gordon_lhs(s, i, 40) == gordon_rhs(s, i, 40));
}

TEST_CASE("refined Nahm sum") {
  BivariateSeries r = nahm_refined(2, 2, 2, 4);
  CHECK(r.offset() == make_rational(-1, 5));
  BivariateSeries expected(2, 4);
  expected(0, 0) = 1;
  for (int n = 1; n <= 4; ++n) expected(1, n) = 1;
  expected(2, 4) = 1;
  expected.set_offset(make_rational(-1, 5));
  CHECK(r == expected);
  CHECK(nahm_refined(1, 1, 3, 5) == BivariateSeries::one(3, 5));
  for (int i = 1; i <= 2; ++i) {
    BivariateSeries direct = rogers_ramanujan_refined(i, 6, 20);
    direct.set_offset(boundary_params(2, i).h);
    CHECK(nahm_refined(2, i, 6, 20) == direct);
  }
  for (int s = 1; s <= 4; ++s)
    for (int i = 1; i <= s; ++i) {
      QSeries lhs = gordon_lhs(s, i, 20);
      QSeries t1 = nahm_refined(s, i, 20, 20).at_t_equals_one();
      t1.set_offset(0);
      CHECK(t1 == lhs);
    }
}

TEST_CASE("refined Nahm sum equals the P generating function") {
  for (int s = 1; s <= 4; ++s)
    for (int i = 1; i <= s; ++i) {
      BivariateSeries nahm = nahm_refined(s, i, 24, 24);
      nahm.set_offset(0);
      CHECK(nahm == p_si_bivariate(s, i, 24));
    }
}

TEST_CASE("Feigin-Fuchs characters") {
  QSeries triv = feigin_fuchs(2, 3, 1, 1, 10);
  CHECK(triv == QSeries::one(10));
  CHECK(feigin_fuchs(2, 5, 1, 2, 6) == coeffs({1, 1, 1, 1, 2, 2, 3}, make_rational(-1, 5)));
  CHECK(feigin_fuchs(3, 4, 1, 1, 4) == coeffs({1, 0, 1, 1, 2}));
  for (int s = 1; s <= 4; ++s)
    for (int i = 1; i <= s; ++i) {
      QSeries prod = restricted_product(s, i, 30);
      prod.set_offset(boundary_params(s, i).h);
      CHECK(feigin_fuchs(2, 2 * s + 1, 1, i, 30) == prod);
    }
}

TEST_CASE("closed refined characters") {
  BivariateSeries v = closed_refined(ClosedKind::verma_pbw, 0, 2, 3);
  CHECK(v(0, 0) == 1);
  CHECK(v(1, 1) == 1);
  CHECK(v(1, 2) == 1);
  CHECK(v(1, 3) == 1);
  CHECK(v(2, 3) == 1);
  CHECK(v(2, 2) == 1);
  for (int p = 0; p <= 8; ++p)
    for (int n = 0; n <= 8; ++n) {
      long count = 0;
      for (const auto& lambda : enumerate_partitions(n))
        if (lambda.len() == p) ++count;
      CHECK(closed_refined(ClosedKind::verma_pbw, 0, 8, 8)(p, n) == count);
    }

  BivariateSeries ising = closed_refined(ClosedKind::ising_pbw, 0, 1, 3);
  BivariateSeries e(1, 3);
  e(0, 0) = 1;
  e(1, 2) = 1;
  e(1, 3) = 1;
  CHECK(ising == e);

  BivariateSeries vac = closed_refined(ClosedKind::grF_universal_vacuum, 0, 1, 3);
  CHECK(vac(0, 0) == 1);
  CHECK(vac(0, 2) == 1);
  CHECK(vac(1, 3) == 1);
  CHECK(vac(0, 1) == 0);
  CHECK(vac(0, 3) == 0);

  BivariateSeries gv = closed_refined(ClosedKind::grF_verma, make_rational(1, 3), 6, 8);
  CHECK(gv.offset() == make_rational(1, 3));
  for (int p = 0; p <= 6; ++p)
    for (int n = 0; n <= 8; ++n) {
      long count = 0;
      for (const auto& lambda : enumerate_partitions(n))
        if (lambda.li_degree() == p) ++count;
      CHECK(gv(p, n) == count);
    }

  // (1 - tq) prod (1 - t^2 q^k): t-degree counts 1s once and larger parts twice.
  BivariateSeries st = closed_refined(ClosedKind::verma_standard, 0, 10, 6);
  for (int p = 0; p <= 10; ++p)
    for (int n = 0; n <= 6; ++n) {
      long count = 0;
      for (const auto& lambda : enumerate_partitions(n))
        if (lambda.clen() == p) ++count;
      CHECK(st(p, n) == count);
    }

  CHECK_THROWS_AS(parse_closed_kind("nope"), std::invalid_argument);
  CHECK(parse_closed_kind("grF-verma") == ClosedKind::grF_verma);
}
