#include "bmm/characters.hpp"
#include "bmm/jet.hpp"

#include <doctest.h>

using namespace bmm;

TEST_CASE("derivation on jet polynomials") {
  JetPolynomial x2sq{{Partition{2, 2}, 1}};
  CHECK(derivative(x2sq) == JetPolynomial{{Partition{3, 2}, 2}});
  CHECK(derivative(derivative(x2sq)) == JetPolynomial{{Partition{4, 2}, 4}, {Partition{3, 3}, 2}});
  CHECK(derivative(JetPolynomial{}).empty());
  CHECK(multiply(Partition{3}, x2sq) == JetPolynomial{{Partition{3, 2, 2}, 1}});
  // Leibniz rule on a product
  JetPolynomial f{{Partition{3}, 2}, {Partition{2, 2}, -1}};
  JetPolynomial df = derivative(f);
  JetPolynomial lhs = derivative(multiply(Partition{4}, f));
  JetPolynomial rhs = multiply(Partition{5}, f);
  for (auto& [k, v] : rhs) v *= 3;
  for (const auto& [k, v] : multiply(Partition{4}, df)) rhs[k] += v;
  std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
  CHECK(lhs == rhs);
}

TEST_CASE("Zhu algebra") {
  auto z23 = zhu_algebra(2, 3);
  CHECK(z23.t == 1);
  CHECK(z23.dims == std::map<int, long>{{0, 1}});
  CHECK(zhu_algebra(2, 5).t == 2);
  auto z34 = zhu_algebra(3, 4);
  CHECK(z34.t == 3);
  CHECK(z34.dims == std::map<int, long>{{0, 1}, {2, 1}, {4, 1}});
  CHECK_THROWS_AS(zhu_algebra(2, 4), std::invalid_argument);
}

TEST_CASE("jet quotients") {
  auto t1 = jet_quotient_bigraded(1, 6, 10);
  for (int d = 0; d <= 6; ++d)
    for (int n = 0; n <= 10; ++n) CHECK(t1(d, n) == (d == 0 && n == 0 ? 1 : 0));
  CHECK(jet_quotient_bigraded(3, 6, 12)(3, 9) == 2);
  CHECK(jet_quotient_bigraded(2, 4, 6)(2, 4) == 1);
  CHECK_THROWS_AS(jet_quotient_bigraded(0, 1, 1), std::invalid_argument);

  // the weight-graded totals of C[x_2,...]/(x_2^s) are counted by P^{s,1}
  for (int s = 1; s <= 4; ++s) {
    auto q = jet_quotient_bigraded(s, 14, 14);
    for (int n = 0; n <= 14; ++n) {
      long count = 0;
      for (const auto& lambda : enumerate_partitions(n))
        if (in_P(s, 1, lambda)) ++count;
      CHECK(q.column_sum(n) == count);
    }
  }
}

TEST_CASE("Zhu module dimensions") {
  const ModelParams ly = boundary_params(2, 2);
  CHECK(zhu_module_dims(ly.c, ly.h, 8) == std::vector<long>{1, 1, 1, 0, 0, 0, 0, 0, 0});
  CHECK(zhu_module_dims(0, 0, 6) == std::vector<long>{1, 0, 0, 0, 0, 0, 0});
  auto generic = zhu_module_dims(make_rational(13, 4), make_rational(-5, 9), 8);
  for (int n = 0; n <= 8; ++n) CHECK(generic[n] == n / 2 + 1);

  for (int s = 1; s <= 3; ++s)
    for (int i = 1; i <= s; ++i) {
      const ModelParams mp = boundary_params(s, i);
      auto dims = zhu_module_dims(mp.c, mp.h, 10);
      for (int n = 0; n <= 10; ++n) {
        long count = 0;
        for (const auto& lambda : enumerate_partitions(n))
          if (in_P(s, i, lambda) && lambda.largest() <= 2) ++count;
        CHECK(dims[n] == count);
      }
    }
}

TEST_CASE("jet side module tables") {
  auto m22 = jet_module_bigraded(2, 2, 4, 4);
  CHECK(m22.offset() == make_rational(-1, 5));
  std::set<std::pair<int, int>> ones{{0, 0}, {0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}};
  for (int d = 0; d <= 4; ++d)
    for (int n = 0; n <= 4; ++n) CHECK(m22(d, n) == (ones.contains({d, n}) ? 1 : 0));
  auto m21 = jet_module_bigraded(2, 1, 4, 4);
  std::set<std::pair<int, int>> ones21{{0, 0}, {0, 2}, {1, 3}, {2, 4}};
  for (int d = 0; d <= 4; ++d)
    for (int n = 0; n <= 4; ++n) CHECK(m21(d, n) == (ones21.contains({d, n}) ? 1 : 0));
  auto m11 = jet_module_bigraded(1, 1, 4, 6);
  for (int d = 0; d <= 4; ++d)
    for (int n = 0; n <= 6; ++n) CHECK(m11(d, n) == (d == 0 && n == 0 ? 1 : 0));
}

TEST_CASE("vertex algebra freeness") {
  auto ly = freeness_vertexalg(2, 5, 6, 12);
  CHECK(ly.is_free);
  CHECK_FALSE(ly.first_deficit);
  CHECK(ly.scope == "vertex-algebra");
  CHECK(freeness_vertexalg(2, 3, 4, 8).is_free);
  for (int s = 1; s <= 4; ++s) {
    auto v = freeness_vertexalg(2, 2 * s + 1, 6, 12);
    CHECK(v.is_free);
    CHECK(v.surjective);
  }

  auto ising = freeness_vertexalg(3, 4, 6, 12);
  CHECK_FALSE(ising.is_free);
  CHECK(ising.surjective);
  REQUIRE(ising.first_deficit);
  CHECK(ising.first_deficit->li_degree == 3);
  CHECK(ising.first_deficit->weight == 9);
  CHECK(ising.first_deficit->jet_dim == 2);
  CHECK(ising.first_deficit->gr_dim == 1);

  auto kernel = ising_kernel_profile(6, 12);
  CHECK(kernel(3, 9) == 1);
  for (int d = 0; d <= 6; ++d) {
    for (int n = 0; n < 9; ++n) CHECK(kernel(d, n) == 0);
    for (int n = 0; n <= 12; ++n) CHECK(kernel(d, n) == ising.jet(d, n) - ising.gr(d, n));
  }
}

TEST_CASE("module freeness") {
  auto m22 = freeness_module(2, 2, 6, 12);
  CHECK(m22.is_free);
  CHECK(m22.scope == "module");
  auto m21 = freeness_module(2, 1, 6, 12);
  CHECK(m21.is_free);
  auto vac = freeness_vertexalg(2, 5, 6, 12);
  CHECK(m21.jet == vac.jet);
  CHECK(m21.gr == vac.gr);
  for (int s = 2; s <= 3; ++s)
    for (int i = 1; i <= s; ++i) {
      auto v = freeness_module(s, i, 6, 12);
      CHECK(v.is_free);
      CHECK(v.surjective);
    }
}

TEST_CASE("table comparison") {
  BigradedTable a(2, 3, 0, FiltrationTag::li);
  BigradedTable b(2, 3, 0, FiltrationTag::li);
  a(1, 2) = 3;
  b(1, 2) = 2;
  a(0, 3) = 1;
  b(2, 1) = 1;
  auto v = compare_tables("vertex-algebra", a, b);
  CHECK_FALSE(v.is_free);
  CHECK_FALSE(v.surjective);
  REQUIRE(v.first_deficit);
  CHECK(v.first_deficit->weight == 1);
  CHECK(v.first_deficit->li_degree == 2);
  CHECK_THROWS_AS(compare_tables("x", a, BigradedTable(1, 3, 0, FiltrationTag::li)), std::invalid_argument);
}
