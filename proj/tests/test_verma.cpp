#include "bmm/characters.hpp"
#include "bmm/verma.hpp"

#include <doctest.h>

#include <random>

using namespace bmm;

namespace {

const Rational kC = make_rational(7, 3);
const Rational kH = make_rational(5, 7);

PBWVector random_vector(std::mt19937& rng, const Rational& c, const Rational& h, ModuleKind kind, int max_level) {
  PBWVector u(c, h, kind);
  std::uniform_int_distribution<int> level(0, max_level);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto module = shared_module(c, h, kind);
  for (int k = 0; k < 4; ++k) {
    const auto& basis = module->basis(level(rng));
    if (basis.empty()) continue;
    const auto& lambda = basis[rng() % basis.size()];
    u.add_term(lambda, coeff(rng));
  }
  return u;
}

}  // namespace

TEST_CASE("mode action examples") {
  const Rational c = make_rational(-3, 4);
  const Rational h = make_rational(2, 9);
  auto v1 = PBWVector::basis(c, h, ModuleKind::verma, Partition{1});
  CHECK(apply_mode(1, v1) == PBWVector::highest_weight(c, h) * (2 * h));
  auto v2 = PBWVector::basis(c, h, ModuleKind::verma, Partition{2});
  CHECK(apply_mode(2, v2) == PBWVector::highest_weight(c, h) * (4 * h + c / 2));
  auto w = PBWVector::basis(c, h, ModuleKind::verma, Partition{3, 1}, 2) +
           PBWVector::basis(c, h, ModuleKind::verma, Partition{2, 1, 1}, -5);
  CHECK(apply_mode(0, w) == w * (h + 4));
  CHECK(apply_mode(5, PBWVector::highest_weight(c, h)).is_zero());
  CHECK(apply_mode(-3, v1) == PBWVector::basis(c, h, ModuleKind::verma, Partition{3, 1}));
}

TEST_CASE("vacuum straightening") {
  const Rational c = make_rational(1, 2);
  CHECK(vacuum_straighten(c, {-1}).is_zero());
  CHECK(vacuum_straighten(c, {-1, -2}) == PBWVector::basis(c, 0, ModuleKind::vacuum, Partition{3}));
  CHECK(vacuum_straighten(c, {2, -2}) == PBWVector::vacuum(c) * (c / 2));
  CHECK(vacuum_straighten(c, {0, -3, -2}) == PBWVector::basis(c, 0, ModuleKind::vacuum, Partition{3, 2}, 5));
  CHECK(vacuum_straighten(c, {}) == PBWVector::vacuum(c));
}

TEST_CASE("bracket consistency") {
  std::mt19937 rng(424242);
  struct Case {
    Rational c, h;
    ModuleKind kind;
  };
  std::vector<Case> cases{{kC, kH, ModuleKind::verma},
                          {make_rational(-22, 5), make_rational(-1, 5), ModuleKind::verma},
                          {make_rational(1, 2), 0, ModuleKind::vacuum}};
  for (const auto& cs : cases)
    for (int trial = 0; trial < 6; ++trial) {
      PBWVector u = random_vector(rng, cs.c, cs.h, cs.kind, 4);
      for (int k = -4; k <= 4; ++k)
        for (int m = -4; m <= 4; ++m) {
          PBWVector lhs = apply_mode(k, apply_mode(m, u)) - apply_mode(m, apply_mode(k, u));
          PBWVector rhs = apply_mode(k + m, u) * Rational(k - m);
          if (k == -m) rhs += u * (make_rational(k * k * k - k, 12) * cs.c);
          CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("Gram matrices") {
  const Rational c = make_rational(-3, 4);
  const Rational h = make_rational(2, 9);
  CHECK(gram(c, h, 0).matrix == RationalMatrix{{1}});
  CHECK(gram(c, h, 1).matrix == RationalMatrix{{2 * h}});
  GramMatrix g2 = gram(c, h, 2);
  REQUIRE(g2.basis == std::vector<Partition>{{1, 1}, {2}});
  CHECK(g2.matrix == RationalMatrix{{4 * h * (2 * h + 1), 6 * h}, {6 * h, 4 * h + c / 2}});

  for (int n = 0; n <= 6; ++n) {
    VirasoroModule fresh(c, h);
    GramMatrix ref = fresh.gram_reference(n);
    const GramMatrix& g = fresh.gram(n);
    CHECK(g.basis == ref.basis);
    CHECK(g.matrix == ref.matrix);
    CHECK(g.matrix == g.matrix.transpose());
  }
  VirasoroModule vac(make_rational(1, 2), 0, ModuleKind::vacuum);
  for (int n = 0; n <= 8; ++n) {
    CHECK(vac.gram(n).matrix == vac.gram_reference(n).matrix);
    CHECK(vac.gram(n).matrix == vac.gram(n).matrix.transpose());
  }
}

TEST_CASE("vacuum Gram equals the Verma Gram at h = 0 on parts >= 2") {
  const Rational c = make_rational(-22, 5);
  auto vac = shared_module(c, 0, ModuleKind::vacuum);
  auto verma = shared_module(c, 0);
  for (int n = 0; n <= 8; ++n) {
    const auto& gv = vac->gram(n);
    const auto& gm = verma->gram(n);
    for (std::size_t r = 0; r < gv.basis.size(); ++r)
      for (std::size_t k = 0; k < gv.basis.size(); ++k)
        CHECK(gv.matrix(r, k) == gm.matrix(verma->index_of(gv.basis[r]), verma->index_of(gv.basis[k])));
  }
}

TEST_CASE("irreducible dimensions") {
  CHECK(irr_dim(0, 0, 2) == 0);
  CHECK(irr_dim(make_rational(-22, 5), make_rational(-1, 5), 4) == 2);
  CHECK(irr_dim(kC, kH, 4) == 5);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(1, 97);
  for (int trial = 0; trial < 3; ++trial) {
    const Rational c = make_rational(d(rng), d(rng));
    const Rational h = make_rational(d(rng), d(rng));
    for (int n = 0; n <= 8; ++n) CHECK(static_cast<long>(irr_dim(c, h, n)) == partition_count(n));
  }
  auto ising = model_params(3, 4, 1, 1);
  QSeries ff = feigin_fuchs(3, 4, 1, 1, 10);
  for (int n = 0; n <= 10; ++n) CHECK(ff[n] == static_cast<long>(irr_dim(ising.c, ising.h, n)));
}

TEST_CASE("singular vectors") {
  auto s1 = singular_space(kC, 0, 1);
  REQUIRE(s1.size() == 1);
  CHECK(s1[0] == PBWVector::basis(kC, 0, ModuleKind::verma, Partition{1}));

  const Rational c = make_rational(-22, 5);
  const Rational h = make_rational(-1, 5);
  auto s2 = singular_space(c, h, 2);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0] == PBWVector::basis(c, h, ModuleKind::verma, Partition{1, 1}) -
                     PBWVector::basis(c, h, ModuleKind::verma, Partition{2}, make_rational(2, 5)));
  for (int n = 1; n <= 4; ++n) CHECK(singular_space(kC, kH, n).empty());

  // Singular vectors pair to zero with everything at their level.
  for (int n = 1; n <= 6; ++n)
    for (const auto& u : singular_space(c, h, n)) {
      CHECK(in_radical(u));
      CHECK(apply_mode(1, u).is_zero());
      CHECK(apply_mode(2, u).is_zero());
      CHECK(apply_mode(3, u).is_zero());
    }
}

TEST_CASE("leading power") {
  const Rational c = 1;
  const Rational h = 1;
  auto u = PBWVector::basis(c, h, ModuleKind::verma, Partition{2, 1}) +
           PBWVector::basis(c, h, ModuleKind::verma, Partition{3}, 7);
  CHECK(leading_power(u) == Partition{2, 1});
  auto w = PBWVector::basis(c, h, ModuleKind::verma, Partition{3, 3}) +
           PBWVector::basis(c, h, ModuleKind::verma, Partition{4, 2});
  CHECK(leading_power(w) == Partition{3, 3});
  CHECK(leading_power(PBWVector::basis(c, h, ModuleKind::verma, Partition{5, 1}, -2)) == Partition{5, 1});
  CHECK_THROWS_AS(leading_power(PBWVector(c, h)), std::invalid_argument);

  // lp(a * b) = lp(a) + lp(b) for monomial products: the order is a monomial order.
  auto parts = enumerate_partitions(5);
  for (const auto& a : parts)
    for (const auto& b : parts)
      for (const auto& x : enumerate_partitions(4)) {
        if (!MonomialOrder::greater(a, b)) continue;
        CHECK(MonomialOrder::greater(a + x, b + x));
      }
}

TEST_CASE("PBW vector rendering and validation") {
  const Rational c = make_rational(-22, 5);
  auto u = PBWVector::basis(c, 0, ModuleKind::vacuum, Partition{2, 2}) -
           PBWVector::basis(c, 0, ModuleKind::vacuum, Partition{4}, make_rational(3, 5));
  CHECK(u.str() == "L_{-2}L_{-2}vac - 3/5*L_{-4}vac");
  CHECK(PBWVector(c, 0).str() == "0");
  CHECK_THROWS_AS(PBWVector::basis(c, 0, ModuleKind::vacuum, Partition{2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PBWVector(c, 1, ModuleKind::vacuum), std::invalid_argument);
  CHECK_THROWS_AS(u + PBWVector(c, 0), std::invalid_argument);
}
