#include "bmm/jet.hpp"

#include "bmm/characters.hpp"

#include <stdexcept>

namespace bmm {

JetPolynomial derivative(const JetPolynomial& f) {
  JetPolynomial out;
  for (const auto& [lambda, coeff] : f) {
    const auto& parts = lambda.parts();
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k > 0 && parts[k] == parts[k - 1]) continue;
      const int j = parts[k];
      std::vector<int> raised = parts;
      raised[k] = j + 1;
      Rational term = coeff * lambda.multiplicity(j) * (j - 1);
      auto& slot = out[Partition(std::move(raised))];
      slot += term;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

JetPolynomial multiply(const Partition& monomial, const JetPolynomial& f) {
  JetPolynomial out;
  for (const auto& [lambda, coeff] : f) out.emplace(monomial + lambda, coeff);
  return out;
}

ZhuAlgebra zhu_algebra(int p, int q) {
  central_charge(p, q);
  ZhuAlgebra z;
  z.t = (p - 1) * (q - 1) / 2;
  for (int k = 0; k < z.t; ++k) z.dims[2 * k] = 1;
  return z;
}

namespace {

bool jet_monomial(const Partition& p) { return p.empty() || p.smallest() >= 2; }

std::vector<Partition> monomials_at(int d, int n) {
  return enumerate_partitions(n, [d](const Partition& p) { return jet_monomial(p) && p.li_degree() == d; });
}

struct Generator {
  int li;
  int weight;
  JetPolynomial poly;
};

// All derivatives of g up to Li-degree T and weight N.
std::vector<Generator> derivatives(const JetPolynomial& g, int li, int weight, int T, int N) {
  std::vector<Generator> out;
  JetPolynomial cur = g;
  for (int k = 0; li + k <= T && weight + k <= N; ++k) {
    out.push_back({li + k, weight + k, cur});
    cur = derivative(cur);
  }
  return out;
}

// Adds every monomial multiple of the generators landing at (d, n) to `space`.
void add_multiples(RowSpace& space, const std::map<Partition, std::size_t>& index,
                   const std::vector<Generator>& gens, int d, int n) {
  for (const auto& g : gens) {
    if (g.li > d || g.weight > n) continue;
    for (const auto& m : monomials_at(d - g.li, n - g.weight)) {
      RationalVector row(index.size());
      for (const auto& [lambda, coeff] : multiply(m, g.poly)) row[index.at(lambda)] += coeff;
      space.add(std::move(row));
    }
  }
}

template <typename Fill>
BigradedTable per_bidegree(int T, int N, Rational offset, Fill fill) {
  BigradedTable out(T, N, std::move(offset), FiltrationTag::li);
  const long cells = static_cast<long>(T + 1) * (N + 1);
  std::vector<long> values(static_cast<std::size_t>(cells), 0);
#pragma omp parallel for schedule(dynamic)
  for (long cell = 0; cell < cells; ++cell) {
    const int d = static_cast<int>(cell / (N + 1));
    const int n = static_cast<int>(cell % (N + 1));
    values[cell] = fill(d, n);
  }
  for (long cell = 0; cell < cells; ++cell)
    out(static_cast<int>(cell / (N + 1)), static_cast<int>(cell % (N + 1))) = values[cell];
  return out;
}

std::map<Partition, std::size_t> index_of(const std::vector<Partition>& basis) {
  std::map<Partition, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  return index;
}

JetPolynomial power_of_x2(int t) { return {{Partition::repeated(2, t), Rational(1)}}; }

}  // namespace

BigradedTable jet_quotient_bigraded(int t, int T, int N) {
  if (t < 1) throw std::invalid_argument("jet_quotient_bigraded: t must be positive");
  const auto gens = derivatives(power_of_x2(t), 0, 2 * t, T, N);
  return per_bidegree(T, N, 0, [&](int d, int n) -> long {
    const auto basis = monomials_at(d, n);
    if (basis.empty()) return 0;
    RowSpace ideal(basis.size());
    add_multiples(ideal, index_of(basis), gens, d, n);
    return static_cast<long>(basis.size() - ideal.dimension());
  });
}

BigradedTable ising_kernel_profile(int T, int N) {
  const auto base = derivatives(power_of_x2(3), 0, 6, T, N);
  const JetPolynomial b = {{Partition{4, 3, 2}, Rational(1)}, {Partition{5, 2, 2}, make_rational(1, 6)}};
  const auto extra = derivatives(b, 3, 9, T, N);
  return per_bidegree(T, N, 0, [&](int d, int n) -> long {
    const auto basis = monomials_at(d, n);
    if (basis.empty()) return 0;
    const auto index = index_of(basis);
    RowSpace space(basis.size());
    add_multiples(space, index, base, d, n);
    const std::size_t before = space.dimension();
    add_multiples(space, index, extra, d, n);
    return static_cast<long>(space.dimension() - before);
  });
}

std::vector<long> zhu_module_dims(const Rational& c, const Rational& h, int N) {
  auto module = shared_module(c, h);
  module->gram(N);
  std::vector<long> out(static_cast<std::size_t>(N) + 1, 0);
#pragma omp parallel for schedule(dynamic)
  for (int n = N; n >= 0; --n) {
    const GramMatrix& g = module->gram(n);
    std::vector<std::size_t> small;
    for (std::size_t k = 0; k < g.basis.size(); ++k)
      if (g.basis[k].largest() <= 2) small.push_back(k);
    RowSpace projected(small.size());
    for (const auto& v : kernel_basis(g.matrix)) {
      RationalVector row(small.size());
      for (std::size_t k = 0; k < small.size(); ++k) row[k] = v[small[k]];
      projected.add(std::move(row));
    }
    out[n] = static_cast<long>(small.size() - projected.dimension());
  }
  return out;
}

BigradedTable jet_module_bigraded(int s, int i, int T, int N) {
  const ModelParams mp = boundary_params(s, i);
  BigradedTable out(T, N, mp.h, FiltrationTag::li);
  for (int n = 0; n <= N; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      if (in_P(s, i, lambda) && lambda.li_degree() <= T) ++out(lambda.li_degree(), n);
  return out;
}

FreenessVerdict compare_tables(std::string scope, BigradedTable jet, BigradedTable gr) {
  if (jet.T() != gr.T() || jet.N() != gr.N()) throw std::invalid_argument("tables have different truncations");
  FreenessVerdict v{std::move(scope), jet.T(), jet.N(), true, true, std::nullopt, jet, gr};
  for (int n = 0; n <= jet.N(); ++n)
    for (int d = 0; d <= jet.T(); ++d) {
      if (jet(d, n) < gr(d, n)) v.surjective = false;
      if (jet(d, n) != gr(d, n) && !v.first_deficit) {
        v.is_free = false;
        v.first_deficit = Deficit{d, n, jet(d, n), gr(d, n)};
      }
    }
  return v;
}

FreenessVerdict freeness_vertexalg(int p, int q, int T, int N) {
  const ZhuAlgebra z = zhu_algebra(p, q);
  return compare_tables("vertex-algebra", jet_quotient_bigraded(z.t, T, N), li_refined_vacuum(p, q, T, N));
}

FreenessVerdict freeness_module(int s, int i, int T, int N) {
  const ModelParams mp = boundary_params(s, i);
  return compare_tables("module", jet_module_bigraded(s, i, T, N), li_refined_irr(mp.c, mp.h, T, N));
}

}  // namespace bmm
