#pragma once

#include "bmm/filtration.hpp"

#include <map>
#include <optional>
#include <string>

namespace bmm {

// Polynomial in x_2, x_3, ... with x_j of weight j and Li-degree j - 2; a
// monomial is the partition of its indices.
using JetPolynomial = std::map<Partition, Rational>;

// The derivation with d x_j = (j - 1) x_{j+1}.
JetPolynomial derivative(const JetPolynomial& f);
JetPolynomial multiply(const Partition& monomial, const JetPolynomial& f);

struct ZhuAlgebra {
  int t = 0;                 // C[x]/(x^t), x of weight 2
  std::map<int, long> dims;  // nonzero graded dimensions
};

// t = (p-1)(q-1)/2.
ZhuAlgebra zhu_algebra(int p, int q);

// Bigraded dimensions (Li-degree, weight) of C[x_2, x_3, ...] modulo the
// differential ideal generated by x_2^t.
BigradedTable jet_quotient_bigraded(int t, int T, int N);

// dim of M(c,h)_n modulo (span of monomials with a part >= 3) + radical, n <= N.
std::vector<long> zhu_module_dims(const Rational& c, const Rational& h, int N);

// Number of lambda in P^{s,i} by (Li-degree, weight), offset h_{1,i}.
BigradedTable jet_module_bigraded(int s, int i, int T, int N);

struct Deficit {
  int li_degree;
  int weight;
  long jet_dim;
  long gr_dim;
};

struct FreenessVerdict {
  std::string scope;  // "vertex-algebra" or "module"
  int T = 0;
  int N = 0;
  bool is_free = false;
  bool surjective = false;  // jet >= gr at every bidegree
  std::optional<Deficit> first_deficit;
  BigradedTable jet;
  BigradedTable gr;
};

// Compares the two tables; the first deficit is the first differing entry in
// (weight, Li-degree) lexicographic order.
FreenessVerdict compare_tables(std::string scope, BigradedTable jet, BigradedTable gr);

FreenessVerdict freeness_vertexalg(int p, int q, int T, int N);
FreenessVerdict freeness_module(int s, int i, int T, int N);

// Bigraded dimensions of the differential ideal generated by
// b = x_4 x_3 x_2 + (1/6) x_5 x_2^2 in C[x_2, x_3, ...] / (x_2^3).
BigradedTable ising_kernel_profile(int T, int N);

}  // namespace bmm
