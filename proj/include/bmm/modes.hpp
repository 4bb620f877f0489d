#pragma once

#include "bmm/verma.hpp"

#include <vector>

namespace bmm {

// The singular vector of the universal vacuum module at c_{p,q}, weight
// (p-1)(q-1), scaled so the coefficient of L_{-2}^{(p-1)(q-1)/2} is 1.
// Throws std::logic_error if the solution space is not one-dimensional.
PBWVector vacuum_singular(int p, int q);

// a_{(l)} u for a vacuum-module state a acting on a Verma-module vector u,
// through the normal-ordered product of derivative fields. Throws
// std::invalid_argument when the central charges differ.
PBWVector mode(const PBWVector& a, int l, const PBWVector& u);

// (L_{-2}^s vac)_{(l)} u summed term by term over the explicit multi-index
// expansion (subsets I, J of {1..s-1} and n_1..n_{s-1}), independently of mode().
PBWVector lemma2_mode(int s, int l, const PBWVector& u);

struct Descendant {
  PBWVector u;
  Partition lp;
  bool in_radical;
};

// u = (a_{2,2s+1})_{(s - sa + d - 1)} applied to the highest-weight vector of
// M(c_{2,2s+1}, h_{1,i}).
Descendant lemma10_descendant(int s, int i, int a, int d);

// The expected leading partition [a^d, (a+1)^{s-d}].
Partition lemma10_partition(int s, int a, int d);

// Level-i singular vector of M(c_{2,2s+1}, h_{1,i}), coefficient of [1^i]
// normalized to 1. Throws std::logic_error if it is not unique or lacks that term.
PBWVector benoit_singular(int s, int i);

struct ReducedGenerator {
  int k;
  PBWVector reduced;  // only terms with all parts <= 2
  Partition lp;
  Partition expected_lp;
};

// u_1 .. u_i: u_k for k < i from (a_{2,2s+1})_{(k-1)} v, u_i from the
// singular vector, each with every term containing a part >= 3 removed.
std::vector<ReducedGenerator> corollary1_generators(int s, int i);

}  // namespace bmm
