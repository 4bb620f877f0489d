#pragma once

#include "bmm/verma.hpp"

#include <set>
#include <string>
#include <vector>

namespace bmm {

enum class FiltrationTag { pbw, li };

// Dense table of dimensions indexed by (filtration degree p <= T, weight n <= N),
// sitting over the module's base weight `offset`.
class BigradedTable {
 public:
  BigradedTable(int T, int N, Rational offset, FiltrationTag tag);

  int T() const { return T_; }
  int N() const { return N_; }
  const Rational& offset() const { return offset_; }
  FiltrationTag tag() const { return tag_; }

  long operator()(int p, int n) const;
  long& operator()(int p, int n);

  // Sum over p <= T at weight n.
  long column_sum(int n) const;

  BivariateSeries to_series() const;

  bool operator==(const BigradedTable&) const = default;

 private:
  int T_;
  int N_;
  Rational offset_;
  FiltrationTag tag_;
  std::vector<long> data_;
};

// Number of partitions of n with p parts, q^h/prod (1 - t q^k).
BigradedTable pbw_refined_verma(const Rational& h, int T, int N);
// Number of partitions of n with Li-degree p: the Verma module's Li table.
BigradedTable li_refined_verma(const Rational& h, int T, int N);

// PBW-filtration refined character of L(c,h) from Gram row ranks: rows of
// length <= p span the p-th filtered piece of the quotient.
BigradedTable pbw_refined_irr(const Rational& c, const Rational& h, int T, int N);
// Li-filtration refined character of L(c,h): rows of Li-degree >= p.
BigradedTable li_refined_irr(const Rational& c, const Rational& h, int T, int N);
// Li-filtration refined character of the simple quotient of the vacuum module at c_{p,q}.
BigradedTable li_refined_vacuum(int p, int q, int T, int N);

// Leading monomials of the graded pieces of the radical at weight n: for each
// p, length-p symbols of the radical vectors supported on lengths <= p.
std::set<Partition> k_leading_monomials(const Rational& c, const Rational& h, int n);
// Same set read off an echelon form of the radical with columns in
// MonomialOrder descending.
std::set<Partition> k_leading_monomials_direct(const Rational& c, const Rational& h, int n);

struct BasisCheck {
  int n = 0;
  std::vector<Partition> basis;  // partitions of n in P^{s,i}, MonomialOrder descending
  std::size_t irr_dim = 0;
  bool gram_route = false;      // Gram submatrix on basis is nonsingular and the size is irr_dim
  bool standard_route = false;  // complement of the leading monomials is exactly the basis
  bool ok() const { return gram_route && standard_route; }
};

BasisCheck theorem2_basis_check(int s, int i, int n);

}  // namespace bmm
