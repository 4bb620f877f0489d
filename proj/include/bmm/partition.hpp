#pragma once

#include "bmm/series.hpp"

#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace bmm {

// A partition: parts stored nonincreasing, all positive. The empty partition
// has no parts. As a monomial it is p_lambda = L_{-lambda_1} ... L_{-lambda_m}.
class Partition {
 public:
  Partition() = default;
  // Accepts parts in any order; they are sorted.
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // [value^count]
  static Partition repeated(int value, int count);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int len() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  // 2 * #(parts >= 2) + #(parts == 1)
  int clen() const;
  // weight - clen, the sum over parts >= 2 of (part - 2).
  int li_degree() const { return weight() - clen(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const { return parts_.empty() ? 0 : parts_.back(); }
  // f_n, the number of parts equal to n.
  int multiplicity(int n) const;

  // Multiset union: the monomial product p_lambda * p_mu.
  Partition operator+(const Partition& other) const;
  // Parts satisfying the predicate, in order.
  Partition filter(const std::function<bool(int)>& keep) const;

  std::string str() const;

  bool operator==(const Partition&) const = default;
  // Lexicographic on the parts list; a storage order only, see MonomialOrder.
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// A composition: positive parts in any order.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts) : parts_(parts) {}
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  // prt: the sorted partition.
  Partition sorted() const { return Partition(parts_); }

 private:
  std::vector<int> parts_;
};

// Degree reverse lexicographic order on monomials p_lambda with variables
// L_{-1} > L_{-2} > ...: longer monomials are larger; for equal lengths,
// compare exponents at the largest-index variable where they differ, and the
// monomial with the smaller exponent there is larger.
struct MonomialOrder {
  // -1, 0, +1 as lhs <, ==, > rhs.
  static int compare(const Partition& lhs, const Partition& rhs);
  static bool greater(const Partition& lhs, const Partition& rhs) { return compare(lhs, rhs) > 0; }
  static bool less(const Partition& lhs, const Partition& rhs) { return compare(lhs, rhs) < 0; }
};

using PartitionPredicate = std::function<bool(const Partition&)>;

// All partitions of n accepted by the predicate, MonomialOrder descending.
std::vector<Partition> enumerate_partitions(int n, const PartitionPredicate& keep = {});

// Number of partitions of n (unrestricted), by the pentagonal recurrence
// on an exact integer table.
long partition_count(int n);

// eta occurs as a consecutive window of lambda's sorted part list.
bool contains(const Partition& lambda, const Partition& eta);
// Monomial divisibility p_eta | p_lambda: multiplicities of eta bounded by lambda's.
bool divides(const Partition& eta, const Partition& lambda);

// Members of the forbidden-window family R^{s,i}: length s with
// lambda_1 - lambda_s <= 1, or [1^i].
bool in_R(int s, int i, const Partition& eta);

// All members of R^{s,i} whose largest part is at most max_part, deduplicated,
// MonomialOrder descending.
std::vector<Partition> r_members(int s, int i, int max_part);

// Gordon partition ideal P^{s,i}: partitions containing no window from R^{s,i}.
// This version checks multiplicities: f_1 <= i - 1 and f_a + f_{a+1} <= s - 1.
bool in_P(int s, int i, const Partition& lambda);

// The same ideal tested literally: scan every R^{s,i} member with largest
// part <= lambda_1 + 1 for containment.
bool in_P_by_containment(int s, int i, const Partition& lambda);

// The same ideal via monomial divisibility: no R^{s,i} member of weight at
// most |lambda| divides p_lambda.
bool in_P_by_divisibility(int s, int i, const Partition& lambda);

// Sum over lambda in P^{s,i} with |lambda| <= N of t^len q^|lambda|, by
// exhaustive enumeration. The t-truncation is N.
BivariateSeries p_si_bivariate(int s, int i, int N);

// Partitions of n whose parts avoid 0, +i, -i mod 2s+1, by a dynamic
// program over allowed parts.
long count_A(int s, int i, int n);

// Throws std::invalid_argument unless s >= 1 and 1 <= i <= s.
void check_si(int s, int i);

}  // namespace bmm
