#pragma once

#include "bmm/linalg.hpp"
#include "bmm/partition.hpp"

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace bmm {

// verma: M(c, h) with basis L_lambda |c,h>, lambda any partition.
// vacuum: the universal vacuum module Vir^c, basis L_lambda vac with all
// parts >= 2, where L_n vac = 0 for n >= -1 (so h = 0).
enum class ModuleKind { verma, vacuum };

using Terms = std::map<Partition, Rational>;

// Finite linear combination of PBW monomials L_{-l_1} ... L_{-l_m} applied to
// the highest-weight vector. Zero coefficients are never stored.
class PBWVector {
 public:
  PBWVector(Rational c, Rational h, ModuleKind kind = ModuleKind::verma);

  // The highest-weight vector |c,h> (or vac).
  static PBWVector highest_weight(Rational c, Rational h, ModuleKind kind = ModuleKind::verma);
  static PBWVector vacuum(Rational c) { return highest_weight(std::move(c), 0, ModuleKind::vacuum); }
  static PBWVector basis(Rational c, Rational h, ModuleKind kind, const Partition& lambda,
                         const Rational& coeff = 1);

  const Rational& c() const { return c_; }
  const Rational& h() const { return h_; }
  ModuleKind kind() const { return kind_; }
  const Terms& terms() const { return terms_; }

  Rational coefficient(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rational& coeff);
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Common weight above h of all terms, or nullopt when mixed (or zero).
  std::optional<int> level() const;
  // Homogeneous components keyed by level.
  std::map<int, PBWVector> by_level() const;

  // Drop every term with a part >= min_part.
  PBWVector drop_parts_at_least(int min_part) const;

  PBWVector& operator+=(const PBWVector& other);
  PBWVector& operator-=(const PBWVector& other);
  PBWVector& operator*=(const Rational& s);
  friend PBWVector operator+(PBWVector a, const PBWVector& b) { return a += b; }
  friend PBWVector operator-(PBWVector a, const PBWVector& b) { return a -= b; }
  friend PBWVector operator*(PBWVector a, const Rational& s) { return a *= s; }
  friend PBWVector operator*(const Rational& s, PBWVector a) { return a *= s; }

  bool operator==(const PBWVector& other) const;

  // Terms in MonomialOrder descending, e.g. "2*L_{-2}L_{-1}v - 2/5*L_{-3}v".
  std::string str() const;

 private:
  void check_compatible(const PBWVector& other) const;

  Rational c_;
  Rational h_;
  ModuleKind kind_;
  Terms terms_;
};

// Contravariant form at one level, basis in MonomialOrder descending.
struct GramMatrix {
  int level = 0;
  std::vector<Partition> basis;
  RationalMatrix matrix;
};

// One highest-weight module with memoized straightening. Every cache is keyed
// by this object's (c, h, kind) and guarded for concurrent readers.
class VirasoroModule {
 public:
  VirasoroModule(Rational c, Rational h, ModuleKind kind = ModuleKind::verma);
  VirasoroModule(const VirasoroModule&) = delete;
  VirasoroModule& operator=(const VirasoroModule&) = delete;

  const Rational& c() const { return c_; }
  const Rational& h() const { return h_; }
  ModuleKind kind() const { return kind_; }

  // PBW basis at weight h + n, MonomialOrder descending.
  const std::vector<Partition>& basis(int n) const;
  std::size_t index_of(const Partition& lambda) const;

  // L_k applied to a basis monomial, in normal form.
  Terms apply_basis(int k, const Partition& lambda) const;
  PBWVector apply(int k, const PBWVector& u) const;

  // Matrix of L_k from level n to level n - k (rows: target basis,
  // columns: source basis). Empty rows when n - k < 0.
  RationalMatrix mode_matrix(int k, int n) const;

  // Built recursively from lower levels, rows filled in parallel.
  const GramMatrix& gram(int n) const;
  // Entry-by-entry evaluation of L_{l_m} ... L_{l_1} L_{-mu} v, serial.
  GramMatrix gram_reference(int n) const;

  RationalVector coordinates(const PBWVector& u, int n) const;
  PBWVector from_coordinates(std::span<const Rational> coords, int n) const;

  PBWVector highest_weight() const { return PBWVector::highest_weight(c_, h_, kind_); }

 private:
  Rational c_;
  Rational h_;
  ModuleKind kind_;

  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<int, Partition>, Terms> straightened_;
  mutable std::map<int, std::vector<Partition>> bases_;
  mutable std::map<int, std::map<Partition, std::size_t>> indices_;
  mutable std::map<int, std::unique_ptr<GramMatrix>> grams_;
};

// Process-wide module registry so repeated calls at the same (c, h, kind)
// share caches.
std::shared_ptr<const VirasoroModule> shared_module(const Rational& c, const Rational& h,
                                                    ModuleKind kind = ModuleKind::verma);

PBWVector apply_mode(int k, const PBWVector& u);
GramMatrix gram(const Rational& c, const Rational& h, int n);
std::size_t irr_dim(const Rational& c, const Rational& h, int n);

// Basis of {u at level n : L_1 u = L_2 u = 0}, in echelon form: leading
// (MonomialOrder-largest) terms are distinct and have coefficient 1.
std::vector<PBWVector> singular_space(const Rational& c, const Rational& h, int n,
                                      ModuleKind kind = ModuleKind::verma);

// MonomialOrder-largest partition with nonzero coefficient. Throws
// std::invalid_argument on the zero vector.
Partition leading_power(const PBWVector& u);

// Normal form of L_{w_1} L_{w_2} ... L_{w_r} vac in Vir^c.
PBWVector vacuum_straighten(const Rational& c, const std::vector<int>& word);

// True when u pairs to zero with every basis vector at its level (u must be
// homogeneous), i.e. u lies in the radical of the contravariant form.
bool in_radical(const PBWVector& u);

}  // namespace bmm
