#pragma once

#include "bmm/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bmm {

// Truncated power series q^offset * sum_{n=0}^{N} a_n q^n with exact
// coefficients. Coefficients above N are unknown, not zero: every comparison
// is limited to the common truncation, and asking beyond it throws.
class QSeries {
 public:
  explicit QSeries(int truncation, Rational offset = 0);

  static QSeries one(int truncation);
  // coeff * q^exponent (zero if exponent > truncation).
  static QSeries monomial(int exponent, int truncation, const Rational& coeff = 1);
  static QSeries from_coefficients(std::vector<Rational> coeffs, Rational offset = 0);

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& offset() const { return offset_; }
  void set_offset(Rational offset) { offset_ = std::move(offset); }

  const Rational& operator[](int n) const;
  Rational& operator[](int n);
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  QSeries truncated(int truncation) const;

  QSeries& operator+=(const QSeries& other);
  QSeries& operator-=(const QSeries& other);
  QSeries& operator*=(const Rational& scalar);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
  friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }

  // Truncated Cauchy product; truncation is the minimum, offsets add.
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  // Multiplicative inverse through the same truncation; the offset negates.
  // Throws std::domain_error when the constant term is zero.
  QSeries inverse() const;

  // Index of the first differing coefficient through `through`, or nullopt.
  // Throws std::invalid_argument if either series is truncated below
  // `through` or the offsets differ.
  static std::optional<int> first_mismatch(const QSeries& a, const QSeries& b, int through);

  // Equal offsets and equal coefficients through the common truncation.
  bool operator==(const QSeries& other) const;

  // "c0 + c1*q + ... + O(q^{N+1})", prefixed by "q^{offset}*(...)" when the
  // offset is nonzero.
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
  Rational offset_;
};

// Truncated series in (t, q): sum a_{p,n} t^p q^n for p <= T, n <= N, times
// q^offset.
class BivariateSeries {
 public:
  BivariateSeries(int t_truncation, int q_truncation, Rational offset = 0);

  static BivariateSeries one(int t_truncation, int q_truncation);
  static BivariateSeries monomial(int t_exp, int q_exp, int t_truncation, int q_truncation,
                                  const Rational& coeff = 1);

  int t_truncation() const { return t_trunc_; }
  int q_truncation() const { return q_trunc_; }
  const Rational& offset() const { return offset_; }
  void set_offset(Rational offset) { offset_ = std::move(offset); }

  const Rational& operator()(int p, int n) const;
  Rational& operator()(int p, int n);

  BivariateSeries truncated(int t_truncation, int q_truncation) const;

  BivariateSeries& operator+=(const BivariateSeries& other);
  BivariateSeries& operator-=(const BivariateSeries& other);
  friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
  friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);

  // Throws std::domain_error when the (0,0) coefficient is zero.
  BivariateSeries inverse() const;

  // Substitute t = 1. Every series here has t-exponent <= q-exponent, so the
  // result is exact through q^{min(T, N)}, which is its truncation.
  QSeries at_t_equals_one() const;

  bool operator==(const BivariateSeries& other) const;

  std::string str() const;

 private:
  std::size_t index(int p, int n) const;

  int t_trunc_;
  int q_trunc_;
  std::vector<Rational> table_;
  Rational offset_;
};

// (q)_k = prod_{j=1}^{k} (1 - q^j), truncated at N.
QSeries pochhammer(int k, int N);
// (q)_infinity truncated at N: the factors with j <= N.
QSeries pochhammer_infinity(int N);
// prod over n <= N, n not congruent to 0, +i, -i mod 2s+1, of (1 - q^n)^{-1}.
QSeries restricted_product(int s, int i, int N);

}  // namespace bmm
