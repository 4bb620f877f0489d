#pragma once

#include "bmm/series.hpp"

#include <string>
#include <vector>

namespace bmm {

// Minimal-model data for coprime p, q >= 2 and 0 < m < p, 0 < n < q.
struct ModelParams {
  int p;
  int q;
  int m;
  int n;
  Rational c;  // 1 - 6 (p - q)^2 / (p q)
  Rational h;  // ((n p - m q)^2 - (p - q)^2) / (4 p q)
};

// Throws std::invalid_argument on non-coprime or out-of-range input.
ModelParams model_params(int p, int q, int m, int n);

// The (s, i) boundary model: p = 2, q = 2s + 1, m = 1, n = i.
ModelParams boundary_params(int s, int i);

// Central charge alone, for coprime p, q >= 2.
Rational central_charge(int p, int q);

// Quadratic-form data of the Gordon/Nahm sums for a given s: the
// (s-1)x(s-1) matrix 2 min(i, j) and the vectors (0,...,0,1,2,...,j).
struct NahmData {
  int s;
  std::vector<std::vector<long>> G;
  std::vector<std::vector<long>> B;  // B[j] for j = 0..s-1, each of length s-1

  explicit NahmData(int s);

  // (1/2) k G k^T, an integer.
  long half_quadratic(const std::vector<long>& k) const;
  long linear(const std::vector<long>& k, int j) const;
};

// Left side of the Gordon identity: sum over k in N^{s-1} of
// q^{kGk^T/2 + k B_{s-i}} / prod (q)_{k_j}, through q^N.
QSeries gordon_lhs(int s, int i, int N);
// Right side: the restricted product.
QSeries gordon_rhs(int s, int i, int N);

// Refined Nahm sum with t^{k B_{s-1}}, offset h_{1,i}.
BivariateSeries nahm_refined(int s, int i, int T, int N);

// q^{h_{m,n}} / (q)_inf * sum_k (q^{k^2 pq + k(mq - np)} - q^{k^2 pq + k(mq + np) + mn}).
QSeries feigin_fuchs(int p, int q, int m, int n, int N);

enum class ClosedKind { verma_pbw, verma_standard, ising_pbw, grF_universal_vacuum, grF_verma };

// Throws std::invalid_argument for an unknown name.
ClosedKind parse_closed_kind(const std::string& name);
std::string to_string(ClosedKind kind);

// Closed-form refined characters expanded through (T, N). The highest
// weight h sets the offset for the Verma kinds and is ignored otherwise.
BivariateSeries closed_refined(ClosedKind kind, const Rational& h, int T, int N);

}  // namespace bmm
