#include "bmm/characters.hpp"

#include "bmm/partition.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace bmm {

Rational central_charge(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw std::invalid_argument("p, q must be coprime integers >= 2");
  return 1 - make_rational(6L * (p - q) * (p - q), static_cast<long>(p) * q);
}

ModelParams model_params(int p, int q, int m, int n) {
  Rational c = central_charge(p, q);
  if (m <= 0 || m >= p || n <= 0 || n >= q)
    throw std::invalid_argument("need 0 < m < p and 0 < n < q");
  const long a = static_cast<long>(n) * p - static_cast<long>(m) * q;
  const long b = p - q;
  Rational h = make_rational(a * a - b * b, 4L * p * q);
  return {p, q, m, n, c, h};
}

ModelParams boundary_params(int s, int i) {
  check_si(s, i);
  return model_params(2, 2 * s + 1, 1, i);
}

NahmData::NahmData(int s_) : s(s_) {
  if (s < 1) throw std::invalid_argument("NahmData: s must be positive");
  const int dim = s - 1;
  G.assign(dim, std::vector<long>(dim, 0));
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) G[a][b] = 2L * std::min(a + 1, b + 1);
  B.assign(s, std::vector<long>(dim, 0));
  for (int j = 0; j < s; ++j)
    for (int r = 1; r <= j; ++r) B[j][dim - j + r - 1] = r;
}

long NahmData::half_quadratic(const std::vector<long>& k) const {
  long acc = 0;
  for (std::size_t a = 0; a < k.size(); ++a)
    for (std::size_t b = 0; b < k.size(); ++b) acc += k[a] * G[a][b] * k[b];
  return acc / 2;
}

long NahmData::linear(const std::vector<long>& k, int j) const {
  long acc = 0;
  for (std::size_t a = 0; a < k.size(); ++a) acc += k[a] * B[j][a];
  return acc;
}

namespace {

// Visits every k in N^{s-1} whose exponent kGk^T/2 + kB_{s-i} is <= N.
// Raising any k_j raises the exponent (all coefficients are nonnegative and
// the diagonal of G is positive), so the search prunes on the partial tuple
// with the remaining entries at zero.
void for_each_nahm_vector(const NahmData& data, int i, int N,
                          const std::function<void(const std::vector<long>&, long)>& visit) {
  const int dim = data.s - 1;
  std::vector<long> k(dim, 0);
  const int lin = data.s - i;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == dim) {
      visit(k, data.half_quadratic(k) + data.linear(k, lin));
      return;
    }
    for (long v = 0;; ++v) {
      k[pos] = v;
      const long e = data.half_quadratic(k) + data.linear(k, lin);
      if (e > N) break;
      rec(pos + 1);
    }
    k[pos] = 0;
  };
  rec(0);
}

std::vector<QSeries> inverse_pochhammers(int N) {
  std::vector<QSeries> out;
  for (int k = 0; k <= N; ++k) out.push_back(pochhammer(k, N).inverse());
  return out;
}

}  // namespace

QSeries gordon_lhs(int s, int i, int N) {
  check_si(s, i);
  NahmData data(s);
  auto inv = inverse_pochhammers(N);
  QSeries out(N);
  for_each_nahm_vector(data, i, N, [&](const std::vector<long>& k, long e) {
    QSeries term = QSeries::monomial(static_cast<int>(e), N);
    for (long kj : k) term = term * inv[static_cast<std::size_t>(std::min<long>(kj, N))];
    out += term;
  });
  return out;
}

QSeries gordon_rhs(int s, int i, int N) { return restricted_product(s, i, N); }

BivariateSeries nahm_refined(int s, int i, int T, int N) {
  ModelParams mp = boundary_params(s, i);
  NahmData data(s);
  auto inv = inverse_pochhammers(N);
  BivariateSeries out(T, N, mp.h);
  for_each_nahm_vector(data, i, N, [&](const std::vector<long>& k, long e) {
    const long tdeg = data.linear(k, s - 1);
    if (tdeg > T) return;
    QSeries term = QSeries::monomial(static_cast<int>(e), N);
    for (long kj : k) term = term * inv[static_cast<std::size_t>(std::min<long>(kj, N))];
    for (int n = 0; n <= N; ++n) out(static_cast<int>(tdeg), n) += term[n];
  });
  return out;
}

QSeries feigin_fuchs(int p, int q, int m, int n, int N) {
  ModelParams mp = model_params(p, q, m, n);
  const long pq = static_cast<long>(p) * q;
  const long lin1 = static_cast<long>(m) * q - static_cast<long>(n) * p;
  const long lin2 = static_cast<long>(m) * q + static_cast<long>(n) * p;
  const long mn = static_cast<long>(m) * n;
  QSeries theta(N);
  auto add_k = [&](long k) {
    const long e1 = k * k * pq + k * lin1;
    const long e2 = k * k * pq + k * lin2 + mn;
    if (e1 <= N) theta[static_cast<int>(e1)] += 1;
    if (e2 <= N) theta[static_cast<int>(e2)] -= 1;
    return e1 <= N || e2 <= N;
  };
  add_k(0);
  // For |k| >= 1 both exponents are strictly increasing in |k| (|mq - np| < pq,
  // and e2 = (kq + n)(kp + m)), so the first |k| with both above N ends the walk.
  for (long k = 1; add_k(k); ++k) {
  }
  for (long k = -1; add_k(k); --k) {
  }
  QSeries out = theta * pochhammer_infinity(N).inverse();
  out.set_offset(mp.h);
  return out;
}

ClosedKind parse_closed_kind(const std::string& name) {
  if (name == "verma-pbw") return ClosedKind::verma_pbw;
  if (name == "verma-standard") return ClosedKind::verma_standard;
  if (name == "ising-pbw") return ClosedKind::ising_pbw;
  if (name == "grF-universal-vacuum") return ClosedKind::grF_universal_vacuum;
  if (name == "grF-verma") return ClosedKind::grF_verma;
  throw std::invalid_argument("unknown refined-character kind: " + name);
}

std::string to_string(ClosedKind kind) {
  switch (kind) {
    case ClosedKind::verma_pbw: return "verma-pbw";
    case ClosedKind::verma_standard: return "verma-standard";
    case ClosedKind::ising_pbw: return "ising-pbw";
    case ClosedKind::grF_universal_vacuum: return "grF-universal-vacuum";
    case ClosedKind::grF_verma: return "grF-verma";
  }
  return "?";
}

namespace {

// 1 - t^a q^b
BivariateSeries one_minus(int a, int b, int T, int N) {
  return BivariateSeries::one(T, N) - BivariateSeries::monomial(a, b, T, N);
}

BivariateSeries ising_pbw(int T, int N) {
  BivariateSeries out(T, N);
  auto inv = inverse_pochhammers(N);
  for (long k1 = 0; 4 * k1 * k1 <= N; ++k1)
    for (long k2 = 0; 4 * k1 * k1 + 3 * k1 * k2 + k2 * k2 <= N; ++k2) {
      const long tdeg = 2 * k1 + k2;
      if (tdeg > T) continue;
      const long e = 4 * k1 * k1 + 3 * k1 * k2 + k2 * k2;
      QSeries bracket = QSeries::one(N) - QSeries::monomial(static_cast<int>(k1), N) +
                        QSeries::monomial(static_cast<int>(k1 + k2), N);
      QSeries term = QSeries::monomial(static_cast<int>(e), N) * bracket *
                     inv[static_cast<std::size_t>(k1)] * inv[static_cast<std::size_t>(k2)];
      for (int n = 0; n <= N; ++n) out(static_cast<int>(tdeg), n) += term[n];
    }
  return out;
}

}  // namespace

BivariateSeries closed_refined(ClosedKind kind, const Rational& h, int T, int N) {
  BivariateSeries denom = BivariateSeries::one(T, N);
  switch (kind) {
    case ClosedKind::verma_pbw:
      for (int k = 1; k <= N; ++k) denom = denom * one_minus(1, k, T, N);
      break;
    case ClosedKind::verma_standard:
      denom = one_minus(1, 1, T, N);
      for (int k = 2; k <= N; ++k) denom = denom * one_minus(2, k, T, N);
      break;
    case ClosedKind::ising_pbw:
      return ising_pbw(T, N);
    case ClosedKind::grF_universal_vacuum:
    case ClosedKind::grF_verma:
      for (int k = 2; k <= N; ++k)
        if (k - 2 <= T) denom = denom * one_minus(k - 2, k, T, N);
      if (kind == ClosedKind::grF_verma) denom = denom * one_minus(0, 1, T, N);
      break;
  }
  BivariateSeries out = denom.inverse();
  if (kind != ClosedKind::grF_universal_vacuum) out.set_offset(h);
  else out.set_offset(0);
  return out;
}

}  // namespace bmm
