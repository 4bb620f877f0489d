#include "bmm/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bmm {

namespace {

void require_same_offset(const Rational& a, const Rational& b) {
  if (a != b) throw std::invalid_argument("series offsets differ");
}

std::string term(const Rational& c, const std::string& var_part, bool first) {
  std::string out;
  Rational mag = abs(c);
  if (first) {
    if (sgn(c) < 0) out += "-";
  } else {
    out += sgn(c) < 0 ? " - " : " + ";
  }
  if (var_part.empty()) {
    out += to_string(mag);
  } else if (mag == 1) {
    out += var_part;
  } else {
    out += to_string(mag) + "*" + var_part;
  }
  return out;
}

std::string power(const char* var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------- QSeries

QSeries::QSeries(int truncation, Rational offset) : offset_(std::move(offset)) {
  if (truncation < 0) throw std::invalid_argument("negative truncation");
  coeffs_.assign(static_cast<std::size_t>(truncation) + 1, Rational(0));
}

QSeries QSeries::one(int truncation) { return monomial(0, truncation); }

QSeries QSeries::monomial(int exponent, int truncation, const Rational& coeff) {
  QSeries s(truncation);
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent <= truncation) s[exponent] = coeff;
  return s;
}

QSeries QSeries::from_coefficients(std::vector<Rational> coeffs, Rational offset) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  QSeries s(static_cast<int>(coeffs.size()) - 1, std::move(offset));
  s.coeffs_ = std::move(coeffs);
  return s;
}

const Rational& QSeries::operator[](int n) const {
  if (n < 0 || n > truncation()) throw std::out_of_range("coefficient beyond truncation");
  return coeffs_[static_cast<std::size_t>(n)];
}

Rational& QSeries::operator[](int n) {
  if (n < 0 || n > truncation()) throw std::out_of_range("coefficient beyond truncation");
  return coeffs_[static_cast<std::size_t>(n)];
}

QSeries QSeries::truncated(int t) const {
  if (t > truncation()) throw std::invalid_argument("cannot extend a truncated series");
  QSeries s(t, offset_);
  std::copy_n(coeffs_.begin(), t + 1, s.coeffs_.begin());
  return s;
}

QSeries& QSeries::operator+=(const QSeries& other) {
  require_same_offset(offset_, other.offset_);
  const int n = std::min(truncation(), other.truncation());
  coeffs_.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& other) {
  require_same_offset(offset_, other.offset_);
  const int n = std::min(truncation(), other.truncation());
  coeffs_.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int n = std::min(a.truncation(), b.truncation());
  QSeries out(n, a.offset_ + b.offset_);
  for (int i = 0; i <= n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (int j = 0; i + j <= n; ++j)
      if (sgn(b.coeffs_[j]) != 0) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

QSeries QSeries::inverse() const {
  if (sgn(coeffs_[0]) == 0) throw std::domain_error("series with zero constant term is not a unit");
  const int n = truncation();
  QSeries out(n, -offset_);
  const Rational inv0 = 1 / coeffs_[0];
  out.coeffs_[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j)
      if (sgn(coeffs_[j]) != 0) acc += coeffs_[j] * out.coeffs_[k - j];
    out.coeffs_[k] = -acc * inv0;
  }
  return out;
}

std::optional<int> QSeries::first_mismatch(const QSeries& a, const QSeries& b, int through) {
  if (through > a.truncation() || through > b.truncation())
    throw std::invalid_argument("comparison beyond series truncation");
  require_same_offset(a.offset_, b.offset_);
  for (int k = 0; k <= through; ++k)
    if (a.coeffs_[k] != b.coeffs_[k]) return k;
  return std::nullopt;
}

bool QSeries::operator==(const QSeries& other) const {
  if (offset_ != other.offset_) return false;
  const int n = std::min(truncation(), other.truncation());
  for (int k = 0; k <= n; ++k)
    if (coeffs_[k] != other.coeffs_[k]) return false;
  return true;
}

std::string QSeries::str() const {
  std::string body;
  for (int k = 0; k <= truncation(); ++k) {
    if (sgn(coeffs_[k]) == 0) continue;
    body += term(coeffs_[k], power("q", k), body.empty());
  }
  std::string tail = "O(q^" + std::to_string(truncation() + 1) + ")";
  body = body.empty() ? tail : body + " + " + tail;
  if (sgn(offset_) == 0) return body;
  return "q^(" + to_string(offset_) + ")*(" + body + ")";
}

// -------------------------------------------------------- BivariateSeries

BivariateSeries::BivariateSeries(int t_truncation, int q_truncation, Rational offset)
    : t_trunc_(t_truncation), q_trunc_(q_truncation), offset_(std::move(offset)) {
  if (t_truncation < 0 || q_truncation < 0) throw std::invalid_argument("negative truncation");
  table_.assign(static_cast<std::size_t>(t_truncation + 1) * (q_truncation + 1), Rational(0));
}

BivariateSeries BivariateSeries::one(int T, int N) { return monomial(0, 0, T, N); }

BivariateSeries BivariateSeries::monomial(int p, int n, int T, int N, const Rational& coeff) {
  BivariateSeries s(T, N);
  if (p < 0 || n < 0) throw std::invalid_argument("negative exponent");
  if (p <= T && n <= N) s(p, n) = coeff;
  return s;
}

std::size_t BivariateSeries::index(int p, int n) const {
  if (p < 0 || n < 0 || p > t_trunc_ || n > q_trunc_)
    throw std::out_of_range("coefficient beyond truncation");
  return static_cast<std::size_t>(p) * (q_trunc_ + 1) + n;
}

const Rational& BivariateSeries::operator()(int p, int n) const { return table_[index(p, n)]; }
Rational& BivariateSeries::operator()(int p, int n) { return table_[index(p, n)]; }

BivariateSeries BivariateSeries::truncated(int T, int N) const {
  if (T > t_trunc_ || N > q_trunc_) throw std::invalid_argument("cannot extend a truncated series");
  BivariateSeries s(T, N, offset_);
  for (int p = 0; p <= T; ++p)
    for (int n = 0; n <= N; ++n) s(p, n) = (*this)(p, n);
  return s;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  require_same_offset(offset_, other.offset_);
  BivariateSeries out = truncated(std::min(t_trunc_, other.t_trunc_), std::min(q_trunc_, other.q_trunc_));
  for (int p = 0; p <= out.t_trunc_; ++p)
    for (int n = 0; n <= out.q_trunc_; ++n) out(p, n) += other(p, n);
  return *this = std::move(out);
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& other) {
  require_same_offset(offset_, other.offset_);
  BivariateSeries out = truncated(std::min(t_trunc_, other.t_trunc_), std::min(q_trunc_, other.q_trunc_));
  for (int p = 0; p <= out.t_trunc_; ++p)
    for (int n = 0; n <= out.q_trunc_; ++n) out(p, n) -= other(p, n);
  return *this = std::move(out);
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  const int T = std::min(a.t_trunc_, b.t_trunc_);
  const int N = std::min(a.q_trunc_, b.q_trunc_);
  BivariateSeries out(T, N, a.offset_ + b.offset_);
  for (int p1 = 0; p1 <= T; ++p1)
    for (int n1 = 0; n1 <= N; ++n1) {
      const Rational& x = a(p1, n1);
      if (sgn(x) == 0) continue;
      for (int p2 = 0; p1 + p2 <= T; ++p2)
        for (int n2 = 0; n1 + n2 <= N; ++n2) {
          const Rational& y = b(p2, n2);
          if (sgn(y) != 0) out(p1 + p2, n1 + n2) += x * y;
        }
    }
  return out;
}

BivariateSeries BivariateSeries::inverse() const {
  const Rational& c0 = (*this)(0, 0);
  if (sgn(c0) == 0) throw std::domain_error("series with zero constant term is not a unit");
  BivariateSeries out(t_trunc_, q_trunc_, -offset_);
  const Rational inv0 = 1 / c0;
  for (int p = 0; p <= t_trunc_; ++p)
    for (int n = 0; n <= q_trunc_; ++n) {
      if (p == 0 && n == 0) {
        out(0, 0) = inv0;
        continue;
      }
      Rational acc = 0;
      for (int a = 0; a <= p; ++a)
        for (int b = 0; b <= n; ++b) {
          if (a == 0 && b == 0) continue;
          const Rational& x = (*this)(a, b);
          if (sgn(x) != 0) acc += x * out(p - a, n - b);
        }
      out(p, n) = -acc * inv0;
    }
  return out;
}

QSeries BivariateSeries::at_t_equals_one() const {
  const int n_max = std::min(t_trunc_, q_trunc_);
  QSeries out(n_max, offset_);
  for (int n = 0; n <= n_max; ++n)
    for (int p = 0; p <= t_trunc_; ++p) out[n] += (*this)(p, n);
  return out;
}

bool BivariateSeries::operator==(const BivariateSeries& other) const {
  if (offset_ != other.offset_) return false;
  const int T = std::min(t_trunc_, other.t_trunc_);
  const int N = std::min(q_trunc_, other.q_trunc_);
  for (int p = 0; p <= T; ++p)
    for (int n = 0; n <= N; ++n)
      if ((*this)(p, n) != other(p, n)) return false;
  return true;
}

std::string BivariateSeries::str() const {
  std::string body;
  for (int n = 0; n <= q_trunc_; ++n)
    for (int p = 0; p <= t_trunc_; ++p) {
      const Rational& c = (*this)(p, n);
      if (sgn(c) == 0) continue;
      std::string vars = power("t", p);
      std::string qs = power("q", n);
      if (!vars.empty() && !qs.empty()) vars += "*";
      vars += qs;
      body += term(c, vars, body.empty());
    }
  std::string tail = "O(t^" + std::to_string(t_trunc_ + 1) + ", q^" + std::to_string(q_trunc_ + 1) + ")";
  body = body.empty() ? tail : body + " + " + tail;
  if (sgn(offset_) == 0) return body;
  return "q^(" + to_string(offset_) + ")*(" + body + ")";
}

// ------------------------------------------------------------ products

QSeries pochhammer(int k, int N) {
  QSeries out = QSeries::one(N);
  for (int j = 1; j <= k && j <= N; ++j) {
    // multiply by (1 - q^j) in place, high to low
    for (int n = N; n >= j; --n) out[n] -= out[n - j];
  }
  return out;
}

QSeries pochhammer_infinity(int N) { return pochhammer(N, N); }

QSeries restricted_product(int s, int i, int N) {
  if (s < 1 || i < 1 || i > s) throw std::invalid_argument("restricted_product: need 1 <= i <= s");
  const int modulus = 2 * s + 1;
  QSeries out = QSeries::one(N);
  for (int part = 1; part <= N; ++part) {
    const int r = part % modulus;
    if (r == 0 || r == i || r == modulus - i) continue;
    // multiply by 1/(1 - q^part): running sum with stride `part`
    for (int n = part; n <= N; ++n) out[n] += out[n - part];
  }
  return out;
}

}  // namespace bmm
