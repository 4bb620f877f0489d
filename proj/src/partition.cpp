#include "bmm/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace bmm {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::repeated(int value, int count) {
  return Partition(std::vector<int>(static_cast<std::size_t>(std::max(count, 0)), value));
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

int Partition::clen() const {
  int c = 0;
  for (int p : parts_) c += p >= 2 ? 2 : 1;
  return c;
}

int Partition::multiplicity(int n) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), n));
}

Partition Partition::operator+(const Partition& other) const {
  std::vector<int> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(all));
}

Partition Partition::filter(const std::function<bool(int)>& keep) const {
  std::vector<int> kept;
  for (int p : parts_)
    if (keep(p)) kept.push_back(p);
  return Partition(std::move(kept));
}

std::string Partition::str() const {
  std::string out = "[";
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(parts_[k]);
  }
  return out + "]";
}

int MonomialOrder::compare(const Partition& lhs, const Partition& rhs) {
  if (lhs.len() != rhs.len()) return lhs.len() > rhs.len() ? 1 : -1;
  // Both part lists are sorted descending, so walking them from the front
  // visits variable indices from the largest down.
  const auto& a = lhs.parts();
  const auto& b = rhs.parts();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    const int va = i < a.size() ? a[i] : 0;
    const int vb = j < b.size() ? b[j] : 0;
    const int var = std::max(va, vb);
    int ea = 0;
    int eb = 0;
    while (i < a.size() && a[i] == var) ++ea, ++i;
    while (j < b.size() && b[j] == var) ++eb, ++j;
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    generate(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, const PartitionPredicate& keep) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative n");
  std::vector<Partition> all;
  std::vector<int> current;
  generate(n, n, current, all);
  if (keep) std::erase_if(all, [&](const Partition& p) { return !keep(p); });
  std::sort(all.begin(), all.end(), MonomialOrder::greater);
  return all;
}

long partition_count(int n) {
  if (n < 0) return 0;
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      acc += sign * p[m - g1];
      if (g2 <= m) acc += sign * p[m - g2];
    }
    p[m] = acc;
  }
  return p[n];
}

bool contains(const Partition& lambda, const Partition& eta) {
  const auto& l = lambda.parts();
  const auto& e = eta.parts();
  if (e.empty()) return true;
  if (e.size() > l.size()) return false;
  for (std::size_t start = 0; start + e.size() <= l.size(); ++start)
    if (std::equal(e.begin(), e.end(), l.begin() + static_cast<long>(start))) return true;
  return false;
}

bool divides(const Partition& eta, const Partition& lambda) {
  for (int part : eta.parts())
    if (eta.multiplicity(part) > lambda.multiplicity(part)) return false;
  return true;
}

void check_si(int s, int i) {
  if (s < 1 || i < 1 || i > s) throw std::invalid_argument("need s >= 1 and 1 <= i <= s");
}

bool in_R(int s, int i, const Partition& eta) {
  check_si(s, i);
  if (eta.len() == s && eta.largest() - eta.smallest() <= 1) return true;
  return eta == Partition::repeated(1, i);
}

std::vector<Partition> r_members(int s, int i, int max_part) {
  check_si(s, i);
  std::vector<Partition> out;
  // [(a+1)^{s-d}, a^d] for d = 1..s; d = s is [a^s]
  for (int a = 1; a <= max_part; ++a)
    for (int d = 1; d <= s; ++d) {
      if (d < s && a + 1 > max_part) continue;
      out.push_back(Partition::repeated(a + 1, s - d) + Partition::repeated(a, d));
    }
  if (max_part >= 1) out.push_back(Partition::repeated(1, i));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::sort(out.begin(), out.end(), MonomialOrder::greater);
  return out;
}

bool in_P(int s, int i, const Partition& lambda) {
  check_si(s, i);
  if (lambda.multiplicity(1) > i - 1) return false;
  for (int a = 1; a <= lambda.largest(); ++a)
    if (lambda.multiplicity(a) + lambda.multiplicity(a + 1) > s - 1) return false;
  return true;
}

bool in_P_by_containment(int s, int i, const Partition& lambda) {
  for (const auto& eta : r_members(s, i, lambda.largest() + 1))
    if (contains(lambda, eta)) return false;
  return true;
}

bool in_P_by_divisibility(int s, int i, const Partition& lambda) {
  const int w = lambda.weight();
  for (const auto& eta : r_members(s, i, std::max(w, 1)))
    if (eta.weight() <= w && divides(eta, lambda)) return false;
  return true;
}

BivariateSeries p_si_bivariate(int s, int i, int N) {
  check_si(s, i);
  if (N < 0) throw std::invalid_argument("p_si_bivariate: negative truncation");
  BivariateSeries out(N, N);
  for (int n = 0; n <= N; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      if (in_P(s, i, lambda)) out(lambda.len(), n) += 1;
  return out;
}

long count_A(int s, int i, int n) {
  check_si(s, i);
  if (n < 0) throw std::invalid_argument("count_A: negative n");
  const int modulus = 2 * s + 1;
  std::vector<long> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part) {
    const int r = part % modulus;
    if (r == 0 || r == i || r == modulus - i) continue;
    for (int m = part; m <= n; ++m) ways[m] += ways[m - part];
  }
  return ways[n];
}

}  // namespace bmm
