#include "bmm/filtration.hpp"

#include "bmm/characters.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace bmm {

BigradedTable::BigradedTable(int T, int N, Rational offset, FiltrationTag tag)
    : T_(T), N_(N), offset_(std::move(offset)), tag_(tag) {
  if (T < 0 || N < 0) throw std::invalid_argument("negative truncation");
  data_.assign(static_cast<std::size_t>(T + 1) * (N + 1), 0);
}

long BigradedTable::operator()(int p, int n) const {
  if (p < 0 || p > T_ || n < 0 || n > N_) throw std::out_of_range("bidegree outside the table");
  return data_[static_cast<std::size_t>(p) * (N_ + 1) + n];
}

long& BigradedTable::operator()(int p, int n) {
  if (p < 0 || p > T_ || n < 0 || n > N_) throw std::out_of_range("bidegree outside the table");
  return data_[static_cast<std::size_t>(p) * (N_ + 1) + n];
}

long BigradedTable::column_sum(int n) const {
  long acc = 0;
  for (int p = 0; p <= T_; ++p) acc += (*this)(p, n);
  return acc;
}

BivariateSeries BigradedTable::to_series() const {
  BivariateSeries out(T_, N_, offset_);
  for (int p = 0; p <= T_; ++p)
    for (int n = 0; n <= N_; ++n) out(p, n) = (*this)(p, n);
  return out;
}

namespace {

BigradedTable count_table(const Rational& h, int T, int N, FiltrationTag tag,
                          const std::function<int(const Partition&)>& degree) {
  BigradedTable out(T, N, h, tag);
  for (int n = 0; n <= N; ++n)
    for (const auto& lambda : enumerate_partitions(n)) {
      const int p = degree(lambda);
      if (p <= T) ++out(p, n);
    }
  return out;
}

// Rank of the Gram rows taken in `order`, recorded after each block of equal
// degree. Returns rank[p] = rank of rows whose degree is "within" p, where
// the caller chooses the direction through `order`.
struct Profile {
  std::vector<int> degrees;  // degree of each block, in insertion order
  std::vector<std::size_t> ranks;
};

Profile rank_profile(const GramMatrix& g, const std::function<int(const Partition&)>& degree, bool increasing) {
  std::vector<std::size_t> order(g.basis.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int da = degree(g.basis[a]);
    const int db = degree(g.basis[b]);
    return increasing ? da < db : da > db;
  });
  RowSpace space(g.basis.size());
  Profile out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto row = g.matrix.row(order[k]);
    space.add(RationalVector(row.begin(), row.end()));
    const int d = degree(g.basis[order[k]]);
    if (k + 1 == order.size() || degree(g.basis[order[k + 1]]) != d) {
      out.degrees.push_back(d);
      out.ranks.push_back(space.dimension());
    }
  }
  return out;
}

// Fills column n from a profile: the block at degree d contributes the rank
// increase it causes.
void fill_column(BigradedTable& table, int n, const Profile& prof) {
  std::size_t previous = 0;
  for (std::size_t b = 0; b < prof.degrees.size(); ++b) {
    const long gain = static_cast<long>(prof.ranks[b] - previous);
    previous = prof.ranks[b];
    if (prof.degrees[b] <= table.T()) table(prof.degrees[b], n) += gain;
  }
}

BigradedTable refined_from_gram(const VirasoroModule& module, int T, int N, FiltrationTag tag) {
  BigradedTable out(T, N, module.h(), tag);
  module.gram(N);
  std::vector<Profile> profiles(static_cast<std::size_t>(N) + 1);
  auto degree = tag == FiltrationTag::pbw ? std::function<int(const Partition&)>(&Partition::len)
                                          : std::function<int(const Partition&)>(&Partition::li_degree);
#pragma omp parallel for schedule(dynamic)
  for (int n = N; n >= 0; --n)
    profiles[n] = rank_profile(module.gram(n), degree, tag == FiltrationTag::pbw);
  for (int n = 0; n <= N; ++n) fill_column(out, n, profiles[n]);
  return out;
}

}  // namespace

BigradedTable pbw_refined_verma(const Rational& h, int T, int N) {
  return count_table(h, T, N, FiltrationTag::pbw, &Partition::len);
}

BigradedTable li_refined_verma(const Rational& h, int T, int N) {
  return count_table(h, T, N, FiltrationTag::li, &Partition::li_degree);
}

BigradedTable pbw_refined_irr(const Rational& c, const Rational& h, int T, int N) {
  return refined_from_gram(*shared_module(c, h), T, N, FiltrationTag::pbw);
}

BigradedTable li_refined_irr(const Rational& c, const Rational& h, int T, int N) {
  return refined_from_gram(*shared_module(c, h), T, N, FiltrationTag::li);
}

BigradedTable li_refined_vacuum(int p, int q, int T, int N) {
  return refined_from_gram(*shared_module(central_charge(p, q), 0, ModuleKind::vacuum), T, N, FiltrationTag::li);
}

std::set<Partition> k_leading_monomials(const Rational& c, const Rational& h, int n) {
  const GramMatrix& g = shared_module(c, h)->gram(n);
  const auto kernel = kernel_basis(g.matrix);
  std::set<Partition> out;
  if (kernel.empty()) return out;
  const std::size_t dim = g.basis.size();
  int max_len = 0;
  for (const auto& lambda : g.basis) max_len = std::max(max_len, lambda.len());
  for (int p = 0; p <= max_len; ++p) {
    // Combinations x of kernel vectors vanishing on every coordinate of length > p.
    std::vector<std::size_t> high;
    std::vector<std::size_t> top;
    for (std::size_t k = 0; k < dim; ++k) {
      if (g.basis[k].len() > p) high.push_back(k);
      if (g.basis[k].len() == p) top.push_back(k);
    }
    if (top.empty()) continue;
    RationalMatrix constraints(high.size(), kernel.size());
    for (std::size_t r = 0; r < high.size(); ++r)
      for (std::size_t k = 0; k < kernel.size(); ++k) constraints(r, k) = kernel[k][high[r]];
    const auto combos = kernel_basis(constraints);
    std::vector<RationalVector> symbols;
    for (const auto& x : combos) {
      RationalVector sym(top.size());
      for (std::size_t t = 0; t < top.size(); ++t)
        for (std::size_t k = 0; k < kernel.size(); ++k) sym[t] += x[k] * kernel[k][top[t]];
      symbols.push_back(std::move(sym));
    }
    // top is already MonomialOrder descending, so each leading entry marks a
    // leading monomial.
    for (const auto& row : echelon_basis(symbols)) {
      auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
      out.insert(g.basis[top[static_cast<std::size_t>(lead - row.begin())]]);
    }
  }
  return out;
}

std::set<Partition> k_leading_monomials_direct(const Rational& c, const Rational& h, int n) {
  const GramMatrix& g = shared_module(c, h)->gram(n);
  std::set<Partition> out;
  for (const auto& row : echelon_basis(kernel_basis(g.matrix))) {
    auto lead = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
    out.insert(g.basis[static_cast<std::size_t>(lead - row.begin())]);
  }
  return out;
}

BasisCheck theorem2_basis_check(int s, int i, int n) {
  const ModelParams mp = boundary_params(s, i);
  const GramMatrix& g = shared_module(mp.c, mp.h)->gram(n);
  BasisCheck out;
  out.n = n;
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < g.basis.size(); ++k)
    if (in_P(s, i, g.basis[k])) {
      idx.push_back(k);
      out.basis.push_back(g.basis[k]);
    }
  out.irr_dim = rank(g.matrix);
  const RationalMatrix sub = g.matrix.select_rows(idx).select_cols(idx);
  out.gram_route = rank(sub) == idx.size() && idx.size() == out.irr_dim;

  const auto leading = k_leading_monomials(mp.c, mp.h, n);
  std::vector<Partition> standard;
  for (const auto& lambda : g.basis)
    if (!leading.contains(lambda)) standard.push_back(lambda);
  out.standard_route = standard == out.basis;
  return out;
}

}  // namespace bmm
