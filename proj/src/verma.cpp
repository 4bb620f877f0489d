#include "bmm/verma.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace bmm {

namespace {

void add_into(Terms& acc, const Partition& lambda, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = acc.try_emplace(lambda, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) acc.erase(it);
  }
}

std::string monomial_str(const Partition& lambda, ModuleKind kind) {
  std::string out;
  for (int part : lambda.parts()) out += "L_{-" + std::to_string(part) + "}";
  return out + (kind == ModuleKind::vacuum ? "vac" : "v");
}

}  // namespace

PBWVector::PBWVector(Rational c, Rational h, ModuleKind kind)
    : c_(std::move(c)), h_(std::move(h)), kind_(kind) {
  if (kind_ == ModuleKind::vacuum && h_ != 0)
    throw std::invalid_argument("vacuum module has h = 0");
}

PBWVector PBWVector::highest_weight(Rational c, Rational h, ModuleKind kind) {
  return basis(std::move(c), std::move(h), kind, Partition{});
}

PBWVector PBWVector::basis(Rational c, Rational h, ModuleKind kind, const Partition& lambda,
                           const Rational& coeff) {
  PBWVector out(std::move(c), std::move(h), kind);
  out.add_term(lambda, coeff);
  return out;
}

Rational PBWVector::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PBWVector::add_term(const Partition& lambda, const Rational& coeff) {
  if (kind_ == ModuleKind::vacuum && !lambda.empty() && lambda.smallest() < 2)
    throw std::invalid_argument("vacuum PBW monomials have parts >= 2");
  add_into(terms_, lambda, coeff);
}

std::optional<int> PBWVector::level() const {
  if (terms_.empty()) return std::nullopt;
  const int w = terms_.begin()->first.weight();
  for (const auto& [lambda, coeff] : terms_)
    if (lambda.weight() != w) return std::nullopt;
  return w;
}

std::map<int, PBWVector> PBWVector::by_level() const {
  std::map<int, PBWVector> out;
  for (const auto& [lambda, coeff] : terms_) {
    auto it = out.try_emplace(lambda.weight(), c_, h_, kind_).first;
    it->second.terms_.emplace(lambda, coeff);
  }
  return out;
}

PBWVector PBWVector::drop_parts_at_least(int min_part) const {
  PBWVector out(c_, h_, kind_);
  for (const auto& [lambda, coeff] : terms_)
    if (lambda.largest() < min_part) out.terms_.emplace(lambda, coeff);
  return out;
}

void PBWVector::check_compatible(const PBWVector& other) const {
  if (c_ != other.c_ || h_ != other.h_ || kind_ != other.kind_)
    throw std::invalid_argument("PBW vectors live in different modules");
}

PBWVector& PBWVector::operator+=(const PBWVector& other) {
  check_compatible(other);
  for (const auto& [lambda, coeff] : other.terms_) add_into(terms_, lambda, coeff);
  return *this;
}

PBWVector& PBWVector::operator-=(const PBWVector& other) {
  check_compatible(other);
  for (const auto& [lambda, coeff] : other.terms_) add_into(terms_, lambda, -coeff);
  return *this;
}

PBWVector& PBWVector::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, coeff] : terms_) coeff *= s;
  return *this;
}

bool PBWVector::operator==(const PBWVector& other) const {
  return c_ == other.c_ && h_ == other.h_ && kind_ == other.kind_ && terms_ == other.terms_;
}

std::string PBWVector::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Partition, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return MonomialOrder::greater(a.first, b.first); });
  std::string out;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    Rational coeff = sorted[k].second;
    if (k == 0) {
      if (coeff < 0) {
        out += "-";
        coeff = -coeff;
      }
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    if (coeff != 1) out += to_string(coeff) + "*";
    out += monomial_str(sorted[k].first, kind_);
  }
  return out;
}

VirasoroModule::VirasoroModule(Rational c, Rational h, ModuleKind kind)
    : c_(std::move(c)), h_(std::move(h)), kind_(kind) {
  if (kind_ == ModuleKind::vacuum && h_ != 0)
    throw std::invalid_argument("vacuum module has h = 0");
}

const std::vector<Partition>& VirasoroModule::basis(int n) const {
  if (n < 0) throw std::invalid_argument("negative level");
  {
    std::shared_lock lock(mutex_);
    auto it = bases_.find(n);
    if (it != bases_.end()) return it->second;
  }
  auto parts = kind_ == ModuleKind::vacuum
                   ? enumerate_partitions(n, [](const Partition& p) { return p.empty() || p.smallest() >= 2; })
                   : enumerate_partitions(n);
  std::map<Partition, std::size_t> index;
  for (std::size_t k = 0; k < parts.size(); ++k) index.emplace(parts[k], k);
  std::unique_lock lock(mutex_);
  indices_.try_emplace(n, std::move(index));
  return bases_.try_emplace(n, std::move(parts)).first->second;
}

std::size_t VirasoroModule::index_of(const Partition& lambda) const {
  basis(lambda.weight());
  std::shared_lock lock(mutex_);
  const auto& index = indices_.at(lambda.weight());
  auto it = index.find(lambda);
  if (it == index.end()) throw std::invalid_argument("not a basis monomial: " + lambda.str());
  return it->second;
}

Terms VirasoroModule::apply_basis(int k, const Partition& lambda) const {
  const bool vacuum = kind_ == ModuleKind::vacuum;
  if (k == 0) {
    Terms out;
    add_into(out, lambda, h_ + lambda.weight());
    return out;
  }
  if (lambda.empty()) {
    Terms out;
    if (k < 0 && !(vacuum && k == -1)) out.emplace(Partition{-k}, Rational(1));
    return out;
  }
  const int a = lambda.largest();
  if (k < 0 && -k >= a) {
    Terms out;
    out.emplace(Partition{-k} + lambda, Rational(1));
    return out;
  }

  const auto key = std::make_pair(k, lambda);
  {
    std::shared_lock lock(mutex_);
    auto it = straightened_.find(key);
    if (it != straightened_.end()) return it->second;
  }

  // L_k L_{-a} R = L_{-a} L_k R + (k + a) L_{k-a} R + delta_{k,a} (k^3 - k)/12 c R
  Partition rest(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
  Terms out;
  for (const auto& [mu, coeff] : apply_basis(k, rest))
    for (const auto& [nu, c2] : apply_basis(-a, mu)) add_into(out, nu, coeff * c2);
  if (k + a != 0)
    for (const auto& [mu, coeff] : apply_basis(k - a, rest)) add_into(out, mu, coeff * (k + a));
  if (k == a) add_into(out, rest, make_rational(static_cast<long>(k) * k * k - k, 12) * c_);

  std::unique_lock lock(mutex_);
  return straightened_.try_emplace(key, std::move(out)).first->second;
}

PBWVector VirasoroModule::apply(int k, const PBWVector& u) const {
  if (u.c() != c_ || u.h() != h_ || u.kind() != kind_)
    throw std::invalid_argument("vector does not belong to this module");
  PBWVector out(c_, h_, kind_);
  for (const auto& [lambda, coeff] : u.terms())
    for (const auto& [mu, c2] : apply_basis(k, lambda)) out.add_term(mu, coeff * c2);
  return out;
}

RationalMatrix VirasoroModule::mode_matrix(int k, int n) const {
  const auto& source = basis(n);
  if (n - k < 0) return RationalMatrix(0, source.size());
  const auto& target = basis(n - k);
  RationalMatrix m(target.size(), source.size());
  for (std::size_t col = 0; col < source.size(); ++col)
    for (const auto& [mu, coeff] : apply_basis(k, source[col])) m(index_of(mu), col) = coeff;
  return m;
}

const GramMatrix& VirasoroModule::gram(int n) const {
  if (n < 0) throw std::invalid_argument("negative level");
  {
    std::shared_lock lock(mutex_);
    auto it = grams_.find(n);
    if (it != grams_.end()) return *it->second;
  }
  const auto& b = basis(n);
  auto g = std::make_unique<GramMatrix>();
  g->level = n;
  g->basis = b;
  g->matrix = RationalMatrix(b.size(), b.size());
  if (n == 0) {
    g->matrix(0, 0) = 1;
  } else {
    // Lower levels first so the parallel loop below only reads caches.
    for (int m = 0; m < n; ++m) gram(m);
    for (std::size_t k = 0; k < b.size(); ++k) index_of(b[k]);
    std::vector<std::vector<Terms>> lowered(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) lowered[k].resize(b.size());
    const long count = static_cast<long>(b.size());
#pragma omp parallel for schedule(dynamic)
    for (long col = 0; col < count; ++col)
      for (int k = 1; k <= n; ++k) lowered[k][col] = apply_basis(k, b[col]);
    for (std::size_t col = 0; col < b.size(); ++col)
      for (int k = 1; k <= n; ++k)
        for (const auto& [mu, coeff] : lowered[k][col]) index_of(mu);

#pragma omp parallel for schedule(dynamic)
    for (long row = 0; row < count; ++row) {
      const Partition& lambda = b[row];
      const int a = lambda.largest();
      Partition rest(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
      const GramMatrix& lower = gram(n - a);
      const std::size_t r = index_of(rest);
      for (std::size_t col = 0; col < b.size(); ++col) {
        Rational acc = 0;
        for (const auto& [mu, coeff] : lowered[a][col]) acc += coeff * lower.matrix(r, index_of(mu));
        g->matrix(row, col) = acc;
      }
    }
  }
  std::unique_lock lock(mutex_);
  return *grams_.try_emplace(n, std::move(g)).first->second;
}

GramMatrix VirasoroModule::gram_reference(int n) const {
  const auto& b = basis(n);
  GramMatrix g{n, b, RationalMatrix(b.size(), b.size())};
  for (std::size_t row = 0; row < b.size(); ++row)
    for (std::size_t col = 0; col < b.size(); ++col) {
      PBWVector w = PBWVector::basis(c_, h_, kind_, b[col]);
      for (int part : b[row].parts()) w = apply(part, w);
      g.matrix(row, col) = w.coefficient(Partition{});
    }
  return g;
}

RationalVector VirasoroModule::coordinates(const PBWVector& u, int n) const {
  const auto& b = basis(n);
  RationalVector out(b.size());
  for (const auto& [lambda, coeff] : u.terms()) {
    if (lambda.weight() != n) throw std::invalid_argument("vector has a term off level " + std::to_string(n));
    out[index_of(lambda)] = coeff;
  }
  return out;
}

PBWVector VirasoroModule::from_coordinates(std::span<const Rational> coords, int n) const {
  const auto& b = basis(n);
  if (coords.size() != b.size()) throw std::invalid_argument("coordinate vector has the wrong size");
  PBWVector out(c_, h_, kind_);
  for (std::size_t k = 0; k < b.size(); ++k) out.add_term(b[k], coords[k]);
  return out;
}

std::shared_ptr<const VirasoroModule> shared_module(const Rational& c, const Rational& h, ModuleKind kind) {
  static std::mutex registry_mutex;
  static std::map<std::tuple<int, Rational, Rational>, std::shared_ptr<const VirasoroModule>> registry;
  std::lock_guard lock(registry_mutex);
  auto key = std::make_tuple(static_cast<int>(kind), c, h);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto module = std::make_shared<const VirasoroModule>(c, h, kind);
  registry.emplace(std::move(key), module);
  return module;
}

PBWVector apply_mode(int k, const PBWVector& u) {
  return shared_module(u.c(), u.h(), u.kind())->apply(k, u);
}

GramMatrix gram(const Rational& c, const Rational& h, int n) { return shared_module(c, h)->gram(n); }

std::size_t irr_dim(const Rational& c, const Rational& h, int n) {
  return rank(shared_module(c, h)->gram(n).matrix);
}

std::vector<PBWVector> singular_space(const Rational& c, const Rational& h, int n, ModuleKind kind) {
  if (n < 1) throw std::invalid_argument("singular_space needs level >= 1");
  auto module = shared_module(c, h, kind);
  const std::size_t dim = module->basis(n).size();
  RationalMatrix stacked(0, dim);
  for (int k : {1, 2}) {
    RationalMatrix m = module->mode_matrix(k, n);
    for (std::size_t r = 0; r < m.rows(); ++r) stacked.append_row(m.row(r));
  }
  auto kernel = kernel_basis(stacked);
  std::vector<PBWVector> out;
  for (const auto& v : echelon_basis(kernel)) out.push_back(module->from_coordinates(v, n));
  return out;
}

Partition leading_power(const PBWVector& u) {
  if (u.is_zero()) throw std::invalid_argument("leading_power of the zero vector");
  const Partition* best = nullptr;
  for (const auto& [lambda, coeff] : u.terms())
    if (!best || MonomialOrder::greater(lambda, *best)) best = &lambda;
  return *best;
}

PBWVector vacuum_straighten(const Rational& c, const std::vector<int>& word) {
  auto module = shared_module(c, 0, ModuleKind::vacuum);
  PBWVector u = module->highest_weight();
  for (auto it = word.rbegin(); it != word.rend(); ++it) u = module->apply(*it, u);
  return u;
}

bool in_radical(const PBWVector& u) {
  if (u.is_zero()) return true;
  auto n = u.level();
  if (!n) throw std::invalid_argument("in_radical needs a homogeneous vector");
  auto module = shared_module(u.c(), u.h(), u.kind());
  const RationalVector coords = module->coordinates(u, *n);
  return is_zero(module->gram(*n).matrix * coords);
}

}  // namespace bmm
