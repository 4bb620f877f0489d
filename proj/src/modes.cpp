#include "bmm/modes.hpp"

#include "bmm/characters.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <stdexcept>

namespace bmm {

PBWVector vacuum_singular(int p, int q) {
  const Rational c = central_charge(p, q);
  const int w = (p - 1) * (q - 1);
  auto space = singular_space(c, 0, w, ModuleKind::vacuum);
  if (space.size() != 1)
    throw std::logic_error("vacuum singular space at weight " + std::to_string(w) + " has dimension " +
                           std::to_string(space.size()));
  PBWVector a = space.front();
  const Rational lead = a.coefficient(Partition::repeated(2, w / 2));
  if (lead == 0) throw std::logic_error("vacuum singular vector lacks the L_{-2} power term");
  a *= 1 / lead;
  return a;
}

namespace {

int max_level(const PBWVector& u) {
  int w = 0;
  for (const auto& [lambda, coeff] : u.terms()) w = std::max(w, lambda.weight());
  return w;
}

// Mode j of the field attached to L_{-parts[0]} ... L_{-parts[k]} vac, with
// nesting :A (:B C:):, peeling the leftmost factor.
PBWVector field_mode(const VirasoroModule& module, std::span<const int> parts, int j, const PBWVector& c) {
  if (c.is_zero()) return c;
  if (parts.empty()) return j == -1 ? c : PBWVector(c.c(), c.h(), c.kind());
  if (parts.size() == 1) {
    const int n = parts[0] - 2;
    Integer coeff = binomial(j, n);
    if (n % 2) coeff = -coeff;
    if (coeff == 0) return PBWVector(c.c(), c.h(), c.kind());
    return module.apply(j - n - 1, c) * Rational(coeff);
  }
  const auto a = parts.first(1);
  const auto b = parts.subspan(1);
  const int delta_a = parts[0];
  const int delta_b = std::accumulate(b.begin(), b.end(), 0);
  const int w = max_level(c);
  PBWVector out(c.c(), c.h(), c.kind());
  // B_{(j-n-1)} c sits at level w + delta_b - j + n, which must be >= 0.
  for (int n = j - w - delta_b; n <= -1; ++n)
    out += field_mode(module, a, n, field_mode(module, b, j - n - 1, c));
  // A_{(n)} c sits at level w + delta_a - n - 1.
  for (int n = 0; n <= w + delta_a - 1; ++n)
    out += field_mode(module, b, j - n - 1, field_mode(module, a, n, c));
  return out;
}

}  // namespace

PBWVector mode(const PBWVector& a, int l, const PBWVector& u) {
  if (a.kind() != ModuleKind::vacuum) throw std::invalid_argument("mode: state must be a vacuum-module vector");
  if (a.c() != u.c()) throw std::invalid_argument("mode: central charges differ");
  auto module = shared_module(u.c(), u.h(), u.kind());
  PBWVector out(u.c(), u.h(), u.kind());
  for (const auto& [lambda, coeff] : a.terms())
    out += field_mode(*module, lambda.parts(), l, u) * coeff;
  return out;
}

namespace {

PBWVector lemma2_homogeneous(const VirasoroModule& module, int s, int l, const PBWVector& b, int level) {
  PBWVector out(b.c(), b.h(), b.kind());
  const int final_level = level + 2 * s - l - 1;
  if (final_level < 0) return out;
  const int positions = s - 1;
  for (unsigned mask = 0; mask < (1u << positions); ++mask) {
    std::vector<int> I;
    std::vector<int> J;
    for (int r = 0; r < positions; ++r) ((mask >> r) & 1u ? I : J).push_back(r);
    const int k = static_cast<int>(I.size());

    // I-operators act first, i_1 rightmost: L_{(n)} = L_{n-1}.
    std::function<void(std::size_t, const PBWVector&, int, int)> over_i =
        [&](std::size_t idx, const PBWVector& cur, int cur_level, int sum_i) {
          if (cur.is_zero()) return;
          if (idx == I.size()) {
            // J-operators L_{-n-2} add sum(n_j + 2) to the level after the middle step.
            std::vector<int> nj(J.size(), 0);
            std::function<void(std::size_t, int)> over_j = [&](std::size_t jdx, int raise) {
              if (jdx == J.size()) {
                int sum_j = raise - 2 * static_cast<int>(J.size());
                const int middle = l - k - sum_i + sum_j;
                const int after_middle = cur_level - (middle - 1);
                if (after_middle < 0 || after_middle + raise != final_level) return;
                PBWVector w = module.apply(middle - 1, cur);
                for (std::size_t r = J.size(); r-- > 0;) w = module.apply(-nj[r] - 2, w);
                out += w;
                return;
              }
              for (int n = 0; raise + n + 2 <= final_level; ++n) {
                nj[jdx] = n;
                over_j(jdx + 1, raise + n + 2);
              }
            };
            over_j(0, 0);
            return;
          }
          for (int n = 0; n <= cur_level + 1; ++n)
            over_i(idx + 1, module.apply(n - 1, cur), cur_level - (n - 1), sum_i + n);
        };
    over_i(0, b, level, 0);
  }
  return out;
}

}  // namespace

PBWVector lemma2_mode(int s, int l, const PBWVector& u) {
  if (s < 2) throw std::invalid_argument("lemma2_mode needs s >= 2");
  auto module = shared_module(u.c(), u.h(), u.kind());
  PBWVector out(u.c(), u.h(), u.kind());
  for (const auto& [level, part] : u.by_level()) out += lemma2_homogeneous(*module, s, l, part, level);
  return out;
}

Partition lemma10_partition(int s, int a, int d) {
  return Partition::repeated(a, d) + Partition::repeated(a + 1, s - d);
}

Descendant lemma10_descendant(int s, int i, int a, int d) {
  check_si(s, i);
  if (a < 1 || d < 1 || d > s) throw std::invalid_argument("need a >= 1 and 1 <= d <= s");
  const ModelParams mp = boundary_params(s, i);
  const PBWVector sing = vacuum_singular(2, 2 * s + 1);
  PBWVector u = mode(sing, s - s * a + d - 1, PBWVector::highest_weight(mp.c, mp.h));
  if (u.is_zero()) return {u, Partition{}, true};
  Partition lp = leading_power(u);
  const bool radical = in_radical(u);
  return {std::move(u), std::move(lp), radical};
}

PBWVector benoit_singular(int s, int i) {
  const ModelParams mp = boundary_params(s, i);
  auto space = singular_space(mp.c, mp.h, i);
  if (space.size() != 1) throw std::logic_error("singular space at level i is not one-dimensional");
  PBWVector u = space.front();
  const Rational lead = u.coefficient(Partition::repeated(1, i));
  if (lead == 0) throw std::logic_error("singular vector has no L_{-1}^i term");
  u *= 1 / lead;
  return u;
}

std::vector<ReducedGenerator> corollary1_generators(int s, int i) {
  const ModelParams mp = boundary_params(s, i);
  const PBWVector sing = vacuum_singular(2, 2 * s + 1);
  const PBWVector v = PBWVector::highest_weight(mp.c, mp.h);
  std::vector<ReducedGenerator> out;
  for (int k = 1; k <= i; ++k) {
    PBWVector full = k < i ? mode(sing, k - 1, v) : benoit_singular(s, i);
    PBWVector reduced = full.drop_parts_at_least(3);
    Partition expected = k < i ? Partition::repeated(2, s - k) + Partition::repeated(1, k)
                               : Partition::repeated(1, i);
    Partition lp = reduced.is_zero() ? Partition{} : leading_power(reduced);
    out.push_back({k, std::move(reduced), std::move(lp), std::move(expected)});
  }
  return out;
}

}  // namespace bmm
