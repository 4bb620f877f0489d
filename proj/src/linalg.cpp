#include "bmm/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmm {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::select_rows(std::span<const std::size_t> which) const {
  RationalMatrix out(which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i)
    std::copy_n(row(which[i]).begin(), cols_, out.row(i).begin());
  return out;
}

RationalMatrix RationalMatrix::select_cols(std::span<const std::size_t> which) const {
  RationalMatrix out(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < which.size(); ++j) out(r, j) = (*this)(r, which[j]);
  return out;
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RationalVector RationalMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

namespace {

// Rows below this many entries are not worth a parallel region.
constexpr std::size_t kParallelThreshold = 2048;

void swap_rows(RationalMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(ra[c], rb[c]);
}

// target -= factor * source, from column `from` onward.
void axpy(std::span<Rational> target, const Rational& factor, std::span<const Rational> source,
          std::size_t from) {
  for (std::size_t c = from; c < target.size(); ++c)
    if (sgn(source[c]) != 0) target[c] -= factor * source[c];
}

}  // namespace

std::vector<std::size_t> row_echelon(RationalMatrix& m, bool reduced, Execution exec) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // smallest bit-length pivot keeps coefficient growth down
    std::size_t best = rows;
    std::size_t best_size = 0;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      std::size_t sz = bit_size(m(r, col));
      if (best == rows || sz < best_size) {
        best = r;
        best_size = sz;
      }
    }
    if (best == rows) continue;
    swap_rows(m, pivot_row, best);

    auto prow = m.row(pivot_row);
    const Rational inv = 1 / prow[col];
    for (std::size_t c = col; c < cols; ++c)
      if (sgn(prow[c]) != 0) prow[c] *= inv;

    const std::size_t first = reduced ? 0 : pivot_row + 1;
    const bool go_parallel =
        exec == Execution::parallel && (rows - first) * (cols - col) >= kParallelThreshold;
    const long lfirst = static_cast<long>(first);
    const long lrows = static_cast<long>(rows);
#pragma omp parallel for schedule(dynamic, 4) if (go_parallel)
    for (long r = lfirst; r < lrows; ++r) {
      if (static_cast<std::size_t>(r) == pivot_row) continue;
      auto target = m.row(static_cast<std::size_t>(r));
      if (sgn(target[col]) == 0) continue;
      const Rational factor = target[col];
      axpy(target, factor, prow, col);
    }
    pivots.push_back(col);
    ++pivot_row;
  }
  return pivots;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  RationalMatrix work = m;
  return row_echelon(work, false).size();
}

namespace {

std::vector<RationalVector> kernel_from_rref(const RationalMatrix& rref,
                                             const std::vector<std::size_t>& pivots) {
  const std::size_t cols = rref.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rref(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  if (m.rows() == 0) {
    std::vector<RationalVector> basis;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      RationalVector v(m.cols());
      v[c] = 1;
      basis.push_back(std::move(v));
    }
    return basis;
  }
  RationalMatrix work = m;
  auto pivots = row_echelon(work, true);
  return kernel_from_rref(work, pivots);
}

std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side length mismatch");
  const std::size_t cols = m.cols();
  RationalMatrix aug(m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols) = b[r];
  }
  auto pivots = row_echelon(aug, true);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RationalVector x(cols);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, cols);
  return x;
}

std::vector<RationalVector> echelon_basis(std::span<const RationalVector> vectors) {
  if (vectors.empty()) return {};
  RationalMatrix m(0, 0);
  for (const auto& v : vectors) m.append_row(v);
  auto pivots = row_echelon(m, true);
  std::vector<RationalVector> out;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    auto r = m.row(k);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

void RowSpace::reduce(RationalVector& v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (sgn(v[p]) == 0) continue;
    const Rational factor = v[p];
    axpy(v, factor, basis_[k], 0);
  }
}

bool RowSpace::add(RationalVector row) {
  if (row.size() != cols_) throw std::invalid_argument("RowSpace: row length mismatch");
  reduce(row);
  auto it = std::find_if(row.begin(), row.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (it == row.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - row.begin());
  const Rational inv = 1 / row[p];
  for (auto& x : row)
    if (sgn(x) != 0) x *= inv;
  basis_.push_back(std::move(row));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(RationalVector v) const {
  if (v.size() != cols_) throw std::invalid_argument("RowSpace: vector length mismatch");
  reduce(v);
  return is_zero(v);
}

namespace reference {

namespace {

std::vector<std::size_t> plain_rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < m.cols() && pr < m.rows(); ++col) {
    std::size_t r = pr;
    while (r < m.rows() && sgn(m(r, col)) == 0) ++r;
    if (r == m.rows()) continue;
    swap_rows(m, pr, r);
    const Rational inv = 1 / m(pr, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(pr, c) *= inv;
    for (std::size_t o = 0; o < m.rows(); ++o) {
      if (o == pr || sgn(m(o, col)) == 0) continue;
      const Rational f = m(o, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(o, c) -= f * m(pr, c);
    }
    pivots.push_back(col);
    ++pr;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  if (m.empty()) return 0;
  RationalMatrix work = m;
  return plain_rref(work).size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  RationalMatrix work = m;
  auto pivots = m.rows() == 0 ? std::vector<std::size_t>{} : plain_rref(work);
  return kernel_from_rref(work, pivots);
}

}  // namespace reference

}  // namespace bmm
