#pragma once

#include "bmm/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace bmm {

using RationalVector = std::vector<Rational>;

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  RationalMatrix transpose() const;
  RationalMatrix select_rows(std::span<const std::size_t> which) const;
  RationalMatrix select_cols(std::span<const std::size_t> which) const;
  void append_row(std::span<const Rational> values);

  RationalVector operator*(std::span<const Rational> v) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Whether a kernel may split its row updates across OpenMP threads.
enum class Execution { serial, parallel };

// Row echelon form, computed in place. With reduced = true the result is the
// RREF with unit pivots. Returns the pivot columns in order.
std::vector<std::size_t> row_echelon(RationalMatrix& m, bool reduced,
                                     Execution exec = Execution::parallel);

std::size_t rank(const RationalMatrix& m);

// Basis of the right null space, one vector per free column.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

// One exact solution of m x = b, or nullopt when the system is inconsistent.
// Throws std::invalid_argument when b.size() != m.rows().
std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> b);

// Canonical basis of span(vectors): the nonzero rows of the RREF. Leading
// entries sit at increasing column positions and equal 1.
std::vector<RationalVector> echelon_basis(std::span<const RationalVector> vectors);

bool is_zero(std::span<const Rational> v);

// Incrementally maintained row space. Rows are reduced against the stored
// basis on insertion, so rank profiles over nested row sets cost one pass.
class RowSpace {
 public:
  explicit RowSpace(std::size_t cols) : cols_(cols) {}

  // Returns true when the row enlarges the space.
  bool add(RationalVector row);
  // Reduces a copy of v against the basis; returns true when v lies in the span.
  bool contains(RationalVector v) const;

  std::size_t dimension() const { return basis_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  void reduce(RationalVector& v) const;

  std::size_t cols_;
  std::vector<RationalVector> basis_;
  std::vector<std::size_t> pivots_;
};

namespace reference {

// Straight serial Gaussian elimination with first-nonzero pivoting. Kept as
// the independent check on the OpenMP kernels above.
std::size_t rank(const RationalMatrix& m);
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

}  // namespace reference

}  // namespace bmm
