#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "spincalc/kernel/scalar.hpp"

namespace spincalc {

/// Dense rectangular matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact determinant by Gaussian elimination over Q.
/// Throws DimensionError for non-square input.
Scalar det(const RatMatrix& m);

struct LinearSolution {
  enum class Status { unique, rank_deficient, inconsistent };

  Status status = Status::unique;
  std::size_t rank = 0;
  // unique: the solution. rank_deficient: a particular solution with every
  // free unknown set to zero. inconsistent: empty.
  std::vector<Scalar> values;
  // Unknowns whose value is not fixed by the system (nonzero in some
  // null-space vector). Empty unless rank_deficient.
  std::vector<std::size_t> undetermined;
  // First row (in input order) that contradicts the rows before it.
  std::optional<std::size_t> witness_row;
};

/// Solves m·x = rhs exactly. Never guesses: rank deficiency and
/// inconsistency are reported in the result. Every returned solution is
/// re-substituted; a failed check throws InvariantViolation.
LinearSolution solve_linear(const RatMatrix& m, std::span<const Scalar> rhs);

}  // namespace spincalc
