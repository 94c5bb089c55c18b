#include "spincalc/kernel/matrix.hpp"

#include <algorithm>
#include <utility>

#include "spincalc/error.hpp"

namespace spincalc {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

std::vector<Scalar> RatMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw DimensionError("vector length does not match column count");
  std::vector<Scalar> out(rows_, Scalar(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    }
  }
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("incompatible matrix product");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Scalar det(const RatMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Scalar result(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      result = -result;
    }
    const Scalar p = a(col, col);
    result *= p;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Scalar f = a(r, col) / p;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return result;
}

LinearSolution solve_linear(const RatMatrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side length does not match row count");
  const std::size_t n = m.cols();

  // Incremental reduced row echelon form; each pivot row has a 1 in its
  // pivot column and zeros in every other pivot column.
  struct PivotRow {
    std::size_t col;
    std::vector<Scalar> coeffs;
    Scalar rhs;
  };
  std::vector<PivotRow> pivots;
  LinearSolution out;

  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<Scalar> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = m(i, c);
    Scalar b = rhs[i];
    for (const auto& p : pivots) {
      if (row[p.col].is_zero()) continue;
      const Scalar f = row[p.col];
      for (std::size_t c = 0; c < n; ++c) row[c] -= f * p.coeffs[c];
      b -= f * p.rhs;
    }
    const auto lead = std::find_if(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (lead == row.end()) {
      if (!b.is_zero()) {
        out.status = LinearSolution::Status::inconsistent;
        out.witness_row = i;
        out.rank = pivots.size();
        return out;
      }
      continue;
    }
    const std::size_t col = static_cast<std::size_t>(lead - row.begin());
    const Scalar inv = Scalar(1) / row[col];
    for (auto& s : row) s *= inv;
    b *= inv;
    for (auto& p : pivots) {
      if (p.coeffs[col].is_zero()) continue;
      const Scalar f = p.coeffs[col];
      for (std::size_t c = 0; c < n; ++c) p.coeffs[c] -= f * row[c];
      p.rhs -= f * b;
    }
    pivots.push_back({col, std::move(row), b});
  }

  out.rank = pivots.size();
  out.values.assign(n, Scalar(0));
  std::vector<bool> is_pivot(n, false);
  for (const auto& p : pivots) {
    out.values[p.col] = p.rhs;
    is_pivot[p.col] = true;
  }

  if (out.rank < n) {
    out.status = LinearSolution::Status::rank_deficient;
    std::vector<bool> varies(n, false);
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      varies[f] = true;
      for (const auto& p : pivots) {
        if (!p.coeffs[f].is_zero()) varies[p.col] = true;
      }
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (varies[c]) out.undetermined.push_back(c);
    }
  }

  const auto check = m.apply(out.values);
  for (std::size_t i = 0; i < check.size(); ++i) {
    if (check[i] != rhs[i]) throw InvariantViolation("solve_linear re-substitution failed");
  }
  return out;
}

}  // namespace spincalc
