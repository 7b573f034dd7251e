#pragma once
// Dense exact linear algebra over a finite field: rank, inverse, solve,
// row-space tests, Vandermonde construction. Entries are stored as canonical
// field values; elimination uses the leftmost nonzero pivot with
// first-nonzero row selection, so every result is deterministic.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wnc/gf.hpp"

namespace wnc {

class Matrix {
 public:
  Matrix(Field field, size_t rows, size_t cols);  // zero-filled

  static Matrix identity(const Field& field, size_t n);
  static Matrix from_values(Field field, size_t rows, size_t cols,
                            std::vector<uint32_t> values);
  static Matrix from_rows(const Field& field, size_t cols,
                          const std::vector<std::vector<uint32_t>>& rows);
  // entry (i, j) = points[j]^i for i in [0, rows). Points must be distinct.
  static Matrix vandermonde(const Field& field, size_t rows,
                            const std::vector<Fe>& points);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Fe at(size_t r, size_t c) const;
  uint32_t value_at(size_t r, size_t c) const { return vals_[r * cols_ + c]; }
  void set(size_t r, size_t c, const Fe& v);
  void set_value(size_t r, size_t c, uint32_t v);
  std::vector<uint32_t> row_values(size_t r) const;
  void set_row_values(size_t r, const std::vector<uint32_t>& vals);

  // Vertical concatenation; both sides need equal column counts.
  Matrix stacked(const Matrix& bottom) const;
  Matrix transposed() const;
  Matrix take_rows(const std::vector<size_t>& idx) const;
  Matrix take_cols(const std::vector<size_t>& idx) const;

  size_t rank() const;
  std::optional<Matrix> try_inverse() const;
  Matrix inverse() const;  // throws std::domain_error when singular
  // Unique x with (*this) x = b; requires a square invertible matrix.
  std::vector<uint32_t> solve_values(const std::vector<uint32_t>& b) const;
  std::vector<Fe> solve(const std::vector<Fe>& b) const;

  Matrix operator*(const Matrix& rhs) const;
  std::vector<uint32_t> mul_vec_values(const std::vector<uint32_t>& x) const;
  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  // Space-separated element tokens, row-major: "a b c d".
  std::string token_list() const;

 private:
  Field field_;
  size_t rows_;
  size_t cols_;
  std::vector<uint32_t> vals_;
};

Matrix stack(const Matrix& top, const Matrix& bottom);

// True iff rowspace(a) and rowspace(b) intersect only in 0, computed as
// rank([a; b]) == rank(a) + rank(b).
bool row_space_intersection_trivial(const Matrix& a, const Matrix& b);

}  // namespace wnc
