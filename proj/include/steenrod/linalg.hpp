#pragma once

#include "steenrod/ring.hpp"

#include <string>
#include <cstddef>
#include <optional>
#include <vector>

namespace steenrod {

using Vector = std::vector<Rational>;

/// Dense matrix over a Ring. Entries are kept normalized.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Ring ring = Ring::integers())
      : rows_(rows), cols_(cols), ring_(ring), data_(rows * cols) {}

  static Matrix identity(std::size_t n, Ring ring = Ring::integers());

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Rational& v) { data_[r * cols_ + c] = ring_.normalize(v); }
  void add(std::size_t r, std::size_t c, const Rational& v) {
    data_[r * cols_ + c] = ring_.normalize(data_[r * cols_ + c] + v);
  }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;
  Matrix in_ring(Ring ring) const;
  bool is_zero() const;

  /// Columns [begin, end).
  Matrix column_range(std::size_t begin, std::size_t end) const;
  /// Rows [begin, end).
  Matrix row_range(std::size_t begin, std::size_t end) const;
  /// Stacks rows of b under this matrix.
  Matrix vstack(const Matrix& b) const;
  /// Places the columns of b to the right of this matrix.
  Matrix hstack(const Matrix& b) const;

  Vector apply(const Vector& v) const;

  // Elementary operations used by the reductions.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Rational& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Rational& factor);
  void scale_row(std::size_t r, const Rational& factor);
  void scale_col(std::size_t c, const Rational& factor);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Ring ring_ = Ring::integers();
  std::vector<Rational> data_;
};

/// U * A * V = D with U, V invertible over the ring and D diagonal with
/// d_1 | d_2 | ... | d_rank (nonzero entries first).
struct SmithDecomposition {
  Matrix D, U, U_inv, V, V_inv;
  std::size_t rank = 0;
  std::vector<Rational> diagonal() const;
};

/// Naive Smith normal form: pivot on the entry of smallest absolute value
/// over Z, any nonzero entry over a field.
SmithDecomposition smith_normal_form(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Basis of the kernel as matrix columns. Over Z this is a basis of the
/// kernel lattice.
Matrix kernel_basis(const Matrix& a);

/// Solves a * x = b. Returns nullopt when no solution exists over the ring.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Determinant over the ring (fraction-free elimination over Z).
Rational determinant(const Matrix& a);

bool is_invertible(const Matrix& a);

/// Rows separated by "; ", e.g. "[1 0; 0 1]"; "[]" when empty.
std::string to_string(const Matrix& a);

}  // namespace steenrod
