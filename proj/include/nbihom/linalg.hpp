#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nbihom/scalar.hpp"

namespace nbihom {

/// Dense row-major matrix over an exact field. Linear maps act on column
/// vectors: the j-th column holds the image of the j-th basis vector.
class Matrix {
 public:
  Matrix(const Field& field, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& field, std::size_t n);
  /// Every row must have length `cols`.
  static Matrix from_rows(const Field& field, std::span<const Vector> rows, std::size_t cols);
  /// Inverse of vectorize().
  static Matrix from_vectorized(const Field& field, std::span<const Scalar> entries, std::size_t rows,
                                std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const Field& field() const { return field_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  [[nodiscard]] const Scalar& at(std::size_t i, std::size_t j) const;

  [[nodiscard]] Vector row(std::size_t i) const;
  [[nodiscard]] Vector column(std::size_t j) const;
  void set_row(std::size_t i, const Vector& values);
  [[nodiscard]] std::vector<Vector> row_vectors() const;

  /// M·v
  [[nodiscard]] Vector apply(const Vector& v) const;
  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix pow(unsigned exponent) const;
  [[nodiscard]] Matrix scaled(const Scalar& factor) const;
  [[nodiscard]] bool is_zero() const;
  /// Row-major flattening: entry (i, j) lands at index i*cols + j.
  [[nodiscard]] Vector vectorize() const { return entries_; }
  [[nodiscard]] const std::vector<Scalar>& entries() const { return entries_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Commutator AB - BA.
[[nodiscard]] Matrix commutator(const Matrix& a, const Matrix& b);

class Subspace;

/// Incrementally maintained reduced row-echelon basis.
///
/// Every stored row has a leading 1 in its pivot column and zeros in all other
/// pivot columns, so the basis is in canonical RREF at all times. Over F_p the
/// rows are dense residue arrays driven by the SIMD row kernels.
class RowEchelon {
 public:
  RowEchelon(const Field& field, std::size_t cols);

  /// Adds a row; returns true when it enlarged the row space.
  bool add(Vector row);
  /// True when `row` lies in the current row space.
  [[nodiscard]] bool contains(const Vector& row) const;

  [[nodiscard]] std::size_t rank() const { return pivots_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const Field& field() const { return field_; }
  /// Pivot columns in increasing order.
  [[nodiscard]] std::vector<std::size_t> pivots() const;
  /// The canonical basis, one row per pivot, ordered by pivot column.
  [[nodiscard]] Matrix basis() const;
  /// {v : r·v = 0 for every row r}
  [[nodiscard]] Subspace nullspace() const;

 private:
  [[nodiscard]] Vector reduce(Vector row) const;
  [[nodiscard]] std::vector<std::uint32_t> reduce_fp(std::vector<std::uint32_t> row) const;

  Field field_;
  std::size_t cols_;
  std::vector<std::size_t> pivots_;          // pivot column of stored row k
  std::vector<std::ptrdiff_t> row_of_col_;   // -1 for non-pivot columns
  std::vector<Vector> rows_;                 // used over ℚ
  std::vector<std::vector<std::uint32_t>> fp_rows_;  // used over F_p
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Unique reduced row-echelon form (same shape as the input, zero rows last).
[[nodiscard]] RrefResult rref(const Matrix& m);
[[nodiscard]] std::size_t rank(const Matrix& m);
[[nodiscard]] bool is_invertible(const Matrix& m);
/// {v : m·v = 0}
[[nodiscard]] Subspace nullspace(const Matrix& m);
/// Some x with a·x = b, or nullopt when the system is inconsistent.
[[nodiscard]] std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Linear subspace of 𝕂^n stored by its canonical RREF basis, so equality of
/// subspaces is entry-wise equality of bases.
class Subspace {
 public:
  static Subspace zero(const Field& field, std::size_t ambient_dim);
  static Subspace full(const Field& field, std::size_t ambient_dim);
  static Subspace span(const Field& field, std::size_t ambient_dim, std::span<const Vector> vectors);
  static Subspace row_space(const Matrix& m);

  [[nodiscard]] std::size_t ambient_dim() const { return basis_.cols(); }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] const Field& field() const { return basis_.field(); }
  [[nodiscard]] const Matrix& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }
  [[nodiscard]] std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }

  /// Throws AmbientMismatch on a length mismatch.
  [[nodiscard]] bool contains(const Vector& v) const;
  /// Coordinates of a member in the canonical basis (the entries at the
  /// pivot columns). Only meaningful when contains(v).
  [[nodiscard]] Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  friend class RowEchelon;

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

[[nodiscard]] Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus: reduce [a | a] stacked on [b | 0]; rows with a zero left half
/// span the intersection.
[[nodiscard]] Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// Image under the coordinate projection onto `coords`, in the given order.
[[nodiscard]] Subspace subspace_project(const Subspace& a, std::span<const std::size_t> coords);
[[nodiscard]] bool subspace_leq(const Subspace& a, const Subspace& b);

}  // namespace nbihom
