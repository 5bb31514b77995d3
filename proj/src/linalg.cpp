#include "nbihom/linalg.hpp"

#include <algorithm>

#include "nbihom/error.hpp"
#include "nbihom/simd/fp_kernels.hpp"

namespace nbihom {

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, field.zero()) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(const Field& field, std::span<const Vector> rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_vectorized(const Field& field, std::span<const Scalar> entries, std::size_t rows,
                               std::size_t cols) {
  if (entries.size() != rows * cols)
    throw Error(ErrorCode::DimensionMismatch, "vectorized matrix has the wrong number of entries");
  Matrix m(field, rows, cols);
  std::copy(entries.begin(), entries.end(), m.entries_.begin());
  return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  return (*this)(i, j);
}

Vector Matrix::row(std::size_t i) const {
  if (i >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row index out of range");
  return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Vector Matrix::column(std::size_t j) const {
  if (j >= cols_) throw Error(ErrorCode::IndexOutOfRange, "column index out of range");
  Vector out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

void Matrix::set_row(std::size_t i, const Vector& values) {
  if (i >= rows_) throw Error(ErrorCode::IndexOutOfRange, "row index out of range");
  if (values.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row has the wrong length");
  std::copy(values.begin(), values.end(), entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector length mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::pow(unsigned exponent) const {
  if (!is_square()) throw Error(ErrorCode::DimensionMismatch, "power of a non-square matrix");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Matrix Matrix::scaled(const Scalar& factor) const {
  Matrix out = *this;
  for (auto& e : out.entries_) e *= factor;
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::FieldMismatch, "matrix product over different fields");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
  Matrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] -= b.entries_[k];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------
// RowEchelon

namespace {

std::vector<std::uint32_t> to_residues(const Vector& v) {
  std::vector<std::uint32_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].residue();
  return out;
}

Vector from_residues(const Field& field, const std::vector<std::uint32_t>& r) {
  Vector out;
  out.reserve(r.size());
  for (std::uint32_t x : r) out.push_back(field.from_int(x));
  return out;
}

std::uint32_t inverse_residue(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint32_t e = p - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

RowEchelon::RowEchelon(const Field& field, std::size_t cols)
    : field_(field), cols_(cols), row_of_col_(cols, -1) {}

Vector RowEchelon::reduce(Vector row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar c = row[pivots_[k]];
    if (!c.is_zero()) axpy(row, -c, rows_[k]);
  }
  return row;
}

std::vector<std::uint32_t> RowEchelon::reduce_fp(std::vector<std::uint32_t> row) const {
  const auto& kernels = simd::fp_kernels();
  const std::uint32_t p = field_.modulus();
  for (std::size_t k = 0; k < fp_rows_.size(); ++k) {
    const std::uint32_t c = row[pivots_[k]];
    if (c != 0) kernels.submul(row.data(), fp_rows_[k].data(), c, p, cols_);
  }
  return row;
}

bool RowEchelon::add(Vector row) {
  if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length does not match the system");
  if (field_.is_rational()) {
    row = reduce(std::move(row));
    auto lead = std::find_if(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (lead == row.end()) return false;
    const auto pivot = static_cast<std::size_t>(lead - row.begin());
    const Scalar inv = lead->inverse();
    for (auto& x : row)
      if (!x.is_zero()) x *= inv;
    for (auto& existing : rows_) {
      const Scalar c = existing[pivot];
      if (!c.is_zero()) axpy(existing, -c, row);
    }
    row_of_col_[pivot] = static_cast<std::ptrdiff_t>(rows_.size());
    pivots_.push_back(pivot);
    rows_.push_back(std::move(row));
    return true;
  }

  const auto& kernels = simd::fp_kernels();
  const std::uint32_t p = field_.modulus();
  auto fp = reduce_fp(to_residues(row));
  auto lead = std::find_if(fp.begin(), fp.end(), [](std::uint32_t x) { return x != 0; });
  if (lead == fp.end()) return false;
  const auto pivot = static_cast<std::size_t>(lead - fp.begin());
  kernels.scale(fp.data(), inverse_residue(*lead, p), p, cols_);
  for (auto& existing : fp_rows_) {
    const std::uint32_t c = existing[pivot];
    if (c != 0) kernels.submul(existing.data(), fp.data(), c, p, cols_);
  }
  row_of_col_[pivot] = static_cast<std::ptrdiff_t>(fp_rows_.size());
  pivots_.push_back(pivot);
  fp_rows_.push_back(std::move(fp));
  return true;
}

bool RowEchelon::contains(const Vector& row) const {
  if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "row length does not match the system");
  if (field_.is_rational()) return is_zero(reduce(row));
  auto fp = reduce_fp(to_residues(row));
  return std::all_of(fp.begin(), fp.end(), [](std::uint32_t x) { return x == 0; });
}

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> out = pivots_;
  std::sort(out.begin(), out.end());
  return out;
}

Matrix RowEchelon::basis() const {
  Matrix out(field_, rank(), cols_);
  std::size_t i = 0;
  for (std::size_t col = 0; col < cols_; ++col) {
    const std::ptrdiff_t k = row_of_col_[col];
    if (k < 0) continue;
    const auto idx = static_cast<std::size_t>(k);
    out.set_row(i++, field_.is_rational() ? rows_[idx] : from_residues(field_, fp_rows_[idx]));
  }
  return out;
}

Subspace RowEchelon::nullspace() const {
  const Matrix b = basis();
  const std::vector<std::size_t> piv = pivots();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : piv) is_pivot[c] = true;
  // Kernel vectors indexed by free columns; already in RREF once ordered by
  // the free column (their pivot), with -b(i, f) sitting at pivot columns.
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix kernel(field_, free_cols.size(), cols_);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    kernel(k, f) = field_.one();
    for (std::size_t i = 0; i < piv.size(); ++i) kernel(k, piv[i]) = -b(i, f);
  }
  // The vectors are independent but not in RREF (pivot entries appear before
  // their free column), so canonicalize.
  return Subspace::row_space(kernel);
}

// ---------------------------------------------------------------------------
// Free functions

RrefResult rref(const Matrix& m) {
  RowEchelon ech(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.add(m.row(i));
  Matrix reduced(m.field(), m.rows(), m.cols());
  const Matrix b = ech.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) reduced.set_row(i, b.row(i));
  return {std::move(reduced), ech.pivots()};
}

std::size_t rank(const Matrix& m) {
  RowEchelon ech(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.add(m.row(i));
  return ech.rank();
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Subspace nullspace(const Matrix& m) {
  RowEchelon ech(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.add(m.row(i));
  return ech.nullspace();
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side has the wrong length");
  const Field& f = a.field();
  RowEchelon ech(f, a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector row = a.row(i);
    row.push_back(b[i]);
    ech.add(std::move(row));
  }
  const Matrix r = ech.basis();
  const auto piv = ech.pivots();
  Vector x = zero_vector(f, a.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] == a.cols()) return std::nullopt;
    x[piv[i]] = r(i, a.cols());
  }
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::zero(const Field& field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(const Field& field, std::size_t ambient_dim) {
  std::vector<std::size_t> piv(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) piv[i] = i;
  return Subspace(Matrix::identity(field, ambient_dim), std::move(piv));
}

Subspace Subspace::span(const Field& field, std::size_t ambient_dim, std::span<const Vector> vectors) {
  RowEchelon ech(field, ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw Error(ErrorCode::AmbientMismatch, "spanning vector has the wrong length");
    ech.add(v);
  }
  return Subspace(ech.basis(), ech.pivots());
}

Subspace Subspace::row_space(const Matrix& m) {
  RowEchelon ech(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.add(m.row(i));
  return Subspace(ech.basis(), ech.pivots());
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
  Vector residual = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = residual[pivots_[i]];
    if (!c.is_zero()) axpy(residual, -c, basis_.row(i));
  }
  return nbihom::is_zero(residual);
}

Vector Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "vector length differs from ambient dimension");
  Vector out;
  out.reserve(pivots_.size());
  for (std::size_t p : pivots_) out.push_back(v[p]);
  return out;
}

bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw Error(ErrorCode::AmbientMismatch, "subspaces live in ambient spaces of different dimension");
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "subspaces over different fields");
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  std::vector<Vector> all = a.basis_vectors();
  for (auto& v : b.basis_vectors()) all.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient_dim(), all);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  const std::size_t n = a.ambient_dim();
  const Field& f = a.field();
  RowEchelon ech(f, 2 * n);
  for (const auto& v : a.basis_vectors()) {
    Vector row = v;
    row.insert(row.end(), v.begin(), v.end());
    ech.add(std::move(row));
  }
  for (const auto& v : b.basis_vectors()) {
    Vector row = v;
    row.resize(2 * n, f.zero());
    ech.add(std::move(row));
  }
  const Matrix r = ech.basis();
  const auto piv = ech.pivots();
  std::vector<Vector> meet;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] < n) continue;
    Vector row = r.row(i);
    meet.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  }
  return Subspace::span(f, n, meet);
}

Subspace subspace_project(const Subspace& a, std::span<const std::size_t> coords) {
  for (std::size_t c : coords)
    if (c >= a.ambient_dim()) throw Error(ErrorCode::IndexOutOfRange, "projection coordinate out of range");
  std::vector<Vector> images;
  images.reserve(a.dim());
  for (const auto& v : a.basis_vectors()) {
    Vector img;
    img.reserve(coords.size());
    for (std::size_t c : coords) img.push_back(v[c]);
    images.push_back(std::move(img));
  }
  return Subspace::span(a.field(), coords.size(), images);
}

bool subspace_leq(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  for (const auto& v : a.basis_vectors())
    if (!b.contains(v)) return false;
  return true;
}

}  // namespace nbihom
