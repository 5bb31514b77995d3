#pragma once

// Shared generators and independent oracles for the test binaries. Nothing
// here calls into the elimination code under test.

#include <cstdint>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "nbihom/linalg.hpp"

namespace nbihom::testing {

inline Matrix random_matrix(std::mt19937_64& rng, const Field& field, std::size_t rows, std::size_t cols,
                            int lo = -3, int hi = 3, double zero_prob = 0.3) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::bernoulli_distribution zero(zero_prob);
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? field.zero() : field.from_int(val(rng));
  return m;
}

/// Textbook fraction-based Gaussian elimination over mpq_class, used as an
/// independent rank oracle for matrices over ℚ.
inline std::size_t oracle_rank_q(const Matrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).rational().to_mpq();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Same elimination over F_p with plain 64-bit arithmetic.
inline std::size_t oracle_rank_fp(const Matrix& m) {
  const std::uint64_t p = m.field().modulus();
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).residue();
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t ic = inv(a[r][c]);
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = a[i][c] * ic % p;
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] = (a[i][j] + (p - f) * a[r][j]) % p;
    }
    ++r;
  }
  return r;
}

inline std::size_t oracle_rank(const Matrix& m) {
  return m.field().is_rational() ? oracle_rank_q(m) : oracle_rank_fp(m);
}

inline Matrix stack(const Matrix& a, const Matrix& b) {
  std::vector<Vector> rows = a.row_vectors();
  for (auto& r : b.row_vectors()) rows.push_back(r);
  return Matrix::from_rows(a.field(), rows, a.cols());
}

inline Vector ints(const Field& f, std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.push_back(f.from_int(x));
  return v;
}

inline Matrix int_matrix(const Field& f, std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<Vector> rs;
  std::size_t cols = 0;
  for (auto r : rows) {
    rs.push_back(ints(f, r));
    cols = r.size();
  }
  return Matrix::from_rows(f, rs, cols);
}

/// Product of an even number of random orthogonal reflections over F_p:
/// g gᵀ = I and det g = 1. Such g preserve the 4-dim 3-Lie bracket, which is a
/// cross product: [gx, gy, gz] = det(g) g^{-T} [x, y, z].
inline Matrix random_rotation(std::mt19937_64& rng, const Field& f, std::size_t d, unsigned reflections = 4) {
  std::uniform_int_distribution<int> val(0, static_cast<int>(f.modulus()) - 1);
  Matrix g = Matrix::identity(f, d);
  for (unsigned k = 0; k < 2 * ((reflections + 1) / 2);) {
    Vector v(d);
    for (auto& x : v) x = f.from_int(val(rng));
    Scalar norm = f.zero();
    for (const auto& x : v) norm += x * x;
    if (norm.is_zero()) continue;
    Matrix r = Matrix::identity(f, d);
    const Scalar c = f.from_int(2) * norm.inverse();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) r(i, j) -= c * v[i] * v[j];
    g = g * r;
    ++k;
  }
  return g;
}

}  // namespace nbihom::testing
