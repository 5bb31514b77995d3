#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nbihom/rational.hpp"

namespace nbihom {

/// The ground field: either ℚ or a prime field F_p (p < 2^31).
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidParams when p is not a prime below 2^31.
  static Field prime(std::uint32_t p);

  [[nodiscard]] bool is_rational() const { return modulus_ == 0; }
  /// 0 for ℚ.
  [[nodiscard]] std::uint32_t modulus() const { return modulus_; }
  [[nodiscard]] std::uint32_t characteristic() const { return modulus_; }
  /// True when k·1 = 0 in the field.
  [[nodiscard]] bool divides_characteristic(std::uint64_t k) const { return modulus_ != 0 && k % modulus_ == 0; }
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

  [[nodiscard]] class Scalar zero() const;
  [[nodiscard]] class Scalar one() const;
  [[nodiscard]] class Scalar from_int(std::int64_t value) const;
  [[nodiscard]] class Scalar from_rational(const Rational& value) const;
  /// Parses "p/q" or "p"; in F_p the fraction is mapped through the inverse of q.
  [[nodiscard]] class Scalar parse(std::string_view text) const;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
  std::uint32_t modulus_;
};

/// Exact field element. Rationals are reduced; residues lie in [0, p).
///
/// Mixing elements of different fields throws FieldMismatch.
class Scalar {
 public:
  /// Rational zero. Prefer Field::zero() so the field is explicit.
  Scalar() = default;

  [[nodiscard]] Field field() const;
  [[nodiscard]] bool is_zero() const { return modulus_ == 0 ? q_.is_zero() : residue_ == 0; }
  [[nodiscard]] bool is_one() const { return modulus_ == 0 ? q_.is_one() : residue_ == 1; }
  [[nodiscard]] std::uint32_t residue() const { return residue_; }
  [[nodiscard]] const Rational& rational() const { return q_; }
  [[nodiscard]] Scalar inverse() const;

  /// Rationals as "p/q" (or "p"); residues as their decimal value.
  [[nodiscard]] std::string str() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  friend class Field;
  static void check_same(const Scalar& a, const Scalar& b);

  Rational q_;
  std::uint32_t residue_ = 0;
  std::uint32_t modulus_ = 0;
};

using Vector = std::vector<Scalar>;

[[nodiscard]] Vector zero_vector(const Field& field, std::size_t n);
[[nodiscard]] Vector unit_vector(const Field& field, std::size_t n, std::size_t index);
[[nodiscard]] bool is_zero(const Vector& v);
/// y += a·x
void axpy(Vector& y, const Scalar& a, const Vector& x);
[[nodiscard]] Vector scaled(const Vector& x, const Scalar& a);
[[nodiscard]] Vector operator+(const Vector& a, const Vector& b);
[[nodiscard]] Vector operator-(const Vector& a, const Vector& b);

}  // namespace nbihom
