#include "nbihom/scalar.hpp"

#include "nbihom/error.hpp"

namespace nbihom {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e != 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_mpz(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::NonCommutingTwists: return "NonCommutingTwists";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InvalidTrace: return "InvalidTrace";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotComplementary: return "NotComplementary";
  }
  return "Error";
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1U << 31) || !is_prime(p))
    throw Error(ErrorCode::InvalidParams, "field modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(modulus_); }

Scalar Field::zero() const {
  Scalar s;
  s.modulus_ = modulus_;
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t value) const {
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.q_ = Rational(value);
  } else {
    std::int64_t r = value % static_cast<std::int64_t>(modulus_);
    if (r < 0) r += modulus_;
    s.residue_ = static_cast<std::uint32_t>(r);
  }
  return s;
}

Scalar Field::from_rational(const Rational& value) const {
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.q_ = value;
    return s;
  }
  std::uint32_t den = reduce_mpz(value.denominator(), modulus_);
  if (den == 0)
    throw Error(ErrorCode::DivisionByZero, "denominator of " + value.str() + " vanishes in " + name());
  std::uint64_t num = reduce_mpz(value.numerator(), modulus_);
  s.residue_ = static_cast<std::uint32_t>(num * inverse_mod(den, modulus_) % modulus_);
  return s;
}

Scalar Field::parse(std::string_view text) const { return from_rational(Rational::parse(text)); }

Field Scalar::field() const { return Field(modulus_); }

void Scalar::check_same(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.q_ = Rational(1) / q_;
  } else {
    s.residue_ = inverse_mod(residue_, modulus_);
  }
  return s;
}

std::string Scalar::str() const { return modulus_ == 0 ? q_.str() : std::to_string(residue_); }

Scalar Scalar::operator-() const {
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.q_ = -q_;
  } else {
    s.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  }
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  Scalar s;
  s.modulus_ = a.modulus_;
  if (a.modulus_ == 0) {
    s.q_ = a.q_ + b.q_;
  } else {
    std::uint64_t r = static_cast<std::uint64_t>(a.residue_) + b.residue_;
    s.residue_ = static_cast<std::uint32_t>(r >= a.modulus_ ? r - a.modulus_ : r);
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::check_same(a, b);
  Scalar s;
  s.modulus_ = a.modulus_;
  if (a.modulus_ == 0) {
    s.q_ = a.q_ * b.q_;
  } else {
    s.residue_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.residue_) * b.residue_ % a.modulus_);
  }
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ == 0 ? a.q_ == b.q_ : a.residue_ == b.residue_;
}

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t index) {
  Vector v = zero_vector(field, n);
  v.at(index) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "axpy length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vector scaled(const Vector& x, const Scalar& a) {
  Vector out = x;
  for (auto& v : out) v *= a;
  return out;
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

}  // namespace nbihom
