#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace invsemi {

/// Scalar field: exact rationals (characteristic 0) or the prime field GF(p).
class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static constexpr FieldSpec rationals() { return FieldSpec{}; }
  /// Throws InvalidArgument unless p is prime.
  static FieldSpec prime(std::uint32_t p);
  /// 0 selects the rationals, anything else must be prime.
  static FieldSpec from_characteristic(std::uint32_t c);

  constexpr std::uint32_t characteristic() const { return p_; }
  constexpr bool is_rational() const { return p_ == 0; }

  /// "Q" or "GF(p)".
  std::string name() const;

  friend constexpr bool operator==(FieldSpec, FieldSpec) = default;

 private:
  constexpr explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of a FieldSpec. Rationals are kept normalized by GMP; residues
/// live in [0, p). Mixing fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpq_class& value);

  static Scalar zero(FieldSpec f) { return Scalar(f, 0L); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1L); }

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws InvalidArgument on division by zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a *= b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "3/4", "-2" or a residue "1".
  std::string to_string() const;
  /// Inverse of to_string for the given field.
  static Scalar parse(FieldSpec f, const std::string& text);

 private:
  void check_same(const Scalar& o) const;

  FieldSpec field_{};
  mpq_class q_{0};
  std::uint64_t r_ = 0;
};

}  // namespace invsemi
