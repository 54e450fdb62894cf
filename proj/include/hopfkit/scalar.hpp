#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hopfkit {

/// The base field: the rationals or a prime field GF(p).
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws Error(invalid_field) unless p is prime.
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "Q" or "GF:p".
  static FieldSpec parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator; GF(p) values are canonical representatives in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(FieldSpec field, std::int64_t value);
  static Scalar rational(std::int64_t num, std::int64_t den);
  /// "a", "-a" or "a/b"; GF(p) values are reduced mod p.
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const;
  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == 1 && den_ == 1; }

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& rhs) const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfkit
