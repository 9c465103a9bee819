#pragma once
#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

#include "qha/error.hpp"

namespace qha {

// Ground field of a computation: the rationals (p == 0) or F_p, p prime.
struct FieldSpec {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  bool operator==(const FieldSpec&) const = default;
  std::string str() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

// An exact field element. Rationals keep an int64 numerator/denominator fast
// path and fall back to GMP when values grow; prime-field elements are stored
// as canonical residues with the modulus carried alongside.
//
// A Scalar with p() == 0 and no GMP payload acts as a field-agnostic constant:
// combining it with an F_p operand reduces it mod p first. That lets 0/1
// literals flow through generic linear algebra untouched.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long n) : num_(n) {}
  Scalar(long long n, long long d);

  static Scalar from_mpq(const mpq_class& q);
  static Scalar mod_p(long long v, std::uint32_t p);
  // Accepts "n" or "n/d" with arbitrary-precision integers.
  static Scalar parse(const std::string& text, const FieldSpec& field);

  Scalar(const Scalar& o);
  Scalar(Scalar&&) noexcept = default;
  Scalar& operator=(const Scalar& o);
  Scalar& operator=(Scalar&&) noexcept = default;

  bool is_zero() const;
  bool is_one() const;
  std::uint32_t p() const { return p_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar inverse() const;

  // Exact decimal rendering: "n" or "n/d"; F_p residues print as integers.
  std::string str() const;
  // Rational value as mpq (rationals only).
  mpq_class to_mpq() const;

 private:
  Scalar to_field(std::uint32_t p) const;

  long long num_ = 0;
  long long den_ = 1;
  std::unique_ptr<mpq_class> big_;
  std::uint32_t p_ = 0;

  friend Scalar add_like(const Scalar& a, const Scalar& b, bool subtract);
};

bool is_prime(std::uint32_t n);

}  // namespace qha
