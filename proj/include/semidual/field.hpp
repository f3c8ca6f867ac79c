#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace semidual {

class FieldElem;

/// Exact coefficient field: the rationals or a prime field F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws std::invalid_argument("modulus not prime") unless p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t characteristic() const { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long v) const;
  FieldElem from_rational(const mpz_class& num, const mpz_class& den) const;

  std::string name() const;

  bool operator==(const Field& other) const = default;

 private:
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_;
};

/// An element of a Field. Rationals are kept in lowest terms with a positive
/// denominator; small values avoid GMP entirely. Residues live in [0, p).
class FieldElem {
 public:
  FieldElem() = default;

  static FieldElem rational(long long num, long long den = 1);
  static FieldElem rational(const mpq_class& q);
  static FieldElem residue(long long value, std::uint64_t modulus);

  Field field() const;
  std::uint64_t modulus() const { return modulus_; }

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  int sign() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  /// Throws std::domain_error on division by zero.
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  FieldElem inverse() const;

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// Rational value (residues are reported as their representative in [0, p)).
  mpq_class to_mpq() const;
  std::string to_string() const;

 private:
  static FieldElem from_wide(__int128 num, __int128 den);
  void check_same(const FieldElem& o) const;

  std::uint64_t modulus_ = 0;  // 0 => rational
  std::int64_t num_ = 0;       // numerator, or the residue
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;  // set only for rationals that do not fit
};

std::ostream& operator<<(std::ostream& os, const FieldElem& e);

bool is_prime(std::uint64_t n);

}  // namespace semidual
