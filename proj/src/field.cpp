#include "semidual/field.hpp"

#include <limits>
#include <ostream>

namespace semidual {

namespace {

using i128 = __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();
constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

bool fits64(const mpz_class& z) {
  return z.fits_slong_p() && z != mpz_class(std::numeric_limits<long>::min());
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus not prime");
  if (p >= (1ULL << 62)) throw std::invalid_argument("modulus too large");
  return Field(p);
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(long long v) const {
  if (modulus_ == 0) return FieldElem::rational(v, 1);
  return FieldElem::residue(v, modulus_);
}

FieldElem Field::from_rational(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw std::domain_error("division by zero");
  if (modulus_ == 0) return FieldElem::rational(mpq_class(num, den));
  mpz_class m(static_cast<unsigned long>(modulus_));
  mpz_class n = num % m;
  mpz_class d = den % m;
  if (n < 0) n += m;
  if (d < 0) d += m;
  FieldElem a = FieldElem::residue(static_cast<long long>(n.get_ui()), modulus_);
  FieldElem b = FieldElem::residue(static_cast<long long>(d.get_ui()), modulus_);
  return a / b;
}

std::string Field::name() const {
  if (modulus_ == 0) return "Q";
  return "Fp " + std::to_string(modulus_);
}

// ------------------------------------------------------------ FieldElem

FieldElem FieldElem::rational(long long num, long long den) {
  return from_wide(num, den);
}

FieldElem FieldElem::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  FieldElem e;
  if (fits64(c.get_num()) && fits64(c.get_den())) {
    e.num_ = c.get_num().get_si();
    e.den_ = c.get_den().get_si();
  } else {
    e.big_ = std::make_shared<const mpq_class>(c);
  }
  return e;
}

FieldElem FieldElem::residue(long long value, std::uint64_t modulus) {
  FieldElem e;
  e.modulus_ = modulus;
  long long m = static_cast<long long>(modulus);
  long long r = value % m;
  if (r < 0) r += m;
  e.num_ = r;
  return e;
}

FieldElem FieldElem::from_wide(i128 num, i128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  FieldElem e;
  if (num <= kMax64 && num > kMin64 && den <= kMax64) {
    e.num_ = static_cast<std::int64_t>(num);
    e.den_ = static_cast<std::int64_t>(den);
  } else {
    e.big_ = std::make_shared<const mpq_class>(to_mpz(num), to_mpz(den));
  }
  return e;
}

Field FieldElem::field() const {
  return modulus_ == 0 ? Field::rationals() : Field::prime(modulus_);
}

int FieldElem::sign() const {
  if (big_) return sgn(*big_);
  if (modulus_ != 0) return num_ == 0 ? 0 : 1;
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

void FieldElem::check_same(const FieldElem& o) const {
  if (modulus_ != o.modulus_) throw std::invalid_argument("mixed fields");
}

mpq_class FieldElem::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  if (modulus_ != 0) {
    std::uint64_t s = static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(o.num_);
    if (s >= modulus_) s -= modulus_;
    FieldElem e;
    e.modulus_ = modulus_;
    e.num_ = static_cast<std::int64_t>(s);
    return e;
  }
  if (big_ || o.big_) return rational(to_mpq() + o.to_mpq());
  if (den_ == 1 && o.den_ == 1) return from_wide(static_cast<i128>(num_) + o.num_, 1);
  return from_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                   static_cast<i128>(den_) * o.den_);
}

FieldElem FieldElem::operator-() const {
  if (modulus_ != 0) {
    FieldElem e = *this;
    if (e.num_ != 0) e.num_ = static_cast<std::int64_t>(modulus_) - e.num_;
    return e;
  }
  if (big_) return rational(-*big_);
  FieldElem e = *this;
  e.num_ = -e.num_;
  return e;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  if (modulus_ != 0) {
    FieldElem e;
    e.modulus_ = modulus_;
    e.num_ = static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(num_),
                                              static_cast<std::uint64_t>(o.num_), modulus_));
    return e;
  }
  if (big_ || o.big_) return rational(to_mpq() * o.to_mpq());
  if (den_ == 1 && o.den_ == 1) return from_wide(static_cast<i128>(num_) * o.num_, 1);
  return from_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (modulus_ != 0) {
    // Extended Euclid on (num, p).
    i128 a = num_, b = static_cast<i128>(modulus_);
    i128 x0 = 1, x1 = 0;
    while (b != 0) {
      i128 q = a / b;
      i128 t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return residue(static_cast<long long>(x0 % static_cast<i128>(modulus_)), modulus_);
  }
  if (big_) return rational(1 / *big_);
  return from_wide(den_, num_);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same(o);
  return *this * o.inverse();
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (modulus_ != o.modulus_) return false;
  if (big_ || o.big_) {
    if (!big_ || !o.big_) return false;  // canonical: small values never stored big
    return *big_ == *o.big_;
  }
  return num_ == o.num_ && den_ == o.den_;
}

std::string FieldElem::to_string() const {
  if (big_) return big_->get_str();
  if (modulus_ != 0 || den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const FieldElem& e) { return os << e.to_string(); }

}  // namespace semidual
