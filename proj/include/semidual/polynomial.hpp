#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "semidual/field.hpp"
#include "semidual/monomial.hpp"

namespace semidual {

/// A coefficient times a monomial, placed in free-module component `comp`.
/// Ring elements use component 0 throughout.
struct Term {
  Monomial mono;
  FieldElem coef;
  std::uint32_t comp = 0;
};

/// A finite list of terms; callers fix the sort order (see ModuleOrder).
using Vec = std::vector<Term>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class Polynomial;

/// k[x_1..x_n] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(Field field, std::vector<std::string> names, MonomialOrder order);

  const Field& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const;

  bool same_as(const PolyRing& o) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(Field field, std::vector<std::string> names, MonomialOrder order);

/// Polynomial in canonical form: terms strictly descending in the ambient
/// order, no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts and combines arbitrary terms.
  Polynomial(PolyRingPtr ring, Vec terms);

  static Polynomial constant(PolyRingPtr ring, const FieldElem& c);
  static Polynomial variable(PolyRingPtr ring, std::size_t index);
  static Polynomial monomial(PolyRingPtr ring, const Monomial& m, const FieldElem& c);

  const PolyRingPtr& ring() const { return ring_; }
  const Vec& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& lead() const { return terms_.front(); }
  /// Largest total degree of a term; -1 for zero.
  int degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const FieldElem& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_ambient(const Polynomial& o) const;

  PolyRingPtr ring_;
  Vec terms_;
};

/// Parses `+ - * ^ ( )`, integer literals, `a/b` rational literals and
/// variable names of `ring`. Throws ParseError.
Polynomial parse_polynomial(const PolyRingPtr& ring, std::string_view text);

/// Term-level helpers shared by the Groebner and module layers.
void sort_terms(Vec& v, const MonomialOrder& order);
std::string vec_to_string(const Vec& v, const std::vector<std::string>& names);

}  // namespace semidual
