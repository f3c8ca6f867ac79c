#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "semidual/groebner.hpp"
#include "semidual/report.hpp"

namespace semidual {

/// k[x_1..x_n]/I with a cached reduced Groebner basis of I. Elements are
/// Polynomials over the ambient kept in normal form.
class PresentedRing {
 public:
  /// Throws std::invalid_argument("inhomogeneous relation ...") when weights
  /// are supplied and a relation is not weighted-homogeneous.
  PresentedRing(PolyRingPtr ambient, std::vector<Polynomial> relations,
                std::optional<std::vector<int>> weights = std::nullopt);

  const PolyRingPtr& ambient() const { return ambient_; }
  const Field& field() const { return ambient_->field(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  const std::vector<std::string>& names() const { return ambient_->names(); }
  const MonomialOrder& order() const { return ambient_->order(); }

  const std::vector<Polynomial>& relations() const { return relations_; }
  const std::vector<Polynomial>& gb() const { return gb_; }
  /// The basis as comp-0 term vectors (descending).
  const std::vector<Vec>& gb_vecs() const { return gb_vecs_; }

  bool graded() const { return weights_.has_value(); }
  /// Variable weights; all 1 when the ring is ungraded.
  const std::vector<int>& weights() const { return eff_weights_; }
  /// Weighted degree of a homogeneous element (of its leading term otherwise).
  int degree_of(const Polynomial& p) const;
  bool is_homogeneous(const Polynomial& p) const;

  Polynomial reduce(const Polynomial& p) const;
  Polynomial parse(std::string_view text) const { return reduce(parse_polynomial(ambient_, text)); }
  Polynomial zero() const { return Polynomial(ambient_); }
  Polynomial one() const { return Polynomial::constant(ambient_, field().one()); }
  Polynomial constant(long long c) const { return reduce(Polynomial::constant(ambient_, field().from_int(c))); }
  Polynomial var(std::size_t i) const { return reduce(Polynomial::variable(ambient_, i)); }
  Polynomial mul(const Polynomial& a, const Polynomial& b) const { return reduce(a * b); }
  bool equal(const Polynomial& a, const Polynomial& b) const { return reduce(a - b).is_zero(); }

  /// Order used to store module vectors: position over term, ring order.
  const ModuleOrder& storage_order() const { return storage_; }
  /// Componentwise normal form of a vector (any term order on input).
  Vec reduce_vec(Vec v) const;

  /// Standard monomials of I; nullopt if there are infinitely many.
  std::optional<std::vector<Monomial>> basis() const;
  std::optional<std::size_t> k_dim() const;
  /// Number of standard monomials of each weighted degree 0..max_deg.
  std::vector<long> hilbert(int max_deg) const;

 private:
  PolyRingPtr ambient_;
  std::vector<Polynomial> relations_;
  std::vector<Polynomial> gb_;
  std::vector<Vec> gb_vecs_;
  std::optional<std::vector<int>> weights_;
  std::vector<int> eff_weights_;
  ModuleOrder storage_;
  std::shared_ptr<ModuleGB> reducer_;
};

using Ring = std::shared_ptr<const PresentedRing>;

Ring make_ring(Field field, std::vector<std::string> names, const std::vector<std::string>& relations,
               MonomialOrder order, std::optional<std::vector<int>> weights = std::nullopt);
Ring make_ring(PolyRingPtr ambient, std::vector<Polynomial> relations,
               std::optional<std::vector<int>> weights = std::nullopt);

/// Monomials not divisible by any of `leads`, enumerated depth-first. With
/// `max_deg` >= 0 only those of weighted degree <= max_deg are produced;
/// otherwise returns nullopt when the set is infinite.
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leads, std::size_t nvars,
                                                        const std::vector<int>& weights, int max_deg = -1);
bool staircase_finite(const std::vector<Monomial>& leads, std::size_t nvars);

class RingMapError : public std::runtime_error {
 public:
  RingMapError(const std::string& msg, Polynomial relation)
      : std::runtime_error(msg), relation_(std::move(relation)) {}
  const Polynomial& relation() const { return relation_; }

 private:
  Polynomial relation_;
};

/// Ring homomorphism given by the images of the domain variables. Every
/// domain relation is checked to map to zero at construction.
class RingMap {
 public:
  RingMap(Ring domain, Ring codomain, std::vector<Polynomial> images);

  const Ring& domain() const { return domain_; }
  const Ring& codomain() const { return codomain_; }
  const std::vector<Polynomial>& images() const { return images_; }

  /// Image of a polynomial over the domain ambient, in normal form.
  Polynomial apply(const Polynomial& p) const;
  /// (*this) o first.
  RingMap after(const RingMap& first) const;
  /// Re-runs the relation check; returns the first offending relation.
  std::optional<Polynomial> first_bad_relation() const;

  static RingMap identity(const Ring& r);

 private:
  Ring domain_, codomain_;
  std::vector<Polynomial> images_;
};

struct RetractPair {
  RingMap f;  // R -> S
  RingMap g;  // S -> R
};

/// PASS iff g(f(x_i)) = x_i for every generator x_i of R.
CheckReport verify_retract(const RetractPair& pair);

}  // namespace semidual
