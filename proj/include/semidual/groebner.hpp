#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "semidual/polynomial.hpp"

namespace semidual {

/// Order on terms of a free module. Components below `top` sit above every
/// other component (elimination of the top block). Within a block terms
/// compare position-over-term (`pot`) or term-over-position; smaller
/// component indices are larger.
struct ModuleOrder {
  MonomialOrder mono;
  std::uint32_t top = 0;
  bool pot = false;

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (top != 0) {
      bool ta = ca < top, tb = cb < top;
      if (ta != tb) return ta ? 1 : -1;
    }
    if (pot) {
      if (ca != cb) return ca < cb ? 1 : -1;
      return mono.compare(a, b);
    }
    int c = mono.compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }
  int compare(const Term& a, const Term& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }
};

/// Sorts descending in `order` and merges equal terms.
void sort_vec(Vec& v, const ModuleOrder& order);

/// Buchberger's algorithm for submodules of a free module over k[x]/I.
/// The ring ideal I is given by its reduced Groebner basis (comp 0, sorted in
/// `order.mono`) and acts on every component. Pair pruning uses the
/// Gebauer-Moeller criteria; the product criterion is applied only when both
/// elements live in a single component. Pairs are processed by sugar degree.
class ModuleGB {
 public:
  struct Options {
    std::vector<int> weights;       // variable weights for sugar (default all 1)
    std::vector<int> comp_degrees;  // per-component shift for sugar (default 0)
  };

  ModuleGB(Field field, ModuleOrder order, std::vector<Vec> ring_gb, Options opts);
  ModuleGB(Field field, ModuleOrder order, std::vector<Vec> ring_gb)
      : ModuleGB(field, std::move(order), std::move(ring_gb), Options{}) {}

  /// Adds generators (any term order) and completes the basis.
  void compute(std::vector<Vec> gens);

  /// Reduced, monic basis of the submodule (ring relations excluded), sorted
  /// ascending by leading term.
  const std::vector<Vec>& basis() const { return reduced_; }

  /// Full normal form; `v` must be sorted in this order.
  Vec normal_form(Vec v) const;
  bool reduces_to_zero(const Vec& v) const { return normal_form(v).empty(); }

  const ModuleOrder& order() const { return order_; }
  const Field& field() const { return field_; }
  const std::vector<Vec>& ring_gb() const { return ring_gb_; }
  void sort(Vec& v) const { sort_vec(v, order_); }

  /// Work counters for diagnostics.
  std::size_t pairs_reduced() const { return pairs_reduced_; }

 private:
  struct Elem {
    Vec v;
    int sugar = 0;
    bool ring = false;
    bool active = true;
    bool pure = true;  // all terms in the leading component
  };
  struct Pair {
    std::uint32_t i, j;  // j == kGen: i indexes pending_
    Monomial lcm;
    std::uint32_t comp;
    int sugar;
  };
  struct PairLess {
    const ModuleOrder* order;
    bool operator()(const Pair& a, const Pair& b) const;
  };
  static constexpr std::uint32_t kGen = 0xffffffffU;

  int wdeg(const Monomial& m) const;
  int sugar_of(const Vec& v) const;
  void insert(Vec h, int sugar);
  void materialize_ring(std::uint32_t comp);
  bool find_reducer(const Term& t, Vec const*& reducer, bool& ring) const;
  Vec reduce(Vec f, bool tail) const;
  Vec spoly(const Pair& p) const;
  void make_monic(Vec& v) const;
  void finish();
  void add_pair(Pair p);
  void drop_from_comp_index(std::set<Pair, PairLess>::iterator it);

  Field field_;
  ModuleOrder order_;
  std::vector<Vec> ring_gb_;
  Options opts_;

  std::vector<Elem> elems_;
  std::vector<std::vector<std::uint32_t>> by_comp_;  // active real elements per lead component
  std::vector<std::vector<std::uint32_t>> all_by_comp_;  // active elements, ring copies included
  std::vector<char> ring_done_;
  std::vector<Vec> pending_;
  std::set<Pair, PairLess> pairs_;
  std::vector<std::vector<std::set<Pair, PairLess>::iterator>> pairs_by_comp_;
  std::vector<Vec> reduced_;
  std::size_t pairs_reduced_ = 0;
};

/// Vec arithmetic in a fixed order.
Vec vec_sub_scaled(const Vec& a, const Vec& b, const FieldElem& c, const Monomial& q,
                   const ModuleOrder& order);  // a - c*q*b
Vec vec_add(const Vec& a, const Vec& b, const ModuleOrder& order);
Vec vec_scale(const Vec& a, const FieldElem& c);
Vec vec_shift(const Vec& a, const Monomial& q, const FieldElem& c);

// -------------------------------------------------------- ideal-level API

struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;
};

/// Division algorithm: repeatedly cancels the largest divisible term by the
/// first element of G (in list order) whose leading monomial divides it.
/// Polynomials are read in `order`; the result is returned in f's ambient.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& order);

/// Reduced Groebner basis; elements live in a copy of the ambient carrying
/// `order` and are sorted ascending by leading monomial.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order);

bool ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens, const MonomialOrder& order);

}  // namespace semidual
