#include "semidual/ring.hpp"

#include <algorithm>

namespace semidual {

namespace {

std::vector<Monomial> leads_of(const std::vector<Vec>& gb) {
  std::vector<Monomial> out;
  for (const auto& g : gb) out.push_back(g.front().mono);
  return out;
}

}  // namespace

PresentedRing::PresentedRing(PolyRingPtr ambient, std::vector<Polynomial> relations,
                             std::optional<std::vector<int>> weights)
    : ambient_(std::move(ambient)), relations_(std::move(relations)), weights_(std::move(weights)) {
  storage_ = ModuleOrder{ambient_->order(), 0, true};
  if (weights_) {
    if (weights_->size() != ambient_->nvars()) throw std::invalid_argument("weight count does not match variables");
    for (int w : *weights_) {
      if (w <= 0) throw std::invalid_argument("weights must be positive");
    }
    eff_weights_ = *weights_;
  } else {
    eff_weights_.assign(ambient_->nvars(), 1);
  }
  std::vector<Polynomial> nonzero;
  for (auto& r : relations_) {
    if (!r.ring() || !r.ring()->same_as(*ambient_)) throw std::invalid_argument("relation over another ambient");
    if (weights_ && !is_homogeneous(r)) {
      throw std::invalid_argument("inhomogeneous relation " + r.to_string());
    }
    if (!r.is_zero()) nonzero.push_back(r);
  }
  if (!nonzero.empty()) {
    GroebnerBasis gb = buchberger(nonzero, ambient_->order());
    for (auto& p : gb.elements) {
      gb_.emplace_back(ambient_, p.terms());
      gb_vecs_.push_back(p.terms());
    }
  }
  reducer_ = std::make_shared<ModuleGB>(field(), storage_, gb_vecs_);
  reducer_->compute({});
}

int PresentedRing::degree_of(const Polynomial& p) const {
  if (p.is_zero()) return 0;
  return p.lead().mono.weighted_degree(eff_weights_);
}

bool PresentedRing::is_homogeneous(const Polynomial& p) const {
  if (p.is_zero()) return true;
  int d = p.terms().front().mono.weighted_degree(eff_weights_);
  for (const auto& t : p.terms()) {
    if (t.mono.weighted_degree(eff_weights_) != d) return false;
  }
  return true;
}

Polynomial PresentedRing::reduce(const Polynomial& p) const {
  if (gb_vecs_.empty() || p.is_zero()) return p;
  Vec v = reducer_->normal_form(p.terms());
  Polynomial out(ambient_);
  return Polynomial(ambient_, std::move(v));
}

Vec PresentedRing::reduce_vec(Vec v) const {
  sort_vec(v, storage_);
  if (gb_vecs_.empty()) return v;
  return reducer_->normal_form(std::move(v));
}

std::optional<std::vector<Monomial>> PresentedRing::basis() const {
  return standard_monomials(leads_of(gb_vecs_), nvars(), eff_weights_);
}

std::optional<std::size_t> PresentedRing::k_dim() const {
  if (!staircase_finite(leads_of(gb_vecs_), nvars())) return std::nullopt;
  return basis()->size();
}

std::vector<long> PresentedRing::hilbert(int max_deg) const {
  std::vector<long> h(static_cast<std::size_t>(max_deg + 1), 0);
  auto mons = standard_monomials(leads_of(gb_vecs_), nvars(), eff_weights_, max_deg);
  for (const auto& m : *mons) ++h[static_cast<std::size_t>(m.weighted_degree(eff_weights_))];
  return h;
}

bool staircase_finite(const std::vector<Monomial>& leads, std::size_t nvars) {
  for (const auto& l : leads) {
    if (l.is_one()) return true;
  }
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = false;
    for (const auto& l : leads) {
      if (l[v] > 0 && l.degree() == l[v]) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<Monomial>& leads, std::size_t nvars,
                                                        const std::vector<int>& weights, int max_deg) {
  if (max_deg < 0 && !staircase_finite(leads, nvars)) return std::nullopt;
  std::vector<Monomial> out;
  auto divisible = [&](const Monomial& m) {
    for (const auto& l : leads) {
      if (l.divides(m)) return true;
    }
    return false;
  };
  if (divisible(Monomial())) return out;
  // Each monomial is reached once, as a non-decreasing sequence of variables.
  struct Frame {
    Monomial m;
    std::size_t first;
  };
  std::vector<Frame> stack{{Monomial(), 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    out.push_back(f.m);
    for (std::size_t v = nvars; v-- > f.first;) {
      Monomial n = f.m * Monomial::variable(v);
      if (max_deg >= 0 && n.weighted_degree(weights) > max_deg) continue;
      if (divisible(n)) continue;
      stack.push_back({n, v});
    }
  }
  return out;
}

Ring make_ring(PolyRingPtr ambient, std::vector<Polynomial> relations, std::optional<std::vector<int>> weights) {
  return std::make_shared<const PresentedRing>(std::move(ambient), std::move(relations), std::move(weights));
}

Ring make_ring(Field field, std::vector<std::string> names, const std::vector<std::string>& relations,
               MonomialOrder order, std::optional<std::vector<int>> weights) {
  PolyRingPtr amb = make_poly_ring(field, std::move(names), std::move(order));
  std::vector<Polynomial> rels;
  for (const auto& s : relations) rels.push_back(parse_polynomial(amb, s));
  return make_ring(amb, std::move(rels), std::move(weights));
}

// -------------------------------------------------------------- RingMap

RingMap::RingMap(Ring domain, Ring codomain, std::vector<Polynomial> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_->nvars()) throw std::invalid_argument("one image per domain variable required");
  if (!(domain_->field() == codomain_->field())) throw std::invalid_argument("ring map between different fields");
  for (auto& im : images_) {
    if (!im.ring() || !im.ring()->same_as(*codomain_->ambient())) {
      throw std::invalid_argument("image not in the codomain");
    }
    im = codomain_->reduce(im);
  }
  if (auto bad = first_bad_relation()) {
    throw RingMapError("relation " + bad->to_string() + " does not map to zero", *bad);
  }
}

Polynomial RingMap::apply(const Polynomial& p) const {
  if (!p.ring()->same_as(*domain_->ambient())) throw std::invalid_argument("element not in the domain");
  std::vector<std::vector<Polynomial>> powers(images_.size());
  auto power = [&](std::size_t v, int e) -> const Polynomial& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(codomain_->one());
    while (static_cast<int>(pw.size()) <= e) pw.push_back(codomain_->mul(pw.back(), images_[v]));
    return pw[static_cast<std::size_t>(e)];
  };
  Polynomial acc = codomain_->zero();
  for (const auto& t : p.terms()) {
    Polynomial m = Polynomial::constant(codomain_->ambient(), t.coef);
    for (std::size_t v = 0; v < images_.size(); ++v) {
      if (t.mono[v] > 0) m = codomain_->mul(m, power(v, t.mono[v]));
    }
    acc = acc + m;
  }
  return codomain_->reduce(acc);
}

std::optional<Polynomial> RingMap::first_bad_relation() const {
  for (const auto& r : domain_->relations()) {
    if (!apply(r).is_zero()) return r;
  }
  return std::nullopt;
}

RingMap RingMap::after(const RingMap& first) const {
  if (first.codomain_.get() != domain_.get()) throw std::invalid_argument("maps are not composable");
  std::vector<Polynomial> imgs;
  for (const auto& im : first.images_) imgs.push_back(apply(im));
  return RingMap(first.domain_, codomain_, std::move(imgs));
}

RingMap RingMap::identity(const Ring& r) {
  std::vector<Polynomial> imgs;
  for (std::size_t i = 0; i < r->nvars(); ++i) imgs.push_back(Polynomial::variable(r->ambient(), i));
  return RingMap(r, r, std::move(imgs));
}

CheckReport verify_retract(const RetractPair& pair) {
  const Ring& R = pair.f.domain();
  if (pair.g.codomain().get() != R.get() || pair.f.codomain().get() != pair.g.domain().get()) {
    return CheckReport::fail("retract", "maps are not composable");
  }
  for (std::size_t i = 0; i < R->nvars(); ++i) {
    Polynomial x = R->var(i);
    Polynomial back = pair.g.apply(pair.f.images()[i]);
    if (!R->equal(back, x)) {
      return CheckReport::fail("retract", "generator " + R->names()[i] + " maps to " + back.to_string());
    }
  }
  return CheckReport::pass("retract");
}

}  // namespace semidual
