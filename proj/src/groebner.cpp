#include "semidual/groebner.hpp"

#include <algorithm>
#include <optional>

namespace semidual {

void sort_vec(Vec& v, const ModuleOrder& order) {
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return order.compare(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef += t.coef;
      if (out.back().coef.is_zero()) out.pop_back();
      continue;
    }
    if (!t.coef.is_zero()) out.push_back(std::move(t));
  }
  v = std::move(out);
}

Vec vec_sub_scaled(const Vec& a, const Vec& b, const FieldElem& c, const Monomial& q,
                   const ModuleOrder& order) {
  Vec r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Term tb;
  bool have_b = false;
  auto load_b = [&] {
    if (j < b.size()) {
      tb.mono = b[j].mono * q;
      tb.comp = b[j].comp;
      tb.coef = -(b[j].coef * c);
      have_b = true;
    } else {
      have_b = false;
    }
  };
  load_b();
  while (i < a.size() || have_b) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (!have_b) cmp = 1;
    else cmp = order.compare(a[i], tb);
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      r.push_back(tb);
      ++j;
      load_b();
    } else {
      FieldElem s = a[i].coef + tb.coef;
      if (!s.is_zero()) r.push_back(Term{a[i].mono, s, a[i].comp});
      ++i;
      ++j;
      load_b();
    }
  }
  return r;
}

Vec vec_add(const Vec& a, const Vec& b, const ModuleOrder& order) {
  if (b.empty()) return a;
  FieldElem minus_one = -(b.front().coef / b.front().coef);
  return vec_sub_scaled(a, b, minus_one, Monomial(), order);
}

Vec vec_scale(const Vec& a, const FieldElem& c) {
  if (c.is_zero()) return {};
  Vec r = a;
  for (auto& t : r) t.coef *= c;
  return r;
}

Vec vec_shift(const Vec& a, const Monomial& q, const FieldElem& c) {
  Vec r;
  if (c.is_zero()) return r;
  r.reserve(a.size());
  for (const auto& t : a) r.push_back(Term{t.mono * q, t.coef * c, t.comp});
  return r;
}

// ------------------------------------------------------------- ModuleGB

bool ModuleGB::PairLess::operator()(const Pair& a, const Pair& b) const {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  int c = order->compare(a.lcm, a.comp, b.lcm, b.comp);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

ModuleGB::ModuleGB(Field field, ModuleOrder order, std::vector<Vec> ring_gb, Options opts)
    : field_(field), order_(std::move(order)), ring_gb_(std::move(ring_gb)), opts_(std::move(opts)),
      pairs_(PairLess{&order_}) {
  for (auto& g : ring_gb_) {
    sort_vec(g, order_);
    make_monic(g);
  }
}

int ModuleGB::wdeg(const Monomial& m) const {
  if (opts_.weights.empty()) return m.degree();
  return m.weighted_degree(opts_.weights);
}

int ModuleGB::sugar_of(const Vec& v) const {
  int s = 0;
  bool first = true;
  for (const auto& t : v) {
    int d = wdeg(t.mono);
    if (t.comp < opts_.comp_degrees.size()) d += opts_.comp_degrees[t.comp];
    if (first || d > s) s = d;
    first = false;
  }
  return s;
}

void ModuleGB::make_monic(Vec& v) const {
  if (v.empty() || v.front().coef.is_one()) return;
  FieldElem inv = v.front().coef.inverse();
  for (auto& t : v) t.coef *= inv;
}

bool ModuleGB::find_reducer(const Term& t, Vec const*& reducer, bool& ring) const {
  if (t.comp < by_comp_.size()) {
    for (std::uint32_t idx : by_comp_[t.comp]) {
      const Vec& g = elems_[idx].v;
      if (g.front().mono.divides(t.mono)) {
        reducer = &g;
        ring = false;
        return true;
      }
    }
  }
  for (const Vec& g : ring_gb_) {
    if (g.front().mono.divides(t.mono)) {
      reducer = &g;
      ring = true;
      return true;
    }
  }
  return false;
}

namespace {

/// Sum of vectors kept in buckets of geometrically growing size, each
/// sorted ascending so the leading term sits at the back.
class GeoBucket {
 public:
  explicit GeoBucket(const ModuleOrder& order) : order_(order) {}

  /// Adds c * q * b[from..] (b descending); `comp` overrides components.
  void add(const Vec& b, std::size_t from, const FieldElem& c, const Monomial& q, std::optional<std::uint32_t> comp) {
    if (from >= b.size()) return;
    Vec t;
    t.reserve(b.size() - from);
    for (std::size_t k = b.size(); k-- > from;) {
      const Term& u = b[k];
      t.push_back(Term{u.mono * q, u.coef * c, comp ? *comp : u.comp});
    }
    place(std::move(t));
  }
  void add_sorted(Vec desc) {
    std::reverse(desc.begin(), desc.end());
    place(std::move(desc));
  }

  bool pop_lead(Term& out) {
    for (;;) {
      int best = -1;
      for (std::size_t i = 0; i < b_.size(); ++i) {
        if (b_[i].empty()) continue;
        if (best < 0 || order_.compare(b_[i].back(), b_[static_cast<std::size_t>(best)].back()) > 0) {
          best = static_cast<int>(i);
        }
      }
      if (best < 0) return false;
      Term lead = std::move(b_[static_cast<std::size_t>(best)].back());
      b_[static_cast<std::size_t>(best)].pop_back();
      for (auto& v : b_) {
        if (!v.empty() && v.back().comp == lead.comp && v.back().mono == lead.mono) {
          lead.coef += v.back().coef;
          v.pop_back();
        }
      }
      if (lead.coef.is_zero()) continue;
      out = std::move(lead);
      return true;
    }
  }

 private:
  static std::size_t cap(std::size_t i) { return std::size_t{4} << (2 * i); }

  void place(Vec t) {
    std::size_t i = 0;
    while (cap(i) < t.size()) ++i;
    for (;;) {
      if (i >= b_.size()) b_.resize(i + 1);
      if (!b_[i].empty()) {
        t = merge(b_[i], t);
        b_[i].clear();
      }
      if (t.size() <= cap(i)) break;
      ++i;
    }
    b_[i] = std::move(t);
  }

  Vec merge(const Vec& a, const Vec& b) const {
    Vec r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = order_.compare(a[i], b[j]);
      if (c < 0) {
        r.push_back(a[i++]);
      } else if (c > 0) {
        r.push_back(b[j++]);
      } else {
        FieldElem s = a[i].coef + b[j].coef;
        if (!s.is_zero()) r.push_back(Term{a[i].mono, s, a[i].comp});
        ++i;
        ++j;
      }
    }
    r.insert(r.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
    r.insert(r.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
    return r;
  }

  const ModuleOrder& order_;
  std::vector<Vec> b_;
};

}  // namespace

Vec ModuleGB::reduce(Vec f, bool tail) const {
  GeoBucket bucket(order_);
  bucket.add_sorted(std::move(f));
  Vec result;
  Term t;
  while (bucket.pop_lead(t)) {
    const Vec* g = nullptr;
    bool ring = false;
    if (!find_reducer(t, g, ring)) {
      result.push_back(std::move(t));
      if (!tail) {
        while (bucket.pop_lead(t)) result.push_back(std::move(t));
        return result;
      }
      continue;
    }
    // reducers are monic
    Monomial q = t.mono / g->front().mono;
    bucket.add(*g, 1, -t.coef, q, ring ? std::optional<std::uint32_t>(t.comp) : std::nullopt);
  }
  return result;
}

Vec ModuleGB::normal_form(Vec v) const { return reduce(std::move(v), true); }

Vec ModuleGB::spoly(const Pair& p) const {
  const Vec& a = elems_[p.i].v;
  const Vec& b = elems_[p.j].v;
  Monomial qa = p.lcm / a.front().mono;
  Monomial qb = p.lcm / b.front().mono;
  Vec sa(a.begin() + 1, a.end());
  Vec sb(b.begin() + 1, b.end());
  Vec left = vec_shift(sa, qa, field_.one());
  return vec_sub_scaled(left, sb, field_.one(), qb, order_);
}

void ModuleGB::materialize_ring(std::uint32_t comp) {
  if (comp >= ring_done_.size()) ring_done_.resize(comp + 1, 0);
  if (ring_done_[comp]) return;
  ring_done_[comp] = 1;
  for (const Vec& g : ring_gb_) {
    Elem e;
    e.v = g;
    for (auto& t : e.v) t.comp = comp;
    e.sugar = sugar_of(e.v);
    e.ring = true;
    if (comp >= all_by_comp_.size()) all_by_comp_.resize(comp + 1);
    all_by_comp_[comp].push_back(static_cast<std::uint32_t>(elems_.size()));
    elems_.push_back(std::move(e));
  }
}

void ModuleGB::add_pair(Pair p) {
  std::uint32_t comp = p.comp;
  auto [it, inserted] = pairs_.insert(std::move(p));
  if (!inserted) return;
  if (comp >= pairs_by_comp_.size()) pairs_by_comp_.resize(comp + 1);
  pairs_by_comp_[comp].push_back(it);
}

void ModuleGB::drop_from_comp_index(std::set<Pair, PairLess>::iterator it) {
  auto& lst = pairs_by_comp_[it->comp];
  auto pos = std::find(lst.begin(), lst.end(), it);
  *pos = lst.back();
  lst.pop_back();
}

void ModuleGB::insert(Vec h, int sugar) {
  std::uint32_t comp = h.front().comp;
  materialize_ring(comp);
  const Monomial lh = h.front().mono;
  bool h_pure = std::all_of(h.begin(), h.end(), [&](const Term& t) { return t.comp == comp; });
  auto new_index = static_cast<std::uint32_t>(elems_.size());

  struct Cand {
    std::uint32_t g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Cand> cands;
  if (comp >= all_by_comp_.size()) all_by_comp_.resize(comp + 1);
  std::vector<std::uint32_t> olds = all_by_comp_[comp];
  std::sort(olds.begin(), olds.end());
  for (std::uint32_t g : olds) {
    const Elem& e = elems_[g];
    const Monomial& lg = e.v.front().mono;
    bool coprime = h_pure && e.pure && lh.coprime(lg);
    cands.push_back(Cand{g, lh.lcm(lg), coprime});
  }
  // Gebauer-Moeller: keep a new pair only if no other new pair has an lcm
  // dividing it (ties broken toward the earlier pair); drop coprime pairs.
  std::vector<char> keep(cands.size(), 1);
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (cands[a].coprime) continue;
    for (std::size_t b = 0; b < cands.size(); ++b) {
      if (a == b || !keep[b]) continue;
      if (!cands[b].lcm.divides(cands[a].lcm)) continue;
      if (cands[b].lcm == cands[a].lcm) {
        // equal lcms: keep a coprime representative if any, else the first
        if (cands[b].coprime || b < a) {
          keep[a] = 0;
          break;
        }
      } else {
        keep[a] = 0;
        break;
      }
    }
  }
  // Chain criterion on old pairs.
  if (comp < pairs_by_comp_.size()) {
    auto& lst = pairs_by_comp_[comp];
    for (std::size_t k = 0; k < lst.size();) {
      const Pair& p = *lst[k];
      if (p.j != kGen && lh.divides(p.lcm)) {
        Monomial l1 = elems_[p.i].v.front().mono.lcm(lh);
        Monomial l2 = elems_[p.j].v.front().mono.lcm(lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) {
          pairs_.erase(lst[k]);
          lst[k] = lst.back();
          lst.pop_back();
          continue;
        }
      }
      ++k;
    }
  }
  Elem he;
  he.v = std::move(h);
  he.sugar = sugar;
  he.pure = h_pure;
  elems_.push_back(std::move(he));
  for (std::size_t a = 0; a < cands.size(); ++a) {
    if (!keep[a] || cands[a].coprime) continue;
    const Elem& g = elems_[cands[a].g];
    Monomial lg = g.v.front().mono;
    int s = std::max(sugar + wdeg(cands[a].lcm / lh), g.sugar + wdeg(cands[a].lcm / lg));
    add_pair(Pair{cands[a].g, new_index, cands[a].lcm, comp, s});
  }
  // Elements whose lead is divisible by the new lead leave the basis.
  if (comp >= by_comp_.size()) by_comp_.resize(comp + 1);
  auto& all = all_by_comp_[comp];
  for (std::uint32_t g : all) {
    Elem& e = elems_[g];
    if (lh.divides(e.v.front().mono)) e.active = false;
  }
  all.erase(std::remove_if(all.begin(), all.end(), [&](std::uint32_t g) { return !elems_[g].active; }), all.end());
  all.push_back(new_index);
  auto& lst = by_comp_[comp];
  lst.erase(std::remove_if(lst.begin(), lst.end(), [&](std::uint32_t g) { return !elems_[g].active; }), lst.end());
  lst.push_back(new_index);
}

void ModuleGB::compute(std::vector<Vec> gens) {
  for (auto& g : gens) {
    sort_vec(g, order_);
    if (g.empty()) continue;
    int s = sugar_of(g);
    auto idx = static_cast<std::uint32_t>(pending_.size());
    Monomial lead = g.front().mono;
    std::uint32_t comp = g.front().comp;
    pending_.push_back(std::move(g));
    add_pair(Pair{idx, kGen, lead, comp, s});
  }
  while (!pairs_.empty()) {
    Pair p = *pairs_.begin();
    drop_from_comp_index(pairs_.begin());
    pairs_.erase(pairs_.begin());
    Vec s;
    int sugar = p.sugar;
    if (p.j == kGen) {
      s = std::move(pending_[p.i]);
    } else {
      s = spoly(p);
    }
    ++pairs_reduced_;
    Vec r = reduce(std::move(s), true);
    if (r.empty()) continue;
    make_monic(r);
    insert(std::move(r), sugar);
  }
  pending_.clear();
  finish();
}

void ModuleGB::finish() {
  std::vector<std::uint32_t> idx;
  for (std::uint32_t g = 0; g < elems_.size(); ++g) {
    if (elems_[g].active && !elems_[g].ring) idx.push_back(g);
  }
  // Tail-reduce against the final basis.
  std::vector<Vec> out;
  out.reserve(idx.size());
  for (std::uint32_t g : idx) {
    const Vec& v = elems_[g].v;
    Vec tail(v.begin() + 1, v.end());
    Vec red = reduce(std::move(tail), true);
    Vec full;
    full.reserve(red.size() + 1);
    full.push_back(v.front());
    full.insert(full.end(), red.begin(), red.end());
    out.push_back(std::move(full));
  }
  for (std::size_t k = 0; k < idx.size(); ++k) elems_[idx[k]].v = out[k];
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) { return order_.compare(a.front(), b.front()) < 0; });
  reduced_ = std::move(out);
}

// -------------------------------------------------------- ideal-level API

namespace {

ModuleOrder rank_one(const MonomialOrder& order) { return ModuleOrder{order, 0, false}; }

Vec as_vec(const Polynomial& p, const MonomialOrder& order) {
  Vec v = p.terms();
  sort_vec(v, rank_one(order));
  return v;
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& order) {
  ModuleOrder mo = rank_one(order);
  std::vector<Vec> gs;
  for (const auto& g : G) {
    if (!f.ring()->same_as(*g.ring())) throw std::invalid_argument("mixed ambient rings");
    Vec v = as_vec(g, order);
    if (v.empty()) continue;
    FieldElem inv = v.front().coef.inverse();
    for (auto& t : v) t.coef *= inv;
    gs.push_back(std::move(v));
  }
  Vec rem = as_vec(f, order);
  Vec result;
  std::size_t pos = 0;
  while (pos < rem.size()) {
    const Term& t = rem[pos];
    const Vec* div = nullptr;
    for (const auto& g : gs) {
      if (g.front().mono.divides(t.mono)) {
        div = &g;
        break;
      }
    }
    if (div == nullptr) {
      result.push_back(t);
      ++pos;
      continue;
    }
    Monomial q = t.mono / div->front().mono;
    FieldElem c = t.coef;
    Vec rest(rem.begin() + static_cast<std::ptrdiff_t>(pos) + 1, rem.end());
    Vec gt(div->begin() + 1, div->end());
    rem = vec_sub_scaled(rest, gt, c, q, mo);
    pos = 0;
  }
  return Polynomial(f.ring(), std::move(result));
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const PolyRingPtr& base = gens.front().ring();
  PolyRingPtr ring = make_poly_ring(base->field(), base->names(), order);
  std::vector<Vec> vs;
  for (const auto& g : gens) {
    if (!base->same_as(*g.ring())) throw std::invalid_argument("mixed ambient rings");
    vs.push_back(g.terms());
  }
  ModuleGB gb(base->field(), rank_one(order), {});
  gb.compute(std::move(vs));
  GroebnerBasis out{order, {}};
  for (const auto& v : gb.basis()) out.elements.emplace_back(ring, v);
  return out;
}

bool ideal_membership(const Polynomial& f, const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (f.is_zero()) return true;
  std::vector<Vec> vs;
  for (const auto& g : gens) {
    if (!f.ring()->same_as(*g.ring())) throw std::invalid_argument("mixed ambient rings");
    vs.push_back(g.terms());
  }
  ModuleGB gb(f.ring()->field(), rank_one(order), {});
  gb.compute(std::move(vs));
  return gb.reduces_to_zero(as_vec(f, order));
}

}  // namespace semidual
