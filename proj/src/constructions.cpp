#include "semidual/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace semidual {

std::string kind_name(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::TrivialExtension: return "ltimes";
    case ConstructionKind::AmalgamatedDuplication: return "bowtie";
    case ConstructionKind::PseudocanonicalCover: return "pseudo";
  }
  return "?";
}

std::string iso_kind_name(IsoKind k) {
  switch (k) {
    case IsoKind::PhiBowtie: return "phi_bowtie";
    case IsoKind::ThetaPseudo: return "theta_pseudo";
    case IsoKind::ThetaLtimes: return "theta_ltimes";
  }
  return "?";
}

namespace {

std::vector<std::string> fresh_names(const std::vector<std::string>& taken, std::size_t m) {
  for (const char* prefix : {"e", "f", "u", "v", "w", "t"}) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= m; ++i) out.push_back(prefix + std::to_string(i));
    bool clash = std::any_of(out.begin(), out.end(), [&](const std::string& n) {
      return std::find(taken.begin(), taken.end(), n) != taken.end();
    });
    if (!clash) return out;
  }
  throw std::invalid_argument("no fresh variable names available");
}

/// Moves a polynomial over R's ambient into S's ambient (variables shifted by m).
Polynomial embed(const PolyRingPtr& S, const Polynomial& p, std::size_t m, std::size_t n) {
  Vec v;
  for (const auto& t : p.terms()) {
    Monomial mono;
    for (std::size_t i = 0; i < n; ++i) {
      if (t.mono[i] != 0) mono.set(i + m, t.mono[i]);
    }
    v.push_back(Term{mono, t.coef, 0});
  }
  return Polynomial(S, std::move(v));
}

bool hilbert_matches(const Ring& S, const Ring& R, const PresentedModule& C, int shift, int D) {
  std::vector<long> hs = S->hilbert(D);
  std::vector<long> hr = R->hilbert(D);
  std::vector<long> hc = hilbert_function(C, -shift, D - shift);
  for (int d = 0; d <= D; ++d) {
    auto i = static_cast<std::size_t>(d);
    if (hs[i] != hr[i] + hc[i]) return false;
  }
  return true;
}

constexpr int kHilbertBound = 16;

}  // namespace

Polynomial RetractTriple::element(const Polynomial& r, const Vec& c) const {
  Polynomial acc = pair.f.apply(r);
  for (const auto& t : c) {
    if (t.comp >= C.ngens()) throw std::out_of_range("coordinate outside C's generators");
    Polynomial coef = pair.f.apply(Polynomial(R->ambient(), Vec{Term{t.mono, t.coef, 0}}));
    acc = acc + S->mul(coef, section.at(1 + t.comp));
  }
  return S->reduce(acc);
}

const Restriction& RetractTriple::over_R() const {
  std::call_once(*once_, [&] {
    restriction_ = std::make_shared<Restriction>(restrict_scalars(pair.f, PresentedModule::free(S, 1), section));
  });
  return *restriction_;
}

RetractTriple build_construction(const ConstructionSpec& spec) {
  const Ring& R = spec.R;
  const PresentedModule& C = spec.C;
  if (!R) throw std::invalid_argument("construction without a base ring");
  if (C.ring().get() != R.get()) throw std::invalid_argument("C is not over the base ring");
  bool ideal_kind = spec.kind != ConstructionKind::TrivialExtension;
  if (ideal_kind && !C.is_ideal()) throw std::invalid_argument(kind_name(spec.kind) + " requires an ideal");
  if (spec.kind == ConstructionKind::PseudocanonicalCover && !spec.r0) {
    throw std::invalid_argument("pseudo requires r0");
  }
  std::size_t m = C.ngens(), n = R->nvars();
  if (m == 0) throw std::invalid_argument("C has no generators");
  if (m + n > kMaxVars) throw std::invalid_argument("too many variables for the construction");

  std::vector<std::string> e_names = fresh_names(R->names(), m);
  std::vector<std::string> names = e_names;
  for (const auto& x : R->names()) names.push_back(x);
  std::vector<OrderBlock> blocks;
  OrderBlock eb;
  eb.kind = OrderKind::GrevLex;
  for (std::size_t i = 0; i < m; ++i) eb.vars.push_back(i);
  blocks.push_back(eb);
  for (auto b : R->order().blocks()) {
    for (auto& v : b.vars) v += m;
    blocks.push_back(b);
  }
  PolyRingPtr amb = make_poly_ring(R->field(), names, MonomialOrder::product(blocks));
  auto up = [&](const Polynomial& p) { return embed(amb, p, m, n); };
  auto e = [&](std::size_t i) { return Polynomial::variable(amb, i); };

  std::vector<Polynomial> ideal_gens;
  if (ideal_kind) ideal_gens = C.ideal_gens();
  Polynomial r0 = spec.r0 ? R->reduce(*spec.r0) : R->zero();
  Polynomial h = R->mul(r0, r0);

  std::vector<Polynomial> rels;
  for (const auto& g : R->gb()) rels.push_back(up(g));
  for (const auto& col : C.presentation().columns()) {
    Polynomial lin(amb);
    for (std::size_t i = 0; i < m; ++i) {
      Polynomial a = component(R, col, static_cast<std::uint32_t>(i));
      if (!a.is_zero()) lin = lin + up(a) * e(i);
    }
    if (!lin.is_zero()) rels.push_back(lin);
  }
  std::optional<Lifter> lifter;
  if (spec.kind == ConstructionKind::AmalgamatedDuplication) {
    Matrix row(R, 1);
    for (const auto& c : ideal_gens) row.push(unit_vec(R, 0, c));
    lifter.emplace(row);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      Polynomial q = e(i) * e(j);
      switch (spec.kind) {
        case ConstructionKind::TrivialExtension: break;
        case ConstructionKind::AmalgamatedDuplication: {
          Polynomial cc = R->mul(ideal_gens[i], ideal_gens[j]);
          auto lam = lifter->lift(unit_vec(R, 0, cc));
          if (!lam) throw std::logic_error("product of ideal generators outside the ideal");
          for (std::size_t k = 0; k < m; ++k) {
            Polynomial l = component(R, *lam, static_cast<std::uint32_t>(k));
            if (!l.is_zero()) q = q - up(l) * e(k);
          }
          break;
        }
        case ConstructionKind::PseudocanonicalCover:
          q = q - up(R->mul(h, R->mul(ideal_gens[i], ideal_gens[j])));
          break;
      }
      rels.push_back(q);
    }
  }

  // grading
  std::optional<std::vector<int>> weights;
  int shift = 0;
  if (R->graded() && C.degrees()) {
    std::vector<int> w;
    bool ok = true;
    int extra = 0;
    if (spec.kind == ConstructionKind::PseudocanonicalCover) {
      ok = !r0.is_zero() && R->is_homogeneous(r0);
      extra = ok ? R->degree_of(r0) : 0;
    }
    for (std::size_t i = 0; i < m && ok; ++i) {
      int d = (*C.degrees())[i] + extra;
      if (d <= 0) ok = false;
      w.push_back(d);
    }
    if (ok) {
      for (int x : R->weights()) w.push_back(x);
      weights = w;
      shift = extra;
    }
  }
  Ring S;
  if (weights) {
    try {
      S = make_ring(amb, rels, weights);
    } catch (const std::invalid_argument&) {
      weights.reset();
    }
  }
  if (!S) S = make_ring(amb, rels);

  // dimension validation against R + C
  auto dr = R->k_dim();
  auto dc = k_dim(C);
  if (dr && dc) {
    auto ds = S->k_dim();
    if (!ds || *ds != *dr + *dc) {
      throw std::runtime_error("dimension validation failed: dim S = " + (ds ? std::to_string(*ds) : "inf") +
                               ", dim R + dim C = " + std::to_string(*dr + *dc));
    }
  } else if (S->graded() && R->graded() && C.degrees()) {
    if (!hilbert_matches(S, R, C, shift, kHilbertBound)) throw std::runtime_error("Hilbert validation failed");
  }

  std::vector<Polynomial> f_img, g_img;
  for (std::size_t i = 0; i < n; ++i) f_img.push_back(e(m + i));
  for (std::size_t i = 0; i < m; ++i) {
    if (spec.kind == ConstructionKind::PseudocanonicalCover) g_img.push_back(R->mul(ideal_gens[i], r0));
    else g_img.push_back(R->zero());
  }
  for (std::size_t i = 0; i < n; ++i) g_img.push_back(R->var(i));

  RetractTriple t(spec.kind, R, S, C, RetractPair{RingMap(R, S, f_img), RingMap(S, R, g_img)});
  t.e_names = e_names;
  if (spec.kind == ConstructionKind::PseudocanonicalCover) t.r0 = r0;
  if (S->graded()) t.c_shift = shift;
  t.section.push_back(S->one());
  for (std::size_t i = 0; i < m; ++i) t.section.push_back(S->reduce(e(i)));
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial w = e(i);
    if (spec.kind == ConstructionKind::PseudocanonicalCover) w = w - up(R->mul(ideal_gens[i], r0));
    t.kernel_witness.push_back(S->reduce(w));
  }
  return t;
}

RetractTriple stacked_triple(const Ring& R, const PresentedModule& C) {
  RetractTriple t1 = build_construction({ConstructionKind::TrivialExtension, R, C, std::nullopt});
  RetractTriple t2 =
      build_construction({ConstructionKind::TrivialExtension, t1.S, PresentedModule::free(t1.S, 1), std::nullopt});
  RetractTriple t(ConstructionKind::TrivialExtension, R, t2.S, C,
                  RetractPair{t2.pair.f.after(t1.pair.f), t1.pair.g.after(t2.pair.g)});
  t.stacked = true;
  const Ring& S = t2.S;
  for (const auto& s2 : t2.section) {
    for (const auto& s1 : t1.section) t.section.push_back(S->mul(t2.pair.f.apply(s1), s2));
  }
  for (const auto& w : t1.kernel_witness) t.kernel_witness.push_back(t2.pair.f.apply(w));
  t.e_names = t1.e_names;
  t.e_names.insert(t.e_names.end(), t2.e_names.begin(), t2.e_names.end());
  return t;
}

std::vector<Polynomial> kernel_generators(const RetractTriple& t) {
  std::vector<Polynomial> out;
  for (std::size_t v = 0; v < t.S->nvars(); ++v) {
    Polynomial x = t.S->var(v);
    Polynomial k = t.S->reduce(x - t.pair.f.apply(t.pair.g.apply(x)));
    if (!k.is_zero()) out.push_back(k);
  }
  return out;
}

PresentedModule along_g(const RetractTriple& t, const PresentedModule& M) {
  if (M.ring().get() != t.R.get()) throw std::invalid_argument("module is not over the base ring");
  const Ring& S = t.S;
  std::size_t n = M.ngens();
  Matrix pres(S, n);
  for (const auto& col : M.presentation().columns()) {
    Vec v;
    for (const auto& term : col) {
      Polynomial c = t.pair.f.apply(Polynomial(t.R->ambient(), Vec{Term{term.mono, term.coef, 0}}));
      v = ring_add(S, v, unit_vec(S, term.comp, c));
    }
    pres.push(std::move(v));
  }
  for (const auto& k : kernel_generators(t)) {
    for (std::size_t l = 0; l < n; ++l) pres.push(unit_vec(S, static_cast<std::uint32_t>(l), k));
  }
  std::optional<std::vector<int>> deg;
  if (S->graded() && M.degrees()) deg = M.degrees();
  return PresentedModule(pres, deg);
}

KernelOfG kernel_of_g(const RetractTriple& t) {
  const Ring& R = t.R;
  const Restriction& res = t.over_R();
  const PresentedModule& SR = res.module;
  std::size_t ns = t.section.size();
  Matrix row(R, 1);
  for (const auto& s : t.section) row.push(unit_vec(R, 0, t.pair.g.apply(s)));
  Subquotient K = homology(Matrix(R, ns), row, SR.presentation(), Matrix(R, 1), SR.degrees());
  KernelOfG out{K.module(), std::nullopt, CheckReport::pass("kernel")};

  auto dk = k_dim(K.module());
  auto dc = k_dim(t.C);
  auto dims = [&] { return "dim(ker g)=" + std::to_string(*dk) + " dim(C)=" + std::to_string(*dc); };
  auto add_dims = [&](CheckReport& r) {
    r.detail("dim(ker g)", std::to_string(*dk));
    r.detail("dim(C)", std::to_string(*dc));
  };
  if (dk && dc) add_dims(out.report);

  Matrix w(R, K.module().ngens());
  for (std::size_t i = 0; i < t.kernel_witness.size(); ++i) {
    try {
      w.push(K.coordinates(res.coordinates(unit_vec(t.S, 0, t.kernel_witness[i]))));
    } catch (const std::domain_error&) {
      out.report = CheckReport::fail("kernel", "witness image of generator " + std::to_string(i) + " is not in ker g");
      return out;
    }
  }
  try {
    out.witness.emplace(t.C, K.module(), w);
  } catch (const std::invalid_argument&) {
    out.report = CheckReport::fail("kernel", "witness map is not well defined");
    return out;
  }
  if (dk && dc && *dk != *dc) {
    out.report = CheckReport::fail("kernel", dims());
    return out;
  }
  CheckReport iso = verify_map_iso(*out.witness, "kernel");
  if (dk && dc) {
    iso.details.clear();
    add_dims(iso);
  }
  out.report = iso;
  return out;
}

IsoKind default_iso_kind(const RetractTriple& t) {
  switch (t.kind) {
    case ConstructionKind::TrivialExtension: return IsoKind::ThetaLtimes;
    case ConstructionKind::AmalgamatedDuplication: return IsoKind::PhiBowtie;
    case ConstructionKind::PseudocanonicalCover: return IsoKind::ThetaPseudo;
  }
  return IsoKind::ThetaLtimes;
}

namespace {

/// T[a] = the map S|_R -> C attached to section element a, as a matrix over
/// C's generators (columns indexed by the section).
std::vector<Matrix> theta_matrices(const RetractTriple& t, IsoKind kind) {
  if (t.stacked || kind != default_iso_kind(t)) {
    throw std::invalid_argument(iso_kind_name(kind) + " does not match the construction");
  }
  const Ring& R = t.R;
  std::size_t m = t.C.ngens(), ns = t.section.size();
  std::optional<Lifter> lifter;
  if (kind == IsoKind::PhiBowtie) {
    Matrix row(R, 1);
    for (const auto& c : t.C.ideal_gens()) row.push(unit_vec(R, 0, c));
    lifter.emplace(row);
  }
  std::vector<Matrix> T;
  for (std::size_t a = 0; a < ns; ++a) {
    Matrix M(R, m);
    for (std::size_t c = 0; c < ns; ++c) {
      Vec col;
      if (a == 0 && c >= 1) col = unit_vec(R, static_cast<std::uint32_t>(c - 1), R->one());
      if (a >= 1 && c == 0) col = unit_vec(R, static_cast<std::uint32_t>(a - 1), R->one());
      if (a >= 1 && c >= 1 && lifter) {
        const auto& g = t.C.ideal_gens();
        auto lam = lifter->lift(unit_vec(R, 0, R->mul(g[a - 1], g[c - 1])));
        if (!lam) throw std::logic_error("product of ideal generators outside the ideal");
        col = *lam;
      }
      M.push(std::move(col));
    }
    T.push_back(std::move(M));
  }
  return T;
}

}  // namespace

ModuleMap construction_iso_map(const RetractTriple& t, IsoKind kind) {
  std::vector<Matrix> T = theta_matrices(t, kind);
  const PresentedModule& SR = t.over_R().module;
  HomModule H = hom_module(SR, t.C);
  Matrix theta(t.R, H.module().ngens());
  for (const auto& Ta : T) theta.push(H.encode(Ta));
  return ModuleMap(SR, H.module(), theta);
}

CheckReport check_s_linearity(const RetractTriple& t, IsoKind kind) {
  const Ring& R = t.R;
  const Restriction& res = t.over_R();
  std::vector<Matrix> T = theta_matrices(t, kind);
  std::size_t ns = t.section.size();
  auto coords = [&](const Polynomial& s) { return res.coordinates(unit_vec(t.S, 0, s)); };
  for (std::size_t v = 0; v < t.S->nvars(); ++v) {
    Polynomial s = t.S->var(v);
    for (std::size_t a = 0; a < ns; ++a) {
      Vec sb = coords(t.S->mul(s, t.section[a]));
      for (std::size_t c = 0; c < ns; ++c) {
        // Theta(s * b_a)(b_c)
        Vec lhs;
        for (const auto& term : sb) {
          Polynomial coef(R->ambient(), Vec{Term{term.mono, term.coef, 0}});
          lhs = ring_add(R, lhs, ring_scale(R, coef, T[term.comp].col(c)));
        }
        // (s * Theta(b_a))(b_c) = Theta(b_a)(s * b_c)
        Vec rhs = T[a].apply(coords(t.S->mul(s, t.section[c])));
        if (!t.C.is_zero_element(ring_sub(R, lhs, rhs))) {
          return CheckReport::fail("s-linear", "variable " + t.S->names()[v] + " on generators " + std::to_string(a) +
                                                   "," + std::to_string(c));
        }
      }
    }
  }
  return CheckReport::pass("s-linear");
}

}  // namespace semidual
