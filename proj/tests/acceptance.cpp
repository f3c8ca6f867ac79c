// Acceptance run: one line per criterion, nonzero exit if any fails.
// All comparisons are exact (integer dimensions, verdicts, witness strings).

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "semidual/checkers.hpp"
#include "semidual/session.hpp"

using namespace semidual;
using namespace fixtures;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

PresentedModule ideal(const Ring& R, const std::vector<std::string>& g) { return PresentedModule::ideal(R, polys(R, g)); }

RetractTriple build(ConstructionKind k, const Ring& R, const PresentedModule& C,
                    std::optional<std::string> r0 = std::nullopt) {
  ConstructionSpec spec{k, R, C, std::nullopt};
  if (r0) spec.r0 = R->parse(*r0);
  return build_construction(spec);
}

Ring rationals_point() { return make_ring(Field::rationals(), {}, {}, MonomialOrder::grevlex(0)); }

Polynomial random_element(const Ring& R, std::mt19937& rng, int maxdeg) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<Monomial> leads;
  for (const auto& g : R->gb_vecs()) leads.push_back(g.front().mono);
  auto basis = standard_monomials(leads, R->nvars(), R->weights(), maxdeg);
  Vec v;
  for (const auto& m : *basis) {
    int c = coef(rng);
    if (c != 0) v.push_back(Term{m, R->field().from_int(c), 0});
  }
  return R->reduce(Polynomial(R->ambient(), v));
}

Vec random_coords(const RetractTriple& t, std::mt19937& rng, int maxdeg) {
  Vec v;
  for (std::size_t i = 0; i < t.C.ngens(); ++i) {
    Polynomial p = random_element(t.R, rng, maxdeg);
    for (const auto& term : p.terms()) v.push_back(Term{term.mono, term.coef, static_cast<std::uint32_t>(i)});
  }
  return t.R->reduce_vec(v);
}

std::string detail(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.details) {
    if (k == key) return v;
  }
  return "";
}

// 1: Ext^i and Tor_i dimensions, i <= 3, against the dense oracle.
Outcome kernel_correctness() {
  Outcome o;
  std::size_t compared = 0;
  for (const auto& a : artinian()) {
    Ring R = make(a);
    oracle::Algebra alg(R->relations(), R->nvars(), a.D);
    oracle::Homology H(alg);
    o.require(alg.dim() == *R->k_dim() && alg.dim() <= 12, a.name + ": algebra dimension");
    auto to_oracle = [&](const PresentedModule& M) {
      oracle::Module om;
      om.rank = M.ngens();
      for (const auto& c : M.presentation().columns()) {
        oracle::FreeVec v;
        for (std::size_t i = 0; i < om.rank; ++i) {
          v.push_back(alg.element(component(R, c, static_cast<std::uint32_t>(i))));
        }
        om.relations.push_back(v);
      }
      return om;
    };
    std::vector<PresentedModule> mods = {residue_field(R), PresentedModule::free(R, 1),
                                         coker(R, 1, {{R->names().back()}})};
    for (std::size_t p = 0; p < mods.size(); ++p) {
      FreeResolution res(mods[p]);
      for (std::size_t q = 0; q < mods.size(); ++q) {
        for (bool ext : {true, false}) {
          auto expect = H.derived(ext, to_oracle(mods[p]), to_oracle(mods[q]), 3);
          for (int i = 0; i <= 3; ++i) {
            auto got = k_dim(derived_functor(ext ? Functor::Ext : Functor::Tor, i, res, mods[q]).module());
            ++compared;
            o.require(got && *got == expect[static_cast<std::size_t>(i)],
                      a.name + (ext ? " Ext^" : " Tor_") + std::to_string(i) + " mismatch");
          }
        }
      }
    }
  }
  if (o.ok) o.note = std::to_string(artinian().size()) + " rings, " + std::to_string(compared) + " dimensions";
  return o;
}

// 2: d*d = 0 and exactness through length 6.
Outcome resolution_exactness() {
  Outcome o;
  std::vector<std::pair<std::string, Ring>> rings;
  for (const auto& a : artinian()) rings.emplace_back(a.name, make(a));
  Ring G = semigroup();
  rings.emplace_back("semigroup", G);
  Ring R = x3();
  rings.emplace_back("x3 ltimes x3", build(ConstructionKind::TrivialExtension, R, PresentedModule::free(R, 1)).S);
  rings.emplace_back("semigroup bowtie", build(ConstructionKind::AmalgamatedDuplication, G, ideal(G, {"x", "y"})).S);
  rings.emplace_back("semigroup pseudo",
                     build(ConstructionKind::PseudocanonicalCover, G, ideal(G, {"x", "y"}), "x").S);
  for (const auto& [name, ring] : rings) {
    std::vector<PresentedModule> mods = {residue_field(ring)};
    if (ring->nvars() > 1) mods.push_back(coker(ring, 1, {{ring->names().front()}}));
    for (const auto& M : mods) {
      FreeResolution res(M);
      auto err = certify_resolution(res, 6);
      o.require(!err, name + ": " + err.value_or(""));
    }
  }
  if (o.ok) o.note = std::to_string(rings.size()) + " rings";
  return o;
}

// 3: (R, R ltimes R, R) over Q[x]/(x^3).
Outcome trivial_extension() {
  Outcome o;
  Ring R = x3();
  RetractTriple t = build(ConstructionKind::TrivialExtension, R, PresentedModule::free(R, 1));
  CheckReport a = check_retract_property(t, 4), b = check_kernel_property(t);
  o.require(a.verdict == Verdict::Pass, "retract: " + a.verdict_string());
  o.require(b.verdict == Verdict::Pass, "kernel: " + b.verdict_string());
  return o;
}

// 4: amalgamated duplication of k[t^3,t^4,t^5] along C = (x, y).
Outcome duplication() {
  Outcome o;
  Ring G = semigroup();
  RetractTriple t = build(ConstructionKind::AmalgamatedDuplication, G, ideal(G, {"x", "y"}));
  CheckReport a = check_retract_property(t, 4), b = check_kernel_property(t);
  CheckReport phi = verify_map_iso(construction_iso_map(t, IsoKind::PhiBowtie), "Phi");
  CheckReport lin = check_s_linearity(t, IsoKind::PhiBowtie);
  o.require(a.ok(), "retract: " + a.verdict_string());
  o.require(b.ok(), "kernel: " + b.verdict_string());
  o.require(phi.verdict == Verdict::Pass, "Phi: " + phi.verdict_string());
  o.require(lin.verdict == Verdict::Pass, "Phi S-linearity: " + lin.verdict_string());
  return o;
}

// 5: pseudocanonical cover with r0 = x, plus g multiplicative on samples.
Outcome pseudocanonical() {
  Outcome o;
  Ring G = semigroup();
  RetractTriple t = build(ConstructionKind::PseudocanonicalCover, G, ideal(G, {"x", "y"}), "x");
  CheckReport a = check_retract_property(t, 4), b = check_kernel_property(t);
  o.require(a.ok(), "retract: " + a.verdict_string());
  o.require(b.ok(), "kernel: " + b.verdict_string());
  std::mt19937 rng(20261018);
  int good = 0;
  for (int s = 0; s < 100; ++s) {
    Polynomial x = t.element(random_element(G, rng, 8), random_coords(t, rng, 5));
    Polynomial y = t.element(random_element(G, rng, 8), random_coords(t, rng, 5));
    if (G->equal(t.pair.g.apply(t.S->mul(x, y)), G->mul(t.pair.g.apply(x), t.pair.g.apply(y)))) ++good;
  }
  o.require(good == 100, "g multiplicative on " + std::to_string(good) + "/100 pairs");
  if (o.ok) o.note = "g multiplicative on 100/100 pairs";
  return o;
}

// 6: agreement of the three conditions on the three fixture triples.
Outcome theorem_b() {
  Outcome o;
  Ring G = semigroup(), Rm = rm(), R = x3();
  RetractTriple t1 = build(ConstructionKind::AmalgamatedDuplication, G, ideal(G, {"x", "y"}));
  RetractTriple t2 = build(ConstructionKind::TrivialExtension, R, PresentedModule::free(R, 1));
  RetractTriple t3 = build(ConstructionKind::TrivialExtension, Rm, ideal(Rm, {"x", "y"}));
  CheckReport r1 = verify_theorem_B(t1, 4), r2 = verify_theorem_B(t2, 4), r3 = verify_theorem_B(t3, 4);
  for (const CheckReport* r : {&r1, &r2, &r3}) o.require(detail(*r, "agreement") == "true", "agreement=false");
  for (const CheckReport* r : {&r1, &r2}) {
    for (const auto& s : r->subs) o.require(s.ok(), "condition " + s.name + " not passing");
  }
  for (const auto& s : r3.subs) o.require(s.failed(), "Rm condition " + s.name + " not failing");
  o.require(r3.subs.size() == 3 && r3.subs[1].witness == "Ann_R(C)=(x, y)" && r3.subs[2].witness == "Ann_R(C)=(x, y)",
            "Rm witness");
  return o;
}

// 7: G_C-dim over R against G-dim over S.
Outcome theorem_a() {
  Outcome o;
  Ring R = x3(), G = semigroup();
  RetractTriple t = build(ConstructionKind::TrivialExtension, R, PresentedModule::free(R, 1));
  RetractTriple tg = build(ConstructionKind::AmalgamatedDuplication, G, ideal(G, {"x", "y"}));
  std::vector<std::pair<std::string, CheckReport>> runs = {
      {"x3 k", verify_theorem_A_fg(t, residue_field(R), 4, 4)},
      {"x3 R", verify_theorem_A_fg(t, PresentedModule::free(R, 1), 4, 4)},
      {"semigroup k", verify_theorem_A_fg(tg, residue_field(G), 4, 4)},
  };
  for (const auto& [name, r] : runs) o.require(r.ok(), name + ": " + r.verdict_string());
  const CheckReport& sk = runs[2].second;
  o.require(detail(sk, "value") == "1", "semigroup k value " + detail(sk, "value"));
  o.require(sk.subs.size() == 3 && detail(sk.subs[1], "value") == "1" && detail(sk.subs[2], "value") == "1",
            "semigroup k: sides differ from 1");
  if (o.ok) o.note = "3 pairs, semigroup k: R-side=1 S-side=1";
  return o;
}

// 8: the stacked triple.
Outcome stacked() {
  Outcome o;
  Ring Q = rationals_point();
  RetractTriple t = stacked_triple(Q, PresentedModule::free(Q, 1));
  CheckReport k = check_kernel_property(t);
  o.require(k.verdict == Verdict::Fail && k.witness == "dim(ker g)=3 dim(C)=1", "kernel: " + k.to_text());
  for (std::size_t n : {1, 2}) {
    CheckReport a = verify_theorem_A_fg(t, PresentedModule::free(Q, n), 4, 4);
    o.require(a.ok(), "gc-dimension equality on Q^" + std::to_string(n));
  }
  return o;
}

// 9: canonical maps.
Outcome canonical_maps() {
  Outcome o;
  int checked = 0;
  auto expect = [&](const CheckReport& r, Verdict v, const std::string& what) {
    ++checked;
    o.require(r.verdict == v, what + ": " + r.verdict_string());
  };
  for (const auto& a : artinian()) {
    Ring R = make(a);
    PresentedModule F = PresentedModule::free(R, 1), k = residue_field(R);
    PresentedModule E = matlis_dual(F).module;
    // S = R ltimes k as an R-module is neither free nor injective
    RetractTriple t = build(ConstructionKind::TrivialExtension, R, k);
    const PresentedModule& S = t.over_R().module;
    for (const PresentedModule& M : {k, F}) {
      expect(verify_map_iso(theta_map(S, M, E)), Verdict::Pass, a.name + " Theta");
      expect(verify_map_iso(omega_map(S, M, F)), Verdict::Pass, a.name + " Omega");
    }
    // R and its Matlis dual are semidualizing, and Matlis duality is reflexive
    expect(verify_map_iso(homothety(F)), Verdict::Pass, a.name + " homothety R");
    expect(verify_map_iso(homothety(E)), Verdict::Pass, a.name + " homothety E");
    expect(verify_map_iso(biduality(k, E)), Verdict::Pass, a.name + " biduality k wrt E");
  }
  // Gorenstein fixtures: k is reflexive with respect to R
  for (std::size_t i : {0, 2, 4}) {
    Ring R = make(artinian()[i]);
    expect(verify_map_iso(biduality(residue_field(R), PresentedModule::free(R, 1))), Verdict::Pass,
           artinian()[i].name + " biduality k");
  }
  Ring Rm = rm();
  PresentedModule m = ideal(Rm, {"x", "y"});
  CheckReport h = verify_map_iso(homothety(m));
  expect(h, Verdict::Fail, "Rm homothety m");
  o.require(!h.witness.empty(), "Rm homothety witness missing");
  // R -> Hom(m, m) kills the maximal ideal
  CheckReport sd = check_semidualizing(m, 4);
  o.require(sd.failed() && sd.subs[0].witness == "kernel=(x, y)", "Rm homothety kernel '" + sd.subs[0].witness + "'");
  CheckReport b = verify_map_iso(biduality(residue_field(Rm), PresentedModule::free(Rm, 1)));
  expect(b, Verdict::Fail, "Rm biduality k");
  o.require(!b.witness.empty(), "Rm biduality witness missing");
  if (o.ok) o.note = std::to_string(checked) + " maps; Rm: homothety '" + h.witness + "', biduality '" + b.witness + "'";
  return o;
}

// 10: byte-identical machine output on reruns of every fixture session.
Outcome determinism() {
  Outcome o;
  RunOptions opts;
  opts.machine = true;
  for (const auto& f : fixture_sessions()) {
    Session s = parse_session(f.text);
    std::ostringstream a, b;
    int ca = run_session(s, opts, a);
    int cb = run_session(parse_session(f.text), opts, b);
    o.require(ca == cb && a.str() == b.str() && !a.str().empty(), f.name + " output differs");
  }
  if (o.ok) o.note = std::to_string(fixture_sessions().size()) + " sessions";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"kernel correctness vs dense oracle", kernel_correctness},
      {"resolution exactness to length 6", resolution_exactness},
      {"trivial extension conformance", trivial_extension},
      {"amalgamated duplication", duplication},
      {"pseudocanonical cover", pseudocanonical},
      {"theorem B harness", theorem_b},
      {"theorem A, finitely generated", theorem_a},
      {"stacked counterexample", stacked},
      {"canonical maps", canonical_maps},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::ostringstream line;
    line.precision(1);
    line << std::fixed << "criterion " << (i + 1) << ": " << (o.ok ? "PASS" : "FAIL") << " " << criteria[i].first
         << " (tol exact, " << secs << " s)";
    if (!o.note.empty()) line << ": " << o.note;
    std::cout << line.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
