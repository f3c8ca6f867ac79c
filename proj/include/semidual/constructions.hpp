#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semidual/module.hpp"

namespace semidual {

enum class ConstructionKind { TrivialExtension, AmalgamatedDuplication, PseudocanonicalCover };

std::string kind_name(ConstructionKind k);

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::TrivialExtension;
  Ring R;
  /// C over R; an ideal module (PresentedModule::ideal) for the ideal-based kinds.
  PresentedModule C;
  /// Pseudocanonical cover only; h = r0^2.
  std::optional<Polynomial> r0;
};

/// (R, S, C) with S presented over R's variables plus one variable per
/// C-generator.
struct RetractTriple {
  RetractTriple(ConstructionKind k, Ring r, Ring s, PresentedModule c, RetractPair p)
      : kind(k), R(std::move(r)), S(std::move(s)), C(std::move(c)), pair(std::move(p)) {}

  ConstructionKind kind = ConstructionKind::TrivialExtension;
  bool stacked = false;
  Ring R, S;
  PresentedModule C;
  RetractPair pair;
  std::optional<Polynomial> r0;
  /// Elements of S generating it over R: images of 1 and of each C-generator
  /// (for stacked triples, all products of the two levels' generators).
  std::vector<Polynomial> section;
  /// Images in S of the C-generators under C -> ker g.
  std::vector<Polynomial> kernel_witness;
  /// Names of the variables added for C's generators.
  std::vector<std::string> e_names;
  /// When S is graded: C in degree d sits in S in degree d + c_shift.
  int c_shift = 0;

  /// The element (r, c) of S, with c given by coordinates over C's generators.
  Polynomial element(const Polynomial& r, const Vec& c) const;
  /// S restricted to R along f, generated by `section`.
  const Restriction& over_R() const;

 private:
  mutable std::shared_ptr<Restriction> restriction_;
  mutable std::shared_ptr<std::once_flag> once_ = std::make_shared<std::once_flag>();
};

/// Throws std::invalid_argument for malformed specs and std::runtime_error
/// when the dimension validation of S fails.
RetractTriple build_construction(const ConstructionSpec& spec);

/// (R, (R ltimes C) ltimes (R ltimes C), C) with f and g the composites.
RetractTriple stacked_triple(const Ring& R, const PresentedModule& C);

/// Generators v - f(g(v)) (v a variable of S) of the ideal ker g of S.
std::vector<Polynomial> kernel_generators(const RetractTriple& t);
/// An R-module viewed over S along g; keeps the generators and their degrees.
PresentedModule along_g(const RetractTriple& t, const PresentedModule& M);

/// ker g as an R-module together with the witness map C -> ker g.
struct KernelOfG {
  PresentedModule kernel;
  std::optional<ModuleMap> witness;  // unset when the witness does not land in ker g
  CheckReport report;
};
KernelOfG kernel_of_g(const RetractTriple& t);

enum class IsoKind { PhiBowtie, ThetaPseudo, ThetaLtimes };
std::string iso_kind_name(IsoKind k);
/// The kind matching the triple's construction.
IsoKind default_iso_kind(const RetractTriple& t);

/// The explicit map S -> Hom_R(S, C) on the R-generators of S (section order).
ModuleMap construction_iso_map(const RetractTriple& t, IsoKind kind);
/// Checks s * Theta(b) = Theta(s * b) for every variable s of S and every
/// R-generator b of S.
CheckReport check_s_linearity(const RetractTriple& t, IsoKind kind);

}  // namespace semidual
