#pragma once

#include <string>
#include <vector>

#include "semidual/constructions.hpp"

namespace semidual {

inline constexpr int kDefaultBound = 4;
inline constexpr int kDefaultMaxN = 4;

/// Ext^i(M, N) = 0 (or Tor_i) for lo <= i <= hi, read off one resolution of M
/// shifted by `shift` (i.e. for the shift-th syzygy). Reports PASS outright
/// when the resolution ends within the range, else VERIFIED_TO_BOUND(hi).
CheckReport check_vanishing(const std::string& name, Functor kind, const FreeResolution& res,
                            const PresentedModule& N, int lo, int hi, int shift = 0);

CheckReport check_semidualizing(const PresentedModule& C, int bound = kDefaultBound);
CheckReport check_retract_property(const RetractTriple& t, int bound = kDefaultBound);
CheckReport check_kernel_property(const RetractTriple& t);
CheckReport check_totally_C_reflexive(const PresentedModule& M, const PresentedModule& C, int bound = kDefaultBound);

/// G_C-dimension read off syzygies. `AtLeast` means no syzygy up to maxn
/// passed, so the value exceeds maxn (and may be infinite).
struct GcVerdict {
  enum class Kind { Exact, AtLeast };
  Kind kind = Kind::Exact;
  int value = 0;
  int bound = kDefaultBound;
  std::vector<CheckReport> levels;  // levels[n]: total reflexivity of the n-th syzygy

  bool operator==(const GcVerdict& o) const { return kind == o.kind && value == o.value; }
  std::string to_string() const;
};
GcVerdict gc_dimension(const PresentedModule& M, const PresentedModule& C, int maxn = kDefaultMaxN,
                       int bound = kDefaultBound);
/// Report wrapper: VERIFIED_TO_BOUND with the value as a detail.
CheckReport gc_dimension_report(const GcVerdict& v);

enum class FoxbyClass { Auslander, Bass };
CheckReport check_foxby_class(FoxbyClass cls, const PresentedModule& M, const PresentedModule& C,
                              int bound = kDefaultBound);

/// Evaluates the three equivalent conditions separately; PASS (or
/// VERIFIED_TO_BOUND) iff they agree, FAIL with the verdicts otherwise.
CheckReport verify_theorem_B(const RetractTriple& t, int bound = kDefaultBound);
/// G_C-dim over R against G-dim over S of M viewed along g. VACUOUS when C
/// does not pass the semidualizing check.
CheckReport verify_theorem_A_fg(const RetractTriple& t, const PresentedModule& M, int maxn = kDefaultMaxN,
                                int bound = kDefaultBound);
/// dim Ext^i_S(M, S) against dim Ext^i_R(M, C) for 0 <= i <= imax (graded
/// Hilbert values on a degree window when the dimensions are infinite).
/// Reports VERIFIED_TO_BOUND(imax) when every index agrees.
CheckReport verify_ext_transfer(const RetractTriple& t, const PresentedModule& M, int imax);

}  // namespace semidual
