#pragma once

#include <string>
#include <utility>
#include <vector>

namespace semidual {

enum class Verdict { Pass, Fail, VerifiedToBound, Vacuous };

/// Outcome of one check plus the sub-checks it was assembled from. A FAIL
/// always carries a witness (a nonzero element, a dimension pair or an index).
struct CheckReport {
  std::string name;
  Verdict verdict = Verdict::Pass;
  int bound = -1;
  std::string witness;
  std::vector<std::pair<std::string, std::string>> details;
  std::vector<CheckReport> subs;

  bool ok() const { return verdict == Verdict::Pass || verdict == Verdict::VerifiedToBound; }
  bool failed() const { return verdict == Verdict::Fail; }
  std::string verdict_string() const;
  /// One line per report, sub-checks indented.
  std::string to_text(int indent = 0) const;

  static CheckReport pass(std::string name);
  static CheckReport fail(std::string name, std::string witness);
  static CheckReport to_bound(std::string name, int bound);
  void detail(std::string key, std::string value) { details.emplace_back(std::move(key), std::move(value)); }
};

/// FAIL if any sub failed (the first failing sub supplies the witness),
/// else VERIFIED_TO_BOUND with the smallest bound if any sub is bounded,
/// else PASS.
CheckReport aggregate(std::string name, std::vector<CheckReport> subs);

}  // namespace semidual
