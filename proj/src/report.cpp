#include "semidual/report.hpp"

#include <algorithm>

namespace semidual {

std::string CheckReport::verdict_string() const {
  switch (verdict) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::VerifiedToBound:
      return "VERIFIED_TO_BOUND(" + std::to_string(bound) + ")";
    case Verdict::Vacuous:
      return "VACUOUS";
  }
  return "?";
}

std::string CheckReport::to_text(int indent) const {
  std::string line(static_cast<std::size_t>(indent), ' ');
  line += name + ": " + verdict_string();
  if (verdict == Verdict::Fail && !witness.empty()) line += " " + witness;
  for (const auto& [k, v] : details) line += " " + k + "=" + v;
  line += "\n";
  for (const auto& s : subs) line += s.to_text(indent + 2);
  return line;
}

CheckReport CheckReport::pass(std::string name) {
  CheckReport r;
  r.name = std::move(name);
  return r;
}

CheckReport CheckReport::fail(std::string name, std::string witness) {
  CheckReport r;
  r.name = std::move(name);
  r.verdict = Verdict::Fail;
  r.witness = std::move(witness);
  return r;
}

CheckReport CheckReport::to_bound(std::string name, int bound) {
  CheckReport r;
  r.name = std::move(name);
  r.verdict = Verdict::VerifiedToBound;
  r.bound = bound;
  return r;
}

CheckReport aggregate(std::string name, std::vector<CheckReport> subs) {
  CheckReport r;
  r.name = std::move(name);
  for (const auto& s : subs) {
    if (s.verdict == Verdict::Fail) {
      r.verdict = Verdict::Fail;
      r.witness = s.name + ": " + s.witness;
      break;
    }
  }
  if (r.verdict != Verdict::Fail) {
    for (const auto& s : subs) {
      if (s.verdict == Verdict::VerifiedToBound) {
        r.bound = r.verdict == Verdict::VerifiedToBound ? std::min(r.bound, s.bound) : s.bound;
        r.verdict = Verdict::VerifiedToBound;
      } else if (s.verdict == Verdict::Vacuous && r.verdict == Verdict::Pass) {
        r.verdict = Verdict::Vacuous;
      }
    }
  }
  r.subs = std::move(subs);
  return r;
}

}  // namespace semidual
