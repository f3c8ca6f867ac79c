#include "semidual/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace semidual {

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t index, int power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int value) {
  if (i >= kMaxVars) throw std::out_of_range("variable index");
  if (value < 0 || value > 0xffff) throw std::out_of_range("exponent");
  deg_ = deg_ - exp_[i] + static_cast<std::uint32_t>(value);
  exp_[i] = static_cast<std::uint16_t>(value);
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] + o.exp_[i]);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - o.exp_[i]);
  }
  r.deg_ = deg_ - o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] > o.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0 && o.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(exp_[i], o.exp_[i]);
    d += r.exp_[i];
  }
  r.deg_ = d;
  return r;
}

int Monomial::weighted_degree(std::span<const int> weights) const {
  int d = 0;
  for (std::size_t i = 0; i < weights.size() && i < kMaxVars; ++i) d += weights[i] * exp_[i];
  return d;
}

std::string Monomial::to_string(std::span<const std::string> names) const {
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : "x" + std::to_string(i);
    if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
  }
  return out.empty() ? "1" : out;
}

// --------------------------------------------------------- MonomialOrder

MonomialOrder MonomialOrder::grevlex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return with_precedence(OrderKind::GrevLex, std::move(p));
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return with_precedence(OrderKind::Lex, std::move(p));
}

MonomialOrder MonomialOrder::with_precedence(OrderKind kind, std::vector<std::size_t> precedence) {
  return product({OrderBlock{kind, std::move(precedence)}});
}

MonomialOrder MonomialOrder::product(std::vector<OrderBlock> blocks) {
  MonomialOrder o;
  o.blocks_ = std::move(blocks);
  o.finish();
  return o;
}

void MonomialOrder::finish() {
  std::vector<bool> seen;
  nvars_ = 0;
  for (const auto& b : blocks_) nvars_ += b.vars.size();
  if (nvars_ > kMaxVars) throw std::invalid_argument("too many variables");
  seen.assign(nvars_, false);
  for (const auto& b : blocks_) {
    for (std::size_t v : b.vars) {
      if (v >= nvars_ || seen[v]) throw std::invalid_argument("order precedence is not a permutation");
      seen[v] = true;
    }
  }
  fast_grevlex_ = blocks_.size() == 1 && blocks_[0].kind == OrderKind::GrevLex;
  if (fast_grevlex_) {
    for (std::size_t i = 0; i < blocks_[0].vars.size(); ++i) {
      if (blocks_[0].vars[i] != i) fast_grevlex_ = false;
    }
  }
  if (blocks_.empty()) fast_grevlex_ = true;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (fast_grevlex_) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = nvars_; i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  for (const auto& block : blocks_) {
    if (block.kind == OrderKind::Lex) {
      for (std::size_t v : block.vars) {
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
      }
      continue;
    }
    int da = 0, db = 0;
    for (std::size_t v : block.vars) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = block.vars.size(); k-- > 0;) {
      std::size_t v = block.vars[k];
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
  }
  return 0;
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
  if (nvars_ != o.nvars_ || blocks_.size() != o.blocks_.size()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].kind != o.blocks_[i].kind || blocks_[i].vars != o.blocks_[i].vars) return false;
  }
  return true;
}

}  // namespace semidual
