#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace semidual {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector of a monomial. Slots past the ambient variable count stay
/// zero, so monomials of one ambient compare and multiply slot-wise.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t index, int power = 1);

  int operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, int value);
  /// Total degree (every variable weighted 1).
  int degree() const { return static_cast<int>(deg_); }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const;
  /// Requires o.divides(*this).
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  int weighted_degree(std::span<const int> weights) const;

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
  std::uint32_t deg_ = 0;
};

enum class OrderKind { Lex, GrevLex };

/// One block of a product order; `vars` lists variable indices, most
/// significant first.
struct OrderBlock {
  OrderKind kind = OrderKind::GrevLex;
  std::vector<std::size_t> vars;
};

/// A multiplicative well-order on monomials: lex or grevlex with a variable
/// precedence, or a product (elimination) order of such blocks.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  static MonomialOrder grevlex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);
  /// `precedence[0]` is the most significant variable.
  static MonomialOrder with_precedence(OrderKind kind, std::vector<std::size_t> precedence);
  static MonomialOrder product(std::vector<OrderBlock> blocks);

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;

  std::size_t nvars() const { return nvars_; }
  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  OrderKind kind() const { return blocks_.empty() ? OrderKind::GrevLex : blocks_.front().kind; }
  bool is_standard_grevlex() const { return fast_grevlex_; }

  bool operator==(const MonomialOrder& o) const;

 private:
  void finish();

  std::size_t nvars_ = 0;
  std::vector<OrderBlock> blocks_;
  bool fast_grevlex_ = false;
};

}  // namespace semidual
