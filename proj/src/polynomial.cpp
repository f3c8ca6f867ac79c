#include "semidual/polynomial.hpp"

#include <algorithm>
#include <cctype>

namespace semidual {

PolyRing::PolyRing(Field field, std::vector<std::string> names, MonomialOrder order)
    : field_(field), names_(std::move(names)), order_(std::move(order)) {
  if (names_.size() > kMaxVars) throw std::invalid_argument("too many variables");
  if (order_.nvars() != names_.size()) throw std::invalid_argument("order does not match variable count");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
    }
  }
}

int PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

bool PolyRing::same_as(const PolyRing& o) const {
  return this == &o || (field_ == o.field_ && names_ == o.names_ && order_ == o.order_);
}

PolyRingPtr make_poly_ring(Field field, std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const PolyRing>(field, std::move(names), std::move(order));
}

void sort_terms(Vec& v, const MonomialOrder& order) {
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) {
    int c = order.compare(a.mono, b.mono);
    if (c != 0) return c > 0;
    return a.comp < b.comp;
  });
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

std::string vec_to_string(const Vec& v, const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : v) {
    std::string c = t.coef.to_string();
    bool neg = !c.empty() && c[0] == '-' && t.coef.modulus() == 0;
    if (neg) c = c.substr(1);
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    bool unit = c == "1";
    if (t.mono.is_one()) {
      out += c;
    } else {
      if (!unit) out += c + "*";
      out += t.mono.to_string(names);
    }
  }
  return out;
}

// ----------------------------------------------------------- Polynomial

Polynomial::Polynomial(PolyRingPtr ring, Vec terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  sort_terms(terms_, ring_->order());
}

Polynomial Polynomial::constant(PolyRingPtr ring, const FieldElem& c) {
  return monomial(std::move(ring), Monomial(), c);
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw std::out_of_range("variable index");
  FieldElem one = ring->field().one();
  return monomial(std::move(ring), Monomial::variable(index), one);
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Monomial& m, const FieldElem& c) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back(Term{m, c, 0});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::check_ambient(const Polynomial& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) throw std::invalid_argument("mixed ambient rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ambient(o);
  const auto& ord = ring_->order();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == o.terms_.size()) c = 1;
    else c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      FieldElem s = terms_[i].coef + o.terms_[j].coef;
      if (!s.is_zero()) r.terms_.push_back(Term{terms_[i].mono, s, 0});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ambient(o);
  Vec prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) prod.push_back(Term{a.mono * b.mono, a.coef * b.coef, 0});
  }
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, ring_->field().one());
  Polynomial b = *this;
  while (e > 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e > 0) b = b * b;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coef != o.terms_[i].coef) return false;
  }
  return true;
}

std::string Polynomial::to_string() const {
  return vec_to_string(terms_, ring_ ? ring_->names() : std::vector<std::string>{});
}

// --------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(const PolyRingPtr& ring, std::string_view s) : ring_(ring), s_(s) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        skip();
        mpz_class d = integer();
        if (d == 0) fail("division by zero");
        acc = acc.scaled(ring_->field().from_rational(1, d));
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    Polynomial b = base();
    if (eat('^')) {
      skip();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        fail("expected exponent");
      }
      mpz_class e = integer();
      if (e > 10000) fail("exponent too large");
      b = b.pow(static_cast<unsigned>(e.get_ui()));
    }
    return b;
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)));
  }

  Polynomial base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class n = integer();
      return Polynomial::constant(ring_, ring_->field().from_rational(n, 1));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = s_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const PolyRingPtr& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const PolyRingPtr& ring, std::string_view text) {
  return Parser(ring, text).parse();
}

}  // namespace semidual
