#include <gtest/gtest.h>

#include <random>

#include "semidual/groebner.hpp"

using namespace semidual;

namespace {

PolyRingPtr ring3(const Field& f, MonomialOrder ord = MonomialOrder::grevlex(3)) {
  return make_poly_ring(f, {"x", "y", "z"}, std::move(ord));
}

Polynomial P(const PolyRingPtr& r, const char* s) { return parse_polynomial(r, s); }

}  // namespace

TEST(Field, RationalCanonical) {
  FieldElem a = FieldElem::rational(2, 4);
  EXPECT_EQ(a.to_string(), "1/2");
  EXPECT_EQ(FieldElem::rational(-3, -6), FieldElem::rational(1, 2));
  EXPECT_EQ(FieldElem::rational(mpq_class(6, 12)), a);
}

TEST(Field, PrimeInverse) {
  Field f5 = Field::prime(5);
  EXPECT_EQ(f5.from_int(2).inverse(), f5.from_int(3));
  EXPECT_THROW(Field::prime(4), std::invalid_argument);
  try {
    Field::prime(4);
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "modulus not prime");
  }
}

TEST(Field, MixedFieldsRejected) {
  EXPECT_THROW(Field::prime(5).one() + Field::prime(7).one(), std::invalid_argument);
}

TEST(Field, BigValuesRoundTrip) {
  FieldElem big = FieldElem::rational(std::numeric_limits<long long>::max());
  FieldElem sq = big * big;
  EXPECT_EQ(sq / big, big);
  EXPECT_EQ((sq - sq), FieldElem::rational(0));
  EXPECT_TRUE((sq - sq).is_zero());
}

TEST(Field, AxiomsOnSamples) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (Field f : {Field::rationals(), Field::prime(101), Field::prime(2147483647ULL)}) {
    for (int k = 0; k < 300; ++k) {
      FieldElem a = f.from_int(d(rng)), b = f.from_int(d(rng)), c = f.from_int(d(rng));
      if (f.is_rational()) a = a / f.from_int(d(rng) | 1);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Poly, Arithmetic) {
  auto r2 = make_poly_ring(Field::prime(2), {"x", "y"}, MonomialOrder::grevlex(2));
  Polynomial s = P(r2, "x+y");
  EXPECT_EQ((s * s).to_string(), "x^2 + y^2");
  auto q = make_poly_ring(Field::rationals(), {"x"}, MonomialOrder::grevlex(1));
  EXPECT_EQ((P(q, "x+1") * P(q, "x-1")).to_string(), "x^2 - 1");
  Polynomial f = P(q, "3*x^2 - x/2 + 7");
  EXPECT_TRUE((f + f.scaled(FieldElem::rational(-1))).is_zero());
  auto other = make_poly_ring(Field::rationals(), {"t"}, MonomialOrder::grevlex(1));
  EXPECT_THROW(P(q, "x") + P(other, "t"), std::invalid_argument);
}

TEST(Poly, ParseErrors) {
  auto q = make_poly_ring(Field::rationals(), {"x"}, MonomialOrder::grevlex(1));
  EXPECT_THROW(P(q, "x^^3"), ParseError);
  try {
    P(q, "x^^3");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(P(q, "x + w"), ParseError);
  EXPECT_THROW(P(q, "(x + 1"), ParseError);
}

TEST(Order, GrevlexAndLex) {
  auto g = MonomialOrder::grevlex(3);
  auto l = MonomialOrder::lex(3);
  Monomial xz(std::vector<int>{1, 0, 1}), yy(std::vector<int>{0, 2, 0});
  EXPECT_GT(g.compare(yy, xz), 0);  // grevlex: y^2 > xz
  EXPECT_LT(l.compare(yy, xz), 0);  // lex: xz > y^2
  auto w = MonomialOrder::with_precedence(OrderKind::Lex, {2, 1, 0});
  EXPECT_GT(w.compare(Monomial::variable(2), Monomial::variable(0, 5)), 0);
}

TEST(NormalForm, Examples) {
  auto q = ring3(Field::rationals());
  auto ord = q->order();
  EXPECT_EQ(normal_form(P(q, "x^3+x"), {P(q, "x^2")}, ord).to_string(), "x");
  EXPECT_EQ(normal_form(P(q, "y^2"), {P(q, "y^2-x*z")}, ord).to_string(), "x*z");
  Polynomial f = P(q, "x*y + 3*z");
  EXPECT_EQ(normal_form(f, {}, ord), f);
}

TEST(Buchberger, Examples) {
  auto q = ring3(Field::rationals());
  auto gb = buchberger({P(q, "x^2"), P(q, "x*y"), P(q, "y^2")}, q->order());
  ASSERT_EQ(gb.elements.size(), 3u);
  auto lex = ring3(Field::rationals(), MonomialOrder::lex(3));
  auto gl = buchberger({P(lex, "x-y"), P(lex, "y-z")}, lex->order());
  ASSERT_EQ(gl.elements.size(), 2u);
  EXPECT_EQ(gl.elements[0].to_string(), "y - z");
  EXPECT_EQ(gl.elements[1].to_string(), "x - z");
}

TEST(Buchberger, SemigroupIdeal) {
  auto q = ring3(Field::rationals());
  std::vector<Polynomial> gens = {P(q, "y^2-x*z"), P(q, "y*z-x^3"), P(q, "z^2-x^2*y")};
  auto gb = buchberger(gens, q->order());
  for (const auto& g : gens) EXPECT_TRUE(normal_form(g, gb.elements, q->order()).is_zero());
  // every S-polynomial reduces to zero, elements monic and reduced
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    EXPECT_TRUE(gb.elements[i].lead().coef.is_one());
    for (std::size_t j = 0; j < gb.elements.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb.elements[j].terms()) {
        EXPECT_FALSE(gb.elements[i].lead().mono.divides(t.mono));
      }
      const auto& a = gb.elements[i];
      const auto& b = gb.elements[j];
      Monomial l = a.lead().mono.lcm(b.lead().mono);
      Polynomial s = Polynomial::monomial(q, l / a.lead().mono, q->field().one()) * a -
                     Polynomial::monomial(q, l / b.lead().mono, q->field().one()) * b;
      EXPECT_TRUE(normal_form(s, gb.elements, q->order()).is_zero());
    }
  }
  // permutation invariance
  auto gb2 = buchberger({gens[2], gens[0], gens[1]}, q->order());
  ASSERT_EQ(gb.elements.size(), gb2.elements.size());
  for (std::size_t i = 0; i < gb.elements.size(); ++i) EXPECT_EQ(gb.elements[i], gb2.elements[i]);
}

TEST(Membership, Examples) {
  auto q = ring3(Field::rationals());
  auto ord = q->order();
  std::vector<Polynomial> m2 = {P(q, "x^2"), P(q, "x*y"), P(q, "y^2")};
  EXPECT_TRUE(ideal_membership(P(q, "x^2+x*y"), m2, ord));
  EXPECT_FALSE(ideal_membership(P(q, "x"), m2, ord));
  std::vector<Polynomial> sg = {P(q, "y^2-x*z"), P(q, "y*z-x^3"), P(q, "z^2-x^2*y")};
  EXPECT_TRUE(ideal_membership(P(q, "y*z-x^3"), sg, ord));
}
