#include <gtest/gtest.h>

#include <random>

#include "artinsum/error.hpp"
#include "artinsum/parser.hpp"
#include "artinsum/polynomial.hpp"

using namespace artinsum;

namespace {

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int terms, unsigned max_exp) {
  std::vector<Term> t;
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<int> den(1, 4);
  for (int k = 0; k < terms; ++k) {
    Monomial m(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) m.set(i, exp(rng));
    Rational c(coeff(rng), ring->field.is_rational() ? den(rng) : 1);
    t.push_back({m, Scalar(ring->field, c)});
  }
  return Polynomial::from_terms(ring, std::move(t));
}

}  // namespace

TEST(Rational, ArithmeticAndPromotion) {
  Rational a(1, 3);
  Rational b(1, 6);
  EXPECT_EQ((a + b).to_string(), "1/2");
  EXPECT_EQ((a - b * Rational(2)).to_string(), "0");
  Rational big(std::numeric_limits<std::int64_t>::max());
  Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  Rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  EXPECT_EQ(Rational::parse("-12/8").to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(),
            "123456789012345678901234567890");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(Scalar, PrimeField) {
  Field f = Field::prime(7);
  Scalar a(f, 3);
  EXPECT_EQ((a * a).to_string(), "2");
  EXPECT_EQ((a * a.inverse()).to_string(), "1");
  EXPECT_EQ(Scalar(f, -1).to_string(), "6");
  EXPECT_EQ(Scalar(f, Rational(1, 2)).to_string(), "4");
  EXPECT_THROW(Field::prime(8), PreconditionError);
  EXPECT_THROW(Scalar(f, Rational(1, 7)), Error);
  EXPECT_THROW(Scalar(f, 1) + Scalar(Field::rationals(), 1), MismatchError);
}

TEST(TermOrder, Examples) {
  // Y^2 vs YZ, Y^1 vs Z1^2 Z2^3, Y vs Z^5
  EXPECT_GT(TermOrder::grevlex().compare(Monomial{2, 0}, Monomial{1, 1}), 0);
  EXPECT_GT(TermOrder::block({0}, {1, 2}).compare(Monomial{1, 0, 0}, Monomial{0, 2, 3}), 0);
  EXPECT_GT(TermOrder::lex().compare(Monomial{1, 0}, Monomial{0, 5}), 0);
  EXPECT_LT(TermOrder::grevlex().compare(Monomial{1, 0}, Monomial{0, 5}), 0);
  EXPECT_THROW(TermOrder::grevlex().compare(Monomial{1, 0}, Monomial{1}), MismatchError);
}

TEST(TermOrder, AxiomsOnRandomMonomials) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<unsigned> e(0, 3);
  std::vector<TermOrder> orders{TermOrder::grevlex(), TermOrder::lex(),
                                TermOrder::block({0, 2}, {1, 3})};
  auto random_mono = [&] {
    Monomial m(4);
    for (std::size_t i = 0; i < 4; ++i) m.set(i, e(rng));
    return m;
  };
  for (const auto& order : orders) {
    for (int trial = 0; trial < 400; ++trial) {
      Monomial a = random_mono();
      Monomial b = random_mono();
      Monomial c = random_mono();
      int ab = order.compare(a, b);
      EXPECT_EQ(ab, -order.compare(b, a));
      EXPECT_EQ(ab == 0, a == b);
      if (ab < 0 && order.compare(b, c) < 0) EXPECT_LT(order.compare(a, c), 0);
      if (ab < 0) EXPECT_LT(order.compare(a * c, b * c), 0);
      EXPECT_LE(order.compare(Monomial(4), a), 0);
    }
  }
}

TEST(TermOrder, BlockEliminates) {
  TermOrder order = TermOrder::block({0}, {1, 2});
  EXPECT_GT(order.compare(Monomial{1, 0, 0}, Monomial{0, 9, 9}), 0);
  EXPECT_GT(order.compare(Monomial{1, 0, 1}, Monomial{1, 0, 0}), 0);
}

TEST(Polynomial, Arithmetic) {
  RingPtr ring = make_ring(Field::rationals(), {"Y", "Z"});
  Polynomial y = Polynomial::variable(ring, "Y");
  Polynomial z = Polynomial::variable(ring, "Z");
  EXPECT_EQ(((y + z) + (-z)).to_string(), "Y");
  EXPECT_EQ(((y + z) * (y - z)).to_string(), "Y^2-Z^2");
  RingPtr gf3 = make_ring(Field::prime(3), {"Y"});
  Polynomial y3 = Polynomial::variable(gf3, 0);
  EXPECT_TRUE((Scalar(gf3->field, 3) * y3.pow(2)).is_zero());
  RingPtr other = make_ring(Field::rationals(), {"A", "B"});
  EXPECT_THROW(y + Polynomial::variable(other, 0), MismatchError);
}

TEST(Polynomial, RingAxiomsRandom) {
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    RingPtr ring = make_ring(f, {"X", "Y", "Z"});
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      Polynomial a = random_poly(rng, ring, 4, 3);
      Polynomial b = random_poly(rng, ring, 4, 3);
      Polynomial c = random_poly(rng, ring, 3, 2);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + b, b + a);
      EXPECT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Polynomial, CanonicalPrinting) {
  RingPtr ring = make_ring(Field::rationals(), {"Y", "Z"});
  Polynomial p = parse_polynomial(ring, "-Z^2 + 3/2*Y*Z - 1 + Y^3");
  EXPECT_EQ(p.to_string(), "Y^3+3/2*Y*Z-Z^2-1");
  RingPtr gf7 = make_ring(Field::prime(7), {"Y", "Z"});
  EXPECT_EQ(parse_polynomial(gf7, "Y^2 - Z^2").to_string(), "Y^2+6*Z^2");
}

TEST(Parser, Examples) {
  Presentation a = parse_presentation("field QQ; vars Y Z; ideal Y*Z, Y^2-Z^2");
  EXPECT_EQ(a.generators.size(), 2U);
  EXPECT_TRUE(a.ring->field.is_rational());
  EXPECT_EQ(a.ring->names, (std::vector<std::string>{"Y", "Z"}));

  Presentation b = parse_presentation("field QQ; vars Y1 Z1 Z2; ideal Y1*Z1-Z2^2, Y1^2, Z1^2");
  EXPECT_EQ(b.generators.size(), 3U);
  EXPECT_EQ(b.generators[0].to_string(), "Y1*Z1-Z2^2");

  Presentation c = parse_presentation("field GF(7); vars X; ideal X^3");
  EXPECT_EQ(c.ring->field.characteristic(), 7U);
  EXPECT_EQ(c.generators[0].to_string(), "X^3");
}

TEST(Parser, CommentsAndJuxtaposition) {
  Presentation p = parse_presentation("# header\nfield QQ;  # rationals\nvars X Y;\nideal 2X Y^2 - 3 * X, Y^3;\n");
  EXPECT_EQ(p.generators[0].to_string(), "2*X*Y^2-3*X");
}

TEST(Parser, Errors) {
  try {
    parse_presentation("field QQ;\nvars Y Z;\nideal Y*W");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 9);
    EXPECT_NE(std::string(e.what()).find("unknown variable"), std::string::npos);
  }
  EXPECT_THROW(parse_presentation("field GF(8); vars X; ideal X"), ParseError);
  EXPECT_THROW(parse_presentation("field QQ; vars X; ideal X +"), ParseError);
  EXPECT_THROW(parse_presentation("field QQ; vars X X; ideal X"), ParseError);
  EXPECT_THROW(parse_presentation("field RR; vars X; ideal X"), ParseError);
}

TEST(Parser, RoundTripRandom) {
  for (Field f : {Field::rationals(), Field::prime(101)}) {
    RingPtr ring = make_ring(f, {"A", "B1", "c_2"});
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Polynomial> nonzero;
      for (auto& g : {random_poly(rng, ring, 5, 4), random_poly(rng, ring, 2, 2)}) {
        if (!g.is_zero()) nonzero.push_back(g);
      }
      std::string text = format_presentation(ring, nonzero);
      Presentation back = parse_presentation(text);
      EXPECT_EQ(*back.ring, *ring);
      ASSERT_EQ(back.generators.size(), nonzero.size());
      for (std::size_t i = 0; i < nonzero.size(); ++i) {
        EXPECT_EQ(back.generators[i].to_string(), nonzero[i].to_string());
        EXPECT_EQ(back.generators[i].embed(ring), nonzero[i]);
      }
      EXPECT_EQ(format_presentation(back.ring, back.generators), text);
    }
  }
}

TEST(Polynomial, SubstituteAndEmbed) {
  RingPtr ring = make_ring(Field::rationals(), {"Y", "Z"});
  RingPtr big = make_ring(Field::rationals(), {"A", "Y", "Z"});
  Polynomial p = parse_polynomial(ring, "Y^2 - Z");
  EXPECT_EQ(p.embed(big).to_string(), "Y^2-Z");
  std::vector<Polynomial> images{parse_polynomial(big, "A+Y"), parse_polynomial(big, "A^2")};
  EXPECT_EQ(p.substitute(images, big).to_string(), "2*A*Y+Y^2");
}
