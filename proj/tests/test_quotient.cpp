#include <gtest/gtest.h>

#include <random>

#include "artinsum/algebra.hpp"
#include "artinsum/error.hpp"
#include "artinsum/parser.hpp"
#include "oracles.hpp"

using namespace artinsum;

namespace {

using Sizes = std::vector<std::size_t>;

std::vector<std::string> basis_strings(const ArtinAlgebra& a) {
  std::vector<std::string> out;
  for (const auto& m : a.basis()) out.push_back(m.to_string(a.ring()->names));
  return out;
}

Vec elem(const ArtinAlgebra& a, const std::string& text) { return a.image(parse_polynomial(a.ring(), text)); }

Subspace span_of(const ArtinAlgebra& a, const std::vector<std::string>& texts) {
  std::vector<Vec> v;
  for (const auto& t : texts) v.push_back(elem(a, t));
  return span(a, v);
}

const char* kCubic = "field QQ; vars Y; ideal Y^3";
const char* kStretched = "field QQ; vars Y Z; ideal Y*Z, Z^2-Y^3";
const char* kSquareZero = "field QQ; vars Y Z; ideal Y^2, Z^2, Y*Z";

}  // namespace

TEST(Quotient, BuildExamples) {
  ArtinAlgebra a = ArtinAlgebra::parse(kCubic);
  EXPECT_EQ(basis_strings(a), (std::vector<std::string>{"Y^2", "Y", "1"}));
  EXPECT_EQ(length(a), 3U);
  ArtinAlgebra b = ArtinAlgebra::parse(kStretched);
  EXPECT_EQ(basis_strings(b), (std::vector<std::string>{"Y^2", "Z^2", "Y", "Z", "1"}));
  EXPECT_EQ(length(b), 5U);
  EXPECT_EQ(length(ArtinAlgebra::parse(kSquareZero)), 3U);
  EXPECT_EQ(length(ArtinAlgebra::parse("field QQ; vars Y Z; ideal Y*Z, Y^2-Z^2")), 4U);
}

TEST(Quotient, Errors) {
  EXPECT_THROW(ArtinAlgebra::parse("field QQ; vars Y Z; ideal Y*Z"), NotZeroDimensionalError);
  EXPECT_THROW(ArtinAlgebra::parse("field QQ; vars Y; ideal Y^2, Y-1"), UnitIdealError);
  EXPECT_THROW(ArtinAlgebra::parse("field QQ; vars Y; ideal Y^2-Y"), NotLocalError);
  EXPECT_THROW(ArtinAlgebra::parse("field QQ; vars Y Z; ideal Y-1, Z^2"), NotLocalError);
}

TEST(Quotient, Socles) {
  ArtinAlgebra a = ArtinAlgebra::parse(kCubic);
  EXPECT_EQ(socle(a), span_of(a, {"Y^2"}));
  ArtinAlgebra p = ArtinAlgebra::parse(kSquareZero);
  EXPECT_EQ(socle(p), span_of(p, {"Y", "Z"}));
  EXPECT_EQ(type(p), 2U);
  ArtinAlgebra b = ArtinAlgebra::parse(kStretched);
  EXPECT_EQ(socle(b), span_of(b, {"Y^3"}));
  EXPECT_EQ(type(b), 1U);
}

TEST(Quotient, Invariants) {
  ArtinAlgebra a = ArtinAlgebra::parse(kCubic);
  EXPECT_EQ(loewy_length(a), 2U);
  EXPECT_EQ(embedding_dimension(a), 1U);
  EXPECT_TRUE(is_gorenstein(a));
  ArtinAlgebra b = ArtinAlgebra::parse(kStretched);
  EXPECT_EQ(loewy_length(b), 3U);
  EXPECT_EQ(embedding_dimension(b), 2U);
  EXPECT_TRUE(is_gorenstein(b));
  ArtinAlgebra p = ArtinAlgebra::parse(kSquareZero);
  EXPECT_EQ(loewy_length(p), 1U);
  EXPECT_EQ(embedding_dimension(p), 2U);
  EXPECT_FALSE(is_gorenstein(p));
}

TEST(Quotient, HilbertFunctions) {
  EXPECT_EQ(hilbert_function(ArtinAlgebra::parse(kStretched)), (Sizes{1, 2, 1, 1}));
  ArtinAlgebra g = ArtinAlgebra::parse("field QQ; vars Y1 Y2 Z; ideal Y1*Z, Y2*Z, Y1^2*Y2, Y2^2, Y1^4-Z^4");
  EXPECT_EQ(hilbert_function(g), (Sizes{1, 3, 3, 2, 1}));
  EXPECT_EQ(length(g), 10U);
  EXPECT_EQ(hilbert_function(ArtinAlgebra::parse(kSquareZero)), (Sizes{1, 2}));
  // The filtration is not the monomial degree: z^2 = y^3 lies in m^3.
  ArtinAlgebra b = ArtinAlgebra::parse(kStretched);
  EXPECT_TRUE(b.power(3).contains(elem(b, "Z^2")));
  EXPECT_EQ(b.power(2), span_of(b, {"Y^2", "Y^3"}));
}

TEST(Quotient, Annihilators) {
  ArtinAlgebra a = ArtinAlgebra::parse(kStretched);
  Annihilator w = annihilator(a, a.power(2).basis());
  EXPECT_EQ(w.space, span_of(a, {"Z", "Y^2", "Y^3"}));
  EXPECT_TRUE(w.is_ideal);
  Annihilator i = annihilator(a, {elem(a, "Z")});
  EXPECT_EQ(i.space, span_of(a, {"Y", "Y^2", "Y^3"}));
  EXPECT_EQ(i.space, ideal_generated(a, {elem(a, "Y")}));
  EXPECT_TRUE(annihilator(a, {a.one()}).space.empty());
}

TEST(Quotient, MinimalGenerators) {
  ArtinAlgebra a = ArtinAlgebra::parse(kStretched);
  EXPECT_EQ(minimal_generators(a, a.maximal_ideal()).count, 2U);
  EXPECT_EQ(minimal_generators(a, ideal_generated(a, {elem(a, "Z")})).count, 1U);
  ArtinAlgebra p = ArtinAlgebra::parse(kSquareZero);
  EXPECT_EQ(minimal_generators(p, socle(p)).count, 2U);
  EXPECT_THROW(minimal_generators(a, span_of(a, {"Y"})), PreconditionError);
}

TEST(Quotient, RelationCounts) {
  EXPECT_EQ(relation_count(ArtinAlgebra::parse(kCubic)), 1U);
  EXPECT_EQ(relation_count(ArtinAlgebra::parse("field QQ; vars Y Z; ideal Y*Z, Y^2-Z^2")), 2U);
  EXPECT_EQ(relation_count(ArtinAlgebra::parse(kSquareZero)), 3U);
  EXPECT_EQ(relation_count(ArtinAlgebra::parse("field QQ; vars X1 X2 X3; ideal X1^2, X2^2, X3^2")), 3U);
  // Redundant generators do not count.
  EXPECT_EQ(relation_count(ArtinAlgebra::parse("field QQ; vars Y Z; ideal Y*Z, Z^2-Y^3, Z^3, Y^4")), 2U);
}

TEST(Quotient, MinimalizesLinearRelations) {
  ArtinAlgebra a = ArtinAlgebra::parse("field QQ; vars X Y Z; ideal Z-X^2, Y^2, X^3");
  EXPECT_TRUE(a.minimalized());
  EXPECT_EQ(a.ring()->names, (std::vector<std::string>{"X", "Y"}));
  EXPECT_EQ(length(a), 6U);
  EXPECT_EQ(embedding_dimension(a), 2U);
  EXPECT_EQ(a.presentation().to_string(), "field QQ;\nvars X Y;\nideal Y^2, X^3;\n");
  RingPtr source = a.source_presentation().ring();
  EXPECT_EQ(a.image(parse_polynomial(source, "Z")), elem(a, "X^2"));
  EXPECT_EQ(a.source_images()[2].to_string(), "X^2");
}

TEST(Quotient, TablesAgreeWithNormalForms) {
  for (const char* text : {kStretched, "field GF(101); vars A B C; ideal A*B - C^2, A^2 - B^2, B*C, A^3"}) {
    ArtinAlgebra a = ArtinAlgebra::parse(text);
    const auto& gb = a.presentation().groebner_basis();
    for (std::size_t i = 0; i < a.length(); ++i) {
      for (std::size_t j = 0; j < a.length(); ++j) {
        Polynomial prod = Polynomial::term(a.ring(), a.basis()[i] * a.basis()[j], a.ring()->unit());
        Polynomial nf = normal_form(prod, gb);
        EXPECT_EQ(a.lift(a.multiply(a.basis_vector(i), a.basis_vector(j))), nf);
      }
    }
  }
}

TEST(Quotient, InvariantsAgreeWithTruncationOracles) {
  std::vector<std::string> texts{kCubic, kStretched, kSquareZero,
                                 "field QQ; vars Y Z; ideal Y*Z, Y^2-Z^2",
                                 "field QQ; vars Y1 Y2 Z; ideal Y1*Z, Y2*Z, Y1^2*Y2, Y2^2, Y1^4-Z^4",
                                 "field GF(101); vars A B C; ideal A*B - C^2, A^2 - B^2, B*C, A^3"};
  for (const auto& text : texts) {
    Presentation p = parse_presentation(text);
    ArtinAlgebra a = ArtinAlgebra::parse(text);
    unsigned n = static_cast<unsigned>(loewy_length(a) + 3);
    EXPECT_EQ(length(a), oracle::length(p.ring, p.generators, n)) << text;
    EXPECT_EQ(type(a), oracle::socle_dimension(p.ring, p.generators, n)) << text;
    EXPECT_EQ(hilbert_function(a), oracle::hilbert_function(p.ring, p.generators, n)) << text;
    auto h = hilbert_function(a);
    std::size_t total = 0;
    for (auto x : h) total += x;
    EXPECT_EQ(total, length(a));
    EXPECT_EQ(h[1], embedding_dimension(a));
    EXPECT_GE(h.back(), 1U);
  }
}

TEST(Quotient, GorensteinDualityOnRandomIdeals) {
  std::vector<std::string> texts{kStretched, "field GF(101); vars Y Z; ideal Y*Z, Y^3-Z^3",
                                 "field GF(101); vars X1 X2 X3; ideal X1^2, X2^2, X3^2"};
  std::mt19937_64 rng(17);
  for (const auto& text : texts) {
    ArtinAlgebra a = ArtinAlgebra::parse(text);
    ASSERT_TRUE(is_gorenstein(a));
    std::uniform_int_distribution<int> c(-2, 2);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Vec> gens;
      for (int g = 0; g < 2; ++g) {
        Vec v = a.zero();
        for (std::size_t j = 0; j + 1 < a.length(); ++j) v[j] = Scalar(a.field(), c(rng));
        gens.push_back(v);
      }
      Subspace w = ideal_generated(a, gens);
      Annihilator ann = annihilator(a, w.basis());
      EXPECT_TRUE(ann.is_ideal);
      EXPECT_EQ(ann.space.dim(), length(a) - w.dim());
      EXPECT_EQ(annihilator(a, ann.space.basis()).space, w);
    }
  }
}
