#include <gtest/gtest.h>

#include "regdec/error.hpp"
#include "regdec/twisted_algebra.hpp"
#include "support.hpp"

using namespace regdec;

namespace {

// Scheunert cocycle of a random alternating bicharacter times a random
// carry cocycle.
Cocycle2 random_cocycle(const FinAbGroup& g, const FieldRef& f) {
  std::vector<FieldElement> ls;
  for (std::size_t s = 0; s < g.rank(); ++s) ls.push_back(gen::random_element(f, true));
  return scheunert_cocycle(random_alternating_bicharacter(g, f, gen::rng())) * carry_cocycle(g, ls);
}

}  // namespace

TEST(TwistedAlgebra, SignedSquareOnZ2) {
  const auto f = Field::make(5, 1);
  const FinAbGroup g({2});
  const TwistedGroupAlgebra a(Cocycle2(g, f, {1, 1, 1, f->from_int(-1)}));
  const auto x1 = a.basis(g.make({1}));
  EXPECT_EQ(a.mul(x1, x1), a.unit().scaled(FieldElement::from_int(f, -1)));
  EXPECT_EQ(a.basis_inverse(g.make({1})), x1.scaled(FieldElement::from_int(f, -1)));
  EXPECT_EQ(a.basis_inverse(g.zero()), a.unit());
}

TEST(TwistedAlgebra, RejectsInvalidCocycles) {
  const auto f = Field::make(3, 1);
  EXPECT_THROW(TwistedGroupAlgebra(sign_cocycle(FinAbGroup({3, 3}), f)), ParameterError);
}

TEST(TwistedAlgebra, TrivialCocycleIsTheGroupAlgebra) {
  const auto f = Field::make(7, 1);
  const FinAbGroup g({2, 3});
  const TwistedGroupAlgebra a(Cocycle2(g, f, std::vector<Field::Code>(36, 1)));
  for (const auto& x : g.elements())
    for (const auto& y : g.elements()) EXPECT_EQ(a.mul(a.basis(x), a.basis(y)), a.basis(g.add(x, y)));
  EXPECT_EQ(a.center_basis().size(), g.size());
  EXPECT_FALSE(a.is_minimal());
}

TEST(TwistedAlgebra, RingLaws) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto f = Field::make(p, 2);
    for (int trial = 0; trial < 8; ++trial) {
      const auto g = gen::random_group(36);
      const TwistedGroupAlgebra a(random_cocycle(g, f));
      const auto beta = induced_bicharacter(a.cocycle());
      auto random_elem = [&] {
        std::vector<std::pair<GroupElement, FieldElement>> t;
        for (int i = 0; i < 3; ++i) t.emplace_back(gen::random_member(g), gen::random_element(f));
        return a.element(t);
      };
      for (int i = 0; i < 1000; ++i) {
        const auto u = random_elem(), v = random_elem(), w = random_elem();
        ASSERT_EQ(a.mul(a.mul(u, v), w), a.mul(u, a.mul(v, w)));
      }
      for (const auto& x : g.elements()) {
        const auto bx = a.basis(x);
        EXPECT_EQ(a.mul(a.unit(), bx), bx);
        EXPECT_EQ(a.mul(bx, a.unit()), bx);
        const auto inv = a.basis_inverse(x);
        EXPECT_EQ(a.mul(bx, inv), a.unit());
        EXPECT_EQ(a.mul(inv, bx), a.unit());
        for (const auto& y : g.elements()) {
          const auto by = a.basis(y);
          EXPECT_EQ(a.mul(bx, by), a.mul(by, bx).scaled(beta.eval(x, y)));
        }
      }
      // Products of basis elements are nonzero multiples of the summed basis element.
      for (int i = 0; i < 50; ++i) {
        auto prod = a.unit();
        auto sum = g.zero();
        for (int j = 0; j < 5; ++j) {
          const auto x = gen::random_member(g);
          prod = a.mul(prod, a.basis(x));
          sum = g.add(sum, x);
        }
        ASSERT_EQ(prod.terms().size(), 1u);
        EXPECT_EQ(prod.terms().begin()->first, g.index(sum));
      }
    }
  }
}

TEST(TwistedAlgebra, CenterAndMinimality) {
  const auto f = Field::make(5, 1);
  const auto m1 = f->from_int(-1);
  // Klein four group with beta = -1 off the diagonal: minimal.
  const FinAbGroup g({2, 2});
  const Bicharacter beta(g, f, {1, m1, m1, 1});
  const TwistedGroupAlgebra a(scheunert_cocycle(beta));
  const auto m = a.minimality();
  EXPECT_TRUE(m.minimal);
  EXPECT_TRUE(m.columns_distinct);
  EXPECT_EQ(m.center_dimension, 1u);
  EXPECT_EQ(m.radical_order, 1u);
  EXPECT_EQ(a.center_basis(), std::vector<GroupElement>{g.zero()});

  // Add a third factor that pairs trivially: centre is that factor.
  const FinAbGroup h({2, 2, 3});
  const Bicharacter beta3(h, f, {1, m1, 1, m1, 1, 1, 1, 1, 1});
  const TwistedGroupAlgebra b(scheunert_cocycle(beta3));
  EXPECT_EQ(b.center_basis().size(), 3u);
  EXPECT_FALSE(b.is_minimal());
}

TEST(TwistedAlgebra, ElementSerialization) {
  const auto f = Field::make(3, 1);
  const FinAbGroup g({3});
  const TwistedGroupAlgebra a(Cocycle2(g, f, std::vector<Field::Code>(9, 1)));
  const auto u = a.element({{g.make({2}), FieldElement(f, 1)}, {g.make({0}), FieldElement(f, 2)}});
  EXPECT_EQ(u.to_string(), "[((0), coeffs=[2] mod (0,1) over GF(3)), ((2), coeffs=[1] mod (0,1) over GF(3))]");
  EXPECT_TRUE((u + u.scaled(FieldElement(f, 2))).is_zero());
}

TEST(TwistedAlgebra, RejectsMixedAlgebras) {
  const auto f = Field::make(3, 1);
  const FinAbGroup g({2});
  const TwistedGroupAlgebra a(Cocycle2(g, f, {1, 1, 1, 1}));
  const TwistedGroupAlgebra b(Cocycle2(g, f, {1, 1, 1, 2}));
  EXPECT_THROW(a.mul(a.unit(), b.unit()), ParameterError);
}
