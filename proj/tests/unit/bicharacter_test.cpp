#include <gtest/gtest.h>

#include "regdec/bicharacter.hpp"
#include "regdec/error.hpp"
#include "support.hpp"

using namespace regdec;

namespace {

struct ZnCase {
  FieldRef field;
  FieldElement xi;
};

// A primitive n-th root over p = 5 (n = 2, 4) or GF(25) (n = 3, 6).
ZnCase zn_case(std::uint32_t n) {
  auto [f, z] = root_of_unity(5, n);
  return {f, z};
}

}  // namespace

TEST(Bicharacter, ZnxZnMatchesClosedForm) {
  for (std::uint32_t n : {2u, 3u, 4u, 6u}) {
    auto [f, xi] = zn_case(n);
    const FieldElement one(f, 1), m1 = FieldElement::from_int(f, -1);
    for (const auto& e : {one, m1})
      for (const auto& ff : {one, m1}) {
        if (n % 2 == 1 && !(e.is_one() && ff.is_one())) {
          EXPECT_THROW(znxzn_bicharacter(n, e, ff, xi), ParameterError);
          continue;
        }
        const auto beta = znxzn_bicharacter(n, e, ff, xi);
        EXPECT_TRUE(beta.validate().valid());
        const auto& g = beta.group();
        for (std::int64_t i = 0; i < n; ++i)
          for (std::int64_t j = 0; j < n; ++j)
            for (std::int64_t k = 0; k < n; ++k)
              for (std::int64_t l = 0; l < n; ++l) {
                const auto expect = ff.pow(i * k) * e.pow(j * l) * xi.pow(j * k - i * l);
                ASSERT_EQ(beta.eval(g.make({i, j}), g.make({k, l})), expect);
              }
      }
  }
}

TEST(Bicharacter, ValidationNamesTheBrokenLaw) {
  const auto f = Field::make(7, 1);
  const auto c = [&](int v) { return f->from_int(v); };
  {
    const Bicharacter b(FinAbGroup({2, 2}), f, {c(1), c(-1), c(1), c(1)});
    EXPECT_EQ(b.validate().violation->law, "antisymmetry");
  }
  {
    const Bicharacter b(FinAbGroup({3}), f, {c(2)});  // 2^2 = 4 != 1
    EXPECT_EQ(b.validate().violation->law, "diagonal-square");
  }
  {
    const Bicharacter b(FinAbGroup({3, 3}), f, {c(-1), c(1), c(1), c(1)});
    EXPECT_EQ(b.validate().violation->law, "odd-order-diagonal");
  }
  {
    // beta(a_1, a_2) = 2 has order 3, but gcd(2, 3) = 1.
    const Bicharacter b(FinAbGroup({2, 3}), f, {c(1), c(2), c(4), c(1)});
    EXPECT_EQ(b.validate().violation->law, "well-defined");
  }
  {
    const Bicharacter b(FinAbGroup({2}), f, {c(-1)});
    EXPECT_TRUE(b.validate().valid());
  }
  EXPECT_THROW(Bicharacter(FinAbGroup({2}), f, {0}), ParameterError);
  EXPECT_THROW(Bicharacter(FinAbGroup({2, 2}), f, {1}), ParameterError);
}

TEST(Bicharacter, LargeGroupsAreSampled) {
  const auto f = Field::make(3, 1);
  const Bicharacter b(FinAbGroup({20, 20}), f, {1, 1, 1, 1});
  const auto rep = b.validate();
  EXPECT_TRUE(rep.valid());
  EXPECT_FALSE(rep.exhaustive);
}

TEST(Bicharacter, RadicalAndMinimality) {
  auto [f, xi] = zn_case(4);
  const FieldElement one(f, 1);
  const auto minimal = znxzn_bicharacter(4, one, one, xi);
  EXPECT_EQ(minimal.radical().size(), 1u);
  EXPECT_TRUE(check_minimal(minimal).minimal);

  const auto trivial = znxzn_bicharacter(4, one, one, one);
  EXPECT_TRUE(trivial.radical().is_whole());
  const auto cert = check_minimal(trivial);
  EXPECT_FALSE(cert.minimal);
  ASSERT_TRUE(cert.equal_columns.has_value());
  EXPECT_NE(cert.equal_columns->first, cert.equal_columns->second);

  // xi of order 2 in Z_4 x Z_4: radical is 2G, of order 4.
  const auto half = znxzn_bicharacter(4, one, one, xi * xi);
  EXPECT_EQ(half.radical().size(), 4u);
  EXPECT_EQ(check_minimal(half).radical_order, 4u);
}

TEST(Bicharacter, QuotientByRadical) {
  const auto f = Field::make(3, 1);
  const auto m1 = f->from_int(-1);
  const Bicharacter b(FinAbGroup({2, 2}), f, {m1, m1, m1, m1});
  const auto rad = b.radical();
  EXPECT_EQ(rad.size(), 2u);
  const auto q = quotient_by_radical(b, rad);
  EXPECT_EQ(q.presentation.quotient().size(), 2u);
  EXPECT_EQ(q.bicharacter.table(0, 0), m1);
  // Values agree on lifts.
  const auto& g = b.group();
  for (std::size_t x = 0; x < g.size(); ++x)
    for (std::size_t y = 0; y < g.size(); ++y)
      EXPECT_EQ(q.bicharacter.eval(q.presentation.project(g.element(x)), q.presentation.project(g.element(y))).code(),
                b.eval_index(x, y));
  EXPECT_THROW(quotient_by_radical(b, Subgroup::generate(g, {})), ParameterError);
  EXPECT_THROW(quotient_by_radical(b, Subgroup::generate(g, {g.make({1, 0})})), ParameterError);
}

TEST(Bicharacter, RandomAlternatingAreValid) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto f = Field::make(p, 2);
    for (int i = 0; i < 30; ++i) {
      const auto g = gen::random_group(64);
      const auto b = random_alternating_bicharacter(g, f, gen::rng());
      EXPECT_TRUE(b.validate().valid()) << g.to_string();
      EXPECT_TRUE(b.is_alternating());
    }
  }
}

TEST(Bicharacter, CharacterSums) {
  // sum_g beta(g, a) is |G| on the radical and 0 off it.
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto f = Field::make(p, 2);
    for (int i = 0; i < 20; ++i) {
      const auto g = gen::random_group(100);
      const auto b = random_alternating_bicharacter(g, f, gen::rng());
      const auto rad = b.radical();
      const auto order = FieldElement::from_int(f, static_cast<std::int64_t>(g.size()));
      for (const auto& a : g.elements())
        EXPECT_EQ(character_sum(b, a), rad.contains(a) ? order : FieldElement(f, 0));
    }
  }
}

TEST(Bicharacter, SignRootConstruction) {
  const auto b = sign_root_bicharacter(5, 3);
  EXPECT_EQ(b.group().to_string(), "Z_6 x Z_6");
  EXPECT_EQ(b.field()->size(), 25u);
  EXPECT_TRUE(b.validate().valid());
  EXPECT_TRUE(check_minimal(b).minimal);
  EXPECT_FALSE(b.is_alternating());
  EXPECT_THROW(sign_root_bicharacter(3, 3), ParameterError);
  EXPECT_THROW(sign_root_bicharacter(5, 4), ParameterError);
}
