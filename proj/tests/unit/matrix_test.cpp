#include <gtest/gtest.h>

#include <sstream>

#include "regdec/cocycle.hpp"
#include "regdec/error.hpp"
#include "regdec/kernels.hpp"
#include "regdec/matrix.hpp"
#include "support.hpp"

using namespace regdec;

namespace {

SquareMatrix ints(const FieldRef& f, std::size_t n, std::vector<int> v) {
  std::vector<Field::Code> c;
  for (int x : v) c.push_back(f->from_int(x));
  return {f, n, c};
}

SquareMatrix random_matrix(const FieldRef& f, std::size_t n) { return {f, n, gen::random_codes(*f, n * n)}; }

}  // namespace

TEST(Matrix, GrassmannAndNonminimalExamples) {
  const auto f = Field::make(3, 1);
  const auto m1 = f->from_int(-1);
  const auto e = decomposition_matrix(Bicharacter(FinAbGroup({2}), f, {m1}));
  EXPECT_EQ(e.matrix, ints(f, 2, {1, 1, 1, -1}));
  EXPECT_EQ(determinant(e.matrix), FieldElement::from_int(f, -2));

  const auto nm = decomposition_matrix(Bicharacter(FinAbGroup({2, 2}), f, {m1, m1, m1, m1}));
  EXPECT_EQ(nm.matrix, ints(f, 4, {1, 1, 1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, 1, 1, 1}));
  EXPECT_TRUE(determinant(nm.matrix).is_zero());
  EXPECT_TRUE(determinant(SquareMatrix::identity(f, 7)).is_one());
}

TEST(Matrix, EliminationMatchesPermutationExpansion) {
  for (auto [p, k] : {std::pair{3u, 1u}, {5u, 2u}, {7u, 1u}}) {
    const auto f = Field::make(p, k);
    for (std::size_t n = 1; n <= 6; ++n)
      for (int i = 0; i < 30; ++i) {
        const auto m = random_matrix(f, n);
        const auto d = FieldElement(f, kernels::serial::determinant(*f, m.codes(), n));
        EXPECT_EQ(d, determinant_by_permutations(m));
      }
  }
}

TEST(Matrix, RowPermutationChangesOnlySign) {
  const auto f = Field::make(7, 1);
  for (int i = 0; i < 20; ++i) {
    const auto m = random_matrix(f, 6);
    std::vector<std::size_t> perm{3, 1, 4, 0, 5, 2};
    const auto d = determinant(m), dp = determinant(m.permute_rows(perm));
    EXPECT_TRUE(dp == d || dp == -d);
  }
}

TEST(Matrix, KroneckerDeterminant) {
  const auto f = Field::make(5, 2);
  for (std::size_t ma = 1; ma <= 4; ++ma)
    for (std::size_t mb = 1; mb <= 4; ++mb) {
      const auto a = random_matrix(f, ma), b = random_matrix(f, mb);
      const auto lhs = determinant(kron(a, b));
      const auto rhs = determinant(a).pow(static_cast<std::int64_t>(mb)) * determinant(b).pow(static_cast<std::int64_t>(ma));
      EXPECT_EQ(lhs, rhs);
    }
}

TEST(Matrix, FactorizationOfD) {
  for (std::uint32_t n : {1u, 2u, 3u, 4u, 6u}) {
    const auto [f, xi] = n == 1 ? std::pair{Field::make(5, 1), FieldElement(Field::make(5, 1), 1)} : root_of_unity(5, n);
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto d = build_D(xi.pow(i), n);
      EXPECT_EQ(d, commutation_matrix(xi.pow(i), n));
    }
  }
  const auto f = Field::make(5, 1);
  EXPECT_THROW(build_D(FieldElement(f, 2), 2), ParameterError);  // 2^2 = 4
  EXPECT_EQ(build_D(FieldElement(f, 1), 1), SquareMatrix::identity(f, 1));
}

TEST(Matrix, VandermondeDeterminant) {
  const auto f = Field::make(7, 1);
  std::vector<FieldElement> nodes{FieldElement(f, 1), FieldElement(f, 3), FieldElement(f, 4), FieldElement(f, 6)};
  auto expect = FieldElement(f, 1);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j) expect = expect * (nodes[j] - nodes[i]);
  EXPECT_EQ(determinant(vandermonde(nodes)), expect);
}

TEST(Matrix, SquareIdentityForMinimalCocycleMatrices) {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const auto f = Field::make(p, 2);
    int minimal_seen = 0;
    for (int i = 0; i < 60; ++i) {
      // Random alternating bicharacters are almost never minimal, so mix in
      // the Z_n x Z_n family where xi of order n gives a trivial radical.
      const auto beta = [&] {
        if (i % 2) return random_alternating_bicharacter(gen::random_group(64), f, gen::rng());
        const std::uint32_t n = 2u << (static_cast<std::uint32_t>(i / 2) % 3);  // 2, 4, 8 all divide p^2 - 1
        const auto xi = element_of_order(f, n);
        const FieldElement one(f, 1);
        return znxzn_bicharacter(n, one, one, xi.pow(i / 6));
      }();
      const auto& g = beta.group();
      ASSERT_TRUE(induced_bicharacter(scheunert_cocycle(beta)) == beta);
      const auto m = decomposition_matrix(beta);
      const bool minimal = beta.radical().is_trivial();
      const bool divides = g.size() % p == 0;
      minimal_seen += minimal;
      // M^2 = |G| I exactly when the radical is trivial or p | |G|.
      EXPECT_EQ(square_identity(m), minimal || divides);
      // Repeated columns force det = 0; otherwise det^2 = |G|^|G|.
      EXPECT_EQ(determinant(m.matrix).is_zero(), !minimal || divides);
    }
    EXPECT_GT(minimal_seen, 0);
  }
}

TEST(Matrix, SquareIdentityGrassmann) {
  const auto f = Field::make(5, 1);
  const auto m = decomposition_matrix(Bicharacter(FinAbGroup({2}), f, {f->from_int(-1)}));
  EXPECT_EQ(m.matrix * m.matrix, SquareMatrix::scalar(FieldElement(f, 2), 2));
}

TEST(Matrix, PauliGenerators) {
  for (std::uint32_t n : {2u, 3u, 4u}) {
    const auto [f, xi] = root_of_unity(5, n);
    const auto g = pauli_generators(n, xi);
    EXPECT_EQ(g.x * g.y, (g.y * g.x).scaled(xi));
    EXPECT_EQ(g.x.pow(n), SquareMatrix::identity(f, n));
    EXPECT_EQ(g.y.pow(n), SquareMatrix::identity(f, n));
    // (X^i Y^j)(X^k Y^l) = xi^{il - jk} (X^k Y^l)(X^i Y^j).
    for (int t = 0; t < 30; ++t) {
      std::uniform_int_distribution<std::int64_t> d(0, n - 1);
      const auto i = d(gen::rng()), j = d(gen::rng()), k = d(gen::rng()), l = d(gen::rng());
      const auto u = g.x.pow(static_cast<std::uint64_t>(i)) * g.y.pow(static_cast<std::uint64_t>(j));
      const auto w = g.x.pow(static_cast<std::uint64_t>(k)) * g.y.pow(static_cast<std::uint64_t>(l));
      EXPECT_EQ(u * w, (w * u).scaled(xi.pow(i * l - j * k)));
    }
  }
  const auto f = Field::make(5, 1);
  const auto m1 = FieldElement::from_int(f, -1);
  const auto g2 = pauli_generators(2, m1);
  EXPECT_EQ(g2.x, ints(f, 2, {-1, 0, 0, 1}));
  EXPECT_EQ(g2.y, ints(f, 2, {0, 1, 1, 0}));
  EXPECT_THROW(pauli_generators(4, m1), ParameterError);
}

TEST(Matrix, DecompositionVersusD) {
  // e = f = 1 makes M^A and D the same matrix.
  for (std::uint32_t n : {2u, 3u, 4u}) {
    const auto [f, xi] = root_of_unity(5, n);
    const FieldElement one(f, 1);
    EXPECT_TRUE(decomposition_vs_d(n, one, one, xi).equal);
  }
  // n = 2, e = -1, f = 1, xi = 1 over GF(5): both determinants vanish.
  const auto f5 = Field::make(5, 1);
  const auto c = decomposition_vs_d(2, FieldElement::from_int(f5, -1), FieldElement(f5, 1), FieldElement(f5, 1));
  EXPECT_TRUE(c.equal);
  // n = 2, e = f = -1, xi = -1: det M = 0 but det D = -16.
  const auto m1 = FieldElement::from_int(f5, -1);
  const auto bad = decomposition_vs_d(2, m1, m1, m1);
  EXPECT_TRUE(bad.det_decomposition.is_zero());
  EXPECT_EQ(bad.det_d, FieldElement::from_int(f5, -16));
  EXPECT_FALSE(bad.equal);
}

TEST(Matrix, DetDReport) {
  for (std::uint32_t n : {2u, 3u, 4u, 6u}) {
    const auto [f, zeta] = root_of_unity(5, n);
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto r = det_d_report(n, zeta.pow(i));
      EXPECT_TRUE(r.oracle_agrees_up_to_sign);
      EXPECT_EQ(r.degenerate, r.xi_order != n);
      if (r.degenerate) EXPECT_TRUE(r.det_d.is_zero());
    }
  }
  const auto f = Field::make(5, 1);
  const auto one = det_d_report(1, FieldElement(f, 1));
  EXPECT_TRUE(one.det_d.is_one());
  EXPECT_TRUE(one.printed.is_one());
  // n = 2, xi = -1: det D = -16, printed form gives xi^{-1} * 2 = -2.
  const auto two = det_d_report(2, FieldElement::from_int(f, -1));
  EXPECT_EQ(two.det_d, FieldElement::from_int(f, -16));
  EXPECT_EQ(two.printed, FieldElement::from_int(f, -2));
  EXPECT_FALSE(two.printed_agrees_up_to_sign);
}

TEST(Matrix, CsvDump) {
  const auto f = Field::make(3, 1);
  const auto m = decomposition_matrix(Bicharacter(FinAbGroup({2}), f, {f->from_int(-1)}));
  std::ostringstream os;
  write_csv(os, m);
  EXPECT_EQ(os.str(),
            "\"beta\",\"(0)\",\"(1)\"\n"
            "\"(0)\",\"coeffs=[1] mod (0,1) over GF(3)\",\"coeffs=[1] mod (0,1) over GF(3)\"\n"
            "\"(1)\",\"coeffs=[1] mod (0,1) over GF(3)\",\"coeffs=[2] mod (0,1) over GF(3)\"\n");
}

TEST(Matrix, Errors) {
  const auto f = Field::make(3, 1), g = Field::make(5, 1);
  EXPECT_THROW(SquareMatrix(f, 0, {}), ParameterError);
  EXPECT_THROW(SquareMatrix(f, 2, {1, 2, 3}), ParameterError);
  EXPECT_THROW(SquareMatrix::identity(f, 2) * SquareMatrix::identity(g, 2), ParameterError);
  EXPECT_THROW(determinant_by_permutations(SquareMatrix::identity(f, 9)), ParameterError);
}
