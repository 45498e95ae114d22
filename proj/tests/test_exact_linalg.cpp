#include <random>

#include <gtest/gtest.h>

#include "g2orbits/derivations.hpp"
#include "g2orbits/matrix.hpp"
#include "g2orbits/rational.hpp"
#include "oracles.hpp"

namespace g2orbits {
namespace {

using Q = Rational;
using Vec = std::vector<Q>;

Matrix<Q> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> num(-3, 3), den(1, 3), zero(0, 2);
    Matrix<Q> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) == 0 ? Q(0) : Q(num(rng), den(rng));
    return m;
}

TEST(Rational, CanonicalForm) {
    const Q x(6, -4);
    EXPECT_EQ(x.numerator(), -3);
    EXPECT_EQ(x.denominator(), 2);
    EXPECT_EQ(Q(0, 7).denominator(), 1);
    EXPECT_EQ(Q(0, -7).to_string(), "0");
    EXPECT_THROW(Q(1, 0), std::domain_error);
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Q::parse("-3/2"), Q(-3, 2));
    EXPECT_EQ(Q::parse("+4/8"), Q(1, 2));
    EXPECT_EQ(Q::parse("7"), Q(7));
    EXPECT_EQ(Q(-3, 2).to_string(), "-3/2");
    EXPECT_EQ(Q(5).to_string(), "5");
    for (const char* bad : {"", "/", "1/", "/2", "1/0", "1.5", "a", "1/-2", "--1", "1/2/3"})
        EXPECT_THROW(Q::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, ArbitraryPrecision) {
    Q big(1);
    for (int i = 0; i < 40; ++i) big *= Q(1000003);
    EXPECT_EQ((big + Q(1)) - big, Q(1));
    EXPECT_EQ(big / big, Q(1));
    EXPECT_THROW(Q(1) / Q(0), std::domain_error);
}

TEST(GaussianRational, FieldOperations) {
    const GaussianRational a(Q(1), Q(2)), b(Q(3, 2), Q(-1));
    EXPECT_EQ(a * b, GaussianRational(Q(7, 2), Q(2)));
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(GaussianRational::i() * GaussianRational::i(), GaussianRational(-1));
    EXPECT_EQ(a.conj(), GaussianRational(Q(1), Q(-2)));
    EXPECT_EQ(a.norm(), Q(5));
    EXPECT_THROW(a / GaussianRational(), std::domain_error);
}

TEST(Rank, SmallExamples) {
    EXPECT_EQ(rank(Matrix<Q>::identity(2)), 2u);
    EXPECT_EQ(rank(Matrix<Q>{{1, 1}, {1, 1}}), 1u);
    EXPECT_EQ(rank(Matrix<Q>(3, 4)), 0u);
}

TEST(Rank, LeibnizSystemMatchesModularOracle) {
    const auto sys = leibniz_system();
    ASSERT_EQ(sys.rows(), 512u);
    ASSERT_EQ(sys.cols(), 64u);
    const std::size_t oracle_rank = oracle::rank_mod_p(oracle::leibniz_rows_mod_p());
    EXPECT_EQ(oracle_rank, 50u);
    EXPECT_EQ(rank(sys), 50u);
}

TEST(KernelBasis, SmallExamples) {
    EXPECT_TRUE(kernel_basis(Matrix<Q>::identity(3)).empty());
    const auto k = kernel_basis(Matrix<Q>{{1, 1}});
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (Vec{1, -1}));
}

TEST(KernelBasis, CanonicalEchelonShape) {
    // x + 2y + 3z + 4w = 0: null space of dimension 3
    const auto k = kernel_basis(Matrix<Q>{{0, 1, 2, 3}, {0, 2, 4, 6}});
    ASSERT_EQ(k.size(), 3u);
    std::size_t prev_lead = 0;
    for (std::size_t b = 0; b < k.size(); ++b) {
        std::size_t lead = 0;
        while (k[b][lead].is_zero()) ++lead;
        EXPECT_EQ(k[b][lead], Q(1));
        if (b > 0) EXPECT_GT(lead, prev_lead);
        for (std::size_t o = 0; o < k.size(); ++o)
            if (o != b) EXPECT_TRUE(k[o][lead].is_zero());
        prev_lead = lead;
    }
}

TEST(KernelBasis, LeibnizNullity) { EXPECT_EQ(kernel_basis(leibniz_system()).size(), 14u); }

TEST(KernelBasis, GaussianScalars) {
    // [[1, i]] has kernel spanned by (1, i) after scaling: x + i y = 0 -> (-i, 1) -> leading 1: (1, i)
    const GaussianRational i = GaussianRational::i();
    const auto k = kernel_basis(Matrix<GaussianRational>{{GaussianRational(1), i}});
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0][0], GaussianRational(1));
    EXPECT_EQ(k[0][1], i);
}

TEST(Solve, Examples) {
    const auto x = solve(Matrix<Q>::identity(3), Vec{1, Q(2, 3), -4});
    ASSERT_TRUE(x);
    EXPECT_EQ(*x, (Vec{1, Q(2, 3), -4}));
    EXPECT_FALSE(solve(Matrix<Q>{{1, 1}, {1, 1}}, Vec{1, 2}));
    const auto d = solve(Matrix<Q>{{2, 0}, {0, 4}}, Vec{1, 1});
    ASSERT_TRUE(d);
    EXPECT_EQ(*d, (Vec{Q(1, 2), Q(1, 4)}));
    EXPECT_THROW(solve(Matrix<Q>::identity(2), Vec{1}), std::invalid_argument);
}

TEST(LinalgProperties, RankNullityAndKernelVectors) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_matrix(rng, dim(rng), dim(rng));
        const auto k = kernel_basis(m);
        EXPECT_EQ(rank(m) + k.size(), m.cols());
        for (const auto& v : k) {
            for (const auto& x : m * v) EXPECT_TRUE(x.is_zero());
        }
        EXPECT_EQ(kernel_basis(m), k);  // deterministic
    }
}

TEST(LinalgProperties, RankInvariantUnderRowOperations) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::uniform_int_distribution<long> scale(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_matrix(rng, dim(rng), dim(rng));
        std::vector<std::size_t> perm(m.rows());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix<Q> p(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Q s(scale(rng) * (rng() % 2 ? 1 : -1), scale(rng));
            for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = s * m(perm[i], j);
        }
        EXPECT_EQ(rank(p), rank(m));
    }
}

TEST(LinalgProperties, SolveReturnsASolutionWhenConsistent) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = random_matrix(rng, dim(rng), dim(rng));
        const auto x0 = random_matrix(rng, m.cols(), 1).entries();
        const auto b = m * x0;
        const auto x = solve(m, b);
        ASSERT_TRUE(x);
        EXPECT_EQ(m * *x, b);
    }
}

}  // namespace
}  // namespace g2orbits
