#include <random>

#include <gtest/gtest.h>

#include "g2orbits/checks.hpp"
#include "g2orbits/error.hpp"
#include "g2orbits/json_io.hpp"
#include "g2orbits/octonion.hpp"

namespace g2orbits {
namespace {

using Q = Rational;

Octonion e(std::size_t i) { return Octonion::basis(i); }

TEST(OctMul, BasisProducts) {
    std::mt19937_64 rng(1);
    const Octonion x = random_octonion(rng);
    EXPECT_EQ(e(0) * x, x);
    EXPECT_EQ(x * e(0), x);
    EXPECT_EQ(e(4) * e(4), -e(0));
    EXPECT_EQ(e(1) * e(2), e(3));
    EXPECT_EQ(e(2) * e(3), e(1));
    EXPECT_EQ(e(3) * e(1), e(2));
    EXPECT_EQ(e(1) * e(4), e(5));
    EXPECT_EQ(e(2) * e(4), e(6));
    EXPECT_EQ(e(3) * e(4), e(7));
    for (std::size_t i = 1; i < 8; ++i) EXPECT_EQ(e(i) * e(i), -e(0)) << i;
}

TEST(OctMul, NonAssociativityWitness) {
    EXPECT_EQ((e(1) * e(2)) * e(4), e(7));
    EXPECT_EQ(e(1) * (e(2) * e(4)), -e(7));
}

TEST(OctMul, TableIsSignedPermutation) {
    const auto& t = multiplication_table();
    for (std::size_t i = 0; i < 8; ++i) {
        std::vector<bool> seen(8, false);
        for (std::size_t j = 0; j < 8; ++j) {
            EXPECT_FALSE(seen[t[i][j].index]);
            seen[t[i][j].index] = true;
        }
    }
    // e1 e6 = -e7 fixes where Im(m3) lives in the C + C^3 model.
    EXPECT_EQ(e(1) * e(6), -e(7));
}

TEST(Conjugation, Examples) {
    EXPECT_EQ(oct_conj(e(0)), e(0));
    EXPECT_EQ(oct_conj(e(5)), -e(5));
    const Octonion x = Q(3) * e(0) + Q(2) * e(6);
    EXPECT_EQ(oct_conj(x), Q(3) * e(0) - Q(2) * e(6));
}

TEST(Inner, Examples) {
    EXPECT_EQ(inner(e(2), e(2)), Q(1));
    EXPECT_EQ(inner(e(2), e(3)), Q(0));
    EXPECT_EQ(norm(e(0) + e(1)), Q(2));
}

TEST(Inner, PolarizationThroughConjugation) {
    std::mt19937_64 rng(2);
    for (int n = 0; n < 50; ++n) {
        const Octonion x = random_octonion(rng), y = random_octonion(rng);
        const Octonion s = x * oct_conj(y) + y * oct_conj(x);
        EXPECT_EQ(s[0], Q(2) * inner(x, y));
        for (std::size_t k = 1; k < 8; ++k) EXPECT_TRUE(s[k].is_zero());
    }
}

TEST(Gamma, Examples) {
    EXPECT_EQ(gamma(e(1)), e(1));
    EXPECT_EQ(gamma(e(4)), -e(4));
    EXPECT_EQ(gamma1(e(1)), -e(1));
    EXPECT_EQ(gamma1(e(2)), e(2));
    EXPECT_EQ(gamma1(e(3)), -e(3));
    std::mt19937_64 rng(3);
    for (int n = 0; n < 20; ++n) {
        const Octonion x = random_octonion(rng);
        EXPECT_EQ(gamma(gamma(x)), x);
        EXPECT_EQ(gamma1(gamma1(x)), x);
    }
}

TEST(Gamma, AutomorphismsOnBasisPairs) {
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            EXPECT_EQ(gamma(e(i) * e(j)), gamma(e(i)) * gamma(e(j)));
            EXPECT_EQ(gamma1(e(i) * e(j)), gamma1(e(i)) * gamma1(e(j)));
        }
    EXPECT_TRUE(is_algebra_automorphism(gamma_matrix()));
    EXPECT_TRUE(is_algebra_automorphism(gamma1_matrix()));
}

TEST(Gamma1, IsConjugationInTheComplexModel) {
    std::mt19937_64 rng(4);
    for (int n = 0; n < 20; ++n) {
        const Octonion x = random_octonion(rng);
        auto u = to_complex_model(x);
        u.a = u.a.conj();
        for (auto& m : u.m) m = m.conj();
        EXPECT_EQ(from_complex_model(u), gamma1(x));
    }
}

TEST(Automorphism, RejectsNonAutomorphisms) {
    EXPECT_FALSE(is_algebra_automorphism(Matrix<Q>(8, 8)));
    auto swap12 = Matrix<Q>::identity(8);
    swap12(1, 1) = Q(0);
    swap12(2, 2) = Q(0);
    swap12(1, 2) = Q(1);
    swap12(2, 1) = Q(1);
    EXPECT_FALSE(is_algebra_automorphism(swap12));
    EXPECT_FALSE(is_algebra_automorphism(Matrix<Q>::identity(7)));
}

TEST(ComplexModel, Identification) {
    const auto u0 = to_complex_model(e(0));
    EXPECT_EQ(u0.a, GaussianRational(1));
    for (const auto& m : u0.m) EXPECT_TRUE(m.is_zero());
    const auto u2 = to_complex_model(e(2));
    EXPECT_TRUE(u2.a.is_zero());
    EXPECT_EQ(u2.m[0], GaussianRational(1));
    EXPECT_TRUE(u2.m[1].is_zero());
    // e1 e6 = -e7 is i * m3 with m3 = 1
    EXPECT_EQ(to_complex_model(-e(7)).m[2], GaussianRational::i());
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(from_complex_model(to_complex_model(e(i))), e(i));
}

TEST(ComplexModel, LeftComplexAction) {
    // (p + q e1) x agrees with the complex scalar acting on each slot.
    std::mt19937_64 rng(5);
    for (int n = 0; n < 20; ++n) {
        const Octonion x = random_octonion(rng);
        const Octonion z = Q(2) * e(0) + Q(-3, 2) * e(1);
        const GaussianRational zc(Q(2), Q(-3, 2));
        auto u = to_complex_model(x);
        u.a = zc * u.a;
        for (auto& m : u.m) m = zc * m;
        EXPECT_EQ(from_complex_model(u), z * x);
    }
}

TEST(ComplexModel, ProductExamples) {
    ComplexModelElement unit{GaussianRational(1), {}};
    std::mt19937_64 rng(6);
    const auto v = to_complex_model(random_octonion(rng));
    EXPECT_EQ(cx_mul(unit, v), v);

    ComplexModelElement m1{{}, {{GaussianRational(1), {}, {}}}};
    const auto sq = cx_mul(m1, m1);
    EXPECT_EQ(sq.a, GaussianRational(-1));
    for (const auto& m : sq.m) EXPECT_TRUE(m.is_zero());

    ComplexModelElement m2{{}, {{{}, GaussianRational(1), {}}}};
    const auto p = cx_mul(m1, m2);
    EXPECT_TRUE(p.a.is_zero());
    // -conj(m x n) with the reversed orientation: m x n = -(0, 0, 1)
    EXPECT_EQ(p.m[2], GaussianRational(1));
    EXPECT_EQ(from_complex_model(p), e(2) * e(4));
}

TEST(ComplexModel, CalibrationIsForcedAmongLiteralSigns) {
    std::size_t agreeing = 0;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1})
                for (int orient : {1, -1}) {
                    const ComplexModelConvention conv{{s1, s2, s3}, orient};
                    const bool ok = models_agree(conv);
                    agreeing += ok;
                    if (conv.component_signs == std::array<int, 3>{1, 1, 1}) EXPECT_EQ(ok, conv == kComplexModel);
                }
    EXPECT_EQ(agreeing, 8u);  // one orientation per sign pattern
    EXPECT_TRUE(models_agree(kComplexModel));
}

TEST(ComplexModel, AgreesOnRandomElements) {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 50; ++n) {
        const Octonion x = random_octonion(rng), y = random_octonion(rng);
        EXPECT_EQ(from_complex_model(cx_mul(to_complex_model(x), to_complex_model(y))), x * y);
    }
}

TEST(CayleyLaws, RandomRationalOctonions) {
    std::mt19937_64 rng(8);
    for (int n = 0; n < 200; ++n) {
        const Octonion x = random_octonion(rng), y = random_octonion(rng);
        EXPECT_EQ(x * (x * y), (x * x) * y);
        EXPECT_EQ((y * x) * x, y * (x * x));
        EXPECT_EQ(norm(x * y), norm(x) * norm(y));
        EXPECT_EQ(oct_conj(x * y), oct_conj(y) * oct_conj(x));
    }
}

TEST(OctonionJson, RoundTripAndErrors) {
    std::mt19937_64 rng(9);
    const Octonion x = random_octonion(rng);
    EXPECT_EQ(octonion_from_json(octonion_to_json(x)), x);
    EXPECT_EQ(octonion_to_json(Q(-3, 2) * e(1)).dump(), R"(["0","-3/2","0","0","0","0","0","0"])");
    EXPECT_EQ(octonion_from_json(Json::parse(R"([1, "2/4", 0, 0, 0, 0, 0, "-7"])"))[1], Q(1, 2));
    EXPECT_THROW(octonion_from_json(Json::parse("[1, 2]")), Error);
    EXPECT_THROW(octonion_from_json(Json::parse(R"(["x",0,0,0,0,0,0,0])")), Error);
    EXPECT_THROW(octonion_from_json(Json::parse(R"([1.5,0,0,0,0,0,0,0])")), Error);
}

}  // namespace
}  // namespace g2orbits
