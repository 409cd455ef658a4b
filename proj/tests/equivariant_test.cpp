#include <gtest/gtest.h>

#include "sqmirror/equivariant.hpp"

using namespace sqmirror;

namespace {

const std::vector<std::pair<int, ExponentTuple>> kCases{
    {2, {}}, {3, {2}}, {5, {5}}, {5, {3, -1}}, {5, {-2}}, {4, {2}}};

FixedPointFamily constant_family(std::size_t n, int d_max, const HSeries& s) {
    return FixedPointFamily(n, s.truncated(d_max));
}

}  // namespace

TEST(FixedPointY, TwoPointExample) {
    Rational a1(3), a2(-5);
    auto y = y_equivariant(FixedPointFrame{{a1, a2}, 0}, {}, 2);
    EXPECT_EQ(y[0], HRational(1));
    EXPECT_EQ(y[1], HRational::from_roots(1, {}, {0, a2 - a1}));
}

TEST(FixedPointY, PoleOrderAtZeroBounded) {
    for (const auto& [n, a] : kCases)
        for (const auto& alpha : random_frames(n, 4, 2, 5))
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                auto y = y_equivariant(FixedPointFrame{alpha, i}, a, 4);
                for (int d = 0; d <= 4; ++d) EXPECT_LE(y[d].pole_order_at(0), d) << n << " " << a.str();
            }
}

TEST(RecursionCoefficient, Examples) {
    Rational a1(2), a2(7);
    EXPECT_EQ(recursion_coefficient({a1, a2}, {}, 0, 1, 1), Rational(1) / (a2 - a1));
    EXPECT_EQ(recursion_coefficient({a1, a2}, {2}, 0, 1, 1), Rational(2) * a2 * (a1 + a2) / (a2 - a1));
    EXPECT_EQ(recursion_coefficient({3, -3, 5}, {-1}, 0, 1, 2), Rational(0));
}

TEST(RecursionCoefficient, MatchesEdgeEulerRoute) {
    std::vector<ExponentTuple> tuples{{}, {1}, {2}, {5}, {3, -1}, {-2}, {1, 1}};
    for (int n = 2; n <= 5; ++n)
        for (const auto& alpha : random_frames(n, 4, 2, 11))
            for (const auto& a : tuples)
                for (std::size_t i = 0; i < alpha.size(); ++i)
                    for (std::size_t j = 0; j < alpha.size(); ++j) {
                        if (i == j) continue;
                        for (int d = 1; d <= 4; ++d)
                            EXPECT_EQ(recursion_coefficient(alpha, a, i, j, d), edge_coefficient_via_euler(alpha, a, i, j, d))
                                << frame_text(alpha) << " " << a.str() << " " << i << j << d;
                    }
}

TEST(Recursivity, TwoPointRemainders) {
    Weights alpha{3, -5};
    auto fam = y_family(alpha, {}, 2);
    auto r0 = check_recursivity(alpha, fam, {}, 0);
    EXPECT_TRUE(r0.pass);
    EXPECT_EQ(r0.remainders[0], HRational(1));
    auto r1 = check_recursivity(alpha, fam, {}, 1);
    EXPECT_TRUE(r1.pass);
    EXPECT_EQ(r1.remainders[0], HRational::h_power(-1) * HRational(Rational(-1) / (alpha[1] - alpha[0])));
}

TEST(Recursivity, HoldsForCases) {
    for (const auto& [n, a] : kCases)
        for (const auto& alpha : random_frames(n, 4, 2, 3)) {
            auto fam = y_family(alpha, a, 4);
            for (int d = 0; d <= 4; ++d) {
                auto r = check_recursivity(alpha, fam, a, d);
                EXPECT_TRUE(r.pass) << r.witness.value_or("");
            }
        }
}

TEST(Recursivity, DetectsACorruptedPole) {
    Weights alpha{3, -5, 8};
    auto fam = y_family(alpha, {2}, 3);
    fam[1].set(2, fam[1][2] + HRational::from_roots(1, {}, {Rational(1, 7)}));
    auto r = check_recursivity(alpha, fam, {2}, 2);
    EXPECT_FALSE(r.pass);
}

TEST(SecondaryCoefficients, Examples) {
    Rational a1(3), a2(-5);
    auto data = secondary_coefficients_y({a1, a2}, {}, 2);
    EXPECT_EQ(data.secondary_at(0, -1, 1), Rational(1) / (a1 - a2));
    auto q = secondary_coefficients_y(random_frames(5, 2, 1, 9)[0], {5}, 2);
    EXPECT_EQ(q.secondary_at(0, 0, 1), Rational(120));
    auto low = secondary_coefficients_y(random_frames(4, 3, 1, 9)[0], {2}, 3);
    for (std::size_t i = 0; i < 4; ++i)
        for (int d = 1; d <= 3; ++d) EXPECT_TRUE(low.secondary_at(i, 0, d).is_zero());
}

TEST(SecondaryCoefficients, MatchRecursivityRemainders) {
    for (const auto& [n, a] : kCases) {
        auto alpha = random_frames(n, 4, 1, 21)[0];
        auto fam = y_family(alpha, a, 4);
        auto data = secondary_coefficients_y(alpha, a, 4);
        for (int d = 0; d <= 4; ++d) {
            auto r = check_recursivity(alpha, fam, a, d);
            for (std::size_t i = 0; i < alpha.size(); ++i)
                EXPECT_EQ(r.remainders[i], data.laurent_part(i, d)) << n << " " << a.str() << " d=" << d;
        }
    }
}

TEST(Polynomiality, ConstantTermVanishesForTwoPoints) {
    Weights alpha{3, -5};
    auto phi = phi_series(alpha, {}, y_family(alpha, {}, 2), 2, 2);
    EXPECT_TRUE(phi.coefficient({0, 0}).is_zero());
    EXPECT_TRUE(check_polynomiality(phi).pass);
}

TEST(Polynomiality, TrivialFamilyIsPolynomial) {
    Weights alpha{3, -5, 2};
    auto phi = phi_series(alpha, {2}, constant_family(3, 3, HSeries::univariate(3).one()), 3, 3);
    for (const auto& [e, c] : phi.coeffs()) {
        EXPECT_TRUE(c.is_polynomial());
        EXPECT_EQ(c.numerator().degree(), 0);
    }
    EXPECT_TRUE(check_polynomiality(phi).pass);
}

TEST(Polynomiality, HoldsForY) {
    for (const auto& [n, a] : kCases)
        for (const auto& alpha : random_frames(n, 4, 2, 4)) {
            auto v = check_polynomiality(phi_series(alpha, a, y_family(alpha, a, 4), 4, 3));
            EXPECT_TRUE(v.pass) << n << " " << a.str() << " " << v.witness.value_or("");
        }
}

TEST(Polynomiality, NegativeControl) {
    Weights alpha{4};
    auto f = HSeries::univariate(2);
    f.set(0, HRational(1));
    f.set(1, HRational::h_power(-1));
    auto phi = phi_series(alpha, {}, {f}, 2, 2);
    auto expected_q2 = HRational::h_power(-2) * HRational(-1);
    EXPECT_EQ(phi.coefficient({2, 0}), expected_q2);
    auto v = check_polynomiality(phi);
    EXPECT_EQ(v.pass, expected_q2.is_polynomial());
    EXPECT_FALSE(v.pass);
}

TEST(Reconstruction, EmptyTupleReproducesY) {
    Weights alpha{3, -5};
    auto z = reconstruct_z(alpha, {}, 3, default_hurwitz_provider(alpha, {}, 3));
    auto y = y_family(alpha, {}, 3);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(z[i], y[i]);
}

TEST(Reconstruction, MissingOrFailingHurwitzData) {
    Weights alpha{3, -5};
    EXPECT_THROW(reconstruct_z(alpha, {}, 2, {}), dependency_error);
    HurwitzProvider broken = [](std::size_t, int, int) -> QSeries { throw dependency_error("unavailable"); };
    EXPECT_THROW(reconstruct_z(alpha, {}, 2, broken), dependency_error);
}

TEST(MirrorIdentity, HoldsAtSeveralFrames) {
    std::vector<std::pair<int, ExponentTuple>> cases{{5, {5}}, {4, {2}}, {5, {3, -1}}, {2, {}}};
    for (const auto& [n, a] : cases)
        for (const auto& alpha : random_frames(n, 3, 3, 8)) {
            auto v = check_mirror_identity(alpha, a, 3);
            EXPECT_TRUE(v.pass) << n << " " << a.str() << " " << frame_text(alpha) << " " << v.witness.value_or("");
        }
}

TEST(MirrorIdentity, FailsWithWrongHurwitzData) {
    auto alpha = random_frames(5, 3, 1, 8)[0];
    auto good = default_hurwitz_provider(alpha, {5}, 3);
    HurwitzProvider doubled = [good](std::size_t i, int b1, int b2) { return good(i, b1, b2).scaled(Rational(2)); };
    EXPECT_FALSE(check_mirror_identity(alpha, {5}, 3, doubled).pass);
}

TEST(MirrorIdentity, OutsideDomain) {
    EXPECT_THROW(check_mirror_identity({1, 2}, {3}, 2), theorem_domain_error);
}

TEST(Regularity, HoldsForCases) {
    for (const auto& [n, a] : kCases) {
        if (a.stats().abs_sum > n) continue;
        auto alpha = random_frames(n, 4, 1, 12)[0];
        auto v = check_regularity(alpha, a, 4);
        EXPECT_TRUE(v.pass) << n << " " << a.str() << " " << v.witness.value_or("");
    }
}

TEST(FormalLimit, MatchesNonEquivariantY) {
    for (const auto& [n, a] : kCases) EXPECT_EQ(y_formal_limit(n, a, 4, 6), y_series(n, a, 4, 6)) << n << " " << a.str();
}

TEST(Frames, Validation) {
    EXPECT_THROW(validate_frame({1, 1, 3}, 2), frame_error);
    EXPECT_THROW(validate_frame({0, 1}, 2), frame_error);
    EXPECT_THROW(validate_frame({1, 2, 3}, 2), frame_error);
    EXPECT_THROW(y_family({1, 2, 3}, {}, 2), frame_error);
    EXPECT_NO_THROW(validate_frame({3, -5}, 4));
    EXPECT_EQ(random_frames(5, 4, 3, 42), random_frames(5, 4, 3, 42));
    for (const auto& f : random_frames(5, 4, 10, 7)) EXPECT_TRUE(frame_is_valid(f, 4));
}
