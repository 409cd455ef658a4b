#include <gtest/gtest.h>

#include "sqmirror/hurwitz.hpp"

using namespace sqmirror;

namespace {

QSeries q_derivative_times_q(const QSeries& s) {
    auto r = QSeries::univariate(s.order());
    for (const auto& [e, c] : s.coeffs()) r.set(e, c * Rational(e[0]));
    return r;
}

QSeries defining_residual(const Weights& alpha, const Rational& x, const ExponentTuple& a, const QSeries& L) {
    auto st = a.stats();
    auto prod = L.one();
    Rational rhs(1);
    for (const auto& ak : alpha) {
        prod = prod * (L - QSeries::constant(ak, {"q"}, {L.order()}));
        rhs *= x - ak;
    }
    auto q = QSeries::univariate(L.order());
    q.set(1, Rational(st.power));
    return prod - q * series_power(L, st.abs_sum) - QSeries::constant(rhs, {"q"}, {L.order()});
}

}  // namespace

TEST(LSeries, OnePointCases) {
    Rational a1(-7, 3);
    auto L = l_series({a1}, a1, {}, 5);
    EXPECT_EQ(L, QSeries::from_list({a1, 1}, 5));
    auto G = l_series({a1}, a1, {1}, 5);
    EXPECT_EQ(G, QSeries::from_list({a1, a1, a1, a1, a1, a1}, 5));
    EXPECT_TRUE(defining_residual({a1}, a1, {1}, G).is_zero());
}

TEST(LSeries, FormalQuintic) {
    auto L = l_series_formal(5, {5}, 4);
    auto x = SparsePoly::variable(1, 0);
    EXPECT_EQ(L[1], x * Rational(625));
    using PS = TruncatedSeries<SparsePoly>;
    auto one_minus = PS::univariate(4);
    one_minus.set(0, SparsePoly(1));
    one_minus.set(1, SparsePoly(-3125));
    auto lhs = series_power(L, 5) * one_minus;
    EXPECT_EQ(lhs, PS::constant(SparsePoly::monomial({5}), {"q"}, {4}));
    EXPECT_EQ(xi_series_formal(5, {5}, 4)[1], x * Rational(625));
}

TEST(LSeries, DefiningRelationsHoldAtFrames) {
    std::vector<ExponentTuple> tuples{{}, {2}, {5}, {3, -1}, {-2}};
    for (int n : {2, 3, 5}) {
        for (const auto& alpha : random_frames(n, 4, 2, 17))
            for (const auto& a : tuples)
                for (std::size_t i = 0; i < alpha.size(); ++i) {
                    auto L = l_series(alpha, alpha[i], a, 5);
                    EXPECT_TRUE(defining_residual(alpha, alpha[i], a, L).is_zero());
                    auto xi = xi_series(FixedPointFrame{alpha, i}, a, 5);
                    EXPECT_TRUE(xi[0].is_zero());
                    EXPECT_EQ(QSeries::constant(alpha[i], {"q"}, {5}) + q_derivative_times_q(xi), L);
                }
    }
}

TEST(LSeries, GeneralPointOffTheFrame) {
    Weights alpha{2, -5, 7};
    Rational x(1, 3);
    auto L = l_series(alpha, x, {2}, 4);
    EXPECT_TRUE(defining_residual(alpha, x, {2}, L).is_zero());
    EXPECT_EQ(L[0], x);
}

TEST(Xi, Cases) {
    Rational a1(4);
    EXPECT_EQ(xi_series(FixedPointFrame{{a1}, 0}, {}, 4), QSeries::from_list({0, 1}, 4));
    auto xi = xi_series(FixedPointFrame{{a1}, 0}, {1}, 4);
    EXPECT_EQ(xi[2], a1 / Rational(2));
    EXPECT_EQ(xi[3], a1 / Rational(3));
}

TEST(HurwitzF, ClosedForm) {
    auto xi = xi_series(FixedPointFrame{{3, -4, 11}, 1}, {5}, 6);
    EXPECT_EQ(hurwitz_f(xi, 0, 0), xi);
    EXPECT_EQ(hurwitz_f(xi, 1, 1), (xi * xi * xi).scaled(Rational(1, 3)));
    for (int b = 0; b <= 4; ++b)
        EXPECT_EQ(hurwitz_f(xi, b, 0), series_power(xi, b + 1).scaled(Rational(1, factorial(b + 1))));
    HurwitzTable t(xi);
    for (int b1 = 0; b1 <= 3; ++b1)
        for (int b2 = 0; b2 <= 3; ++b2)
            for (int d = 0; d <= std::min(b1 + b2, 6); ++d) EXPECT_TRUE(t.f(b1, b2)[d].is_zero());
}

TEST(HurwitzIdentity, EmptyTupleIsExponential) {
    auto [lhs, rhs] = theorem4_lhs_rhs(FixedPointFrame{{5}, 0}, {}, 4, {3, 3});
    EXPECT_EQ(lhs, rhs);
    QSeries s({"u1", "u2", "q"}, {3, 3, 4});
    s.set({1, 0, 1}, 1);
    s.set({0, 1, 1}, 1);
    EXPECT_EQ(rhs, series_exp(s));
    EXPECT_EQ(lhs.coefficient({0, 0, 0}), Rational(1));
}

TEST(HurwitzIdentity, QuinticAtFrames) {
    for (const auto& alpha : random_frames(5, 4, 3, 1))
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            auto [lhs, rhs] = theorem4_lhs_rhs(FixedPointFrame{alpha, i}, {5}, 4, {3, 3});
            EXPECT_EQ(lhs, rhs);
        }
}

TEST(HurwitzIdentity, DetectsAWrongCoefficient) {
    auto xi = xi_series(FixedPointFrame{{3, -4, 11}, 0}, {2}, 4);
    auto [lhs, rhs] = theorem4_lhs_rhs(xi, {3, 3, 4});
    lhs.add_to({1, 1, 3}, Rational(1, 1000));
    EXPECT_NE(lhs, rhs);
}

TEST(PsiIntegrals, Examples) {
    EXPECT_EQ(m02d_psi_integral(3, 1, 1), Rational(2));
    EXPECT_EQ(m02d_psi_integral(1, 0, 0), Rational(1));
    EXPECT_EQ(m02d_psi_integral(3, 1, 0, {1, 0, 0}), Rational(0));
    EXPECT_EQ(m02d_psi_integral_recursive(4, 2, 1), Rational(3));
    EXPECT_EQ(m02d_psi_integral_recursive(2, 1, 0), Rational(1));
    EXPECT_EQ(m02d_psi_integral_recursive(4, 1, 1), Rational(0));
    EXPECT_THROW(m02d_psi_integral(0, 0, 0), domain_error);
    EXPECT_THROW(m02d_psi_integral(2, 0, 0, {0, 0, 0}), domain_error);
}

TEST(PsiIntegrals, ClosedFormMatchesRecursion) {
    for (int d = 1; d <= 6; ++d)
        for (int a1 = 0; a1 <= d; ++a1)
            for (int a2 = 0; a2 <= d; ++a2) {
                EXPECT_EQ(m02d_psi_integral(d, a1, a2), m02d_psi_integral_recursive(d, a1, a2));
                for (int s = 0; s < d; ++s) {
                    std::vector<int> b(static_cast<std::size_t>(d), 0);
                    b[static_cast<std::size_t>(s)] = 1;
                    EXPECT_EQ(m02d_psi_integral(d, a1, a2, b), m02d_psi_integral_recursive(d, a1, a2, b));
                }
            }
}

TEST(L0Identity, MixedPairingHolds) {
    auto v = l0_identity_check(6, 6);
    EXPECT_TRUE(v.pass) << v.witness.value_or("");
}

TEST(L0Identity, FirstOnlyPairingFailsAtDegreeOne) {
    auto v = l0_identity_check(6, 6, L0Pairing::first_only);
    EXPECT_FALSE(v.pass);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(v.witness->rfind("q^1 ", 0), 0u) << *v.witness;
}

TEST(HurwitzF, JsonRows) {
    HurwitzTable t(xi_series(FixedPointFrame{{2}, 0}, {}, 3));
    auto j = as_json(t, 1);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[0].dump(), R"({"b1":0,"b2":0,"F":{"vars":["q"],"orders":[3],"terms":[{"exp":[1],"coeff":"1"}]}})");
    EXPECT_EQ(j[2]["b1"], 1);
    EXPECT_EQ(j[2]["F"]["terms"][0]["coeff"], "1/2");
}
