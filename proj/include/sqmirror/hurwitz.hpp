#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <utility>

#include "frame.hpp"
#include "mirror.hpp"
#include "verdict.hpp"

namespace sqmirror {

// L with L(0) = x solving prod_k (L - alpha_k) - q a^a L^|a| = prod_k (x - alpha_k).
inline QSeries l_series(const Weights& alpha, const Rational& x, const ExponentTuple& a, int d_max) {
    auto st = a.stats();
    Rational rhs(1);
    for (const auto& ak : alpha) rhs *= x - ak;
    auto q = QSeries::univariate(d_max);
    q.set(1, Rational(st.power));
    auto rhs_s = QSeries::constant(rhs, {"q"}, {d_max});
    std::function<QSeries(const QSeries&)> residual = [&](const QSeries& L) {
        auto prod = L.one();
        for (const auto& ak : alpha) prod = prod * (L - QSeries::constant(ak, {"q"}, {d_max}));
        return prod - q * series_power(L, st.abs_sum) - rhs_s;
    };
    try {
        return series_solve_implicit(residual, QSeries::constant(x, {"q"}, {d_max}));
    } catch (const singular_equation& e) {
        throw frame_error(std::string("degenerate frame for L: ") + e.what());
    }
}

inline QSeries l_series(const FixedPointFrame& f, const ExponentTuple& a, int d_max) {
    return l_series(f.alpha, f.alpha_i(), a, d_max);
}

// All weights zero, x formal: L^n - q a^a L^|a| = x^n over Q[x, 1/x].
inline TruncatedSeries<SparsePoly> l_series_formal(int n, const ExponentTuple& a, int d_max) {
    using PS = TruncatedSeries<SparsePoly>;
    auto st = a.stats();
    auto x = SparsePoly::variable(1, 0);
    auto q = PS::univariate(d_max);
    q.set(1, SparsePoly(Rational(st.power)));
    auto xn = PS::constant(SparsePoly::monomial({n}), {"q"}, {d_max});
    std::function<PS(const PS&)> residual = [&](const PS& L) {
        return series_power(L, n) - q * series_power(L, st.abs_sum) - xn;
    };
    return series_solve_implicit(residual, PS::constant(x, {"q"}, {d_max}));
}

// xi_d = L_d / d, xi(0) = 0.
template <class C>
TruncatedSeries<C> xi_from_l(const TruncatedSeries<C>& L) {
    auto xi = TruncatedSeries<C>::univariate(L.order(), L.vars()[0]);
    for (const auto& [e, c] : L.coeffs())
        if (e[0] >= 1) xi.set(e, C(c * Rational(1, e[0])));
    return xi;
}

inline QSeries xi_series(const Weights& alpha, const Rational& x, const ExponentTuple& a, int d_max) {
    return xi_from_l(l_series(alpha, x, a, d_max));
}
inline QSeries xi_series(const FixedPointFrame& f, const ExponentTuple& a, int d_max) {
    return xi_from_l(l_series(f, a, d_max));
}
inline TruncatedSeries<SparsePoly> xi_series_formal(int n, const ExponentTuple& a, int d_max) {
    return xi_from_l(l_series_formal(n, a, d_max));
}

// F^(b1,b2) = C(b1+b2, b1) xi^(b1+b2+1) / (b1+b2+1)!
inline QSeries hurwitz_f(const QSeries& xi, int b1, int b2) {
    if (b1 < 0 || b2 < 0) throw domain_error("negative psi exponent");
    int m = b1 + b2 + 1;
    Rational c = Rational(binomial(b1 + b2, b1)) / Rational(factorial(m));
    return series_power(xi, m).scaled(c);
}

inline QSeries hurwitz_f(const FixedPointFrame& f, const ExponentTuple& a, int b1, int b2, int d_max) {
    return hurwitz_f(xi_series(f, a, d_max), b1, b2);
}

// F^(b1,b2) series at one fixed point, computed on demand.
class HurwitzTable {
public:
    explicit HurwitzTable(QSeries xi) : xi_(std::move(xi)) {}
    HurwitzTable(const FixedPointFrame& f, const ExponentTuple& a, int d_max) : xi_(xi_series(f, a, d_max)) {}

    const QSeries& xi() const { return xi_; }
    const QSeries& f(int b1, int b2) const {
        auto key = std::make_pair(b1, b2);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto s = hurwitz_f(xi_, b1, b2);
        for (const auto& [e, c] : s.coeffs())
            if (e[0] <= b1 + b2) throw std::logic_error("Hurwitz series violates the dimension bound");
        return cache_.emplace(key, std::move(s)).first->second;
    }

private:
    QSeries xi_;
    mutable std::map<std::pair<int, int>, QSeries> cache_;
};

// Rows {b1, b2, F} for b1 + b2 <= b_max.
inline json as_json(const HurwitzTable& t, int b_max) {
    json rows = json::array();
    for (int b1 = 0; b1 <= b_max; ++b1)
        for (int b2 = 0; b1 + b2 <= b_max; ++b2) rows.push_back({{"b1", b1}, {"b2", b2}, {"F", as_json(t.f(b1, b2))}});
    return rows;
}

// Both sides of the two-point generating identity in (u1, u2, q) with u = 1/h:
// 1 + sum (u1^b1 u2^(b2+1) + u1^(b1+1) u2^b2) F^(b1,b2)  and  exp(xi u1 + xi u2).
inline std::pair<QSeries, QSeries> theorem4_lhs_rhs(const QSeries& xi, std::array<int, 3> orders) {
    std::vector<std::string> vars{"u1", "u2", "q"};
    std::vector<int> ord{orders[0], orders[1], orders[2]};
    auto lhs = QSeries::constant(Rational(1), vars, ord);
    HurwitzTable table(xi.truncated(orders[2]));
    for (int b1 = 0; b1 <= orders[0]; ++b1)
        for (int b2 = 0; b2 <= orders[1]; ++b2) {
            if (b1 + b2 + 1 > orders[2]) continue;
            for (const auto& [e, c] : table.f(b1, b2).coeffs()) {
                lhs.add_to({b1, b2 + 1, e[0]}, c);
                lhs.add_to({b1 + 1, b2, e[0]}, c);
            }
        }
    QSeries s(vars, ord);
    for (const auto& [e, c] : xi.coeffs()) {
        s.add_to({1, 0, e[0]}, c);
        s.add_to({0, 1, e[0]}, c);
    }
    return {lhs, series_exp(s)};
}

inline std::pair<QSeries, QSeries> theorem4_lhs_rhs(const FixedPointFrame& f, const ExponentTuple& a, int d_max,
                                                    std::array<int, 2> h_orders) {
    return theorem4_lhs_rhs(xi_series(f, a, d_max), {h_orders[0], h_orders[1], d_max});
}

// psi-class integrals on the weighted space M_{0,2|d}: closed multinomial form.
inline Rational m02d_psi_integral(int d, int a1, int a2, const std::vector<int>& b = {}) {
    if (d < 1 || a1 < 0 || a2 < 0) throw domain_error("need d >= 1 and nonnegative exponents");
    if (static_cast<int>(b.size()) > d) throw domain_error("more light-point exponents than light points");
    for (int v : b) {
        if (v < 0) throw domain_error("negative exponent");
        if (v > 0) return 0;
    }
    if (a1 + a2 != d - 1) return 0;
    return Rational(factorial(d - 1), Integer(factorial(a1) * factorial(a2)));
}

// Same integrals through the recursion that removes one light point at a time.
inline Rational m02d_psi_integral_recursive(int d, int a1, int a2, const std::vector<int>& b = {}) {
    if (d < 1 || a1 < 0 || a2 < 0) throw domain_error("need d >= 1 and nonnegative exponents");
    if (static_cast<int>(b.size()) > d) throw domain_error("more light-point exponents than light points");
    int total = a1 + a2;
    for (int v : b) {
        if (v < 0) throw domain_error("negative exponent");
        total += v;
    }
    if (total != d - 1) return 0;
    if (d == 1) return 1;
    // forget a light point carrying psi-hat^0; unlisted light points carry exponent 0
    std::vector<int> rest = b;
    if (static_cast<int>(rest.size()) == d) {
        auto it = std::find(rest.begin(), rest.end(), 0);
        if (it == rest.end()) return 0;
        rest.erase(it);
    }
    Rational v;
    if (a1 > 0) v += m02d_psi_integral_recursive(d - 1, a1 - 1, a2, rest);
    if (a2 > 0) v += m02d_psi_integral_recursive(d - 1, a1, a2 - 1, rest);
    return v;
}

enum class L0Pairing { mixed, first_only };

// 1 + sum (h1^-a1 h2^-(a2+1) + h1^-(a1+1) h2^-a2) q^d/d! * int psi1^a1 psi2^a2  vs  exp(q/h1 + q/h2),
// d = a1+a2+1. first_only puts both exponents on h1.
inline Verdict l0_identity_check(int d_max, int h_order, L0Pairing pairing = L0Pairing::mixed) {
    Verdict v{"l0", {}, 1, {}, d_max};
    std::vector<std::string> vars{"u1", "u2", "q"};
    std::vector<int> ord{h_order, h_order, d_max};
    auto lhs = QSeries::constant(Rational(1), vars, ord);
    for (int d = 1; d <= d_max; ++d)
        for (int a1 = 0; a1 <= d - 1; ++a1) {
            int a2 = d - 1 - a1;
            Rational c = m02d_psi_integral(d, a1, a2) / Rational(factorial(d));
            if (pairing == L0Pairing::mixed) {
                lhs.add_to({a1, a2 + 1, d}, c);
                lhs.add_to({a1 + 1, a2, d}, c);
            } else {
                lhs.add_to({a1 + a2 + 1, 0, d}, c);
                lhs.add_to({a1 + a2 + 1, 0, d}, c);
            }
        }
    QSeries s(vars, ord);
    s.set({1, 0, 1}, 1);
    s.set({0, 1, 1}, 1);
    auto rhs = series_exp(s);
    for (int d = 0; d <= d_max && v.pass; ++d)
        for (int e1 = 0; e1 <= h_order && v.pass; ++e1)
            for (int e2 = 0; e2 <= h_order; ++e2) {
                auto l = lhs.coefficient({e1, e2, d}), r = rhs.coefficient({e1, e2, d});
                if (l != r) {
                    v.fail("q^" + std::to_string(d) + " h1^-" + std::to_string(e1) + " h2^-" + std::to_string(e2) +
                           ": lhs " + l.str() + " rhs " + r.str());
                    break;
                }
            }
    return v;
}

}  // namespace sqmirror
