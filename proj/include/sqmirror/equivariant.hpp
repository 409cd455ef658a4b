#pragma once

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "frame.hpp"
#include "hurwitz.hpp"
#include "mirror.hpp"
#include "verdict.hpp"

namespace sqmirror {

using HSeries = TruncatedSeries<HRational>;
using FixedPointFamily = std::vector<HSeries>;  // one q-series per fixed point

// q^d coefficient of Y at the fixed point i.
inline HRational y_coefficient(const Weights& alpha, const ExponentTuple& a, std::size_t i, int d) {
    if (d == 0) return HRational(1);
    const Rational& ai = alpha.at(i);
    Rational lead(1);
    std::vector<Rational> num, den;
    for (int ak : a.entries()) {
        if (ak > 0) {
            for (int r = 1; r <= ak * d; ++r) {
                lead *= r;
                num.push_back(-Rational(ak) * ai / Rational(r));
            }
        } else {
            lead *= Rational(ak) * ai;
            for (int r = 1; r <= -ak * d - 1; ++r) {
                lead *= -r;
                num.push_back(Rational(ak) * ai / Rational(r));
            }
        }
    }
    for (int r = 1; r <= d; ++r)
        for (const auto& ak : alpha) {
            lead /= Rational(r);
            den.push_back((ak - ai) / Rational(r));
        }
    return HRational::from_roots(lead, std::move(num), den);
}

inline HSeries y_equivariant(const FixedPointFrame& f, const ExponentTuple& a, int d_max) {
    validate_frame(f.alpha, d_max);
    auto s = HSeries::univariate(d_max);
    for (int d = 0; d <= d_max; ++d) s.set(d, y_coefficient(f.alpha, a, f.i, d));
    return s;
}

inline FixedPointFamily y_family(const Weights& alpha, const ExponentTuple& a, int d_max) {
    FixedPointFamily fam;
    for (std::size_t i = 0; i < alpha.size(); ++i) fam.push_back(y_equivariant({alpha, i}, a, d_max));
    return fam;
}

inline Rational evaluation_point(const Weights& alpha, std::size_t i, std::size_t j, int d) {
    return (alpha.at(j) - alpha.at(i)) / Rational(d);
}

// Structure coefficient of the pole of the fixed-point series at i located at (a_j - a_i)/d.
inline Rational recursion_coefficient(const Weights& alpha, const ExponentTuple& a, std::size_t i, std::size_t j, int d) {
    if (i == j || d < 1) throw domain_error("need j != i and d >= 1");
    const Rational& ai = alpha.at(i);
    Rational c = evaluation_point(alpha, i, j, d);
    Rational num(1);
    for (int ak : a.entries()) {
        if (ak > 0)
            for (int r = 1; r <= ak * d; ++r) num *= Rational(ak) * ai + Rational(r) * c;
        else
            for (int r = 0; r <= -ak * d - 1; ++r) num *= Rational(ak) * ai - Rational(r) * c;
    }
    Rational den(d);
    for (int r = 1; r <= d; ++r)
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            if (r == d && k == j) continue;
            Rational f = ai - alpha[k] + Rational(r) * c;
            if (f.is_zero()) throw frame_error("vanishing denominator factor in recursion coefficient");
            den *= f;
        }
    return num / den;
}

// The same coefficient assembled from the Euler classes of the edge: the twisting
// bundle, the normal directions k != i,j and the tangent directions of the edge, and
// the automorphism order d.
inline Rational edge_coefficient_via_euler(const Weights& alpha, const ExponentTuple& a, std::size_t i, std::size_t j,
                                           int d) {
    if (i == j || d < 1) throw domain_error("need j != i and d >= 1");
    const Rational &ai = alpha.at(i), &aj = alpha.at(j);
    Rational D(d);
    // weight of the section r of O(m) along the edge
    auto section = [&](int m, int r) { return (Rational(m * d - r) * ai + Rational(r) * aj) / D; };
    Rational num(1);
    for (int ak : a.entries()) {
        if (ak > 0) {
            for (int r = 1; r <= ak * d; ++r) num *= section(ak, r);
        } else {
            num *= Rational(ak) * ai;
            for (int r = 1; r <= -ak * d - 1; ++r) num *= (Rational(ak * d + r) * ai - Rational(r) * aj) / D;
        }
    }
    Rational normal(1);
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (k == i || k == j) continue;
        for (int r = 1; r <= d; ++r) normal *= section(1, r) - alpha[k];
    }
    Rational tangent(1);
    for (int r = 1; r <= 2 * d; ++r) {
        if (r == d) continue;
        tangent *= Rational(d - r) * (ai - aj) / D;
    }
    Rational den = D * normal * tangent;
    if (den.is_zero()) throw frame_error("vanishing edge Euler class");
    return num / den;
}

struct RecursivityReport {
    bool pass = true;
    std::vector<HRational> remainders;  // per fixed point
    std::optional<std::string> witness;
};

// Subtracts the prescribed pole terms from the q^d_star coefficient at every fixed point.
inline RecursivityReport check_recursivity(const Weights& alpha, const FixedPointFamily& family, const ExponentTuple& a,
                                           int d_star) {
    if (family.size() != alpha.size()) throw dependency_error("need a series for every fixed point");
    RecursivityReport rep;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (family[i].order() < d_star) throw dependency_error("series truncated below d_star");
        HRational rem = family[i][d_star];
        for (int d = 1; d <= d_star; ++d)
            for (std::size_t j = 0; j < alpha.size(); ++j) {
                if (j == i) continue;
                Rational c = evaluation_point(alpha, i, j, d);
                Rational v = recursion_coefficient(alpha, a, i, j, d) * family[j][d_star - d].evaluate(c);
                if (!v.is_zero()) rem -= HRational(UPoly(v)).divided_by_linear(c);
            }
        if (!rem.is_laurent_polynomial() && rep.pass) {
            rep.pass = false;
            rep.witness = "i=" + std::to_string(i + 1) + " d*=" + std::to_string(d_star) + " remainder " + rem.str();
        }
        rep.remainders.push_back(std::move(rem));
    }
    return rep;
}

struct RecursionData {
    std::map<std::tuple<std::size_t, std::size_t, int>, Rational> primary;   // (i, j, d)
    std::map<std::tuple<std::size_t, int, int>, Rational> secondary;         // (i, r, d), zero entries omitted

    Rational secondary_at(std::size_t i, int r, int d) const {
        auto it = secondary.find({i, r, d});
        return it == secondary.end() ? Rational(0) : it->second;
    }
    // sum_r Y_i^r(d) h^r
    HRational laurent_part(std::size_t i, int d) const {
        HRational s;
        for (const auto& [key, v] : secondary)
            if (std::get<0>(key) == i && std::get<2>(key) == d) s += HRational::h_power(std::get<1>(key)) * v;
        return s;
    }
};

inline RecursionData secondary_coefficients_y(const Weights& alpha, const ExponentTuple& a, int d_max) {
    validate_frame(alpha, d_max);
    RecursionData data;
    auto I = i_series(static_cast<int>(alpha.size()), a, d_max);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (int d = 0; d <= d_max; ++d) {
            for (std::size_t j = 0; j < alpha.size(); ++j)
                if (j != i && d >= 1) data.primary[{i, j, d}] = recursion_coefficient(alpha, a, i, j, d);
            if (!I[d].is_zero()) data.secondary[{i, 0, d}] = I[d];
            if (d == 0) continue;
            auto w = laurent_expand(y_coefficient(alpha, a, i, d), -d, -1);
            for (int r = -d; r <= -1; ++r)
                if (!w.at(r).is_zero()) data.secondary[{i, r, d}] = w.at(r);
        }
    return data;
}

inline Rational phi_weight(const Weights& alpha, const ExponentTuple& a, std::size_t i) {
    auto st = a.stats();
    Rational w = st.bracket * alpha[i].pow(st.ell);
    for (std::size_t k = 0; k < alpha.size(); ++k)
        if (k != i) w /= alpha[i] - alpha[k];
    return w;
}

// sum_i <a> a_i^l e^(a_i z) / prod_{k!=i}(a_i - a_k) * F_i(h, q e^(hz)) F_i(-h, q), in (q, z).
inline HSeries phi_series(const Weights& alpha, const ExponentTuple& a, const FixedPointFamily& family, int d_max,
                          int z_max) {
    if (family.size() != alpha.size()) throw dependency_error("need a series for every fixed point");
    HSeries phi({"q", "z"}, {d_max, z_max});
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        auto fi = family[i].truncated(d_max);
        HSeries ez({"q", "z"}, {d_max, z_max});
        Rational w = phi_weight(alpha, a, i);
        for (int m = 0; m <= z_max; ++m) ez.set({0, m}, HRational(w * alpha[i].pow(m) / Rational(factorial(m))));
        HSeries reflected({"q", "z"}, {d_max, z_max});
        for (const auto& [e, c] : fi.coeffs()) reflected.set({e[0], 0}, c.reflected());
        phi += ez * substitute_q_scaled(fi, z_max) * reflected;
    }
    return phi;
}

inline Verdict check_polynomiality(const HSeries& phi) {
    Verdict v{"polynomiality"};
    for (const auto& [e, c] : phi.coeffs())
        if (!c.is_polynomial()) {
            std::string at;
            for (std::size_t k = 0; k < e.size(); ++k) at += phi.vars()[k] + "^" + std::to_string(e[k]) + " ";
            v.fail(at + "coefficient " + c.str());
            break;
        }
    return v;
}

// F^(b1,b2)(a_i, q) for the fixed point i.
using HurwitzProvider = std::function<QSeries(std::size_t i, int b1, int b2)>;

inline HurwitzProvider default_hurwitz_provider(const Weights& alpha, const ExponentTuple& a, int d_max) {
    auto tables = std::make_shared<std::vector<HurwitzTable>>();
    for (std::size_t i = 0; i < alpha.size(); ++i) tables->emplace_back(FixedPointFrame{alpha, i}, a, d_max);
    return [tables](std::size_t i, int b1, int b2) { return tables->at(i).f(b1, b2); };
}

// Builds Z at every fixed point degree by degree: principal part at h = 0 from the Hurwitz
// series and lower-degree h-expansions, poles at (a_j - a_i)/d from the structure coefficients.
inline FixedPointFamily reconstruct_z(const Weights& alpha, const ExponentTuple& a, int d_max,
                                      const HurwitzProvider& hurwitz) {
    validate_frame(alpha, d_max);
    if (!hurwitz) throw dependency_error("no Hurwitz data supplied");
    const std::size_t n = alpha.size();
    FixedPointFamily z(n, HSeries::univariate(d_max));
    std::vector<std::map<std::pair<int, int>, QSeries>> F(n);
    for (std::size_t i = 0; i < n; ++i) {
        z[i].set(0, HRational(1));
        for (int s = 0; s < d_max; ++s)
            for (int b = 0; s + b < d_max; ++b) {
                QSeries f;
                try {
                    f = hurwitz(i, s, b);
                } catch (const dependency_error&) {
                    throw;
                } catch (const std::exception& e) {
                    throw dependency_error(std::string("Hurwitz data unavailable: ") + e.what());
                }
                if (f.order() < d_max) throw dependency_error("Hurwitz series truncated below d_max");
                F[i].emplace(std::make_pair(s, b), std::move(f));
            }
    }
    // expansion[i][e][b] = [h^b] Z_e(a_i)
    std::vector<std::vector<LaurentWindow>> expansion(n);
    for (std::size_t i = 0; i < n; ++i) expansion[i].push_back(laurent_expand(z[i][0], 0, d_max));
    for (int d = 1; d <= d_max; ++d) {
        for (std::size_t i = 0; i < n; ++i) {
            HRational zd;
            for (int s = 0; s <= d - 1; ++s) {
                Rational coeff;
                for (int b = 0; b <= d - 1 - s; ++b) {
                    const QSeries& f = F[i].at({s, b});
                    Rational sign = b % 2 == 0 ? Rational(1) : Rational(-1);
                    for (int d1 = s + b + 1; d1 <= d; ++d1) {
                        Rational fd = f[d1];
                        if (!fd.is_zero()) coeff += sign * fd * expansion[i][static_cast<std::size_t>(d - d1)].at(b);
                    }
                }
                if (!coeff.is_zero()) zd += HRational::h_power(-s - 1) * coeff;
            }
            for (int dp = 1; dp <= d; ++dp)
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == i) continue;
                    Rational c = evaluation_point(alpha, i, j, dp);
                    Rational v = recursion_coefficient(alpha, a, i, j, dp) * z[j][d - dp].evaluate(c);
                    if (!v.is_zero()) zd += HRational(UPoly(v)).divided_by_linear(c);
                }
            z[i].set(d, zd);
        }
        for (std::size_t i = 0; i < n; ++i) expansion[i].push_back(laurent_expand(z[i][d], 0, d_max));
    }
    return z;
}

inline std::string degree_text(std::size_t i, int d) {
    return "i=" + std::to_string(i + 1) + " q^" + std::to_string(d);
}

// Reconstructed Z against Y/I at every fixed point, plus the residue identity
// Res h^r Y = sum_b F^(r,b) (-1)^b Res h^-(b+1) Y for r < d_max.
inline Verdict check_mirror_identity(const Weights& alpha, const ExponentTuple& a, int d_max,
                                     HurwitzProvider hurwitz = {}) {
    const int n = static_cast<int>(alpha.size());
    Verdict v{"mirror", alpha, n, a, d_max};
    if (a.stats().abs_sum > n) throw theorem_domain_error("mirror identity needs |a| <= n");
    if (!hurwitz) hurwitz = default_hurwitz_provider(alpha, a, d_max);
    auto Y = y_family(alpha, a, d_max);
    auto Iinv = series_invert(i_series(n, a, d_max));
    auto Z = reconstruct_z(alpha, a, d_max, hurwitz);
    for (std::size_t i = 0; i < alpha.size() && v.pass; ++i) {
        auto target = mul_scalar_series(Y[i], Iinv);
        for (int d = 0; d <= d_max; ++d)
            if (!(target[d] == Z[i][d])) {
                v.fail(degree_text(i, d) + ": reconstructed " + Z[i][d].str() + " vs Y/I " + target[d].str());
                break;
            }
    }
    for (std::size_t i = 0; i < alpha.size() && v.pass; ++i) {
        std::vector<LaurentWindow> w;
        for (int d = 0; d <= d_max; ++d) w.push_back(laurent_expand(Y[i][d], -d_max, d_max));
        for (int r = 0; r < d_max && v.pass; ++r)
            for (int d = 1; d <= d_max; ++d) {
                Rational lhs = w[static_cast<std::size_t>(d)].at(-r - 1), rhs;
                for (int b = 0; b <= d - 1 - r; ++b) {
                    QSeries f = hurwitz(i, r, b);
                    Rational sign = b % 2 == 0 ? Rational(1) : Rational(-1);
                    for (int d1 = r + b + 1; d1 <= d; ++d1) rhs += sign * f[d1] * w[static_cast<std::size_t>(d - d1)].at(b);
                }
                if (lhs != rhs) {
                    v.fail(degree_text(i, d) + " r=" + std::to_string(r) + ": residue " + lhs.str() + " vs " + rhs.str());
                    break;
                }
            }
    }
    return v;
}

// Coefficients of exp(-xi(a_i, q)/h) * Y(a_i, h, q) must be regular at h = 0.
inline Verdict check_regularity(const Weights& alpha, const ExponentTuple& a, int d_max) {
    Verdict v{"regularity", alpha, static_cast<int>(alpha.size()), a, d_max};
    auto Y = y_family(alpha, a, d_max);
    for (std::size_t i = 0; i < alpha.size() && v.pass; ++i) {
        auto xi = xi_series(FixedPointFrame{alpha, i}, a, d_max);
        HSeries e = HSeries::univariate(d_max);
        auto power = QSeries::constant(Rational(1), {"q"}, {d_max});
        for (int m = 0; m <= d_max; ++m) {
            if (m > 0) power = power * xi;
            Rational c = Rational(m % 2 == 0 ? 1 : -1) / Rational(factorial(m));
            for (const auto& [ex, val] : power.coeffs()) e.add_to(ex, HRational::h_power(-m) * (c * val));
        }
        auto prod = e * Y[i];
        for (int d = 0; d <= d_max; ++d)
            if (!prod[d].regular_at(0)) {
                v.fail(degree_text(i, d) + ": coefficient " + prod[d].str());
                break;
            }
    }
    return v;
}

// Y with all weights set to zero and x formal: every factor is rewritten with u = 1/h as
// h * (linear in 1 and x u), and the denominator is inverted as a series in u over Q[x]/(x^n).
inline XClassSeries y_formal_limit(int n, const ExponentTuple& a, int d_max, int h_order) {
    auto st = a.stats();
    const Weights zero(static_cast<std::size_t>(n), Rational(0));
    auto cut = [n](const SparsePoly& p) { return p.promoted(2).filtered([n](const Exponents& e) { return e[0] < n; }); };
    auto xu = [](const Rational& c) { return SparsePoly::monomial({1, 1}, c); };
    XClassSeries y(n, d_max, h_order);
    y.set(0, SparsePoly(1));
    for (int d = 1; d <= d_max; ++d) {
        SparsePoly num(1), den(1);
        for (int ak : a.entries()) {
            if (ak > 0)
                for (int r = 1; r <= ak * d; ++r) num = cut(num * (SparsePoly(r) + xu(ak)));
            else
                for (int r = 0; r <= -ak * d - 1; ++r) num = cut(num * (SparsePoly(-r) + xu(ak)));
        }
        for (int r = 1; r <= d; ++r)
            for (const auto& ak : zero) den = cut(den * (SparsePoly(r) + xu(1) - SparsePoly::monomial({0, 1}, ak)));
        Rational c0 = den.constant_term();
        SparsePoly w = (den - SparsePoly(c0)) * c0.inverse(), term(1), inv(1);
        for (int k = 1; k < n; ++k) {
            term = cut(term * (-w));
            inv += term;
        }
        SparsePoly ratio = cut(num * inv * c0.inverse());
        int shift = (st.abs_sum - n) * d;
        SparsePoly yd;
        for (const auto& [e, c] : ratio.terms()) yd.add_term({e[0], shift - e[1]}, c);
        y.set(d, yd);
    }
    return y;
}

}  // namespace sqmirror
