#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "serialize.hpp"
#include "series.hpp"
#include "tuple.hpp"

namespace sqmirror {

using QSeries = TruncatedSeries<Rational>;

// Series in q whose coefficients live in Q[x]/(x^n) tensor Q[h, 1/h], with h-exponents
// <= -h_order discarded ("mod h^-h_order"). Coefficient polynomials use variables (x, h).
class XClassSeries {
public:
    XClassSeries(int n, int d_max, int h_order)
        : n_(n), h_order_(h_order), s_(TruncatedSeries<SparsePoly>::univariate(d_max)) {}
    XClassSeries(int n, int h_order, TruncatedSeries<SparsePoly> s) : n_(n), h_order_(h_order), s_(std::move(s)) { normalize(); }

    int n() const { return n_; }
    int h_order() const { return h_order_; }
    int d_max() const { return s_.order(); }
    const TruncatedSeries<SparsePoly>& series() const { return s_; }

    SparsePoly operator[](int d) const { return s_[d]; }
    Rational coefficient(int d, int x_power, int h_power) const { return s_[d].coefficient({x_power, h_power}); }
    void set(int d, const SparsePoly& p) { s_.set(d, reduce(p)); }

    XClassSeries times(const QSeries& f) const { return XClassSeries(n_, h_order_, mul_scalar_series(s_, f)); }
    friend XClassSeries operator*(const XClassSeries& a, const XClassSeries& b) {
        return XClassSeries(std::min(a.n_, b.n_), std::min(a.h_order_, b.h_order_), a.s_ * b.s_);
    }
    friend bool operator==(const XClassSeries& a, const XClassSeries& b) {
        return a.n_ == b.n_ && a.h_order_ == b.h_order_ && a.s_ == b.s_;
    }

    SparsePoly reduce(const SparsePoly& p) const {
        int n = n_, h = h_order_;
        return p.promoted(2).filtered([n, h](const Exponents& e) { return e[0] < n && e[1] > -h; });
    }

private:
    void normalize() {
        TruncatedSeries<SparsePoly> r(s_.vars(), s_.orders());
        for (const auto& [e, c] : s_.coeffs()) r.set(e, reduce(c));
        s_ = std::move(r);
    }

    int n_;
    int h_order_;
    TruncatedSeries<SparsePoly> s_;
};

inline SparsePoly xh(int xp, int hp, const Rational& c = 1) { return SparsePoly::monomial({xp, hp}, c); }

namespace detail {

inline SparsePoly truncate_x(const SparsePoly& p, int n) {
    return p.promoted(2).filtered([n](const Exponents& e) { return e[0] < n; });
}

// Numerator of the q^d coefficient of Y, mod x^n.
inline SparsePoly y_numerator(int n, const ExponentTuple& a, int d) {
    SparsePoly num(1);
    for (int ak : a.entries()) {
        if (ak > 0) {
            for (int r = 1; r <= ak * d; ++r) num = truncate_x(num * (xh(1, 0, ak) + xh(0, 1, r)), n);
        } else {
            for (int r = 0; r <= -ak * d - 1; ++r) num = truncate_x(num * (xh(1, 0, ak) + xh(0, 1, -r)), n);
        }
    }
    return num;
}

// 1 / prod_{r=1}^d (x + r h)^n, mod x^n.
inline SparsePoly y_inverse_denominator(int n, int d) {
    SparsePoly inv(1);
    for (int r = 1; r <= d; ++r) {
        SparsePoly f;
        for (int m = 0; m < n; ++m)
            f += xh(m, -n - m, Rational(negative_binomial(n, m)) * Rational(r).pow(-n - m));
        inv = truncate_x(inv * f, n);
    }
    return inv;
}

}  // namespace detail

inline int default_h_order(int n, int d_max) { return std::max(d_max + 2, n); }

inline XClassSeries y_series(int n, const ExponentTuple& a, int d_max, int h_order) {
    if (n < 1) throw domain_error("n must be positive");
    XClassSeries y(n, d_max, h_order);
    y.set(0, SparsePoly(1));
    for (int d = 1; d <= d_max; ++d)
        y.set(d, detail::y_numerator(n, a, d) * detail::y_inverse_denominator(n, d));
    return y;
}

inline QSeries i_series(int n, const ExponentTuple& a, int d_max) {
    auto st = a.stats();
    auto I = QSeries::univariate(d_max);
    I.set(0, 1);
    if (st.abs_sum - st.l_minus > n) throw domain_error("|a| - l-(a) exceeds n");
    if (st.abs_sum - st.l_minus < n || st.l_minus > 0) return I;
    for (int d = 1; d <= d_max; ++d) {
        Integer num(1);
        for (int ak : a.entries()) num *= factorial(static_cast<long>(ak) * d);
        Integer den(1);
        for (int k = 0; k < n; ++k) den *= factorial(d);
        I.set(d, Rational(num, den));
    }
    return I;
}

inline XClassSeries z_series(int n, const ExponentTuple& a, int d_max, int h_order) {
    if (a.stats().abs_sum > n) throw theorem_domain_error("Z needs |a| <= n");
    return y_series(n, a, d_max, h_order).times(series_invert(i_series(n, a, d_max)));
}

inline QSeries mirror_map_j(int n, const ExponentTuple& a, int d_max) {
    auto st = a.stats();
    if (st.abs_sum > n) throw theorem_domain_error("J needs |a| <= n");
    auto J = QSeries::univariate(d_max);
    if (st.abs_sum == n) {
        auto z = z_series(n, a, d_max, std::max(2, default_h_order(n, d_max)));
        for (int d = 1; d <= d_max; ++d) J.set(d, z.coefficient(d, 1, -1));
    } else if (st.abs_sum == n - 1 && st.l_minus == 0) {
        J.set(1, Rational(st.factorial));
    }
    return J;
}

enum class Flavor { SQ, GW };

inline std::string flavor_name(Flavor f) { return f == Flavor::SQ ? "SQ" : "GW"; }

struct InvariantRecord {
    int n;
    ExponentTuple a;
    Flavor flavor;
    int d;
    int p;
    Rational value;
};

inline json as_json(const InvariantRecord& r) {
    return {{"n", r.n}, {"a", r.a.entries()}, {"flavor", flavor_name(r.flavor)},
            {"d", r.d}, {"p", r.p}, {"value", r.value.str()}};
}

// Caches Y, I, Z, J and Z^GW for one (n, a) up to degree d_max.
class MirrorModel {
public:
    MirrorModel(int n, const ExponentTuple& a, int d_max, std::optional<int> h_order = std::nullopt)
        : n_(n), a_(a), st_(a.stats()), d_max_(d_max), h_order_(h_order.value_or(default_h_order(n, d_max))) {
        if (st_.abs_sum > n) throw theorem_domain_error("invariants need |a| <= n");
    }

    int n() const { return n_; }
    const ExponentTuple& a() const { return a_; }
    int d_max() const { return d_max_; }
    int h_order() const { return h_order_; }

    const XClassSeries& z() const {
        if (!z_) z_ = z_series(n_, a_, d_max_, h_order_);
        return *z_;
    }
    const QSeries& j() const {
        if (!j_) j_ = mirror_map_j(n_, a_, d_max_);
        return *j_;
    }
    // Z^GW as a series in the Gromov-Witten variable Q.
    const XClassSeries& z_gw() const {
        if (!zgw_) zgw_ = compute_z_gw();
        return *zgw_;
    }

    InvariantRecord invariant(Flavor f, int d, int p) const {
        check_range(d, p);
        const auto& s = f == Flavor::SQ ? z() : z_gw();
        Rational v = st_.bracket * s.coefficient(d, p + 1, -(p + 1));
        if (p <= st_.l_minus - 2 && !v.is_zero()) throw std::logic_error("vanishing guard violated");
        return {n_, a_, f, d, p, v};
    }

private:
    void check_range(int d, int p) const {
        if (d < 1 || d > d_max_) throw range_error("degree d out of range 1.." + std::to_string(d_max_));
        if (p < 0 || p > n_ - 2 - st_.ell)
            throw range_error("descendant power p must satisfy 0 <= p <= n-2-l(a) = " + std::to_string(n_ - 2 - st_.ell));
        if (p + 2 > h_order_) throw range_error("h_order too small for p = " + std::to_string(p));
    }

    XClassSeries compute_z_gw() const {
        const auto& zz = z();
        if (st_.abs_sum - st_.l_minus <= n_ - 2) return zz;
        TruncatedSeries<SparsePoly> factor = TruncatedSeries<SparsePoly>::univariate(d_max_);
        if (st_.abs_sum == n_) {
            for (const auto& [e, c] : j().coeffs()) factor.set(e, xh(1, -1, -c));
        } else if (st_.abs_sum == n_ - 1 && st_.l_minus == 0) {
            factor.set(1, xh(0, -1, -Rational(st_.factorial)));
        } else {
            return zz;
        }
        XClassSeries e(n_, h_order_, series_exp(factor));
        auto zq = e * zz;
        if (st_.abs_sum != n_) return zq;
        auto mirror = QSeries::univariate(d_max_);
        mirror.set(1, 1);
        mirror = mirror * series_exp(j());
        auto t = series_reversion(mirror);
        return XClassSeries(n_, h_order_, series_compose(zq.series(), t));
    }

    int n_;
    ExponentTuple a_;
    TupleStats st_;
    int d_max_;
    int h_order_;
    mutable std::optional<XClassSeries> z_;
    mutable std::optional<QSeries> j_;
    mutable std::optional<XClassSeries> zgw_;
};

inline InvariantRecord sq_invariant(int n, const ExponentTuple& a, int d, int p) {
    if (d < 1) throw range_error("degree must be at least 1");
    return MirrorModel(n, a, d).invariant(Flavor::SQ, d, p);
}

inline InvariantRecord gw_invariant(int n, const ExponentTuple& a, int d, int p) {
    if (d < 1) throw range_error("degree must be at least 1");
    return MirrorModel(n, a, d).invariant(Flavor::GW, d, p);
}

struct Table1Row {
    int d;
    Rational gw_tau1;   // GW_d(tau_1(x), 1) / d
    Rational sq_tau0;   // SQ_d(tau_0(x^2), 1)
    Rational sq_tau1;   // SQ_d(tau_1(x), 1) / d
    Rational sq_tau2;   // -SQ_d(tau_2(1), 1) / 2
};

inline std::vector<Table1Row> table1(int d_max = 5) {
    MirrorModel m(5, ExponentTuple{5}, d_max);
    std::vector<Table1Row> rows;
    for (int d = 1; d <= d_max; ++d) {
        rows.push_back({d, m.invariant(Flavor::GW, d, 1).value / Rational(d), m.invariant(Flavor::SQ, d, 0).value,
                        m.invariant(Flavor::SQ, d, 1).value / Rational(d),
                        -m.invariant(Flavor::SQ, d, 2).value / Rational(2)});
    }
    return rows;
}

}  // namespace sqmirror
