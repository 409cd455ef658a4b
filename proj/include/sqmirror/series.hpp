#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hrational.hpp"
#include "sparse_poly.hpp"

namespace sqmirror {

inline Rational invert_coefficient(const Rational& c) { return c.inverse(); }
inline SparsePoly invert_coefficient(const SparsePoly& c) { return c.inverse(); }
inline HRational invert_coefficient(const HRational& c) { return c.inverse(); }

// Multivariate power series truncated per variable: exponent k of variable v is kept
// iff 0 <= k <= order(v). Binary operations require the same variable names and use
// the componentwise minimum order.
template <class C>
class TruncatedSeries {
public:
    using Coeffs = std::map<Exponents, C>;

    TruncatedSeries() : TruncatedSeries({"q"}, {0}) {}
    TruncatedSeries(std::vector<std::string> vars, std::vector<int> orders)
        : vars_(std::move(vars)), orders_(std::move(orders)) {
        if (vars_.size() != orders_.size()) throw ring_mismatch("variable/order count mismatch");
    }
    static TruncatedSeries univariate(int order, std::string var = "q") { return TruncatedSeries({std::move(var)}, {order}); }
    static TruncatedSeries constant(const C& c, std::vector<std::string> vars, std::vector<int> orders) {
        TruncatedSeries s(std::move(vars), std::move(orders));
        s.set(Exponents(s.vars_.size(), 0), c);
        return s;
    }
    // Univariate from a coefficient list starting at degree 0.
    static TruncatedSeries from_list(const std::vector<C>& cs, int order, std::string var = "q") {
        TruncatedSeries s = univariate(order, std::move(var));
        for (std::size_t d = 0; d < cs.size(); ++d) s.set(static_cast<int>(d), cs[d]);
        return s;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<int>& orders() const { return orders_; }
    int order() const { return orders_.at(0); }
    const Coeffs& coeffs() const { return coeffs_; }
    std::size_t nvars() const { return vars_.size(); }
    bool is_zero() const { return coeffs_.empty(); }

    bool within(const Exponents& e) const {
        if (e.size() != orders_.size()) throw ring_mismatch("exponent vector has the wrong length");
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] < 0 || e[k] > orders_[k]) return false;
        return true;
    }

    C coefficient(const Exponents& e) const {
        auto it = coeffs_.find(e);
        return it == coeffs_.end() ? C() : it->second;
    }
    C operator[](int d) const { return coefficient(Exponents{d}); }

    void set(const Exponents& e, const C& c) {
        if (!within(e)) return;
        if (is_zero_c(c)) coeffs_.erase(e);
        else coeffs_[e] = c;
    }
    void set(int d, const C& c) { set(Exponents{d}, c); }
    void add_to(const Exponents& e, const C& c) {
        if (!within(e) || is_zero_c(c)) return;
        auto [it, fresh] = coeffs_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (is_zero_c(it->second)) coeffs_.erase(it);
        }
    }

    TruncatedSeries truncated(std::vector<int> orders) const {
        TruncatedSeries r(vars_, std::move(orders));
        for (const auto& [e, c] : coeffs_) r.set(e, c);
        return r;
    }
    TruncatedSeries truncated(int order) const { return truncated(std::vector<int>{order}); }

    template <class F>
    auto map(F f) const {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        TruncatedSeries<D> r(vars_, orders_);
        for (const auto& [e, c] : coeffs_) r.set(e, f(c));
        return r;
    }

    TruncatedSeries operator-() const { return map([](const C& c) { return C(-c); }); }
    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        *this = combine_frame(o);
        for (const auto& [e, c] : o.coeffs_) add_to(e, c);
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this += -o; }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r = a.combine_frame(b);
        r.coeffs_.clear();
        Exponents e(r.nvars());
        for (const auto& [ea, ca] : a.coeffs_) {
            if (!r.within(ea)) continue;
            for (const auto& [eb, cb] : b.coeffs_) {
                bool ok = true;
                for (std::size_t k = 0; k < e.size() && ok; ++k) {
                    e[k] = ea[k] + eb[k];
                    ok = e[k] <= r.orders_[k];
                }
                if (ok) r.add_to(e, ca * cb);
            }
        }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    template <class S>
    TruncatedSeries scaled(const S& s) const {
        return map([&](const C& c) { return C(c * s); });
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.vars_ == b.vars_ && a.orders_ == b.orders_ && a.coeffs_ == b.coeffs_;
    }

    // Same coefficients wherever both truncations keep them.
    friend bool agree(const TruncatedSeries& a, const TruncatedSeries& b) {
        auto ord = a.combine_frame(b).orders_;
        return a.truncated(ord).coeffs_ == b.truncated(ord).coeffs_;
    }

    C constant_term() const { return coefficient(Exponents(nvars(), 0)); }
    int total_order() const { return std::accumulate(orders_.begin(), orders_.end(), 0); }

    TruncatedSeries one() const { return constant(C(Rational(1)), vars_, orders_); }

private:
    static bool is_zero_c(const C& c) { return ::sqmirror::is_zero(c); }
    TruncatedSeries combine_frame(const TruncatedSeries& o) const {
        if (vars_ != o.vars_) throw ring_mismatch("series over different variables");
        std::vector<int> ord(orders_.size());
        for (std::size_t k = 0; k < ord.size(); ++k) ord[k] = std::min(orders_[k], o.orders_[k]);
        if (ord == orders_) return *this;
        return truncated(ord);
    }

    std::vector<std::string> vars_;
    std::vector<int> orders_;
    Coeffs coeffs_;
};

template <class C>
bool is_zero(const TruncatedSeries<C>& s) { return s.is_zero(); }

template <class C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) { return a * b; }

// Multiplies every coefficient by a scalar series (e.g. C-series times a Q-series).
template <class C>
TruncatedSeries<C> mul_scalar_series(const TruncatedSeries<C>& a, const TruncatedSeries<Rational>& b) {
    if (a.vars() != b.vars()) throw ring_mismatch("series over different variables");
    std::vector<int> ord(a.nvars());
    for (std::size_t k = 0; k < ord.size(); ++k) ord[k] = std::min(a.orders()[k], b.orders()[k]);
    TruncatedSeries<C> r(a.vars(), ord);
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.coeffs())
        for (const auto& [eb, cb] : b.coeffs()) {
            bool ok = true;
            for (std::size_t k = 0; k < e.size() && ok; ++k) {
                e[k] = ea[k] + eb[k];
                ok = e[k] <= ord[k];
            }
            if (ok) r.add_to(e, C(ca * cb));
        }
    return r;
}

template <class C>
TruncatedSeries<C> series_power(const TruncatedSeries<C>& s, int k) {
    if (k < 0) throw domain_error("negative series power");
    TruncatedSeries<C> r = s.one(), b = s;
    for (; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return r;
}

template <class C>
TruncatedSeries<C> series_invert(const TruncatedSeries<C>& s) {
    const C c0 = s.constant_term();
    const C inv0 = invert_coefficient(c0);
    if (s.nvars() == 1) {
        auto r = TruncatedSeries<C>::univariate(s.order(), s.vars()[0]);
        std::vector<C> b(static_cast<std::size_t>(s.order()) + 1);
        b[0] = inv0;
        for (int d = 1; d <= s.order(); ++d) {
            C acc;
            for (const auto& [e, c] : s.coeffs())
                if (e[0] >= 1 && e[0] <= d) acc += c * b[static_cast<std::size_t>(d - e[0])];
            b[static_cast<std::size_t>(d)] = -(acc * inv0);
        }
        for (int d = 0; d <= s.order(); ++d) r.set(d, b[static_cast<std::size_t>(d)]);
        return r;
    }
    auto rest = s;
    rest.set(Exponents(s.nvars(), 0), C());
    auto u = -(rest * TruncatedSeries<C>::constant(inv0, s.vars(), s.orders()));
    auto term = s.one(), acc = s.one();
    for (int k = 1; k <= s.total_order(); ++k) {
        term = term * u;
        if (term.is_zero()) break;
        acc += term;
    }
    return acc * TruncatedSeries<C>::constant(inv0, s.vars(), s.orders());
}

template <class C>
TruncatedSeries<C> series_exp(const TruncatedSeries<C>& s) {
    if (!is_zero(s.constant_term())) throw domain_error("exp of a series with nonzero constant term");
    if (s.nvars() == 1) {
        // d E_d = sum_k k s_k E_{d-k}
        std::vector<C> e(static_cast<std::size_t>(s.order()) + 1);
        e[0] = C(Rational(1));
        for (int d = 1; d <= s.order(); ++d) {
            C acc;
            for (const auto& [ex, c] : s.coeffs())
                if (ex[0] <= d) acc += C(c * Rational(ex[0])) * e[static_cast<std::size_t>(d - ex[0])];
            e[static_cast<std::size_t>(d)] = C(acc * Rational(1, d));
        }
        auto r = TruncatedSeries<C>::univariate(s.order(), s.vars()[0]);
        for (int d = 0; d <= s.order(); ++d) r.set(d, e[static_cast<std::size_t>(d)]);
        return r;
    }
    auto term = s.one(), acc = s.one();
    for (int k = 1; k <= s.total_order(); ++k) {
        term = (term * s).scaled(Rational(1, k));
        if (term.is_zero()) break;
        acc += term;
    }
    return acc;
}

template <class C>
TruncatedSeries<C> series_log(const TruncatedSeries<C>& s) {
    if (!(s.constant_term() == C(Rational(1)))) throw domain_error("log of a series with constant term other than 1");
    auto u = s - s.one();
    auto term = s.one();
    TruncatedSeries<C> acc(s.vars(), s.orders());
    for (int k = 1; k <= s.total_order(); ++k) {
        term = term * u;
        if (term.is_zero()) break;
        acc += term.scaled(Rational(k % 2 == 1 ? 1 : -1, k));
    }
    return acc;
}

// f(t) for univariate f and a scalar series t with zero constant term.
template <class C>
TruncatedSeries<C> series_compose(const TruncatedSeries<C>& f, const TruncatedSeries<Rational>& t) {
    if (f.nvars() != 1 || t.nvars() != 1) throw ring_mismatch("composition needs univariate series");
    if (!t.constant_term().is_zero()) throw domain_error("inner series must have zero constant term");
    int order = std::min(f.order(), t.order());
    auto tt = t.truncated(order);
    TruncatedSeries<C> r = TruncatedSeries<C>::univariate(order, f.vars()[0]);
    auto power = TruncatedSeries<Rational>::constant(Rational(1), tt.vars(), tt.orders());
    for (int d = 0; d <= order; ++d) {
        if (d > 0) power = power * tt;
        C fd = f[d];
        if (is_zero(fd)) continue;
        for (const auto& [e, c] : power.coeffs()) r.add_to(e, C(fd * c));
    }
    return r;
}

// Compositional inverse of s = q*u(q) with u(0) invertible, by Lagrange inversion:
// [Q^k] t = (1/k) [q^(k-1)] u^(-k).
template <class C>
TruncatedSeries<C> series_reversion(const TruncatedSeries<C>& s) {
    if (s.nvars() != 1) throw not_reversible("reversion needs a univariate series");
    if (!is_zero(s[0])) throw not_reversible("series has a nonzero constant term");
    if (is_zero(s[1])) throw not_reversible("series has a vanishing linear coefficient");
    int order = s.order();
    auto u = TruncatedSeries<C>::univariate(order, s.vars()[0]);
    for (const auto& [e, c] : s.coeffs()) u.set(e[0] - 1, c);
    TruncatedSeries<C> uinv;
    try {
        uinv = series_invert(u);
    } catch (const not_invertible&) {
        throw not_reversible("linear coefficient is not a unit");
    }
    auto r = TruncatedSeries<C>::univariate(order, s.vars()[0]);
    auto power = u.one();
    for (int k = 1; k <= order; ++k) {
        power = power * uinv;
        r.set(k, C(power[k - 1] * Rational(1, k)));
    }
    return r;
}

// Solves residual(L) = 0 degree by degree in q starting from the degree-0 part of initial.
template <class C>
TruncatedSeries<C> series_solve_implicit(const std::function<TruncatedSeries<C>(const TruncatedSeries<C>&)>& residual,
                                         const TruncatedSeries<C>& initial) {
    if (initial.nvars() != 1) throw ring_mismatch("implicit solving needs a univariate series");
    auto L = TruncatedSeries<C>::univariate(initial.order(), initial.vars()[0]);
    L.set(0, initial[0]);
    if (!is_zero(residual(L)[0])) throw domain_error("residual does not vanish at q^0");
    for (int d = 1; d <= L.order(); ++d) {
        C rd = residual(L)[d];
        auto bumped = L;
        bumped.add_to(Exponents{d}, C(Rational(1)));
        C lin = residual(bumped)[d] - rd;
        if (is_zero(lin)) throw singular_equation("linearization vanishes at degree " + std::to_string(d));
        C step;
        try {
            step = divide(rd, lin);
        } catch (const not_invertible&) {
            throw singular_equation("linearization is not invertible at degree " + std::to_string(d));
        }
        L.set(d, C(-step));
    }
    return L;
}

// q^d coefficient c becomes c * sum_{m <= z_order} (d h)^m z^m / m!; variables (q, z).
inline TruncatedSeries<HRational> substitute_q_scaled(const TruncatedSeries<HRational>& s, int z_order) {
    if (s.nvars() != 1) throw ring_mismatch("substitution needs a series in q alone");
    TruncatedSeries<HRational> r({s.vars()[0], "z"}, {s.order(), z_order});
    for (const auto& [e, c] : s.coeffs()) {
        int d = e[0];
        for (int m = 0; m <= z_order; ++m) {
            Rational w = Rational(d).pow(m) / Rational(factorial(m));
            if (w.is_zero()) continue;
            r.set({d, m}, c.times_h_power(m) * w);
        }
    }
    return r;
}

}  // namespace sqmirror

namespace sqmirror {

inline std::string to_text(const Rational& c) { return c.str(); }
inline std::string to_text(const SparsePoly& c) { return c.str({"x", "h"}); }
inline std::string to_text(const HRational& c) { return c.str(); }

template <class C>
std::ostream& operator<<(std::ostream& os, const TruncatedSeries<C>& s) {
    bool first = true;
    for (const auto& [e, c] : s.coeffs()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_text(c) << ")";
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] != 0) os << "*" << s.vars()[k] << "^" << e[k];
    }
    if (first) os << "0";
    os << " + O(";
    for (std::size_t k = 0; k < s.nvars(); ++k) os << (k ? "," : "") << s.vars()[k] << "^" << s.orders()[k] + 1;
    return os << ")";
}

}  // namespace sqmirror
