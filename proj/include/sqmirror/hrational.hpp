#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "upoly.hpp"

namespace sqmirror {

// Coefficients of a Laurent expansion at h = 0 for the exponents low..high.
// Products are exact only when each factor's window starts at or below its valuation.
struct LaurentWindow {
    int low = 0;
    std::vector<Rational> coeffs;

    int high() const { return low + static_cast<int>(coeffs.size()) - 1; }
    bool contains(int e) const { return e >= low && e <= high(); }
    Rational at(int e) const {
        if (!contains(e)) throw range_error("exponent outside Laurent window");
        return coeffs[static_cast<std::size_t>(e - low)];
    }

    friend LaurentWindow operator+(const LaurentWindow& a, const LaurentWindow& b) {
        LaurentWindow r{std::max(a.low, b.low), {}};
        for (int e = r.low; e <= std::min(a.high(), b.high()); ++e) r.coeffs.push_back(a.at(e) + b.at(e));
        return r;
    }
    friend LaurentWindow operator*(const LaurentWindow& a, const LaurentWindow& b) {
        LaurentWindow r{a.low + b.low, {}};
        int top = std::min(a.low + b.high(), b.low + a.high());
        for (int e = r.low; e <= top; ++e) {
            Rational s;
            for (int i = a.low; i <= a.high(); ++i)
                if (b.contains(e - i)) s += a.at(i) * b.at(e - i);
            r.coeffs.push_back(s);
        }
        return r;
    }
    friend bool operator==(const LaurentWindow&, const LaurentWindow&) = default;
};

// Rational function of h over Q. Every denominator in this library is a product of
// rational linear factors, so it is stored as its multiset of roots; the fraction is
// kept reduced by cancelling numerator roots against it.
class HRational {
public:
    using Poles = std::map<Rational, int>;

    HRational() = default;
    HRational(const Rational& c) : num_(c) {}
    HRational(int c) : num_(Rational(c)) {}
    HRational(UPoly num) : num_(std::move(num)) {}
    HRational(UPoly num, Poles poles) : num_(std::move(num)), poles_(std::move(poles)) { reduce(); }

    // lead * prod (h - r) / prod (h - s)
    static HRational from_roots(Rational lead, std::vector<Rational> num_roots, const std::vector<Rational>& den_roots) {
        Poles poles;
        for (const auto& s : den_roots) ++poles[s];
        UPoly num(lead);
        for (const auto& r : num_roots) {
            auto it = poles.find(r);
            if (it != poles.end()) {
                if (--it->second == 0) poles.erase(it);
            } else {
                num *= UPoly::linear(r);
            }
        }
        HRational f;
        f.num_ = std::move(num);
        f.poles_ = std::move(poles);
        if (f.num_.is_zero()) f.poles_.clear();
        return f;
    }
    static HRational h_power(int k) {
        HRational f(1);
        return f.times_h_power(k);
    }

    const UPoly& numerator() const { return num_; }
    const Poles& poles() const { return poles_; }
    UPoly denominator() const {
        UPoly d(1);
        for (const auto& [r, m] : poles_)
            for (int k = 0; k < m; ++k) d *= UPoly::linear(r);
        return d;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return poles_.empty(); }
    // Reduced denominator is a power of h.
    bool is_laurent_polynomial() const { return poles_.empty() || (poles_.size() == 1 && poles_.count(Rational(0))); }
    bool regular_at(const Rational& x) const { return !poles_.count(x); }
    int pole_order_at(const Rational& x) const {
        auto it = poles_.find(x);
        return it == poles_.end() ? 0 : it->second;
    }

    HRational operator-() const {
        HRational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    HRational& operator+=(const HRational& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        Poles common = poles_;
        for (const auto& [r, m] : o.poles_) common[r] = std::max(common[r], m);
        num_ = num_ * cofactor(poles_, common) + o.num_ * cofactor(o.poles_, common);
        poles_ = std::move(common);
        reduce();
        return *this;
    }
    HRational& operator-=(const HRational& o) { return *this += -o; }
    HRational& operator*=(const Rational& s) {
        num_ *= s;
        if (num_.is_zero()) poles_.clear();
        return *this;
    }
    HRational& operator*=(const HRational& o) {
        if (is_zero() || o.is_zero()) return *this = HRational();
        num_ *= o.num_;
        for (const auto& [r, m] : o.poles_) poles_[r] += m;
        reduce();
        return *this;
    }
    friend HRational operator+(HRational a, const HRational& b) { return a += b; }
    friend HRational operator-(HRational a, const HRational& b) { return a -= b; }
    friend HRational operator*(HRational a, const HRational& b) { return a *= b; }
    friend HRational operator*(HRational a, const Rational& s) { return a *= s; }
    friend HRational operator*(const Rational& s, HRational a) { return a *= s; }

    // Structural equality of reduced forms; agrees with cross-multiplication.
    friend bool operator==(const HRational& a, const HRational& b) { return a.num_ == b.num_ && a.poles_ == b.poles_; }
    static bool cross_equal(const HRational& a, const HRational& b) {
        return a.num_ * b.denominator() == b.num_ * a.denominator();
    }

    HRational times_h_power(int k) const {
        HRational r = *this;
        if (r.is_zero() || k == 0) return r;
        if (k > 0) r.num_ = r.num_.shifted_up(k);
        else r.poles_[Rational(0)] += -k;
        r.reduce();
        return r;
    }
    // f / (h - c)^k
    HRational divided_by_linear(const Rational& c, int k = 1) const {
        HRational r = *this;
        if (r.is_zero()) return r;
        r.poles_[c] += k;
        r.reduce();
        return r;
    }
    // h -> -h
    HRational reflected() const {
        HRational r;
        int total = 0;
        for (const auto& [root, m] : poles_) {
            r.poles_[-root] = m;
            total += m;
        }
        r.num_ = (total % 2 == 0) ? num_.reflected() : -num_.reflected();
        return r;
    }

    Rational evaluate(const Rational& x) const {
        if (poles_.count(x)) throw resonance_error("evaluation at a pole h = " + x.str());
        Rational d(1);
        for (const auto& [r, m] : poles_) d *= (x - r).pow(m);
        return num_(x) / d;
    }

    // Inverse exists here only when the numerator is c*h^k.
    HRational inverse() const {
        int nz = 0;
        while (nz <= num_.degree() && num_.coefficient(nz).is_zero()) ++nz;
        if (is_zero() || nz != num_.degree())
            throw not_invertible("numerator does not split as c*h^k");
        HRational r(denominator() * num_.leading().inverse());
        return r.times_h_power(-nz);
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        return "(" + num_.str() + ")/(" + denominator().str() + ")";
    }

private:
    static UPoly cofactor(const Poles& have, const Poles& want) {
        UPoly f(1);
        for (const auto& [r, m] : want) {
            auto it = have.find(r);
            int extra = m - (it == have.end() ? 0 : it->second);
            for (int k = 0; k < extra; ++k) f *= UPoly::linear(r);
        }
        return f;
    }
    void reduce() {
        if (num_.is_zero()) { poles_.clear(); return; }
        for (auto it = poles_.begin(); it != poles_.end();) {
            while (it->second > 0) {
                auto [q, rem] = num_.divide_linear(it->first);
                if (!rem.is_zero()) break;
                num_ = std::move(q);
                --it->second;
            }
            it = it->second == 0 ? poles_.erase(it) : std::next(it);
        }
    }

    UPoly num_;
    Poles poles_;
};

inline bool is_zero(const HRational& f) { return f.is_zero(); }
inline HRational divide(const HRational& a, const HRational& b) { return a * b.inverse(); }

inline LaurentWindow laurent_expand(const HRational& f, int low, int high) {
    LaurentWindow w{low, {}};
    if (high < low) return w;
    int k = f.pole_order_at(0);
    UPoly d0(1);
    for (const auto& [r, m] : f.poles())
        if (!r.is_zero())
            for (int j = 0; j < m; ++j) d0 *= UPoly::linear(r);
    // power series of num/d0 up to h^(high+k)
    int top = high + k;
    std::vector<Rational> t;
    if (top >= 0) {
        Rational inv0 = d0.coefficient(0).inverse();
        t.resize(static_cast<std::size_t>(top) + 1);
        for (int j = 0; j <= top; ++j) {
            Rational s = f.numerator().coefficient(j);
            for (int i = 1; i <= std::min(j, d0.degree()); ++i) s -= d0.coefficient(i) * t[static_cast<std::size_t>(j - i)];
            t[static_cast<std::size_t>(j)] = s * inv0;
        }
    }
    for (int e = low; e <= high; ++e) {
        int idx = e + k;
        w.coeffs.push_back(idx >= 0 ? t[static_cast<std::size_t>(idx)] : Rational(0));
    }
    return w;
}

inline Rational residue_at_zero(const HRational& f) { return laurent_expand(f, -1, -1).at(-1); }

}  // namespace sqmirror
