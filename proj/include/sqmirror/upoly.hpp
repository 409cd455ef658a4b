#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace sqmirror {

// Dense univariate polynomial over Q, coefficients from the constant term up.
class UPoly {
public:
    UPoly() = default;
    UPoly(const Rational& c) : c_{c} { trim(); }
    UPoly(int c) : UPoly(Rational(c)) {}
    explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

    static UPoly x_power(int k, const Rational& c = 1) {
        std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
        v.back() = c;
        return UPoly(std::move(v));
    }
    // (x - root)
    static UPoly linear(const Rational& root) { return UPoly(std::vector<Rational>{-root, 1}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coefficient(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& x) const {
        Rational r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    UPoly operator-() const {
        UPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    UPoly& operator+=(const UPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) { return *this += -o; }
    UPoly& operator*=(const Rational& s) {
        if (s.is_zero()) c_.clear();
        for (auto& v : c_) v *= s;
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
    friend UPoly operator*(const Rational& s, UPoly a) { return a *= s; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    // p(x) -> p(-x)
    UPoly reflected() const {
        UPoly r = *this;
        for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
        return r;
    }
    UPoly shifted_up(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<Rational> v(static_cast<std::size_t>(k));
        v.insert(v.end(), c_.begin(), c_.end());
        return UPoly(std::move(v));
    }

    // Divides by (x - root); returns quotient and remainder.
    std::pair<UPoly, Rational> divide_linear(const Rational& root) const {
        if (c_.empty()) return {UPoly(), Rational(0)};
        std::vector<Rational> q(c_.size() - 1);
        Rational carry;
        for (std::size_t k = c_.size(); k-- > 0;) {
            Rational cur = c_[k] + carry * root;
            if (k == 0) return {UPoly(std::move(q)), cur};
            q[k - 1] = cur;
            carry = cur;
        }
        return {UPoly(std::move(q)), Rational(0)};
    }

    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw not_invertible("polynomial division by zero");
        UPoly r = *this;
        std::vector<Rational> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
        Rational lead = d.leading();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            Rational f = r.leading() / lead;
            q[static_cast<std::size_t>(shift)] = f;
            r -= (d * f).shifted_up(shift);
        }
        return {UPoly(std::move(q)), r};
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    std::string str(const std::string& var = "h") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << c_[k];
            if (k >= 1) os << "*" << var;
            if (k >= 2) os << "^" << k;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace sqmirror
