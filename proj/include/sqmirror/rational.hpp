#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "errors.hpp"

namespace sqmirror {

using Integer = mpz_class;

// Exact rational backed by GMP; always kept in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(Integer(std::to_string(v))) {}
    Rational(const Integer& v) : v_(v) {}
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw domain_error("zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q".
    static Rational parse(std::string_view s) {
        mpq_class v;
        if (v.set_str(std::string(s), 10) != 0) throw domain_error("malformed rational: " + std::string(s));
        if (v.get_den() == 0) throw domain_error("zero denominator: " + std::string(s));
        v.canonicalize();
        return Rational(v);
    }

    const mpq_class& raw() const { return v_; }
    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string str() const { return v_.get_str(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw not_invertible("division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    Rational inverse() const {
        if (is_zero()) throw not_invertible("zero has no inverse");
        return Rational(mpq_class(1 / v_));
    }

    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Integer n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(e));
        return Rational(n, d);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline Integer factorial(long n) {
    if (n < 0) throw domain_error("negative factorial");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Generalized binomial C(-n, m) = (-1)^m C(n+m-1, m).
inline Integer negative_binomial(long n, long m) {
    Integer b = binomial(n + m - 1, m);
    return (m % 2 == 0) ? b : Integer(-b);
}

}  // namespace sqmirror
