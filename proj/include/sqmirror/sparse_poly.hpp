#pragma once

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "rational.hpp"

namespace sqmirror {

using Exponents = std::vector<int>;

// Graded lexicographic: total degree first, then lexicographic.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial over Q. Exponents may be negative (Laurent monomials),
// which makes division by a single term exact. An arity-0 polynomial is a bare
// constant and combines with polynomials of any arity.
class SparsePoly {
public:
    using Terms = std::map<Exponents, Rational, GradedLex>;

    SparsePoly() = default;
    explicit SparsePoly(std::size_t arity) : arity_(arity) {}
    SparsePoly(const Rational& c) {
        if (!c.is_zero()) terms_[{}] = c;
    }
    SparsePoly(int c) : SparsePoly(Rational(c)) {}

    static SparsePoly monomial(const Exponents& e, const Rational& c = 1) {
        SparsePoly p(e.size());
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }
    static SparsePoly variable(std::size_t arity, std::size_t k) {
        Exponents e(arity, 0);
        e.at(k) = 1;
        return monomial(e);
    }

    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Exponents& e) const {
        if (arity_ == 0 && !e.empty()) return all_zero(e) ? coefficient({}) : Rational(0);
        auto it = terms_.find(promote_key(e));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && all_zero(terms_.begin()->first));
    }
    Rational constant_term() const { return coefficient(Exponents(arity_, 0)); }

    // Adds c·x^e in place.
    void add_term(const Exponents& e, const Rational& c) {
        if (c.is_zero()) return;
        adopt_arity(e.size());
        auto key = promote_key(e);
        auto [it, fresh] = terms_.try_emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SparsePoly operator-() const {
        SparsePoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    SparsePoly& operator+=(const SparsePoly& o) {
        unify(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& o) { return *this += -o; }
    SparsePoly& operator*=(const Rational& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(SparsePoly a, const Rational& s) { return a *= s; }
    friend SparsePoly operator*(const Rational& s, SparsePoly a) { return a *= s; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r(a.arity_);
        r.unify(b);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                auto ka = r.promote_key(ea), kb = r.promote_key(eb);
                for (std::size_t k = 0; k < ka.size(); ++k) ka[k] += kb[k];
                r.add_term(ka, ca * cb);
            }
        return r;
    }
    SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        if (a.is_constant() && b.is_constant()) return a.constant_term() == b.constant_term();
        if (a.arity_ != b.arity_) return false;
        return a.terms_ == b.terms_;
    }

    // Exact inverse of a single nonzero term.
    SparsePoly inverse() const {
        if (terms_.size() != 1) throw not_invertible("only single-term polynomials are invertible");
        const auto& [e, c] = *terms_.begin();
        Exponents ne = e;
        for (auto& v : ne) v = -v;
        return monomial(ne, c.inverse());
    }

    // Same polynomial viewed with the given arity (only valid from arity 0 or k).
    SparsePoly promoted(std::size_t k) const {
        SparsePoly r = *this;
        r.adopt_arity(k);
        return r;
    }

    // Keeps the terms satisfying pred(exponents).
    template <class Pred>
    SparsePoly filtered(Pred pred) const {
        SparsePoly r(arity_);
        for (const auto& [e, c] : terms_)
            if (pred(e)) r.terms_.emplace(e, c);
        return r;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                os << "*" << (k < names.size() ? names[k] : "v" + std::to_string(k));
                if (e[k] != 1) os << "^" << e[k];
            }
        }
        return os.str();
    }

private:
    static bool all_zero(const Exponents& e) {
        for (int v : e)
            if (v != 0) return false;
        return true;
    }
    Exponents promote_key(const Exponents& e) const {
        if (e.size() == arity_) return e;
        if (e.empty()) return Exponents(arity_, 0);
        throw ring_mismatch("exponent vector arity differs from polynomial arity");
    }
    void adopt_arity(std::size_t k) {
        if (k == arity_ || k == 0) return;
        if (arity_ != 0) throw ring_mismatch("polynomial arity mismatch");
        arity_ = k;
        Terms t;
        for (auto& [e, c] : terms_) t.emplace(Exponents(k, 0), c);
        terms_ = std::move(t);
    }
    void unify(const SparsePoly& o) {
        if (o.arity_ != 0) adopt_arity(o.arity_);
    }

    std::size_t arity_ = 0;
    Terms terms_;
};

inline bool is_zero(const SparsePoly& p) { return p.is_zero(); }

inline SparsePoly divide(const SparsePoly& a, const SparsePoly& b) { return a * b.inverse(); }
inline Rational divide(const Rational& a, const Rational& b) { return a / b; }

}  // namespace sqmirror
