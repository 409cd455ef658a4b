#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "rational.hpp"

namespace sqmirror {

struct TupleStats {
    int abs_sum = 0;       // |a|
    Rational bracket = 1;  // <a>
    Integer factorial = 1; // a!
    Integer power = 1;     // a^a
    int l_plus = 0;
    int l_minus = 0;
    int ell = 0;           // l+ - l-
};

// Tuple of nonzero integers describing the twist.
class ExponentTuple {
public:
    ExponentTuple() = default;
    ExponentTuple(std::initializer_list<int> a) : ExponentTuple(std::vector<int>(a)) {}
    explicit ExponentTuple(std::vector<int> a) : a_(std::move(a)) {
        for (int v : a_)
            if (v == 0) throw invalid_tuple("tuple entries must be nonzero");
    }

    const std::vector<int>& entries() const { return a_; }
    std::size_t size() const { return a_.size(); }
    bool empty() const { return a_.empty(); }
    ExponentTuple appended(int v) const {
        auto b = a_;
        b.push_back(v);
        return ExponentTuple(std::move(b));
    }

    TupleStats stats() const {
        TupleStats s;
        Rational pos(1), neg(1);
        for (int v : a_) {
            s.abs_sum += v > 0 ? v : -v;
            Integer base(v);
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(v > 0 ? v : -v));
            s.power *= p;
            if (v > 0) {
                ++s.l_plus;
                pos *= v;
                s.factorial *= sqmirror::factorial(v);
            } else {
                ++s.l_minus;
                neg *= v;
            }
        }
        s.bracket = pos / neg;
        s.ell = s.l_plus - s.l_minus;
        return s;
    }

    std::string str() const {
        std::string r = "(";
        for (std::size_t k = 0; k < a_.size(); ++k) r += (k ? "," : "") + std::to_string(a_[k]);
        return r + ")";
    }
    friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;

private:
    std::vector<int> a_;
};

inline TupleStats tuple_stats(const ExponentTuple& a) { return a.stats(); }

}  // namespace sqmirror
