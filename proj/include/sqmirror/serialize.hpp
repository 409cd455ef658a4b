#pragma once

#include <json.hpp>

#include "series.hpp"

namespace sqmirror {

using json = nlohmann::ordered_json;

inline json as_json(const Rational& r) { return r.str(); }

inline json as_json(const SparsePoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coeff", c.str()}});
    return terms;
}

inline json as_json(const UPoly& p) {
    json cs = json::array();
    for (const auto& c : p.coeffs()) cs.push_back(c.str());
    return cs;
}

inline json as_json(const HRational& f) { return {{"num", as_json(f.numerator())}, {"den", as_json(f.denominator())}}; }

inline json as_json(const LaurentWindow& w) {
    json cs = json::array();
    for (const auto& c : w.coeffs) cs.push_back(c.str());
    return {{"low", w.low}, {"coeffs", cs}};
}

template <class C>
json as_json(const TruncatedSeries<C>& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.coeffs()) terms.push_back({{"exp", e}, {"coeff", as_json(c)}});
    return {{"vars", s.vars()}, {"orders", s.orders()}, {"terms", terms}};
}

}  // namespace sqmirror
