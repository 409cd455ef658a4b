#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rational.hpp"

namespace sqmirror {

using Weights = std::vector<Rational>;

// Torus weights plus the chosen fixed point (0-based index).
struct FixedPointFrame {
    Weights alpha;
    std::size_t i = 0;
    int n() const { return static_cast<int>(alpha.size()); }
    const Rational& alpha_i() const { return alpha.at(i); }
};

// Throws frame_error unless every evaluation point (a_j - a_i)/d, d <= d_max, is nonzero,
// distinct from the other such points for the same i, and away from the poles
// (a_k - a_j)/r, r <= d_max, of the fixed-point series at j.
inline void validate_frame(const Weights& alpha, int d_max) {
    const std::size_t n = alpha.size();
    if (n == 0) throw frame_error("empty frame");
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i].is_zero()) throw frame_error("weight alpha_" + std::to_string(i + 1) + " is zero");
        for (std::size_t j = i + 1; j < n; ++j)
            if (alpha[i] == alpha[j]) throw frame_error("weights are not distinct");
    }
    for (std::size_t i = 0; i < n; ++i) {
        std::set<Rational> seen;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int d = 1; d <= d_max; ++d) {
                Rational c = (alpha[j] - alpha[i]) / Rational(d);
                if (!seen.insert(c).second) throw frame_error("colliding evaluation points (a_j-a_i)/d");
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == j) continue;
                    for (int r = 1; r <= d_max; ++r)
                        if (c == (alpha[k] - alpha[j]) / Rational(r))
                            throw frame_error("evaluation point hits a pole (a_k-a_j)/r");
                }
            }
        }
    }
}

inline bool frame_is_valid(const Weights& alpha, int d_max) {
    try {
        validate_frame(alpha, d_max);
        return true;
    } catch (const frame_error&) {
        return false;
    }
}

// Distinct nonzero integers in [-50, 50], resampled until valid. Uses raw modulo so the
// sequence depends only on the engine, not on the library's distributions.
inline Weights random_frame(int n, int d_max, std::mt19937_64& rng) {
    if (n > 100) throw frame_error("too many weights for the sampling range");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Weights w;
        std::set<long> used;
        while (static_cast<int>(w.size()) < n) {
            long v = static_cast<long>(rng() % 101) - 50;
            if (v == 0 || !used.insert(v).second) continue;
            w.emplace_back(v);
        }
        if (frame_is_valid(w, d_max)) return w;
    }
    throw frame_error("no valid frame found");
}

inline std::vector<Weights> random_frames(int n, int d_max, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Weights> out;
    for (int k = 0; k < count; ++k) out.push_back(random_frame(n, d_max, rng));
    return out;
}

}  // namespace sqmirror
