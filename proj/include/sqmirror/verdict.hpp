#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frame.hpp"
#include "serialize.hpp"
#include "tuple.hpp"

namespace sqmirror {

struct Verdict {
    std::string check;
    Weights frame;
    int n = 0;
    ExponentTuple a;
    int d_max = 0;
    bool pass = true;
    std::optional<std::string> witness;
    std::vector<std::string> log;

    void fail(std::string w) {
        if (pass) witness = std::move(w);
        pass = false;
    }
};

inline json as_json(const Verdict& v) {
    json frame = json::array();
    for (const auto& r : v.frame) frame.push_back(r.str());
    return {{"check", v.check}, {"frame", frame},     {"n", v.n},
            {"a", v.a.entries()}, {"d_max", v.d_max}, {"pass", v.pass},
            {"witness", v.witness ? json(*v.witness) : json(nullptr)}};
}

inline std::string frame_text(const Weights& w) {
    std::string s = "[";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + w[k].str();
    return s + "]";
}

}  // namespace sqmirror
