#pragma once

#include <stdexcept>
#include <string>

namespace sqmirror {

// One exception type per failure class, all catchable as sqmirror::error.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ring_mismatch : error { using error::error; };
struct not_invertible : error { using error::error; };
struct domain_error : error { using error::error; };
struct not_reversible : error { using error::error; };
struct singular_equation : error { using error::error; };
struct invalid_tuple : error { using error::error; };
struct theorem_domain_error : error { using error::error; };
struct range_error : error { using error::error; };
struct frame_error : error { using error::error; };
struct resonance_error : error { using error::error; };
struct dependency_error : error { using error::error; };

}  // namespace sqmirror
