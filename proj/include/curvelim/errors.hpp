#pragma once

#include <functional>
#include <iostream>
#include <stdexcept>
#include <string>

namespace curvelim {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct shape_error : error {
    using error::error;
};

/// Thrown by solve_in_span when the vector is not in the column span.
struct not_in_span : error {
    using error::error;
};

/// Parse failure; carries a 0-based character position.
struct syntax_error : error {
    std::size_t position;
    syntax_error(const std::string& what, std::size_t pos)
        : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct not_homogeneous : error {
    using error::error;
};

struct point_not_on_curve : error {
    using error::error;
};

struct degenerate_pencil : error {
    using error::error;
};

/// A load-bearing fact from the theory failed to hold; never downgraded.
struct theorem_violation : error {
    using error::error;
};

struct all_denominators_zero : error {
    using error::error;
};

struct disagreement_detected : error {
    using error::error;
};

struct unsupported : error {
    using error::error;
};

/// Warning sink. Non-fatal diagnostics (non-hermitian input, suspected
/// reducibility, vanishing leading forms) go through here; tests may swap
/// it out to capture messages.
inline std::function<void(const std::string&)>& warning_sink() {
    static std::function<void(const std::string&)> sink = [](const std::string& msg) {
        std::cerr << "warning: " << msg << '\n';
    };
    return sink;
}

inline void warn(const std::string& msg) { warning_sink()(msg); }

}  // namespace curvelim
