#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trigon {

/// Every numeric tolerance and cap used by the library lives here.
struct Tolerances {
    double boundary_eps = 1e-12;     ///< |z|^2 < 1 - boundary_eps for interior points
    double normalization = 1e-12;    ///< |a|^2 - |b|^2 = 1 after renormalization
    double trace_band = 1e-9;        ///< parabolic band around |tr| = 2
    double identity = 1e-10;         ///< matrix distance to +-I
    double arc_snap = 1e-11;         ///< angular snap to arc endpoints
    double vertex_grid = 1e-7;       ///< quantization grid for vertex keys
    double edge_check = 1e-8;        ///< endpoint checks on edge transforms
    double extremity = 1e-9;         ///< convergence of bigon midpoints
    std::size_t extremity_iterations = 200;
    std::size_t vertex_cap = 200000;
    double relation = 1e-9;          ///< product relation of the generators
};

inline const Tolerances& default_tolerances() {
    static const Tolerances tol{};
    return tol;
}

enum class ErrorCode {
    NonHyperbolic,
    RelationFailure,
    DepthOverflow,
    InfiniteFace,
    BallTooSmall,
    EdgeNotInFace,
    NotRepresentable,
    UnsupportedParams,
    NoException,
    NoConvergence,
    ValidationFailure,
    Ambiguous,
    NoMatch,
    EndpointsEqual,
    NoStabilization,
    PeriodNotDetected,
    EdgeMismatch,
    ExponentOutOfRange,
    ParseError,
    InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace trigon
