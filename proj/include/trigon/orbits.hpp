#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigon/coding.hpp"

namespace trigon {

struct PeriodicOrbit {
    CyclicWord word;
    Isometry holonomy;
    BoundaryPoint attracting;
    BoundaryPoint repelling;
    bool exceptional = false;
    std::optional<CyclicWord> partner;  ///< w_R of a merged exceptional orbit
};

struct OrbitEnumeration {
    std::vector<PeriodicOrbit> orbits;
    /// Admissible words whose holonomy is parabolic (loops around the cusp, r infinite).
    std::vector<CyclicWord> cusp_words;
};

/// Primitive alternating necklaces with an even number of blocks, at most
/// max_blocks, exponents 1..p-1 and 1..q-1, passing admissible_word.
std::vector<CyclicWord> admissible_necklaces(const TriangleParams& params, const KneadingSet& k, int max_blocks);
/// Same set without pruning, for cross-checking.
std::vector<CyclicWord> admissible_necklaces_brute(const TriangleParams& params, const KneadingSet& k, int max_blocks);

/// Sorted by (block count, expansion). Throws InvalidArgument when max_blocks
/// is odd or below 2, ValidationFailure on an elliptic holonomy.
OrbitEnumeration enumerate_orbits(const CodingContext& ctx, int max_blocks);

/// Laid out from the edge B0 -> A0, turning k sectors counterclockwise at an
/// A-vertex with block a^k and k sectors clockwise at a B-vertex with block b^k.
/// The result maps the first edge onto the edge one period later. Throws EdgeMismatch.
Isometry holonomy(const TriangleGroup& group, const CyclicWord& w);

/// Fills holonomy and axis; throws ValidationFailure unless the holonomy is hyperbolic.
PeriodicOrbit make_orbit(const TriangleGroup& group, const CyclicWord& w);

/// Codes the axis of the orbit again and compares with its word (or the partner).
bool roundtrip_verify(const CodingContext& ctx, const PeriodicOrbit& orbit);

/// Some placement of w2 along the faces adjacent to the path of w1 has the
/// axis of w1 (oriented endpoints within tol). r finite only.
bool share_axis(const TriangleGroup& group, const CyclicWord& w1, const CyclicWord& w2, double tol = 1e-7);

struct TangoArc {
    VertexKind kind = VertexKind::A;
    DiskPoint vertex;
    DiskPoint from;  ///< previous vertex of the path
    DiskPoint to;    ///< next vertex of the path
    int sectors = 0;
    int direction = 1;  ///< +1 counterclockwise (A), -1 clockwise (B)
};

struct TangoPath {
    std::vector<TangoArc> arcs;
};

/// One arc per block of one period. Throws ExponentOutOfRange.
TangoPath tango(const TriangleGroup& group, const CyclicWord& w);

std::string orbits_json(const OrbitEnumeration& list, const TriangleParams& params, int indent = 2);

}  // namespace trigon
