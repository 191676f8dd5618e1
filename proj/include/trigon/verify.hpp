#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trigon/orbits.hpp"

namespace trigon {

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Number of non-backtracking paths of the given length from A0 whose every
/// edge has x in its spectacle; `last` receives the head of one of them.
int consistent_paths(const TriangleGroup& group, const SpectaclesPair& S, const BoundaryPoint& x, int length,
                     DiskPoint* last = nullptr);

CheckResult check_kneading(const TriangleParams& params);
CheckResult check_exceptional(const CodingContext& ctx);
CheckResult check_roundtrip(const CodingContext& ctx, int max_blocks = 6);
CheckResult check_uniqueness(const CodingContext& ctx, std::uint64_t seed = 0, int samples = 20, int length = 8);
CheckResult check_ordering(const CodingContext& ctx, std::uint64_t seed = 0, int pairs = 100);
CheckResult check_tiling(const CodingContext& ctx, int depth = 3);
CheckResult check_homology(const std::vector<TriangleParams>& triples);
CheckResult check_branching(const CodingContext& ctx);
/// The same orbit list and scene rendered twice compare byte for byte.
CheckResult check_determinism(const CodingContext& ctx, int max_blocks = 6, int depth = 3);

/// Every check that applies to one triple.
std::vector<CheckResult> verify_triple(const TriangleParams& params, std::uint64_t seed = 0);

std::string to_string(const CheckResult& r);

}  // namespace trigon
