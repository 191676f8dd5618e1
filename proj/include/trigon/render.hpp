#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigon/orbits.hpp"

namespace trigon {

/// Geodesic between two boundary points: a circle orthogonal to the unit
/// circle, or a diameter.
struct GeodesicArc {
    bool diameter = false;
    DiskPoint center;
    double radius = 0.0;
    BoundaryPoint from;
    BoundaryPoint to;
};

/// Throws EndpointsEqual.
GeodesicArc geodesic_arc(const BoundaryPoint& eta, const BoundaryPoint& xi);

struct Overlays {
    std::optional<SpectaclesPair> spectacles;
    std::optional<GraphPath> path;
    std::vector<std::vector<DiskPoint>> bigon;  ///< face polygons
    std::optional<TangoPath> tango;
    std::optional<std::pair<BoundaryPoint, BoundaryPoint>> geodesic;
};

/// Polygons of the first faces of the base bigon (r finite), or truncated
/// cusp neighbourhoods when r is infinite.
std::vector<std::vector<DiskPoint>> bigon_faces(const TriangleGroup& group, int faces);

/// SVG 1.1 text, coordinates printed with %.6f.
std::string render_scene(const GraphBall& ball, const Overlays& overlays = {});

}  // namespace trigon
