#include "trigon/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace trigon {

namespace {

constexpr double kCenter = 500.0;
constexpr double kScale = 480.0;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    // Avoid "-0.000000".
    if (std::string(buf) == "-0.000000") return "0.000000";
    return buf;
}

struct Screen {
    double x, y;
};

Screen to_screen(const DiskPoint& p) { return {kCenter + kScale * p.re, kCenter - kScale * p.im}; }

std::string point(const DiskPoint& p) {
    const Screen s = to_screen(p);
    return num(s.x) + " " + num(s.y);
}

/// Path command drawing the geodesic segment from the current point u to v.
std::string segment_to(const DiskPoint& u, const DiskPoint& v) {
    const double det = u.re * v.im - u.im * v.re;
    if (std::abs(det) < 1e-9) return " L " + point(v);
    // Center c of the orthogonal circle: c.u = (1 + |u|^2) / 2, c.v = (1 + |v|^2) / 2.
    const double ru = 0.5 * (1.0 + u.norm2()), rv = 0.5 * (1.0 + v.norm2());
    const DiskPoint c((ru * v.im - rv * u.im) / det, (u.re * rv - v.re * ru) / det);
    const double radius = std::sqrt(std::max(0.0, c.norm2() - 1.0));
    const Screen sc = to_screen(c), su = to_screen(u), sv = to_screen(v);
    const double cross = (su.x - sc.x) * (sv.y - sc.y) - (su.y - sc.y) * (sv.x - sc.x);
    return " A " + num(kScale * radius) + " " + num(kScale * radius) + " 0 0 " + (cross > 0 ? "1 " : "0 ") + point(v);
}

std::string polyline(const std::vector<DiskPoint>& pts, bool closed, bool geodesic) {
    std::string d = "M " + point(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) d += geodesic ? segment_to(pts[i - 1], pts[i]) : " L " + point(pts[i]);
    if (closed) {
        if (geodesic) d += segment_to(pts.back(), pts.front());
        d += " Z";
    }
    return d;
}

DiskPoint on_circle(double radius, double theta) { return {radius * std::cos(theta), radius * std::sin(theta)}; }

/// Arc of the circle |z| = radius from angle `from` spanning `span` in orientation o.
std::string boundary_arc(double radius, double from, double span, Orientation o) {
    const double to = from + sign(o) * span;
    const double r = kScale * radius;
    const std::string sweep = o == Orientation::Counterclockwise ? "1" : "0";
    if (span > kTwoPi - 1e-9) {
        const double mid = from + sign(o) * std::numbers::pi;
        return "M " + point(on_circle(radius, from)) + " A " + num(r) + " " + num(r) + " 0 1 " + sweep + " " +
               point(on_circle(radius, mid)) + " A " + num(r) + " " + num(r) + " 0 1 " + sweep + " " +
               point(on_circle(radius, from));
    }
    return "M " + point(on_circle(radius, from)) + " A " + num(r) + " " + num(r) + " 0 " +
           (span > std::numbers::pi ? "1 " : "0 ") + sweep + " " + point(on_circle(radius, to));
}

void element(std::string& out, const std::string& cls, const std::string& d) {
    out += "  <path class=\"" + cls + "\" d=\"" + d + "\"/>\n";
}

/// Samples of the roundabout arc of one tango step, mapped back from the origin.
std::vector<DiskPoint> tango_samples(const TangoArc& arc) {
    const Isometry to_vertex = translation_to(arc.vertex);
    const Isometry to_origin = to_vertex.inverse();
    const DiskPoint from = transform(to_origin, arc.from), to = transform(to_origin, arc.to);
    const double rho = std::sqrt(from.norm2());
    // Hyperbolic half-edge radius: |z| = tanh(d / 2) at distance d, halved distance.
    const double d = 2.0 * std::atanh(rho);
    const double radius = std::tanh(d / 4.0);
    const double a0 = std::atan2(from.im, from.re), a1 = std::atan2(to.im, to.re);
    double turn = normalize_angle(a1 - a0);
    if (arc.direction < 0) turn -= kTwoPi;
    if (std::abs(turn) < 1e-12) turn = arc.direction * kTwoPi;
    std::vector<DiskPoint> pts;
    const int samples = 24;
    for (int i = 0; i <= samples; ++i)
        pts.push_back(transform(to_vertex, on_circle(radius, a0 + turn * i / samples)));
    return pts;
}

const char* kStyle =
    "  <style>\n"
    "    .boundary { fill: #ffffff; stroke: #000000; stroke-width: 1.5; }\n"
    "    .edge { fill: none; stroke: #888888; stroke-width: 0.6; }\n"
    "    .vertex.A { fill: #c0392b; }\n"
    "    .vertex.B { fill: #2c3e50; }\n"
    "    .bigon { fill: #f6e7b4; fill-opacity: 0.6; stroke: #b7950b; stroke-width: 0.8; }\n"
    "    .spectacle-a2b { fill: none; stroke: #27ae60; stroke-width: 4; }\n"
    "    .spectacle-b2a { fill: none; stroke: #8e44ad; stroke-width: 4; }\n"
    "    .path { fill: none; stroke: #d35400; stroke-width: 2.5; }\n"
    "    .tango { fill: none; stroke: #2980b9; stroke-width: 2.5; }\n"
    "    .geodesic { fill: none; stroke: #000000; stroke-width: 1.2; stroke-dasharray: 6 3; }\n"
    "  </style>\n";

}  // namespace

GeodesicArc geodesic_arc(const BoundaryPoint& eta, const BoundaryPoint& xi) {
    const double gap = circular_distance(eta.theta, xi.theta);
    if (gap < 1e-12) throw Error(ErrorCode::EndpointsEqual, "geodesic endpoints coincide");
    GeodesicArc g;
    g.from = eta;
    g.to = xi;
    if (std::abs(gap - std::numbers::pi) < 1e-9) {
        g.diameter = true;
        return g;
    }
    // Midpoint direction of the shorter boundary arc.
    const double forward = normalize_angle(xi.theta - eta.theta);
    const double mid = forward <= std::numbers::pi ? eta.theta + 0.5 * forward : xi.theta + 0.5 * (kTwoPi - forward);
    const double half = 0.5 * gap;
    g.center = DiskPoint(std::cos(mid) / std::cos(half), std::sin(mid) / std::cos(half));
    g.radius = std::tan(half);
    return g;
}

std::vector<std::vector<DiskPoint>> bigon_faces(const TriangleGroup& group, int faces) {
    std::vector<std::vector<DiskPoint>> out;
    if (group.params().r_infinite()) {
        // One infinite face: a stretch of its boundary on each side of the base edge.
        std::vector<DiskPoint> poly;
        EdgeFrame e = group.base_edge();
        for (int s = 0; s < 4 * faces; ++s, e = group.face_step(e)) poly.push_back(group.tail(e));
        out.push_back(std::move(poly));
        return out;
    }
    const Bigon b = bigon(group, group.base_edge());
    for (int i = 0; i < faces; ++i) {
        const std::size_t period = static_cast<std::size_t>(b.period);
        const std::size_t k = static_cast<std::size_t>(i) % period;
        Isometry shift;
        for (int t = 0; t < i / b.period; ++t) shift = b.translation * shift;
        EdgeFrame e{shift * b.chain[k].transform, b.chain[k].a_to_b};
        std::vector<DiskPoint> poly;
        for (int s = 0; s < 2 * group.params().r; ++s, e = group.face_step(e)) poly.push_back(group.tail(e));
        out.push_back(std::move(poly));
    }
    return out;
}

std::string render_scene(const GraphBall& ball, const Overlays& overlays) {
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
           "viewBox=\"0 0 1000 1000\">\n";
    out += kStyle;
    out += "  <circle class=\"boundary\" cx=\"" + num(kCenter) + "\" cy=\"" + num(kCenter) + "\" r=\"" +
           num(kScale) + "\"/>\n";

    for (const auto& face : overlays.bigon)
        if (face.size() >= 2) element(out, "bigon", polyline(face, true, true));

    const auto& verts = ball.vertices();
    for (std::size_t i = 0; i < ball.edges().size(); ++i) {
        const DirectedEdge& e = ball.edges()[i];
        const DiskPoint& u = verts[static_cast<std::size_t>(e.src)].pos;
        const DiskPoint& v = verts[static_cast<std::size_t>(e.dst)].pos;
        out += "  <path class=\"edge\" id=\"e" + std::to_string(i) + "\" d=\"M " + point(u) + segment_to(u, v) +
               "\"/>\n";
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const BallVertex& v = verts[i];
        const Screen s = to_screen(v.pos);
        const double r = std::max(0.5, 6.0 * (1.0 - v.pos.norm2()));
        out += "  <circle class=\"vertex " + std::string(v.kind == VertexKind::A ? "A" : "B") + "\" id=\"v" +
               std::to_string(i) + "\" cx=\"" + num(s.x) + "\" cy=\"" + num(s.y) + "\" r=\"" + num(r) + "\"/>\n";
    }

    if (overlays.spectacles) {
        const SpectaclesPair& S = *overlays.spectacles;
        const Orientation o = S.orientation;
        element(out, "spectacle-a2b", boundary_arc(0.985, S.I_A2B.left.theta, S.I_A2B.span(o), o));
        element(out, "spectacle-b2a", boundary_arc(0.965, S.I_B2A.left.theta, S.I_B2A.span(o), o));
    }
    if (overlays.geodesic) {
        const GeodesicArc g = geodesic_arc(overlays.geodesic->first, overlays.geodesic->second);
        const DiskPoint a = on_circle(1.0, g.from.theta), b = on_circle(1.0, g.to.theta);
        std::string d = "M " + point(a);
        if (g.diameter) {
            d += " L " + point(b);
        } else {
            const Screen sc = to_screen(g.center), sa = to_screen(a), sb = to_screen(b);
            const double cross = (sa.x - sc.x) * (sb.y - sc.y) - (sa.y - sc.y) * (sb.x - sc.x);
            d += " A " + num(kScale * g.radius) + " " + num(kScale * g.radius) + " 0 0 " + (cross > 0 ? "1 " : "0 ") +
                 point(b);
        }
        element(out, "geodesic", d);
    }
    if (overlays.path && overlays.path->vertices.size() >= 2) {
        std::vector<DiskPoint> pts;
        for (const auto& v : overlays.path->vertices) pts.push_back(v.pos);
        element(out, "path", polyline(pts, false, true));
    }
    if (overlays.tango && !overlays.tango->arcs.empty()) {
        std::vector<DiskPoint> pts;
        for (const auto& arc : overlays.tango->arcs)
            for (const auto& p : tango_samples(arc)) pts.push_back(p);
        element(out, "tango", polyline(pts, false, false));
    }
    out += "</svg>\n";
    return out;
}

}  // namespace trigon
