#include <doctest.h>

#include <numbers>
#include <regex>
#include <sstream>

#include "trigon/render.hpp"

using namespace trigon;

namespace {

int count(const std::string& text, const std::string& needle) {
    int n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

/// Tags open and close in order.
bool balanced(const std::string& svg) {
    std::vector<std::string> stack;
    const std::regex tag(R"(<(/?)([a-zA-Z][a-zA-Z0-9]*)[^>]*?(/?)>)");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tag); it != std::sregex_iterator(); ++it) {
        const auto& m = *it;
        if (m[1] == "/") {
            if (stack.empty() || stack.back() != m[2]) return false;
            stack.pop_back();
        } else if (m[3] != "/") {
            stack.push_back(m[2]);
        }
    }
    return stack.empty();
}

/// Every point of every path command lies in the viewport.
bool in_viewport(const std::string& svg) {
    const std::regex attr(R"(d="([^"]*)\")");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), attr); it != std::sregex_iterator(); ++it) {
        std::istringstream in((*it)[1].str());
        std::string cmd;
        while (in >> cmd) {
            double x, y;
            if (cmd == "Z") continue;
            if (cmd == "A") {
                double rx, ry, rot, large, sweep;
                in >> rx >> ry >> rot >> large >> sweep;
            }
            in >> x >> y;
            if (x < 0 || x > 1000 || y < 0 || y > 1000) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("geodesic arcs") {
    const GeodesicArc d = geodesic_arc(BoundaryPoint(0.0), BoundaryPoint(std::numbers::pi));
    CHECK(d.diameter);
    for (auto [a, b] : {std::pair{0.0, std::numbers::pi / 2}, {1.0, 2.5}, {6.0, 0.3}, {3.0, 5.9}}) {
        const GeodesicArc g = geodesic_arc(BoundaryPoint(a), BoundaryPoint(b));
        CHECK_FALSE(g.diameter);
        CHECK(std::abs(g.center.norm2() - 1.0 - g.radius * g.radius) < 1e-10);
        for (double t : {a, b}) {
            const double dx = std::cos(t) - g.center.re, dy = std::sin(t) - g.center.im;
            CHECK(std::abs(std::hypot(dx, dy) - g.radius) < 1e-10);
        }
        const GeodesicArc h = geodesic_arc(BoundaryPoint(b), BoundaryPoint(a));
        CHECK(std::abs(h.center.re - g.center.re) < 1e-12);
        CHECK(std::abs(h.center.im - g.center.im) < 1e-12);
        CHECK(h.radius == doctest::Approx(g.radius));
    }
    const GeodesicArc q = geodesic_arc(BoundaryPoint(0.0), BoundaryPoint(std::numbers::pi / 2));
    CHECK(q.center.re == doctest::Approx(1.0));
    CHECK(q.center.im == doctest::Approx(1.0));
    CHECK_THROWS_AS(geodesic_arc(BoundaryPoint(1.0), BoundaryPoint(1.0)), Error);
}

TEST_CASE("empty scene") {
    const std::string svg = render_scene(GraphBall());
    CHECK(count(svg, "<circle") == 1);
    CHECK(count(svg, "<path") == 0);
    CHECK(balanced(svg));
}

TEST_CASE("ball scene") {
    const TriangleGroup g(canonicalize(3, 4, 5));
    const std::string svg = render_scene(expand(g, 1));
    CHECK(count(svg, "class=\"vertex") == 7);
    CHECK(count(svg, "class=\"edge\"") == 6);
    CHECK(balanced(svg));
    CHECK(in_viewport(svg));
    CHECK(svg == render_scene(expand(g, 1)));
}

TEST_CASE("overlays") {
    for (auto [p, q, r] : {std::array{3, 4, 5}, {3, 4, kInfinite}}) {
        const CodingContext ctx(canonicalize(p, q, r));
        const GraphBall ball = expand(ctx.group(), 3);
        Overlays o;
        o.spectacles = ctx.spectacles();
        o.bigon = bigon_faces(ctx.group(), 4);
        o.tango = tango(ctx.group(), parse_cyclic("<a^2 b^3 a b>"));
        o.geodesic = {BoundaryPoint(0.4), BoundaryPoint(2.0)};
        o.path = forward_path(ctx, Isometry(), VertexKind::A, BoundaryPoint(2.0), 6);
        const std::string svg = render_scene(ball, o);
        CHECK(count(svg, "class=\"spectacle-") == 2);
        CHECK(count(svg, "class=\"bigon\"") == static_cast<int>(o.bigon.size()));
        CHECK(count(svg, "class=\"tango\"") == 1);
        CHECK(count(svg, "class=\"geodesic\"") == 1);
        CHECK(count(svg, "class=\"path\"") == 1);
        CHECK(balanced(svg));
        CHECK(in_viewport(svg));
        CHECK(svg == render_scene(ball, o));
    }
    const TriangleGroup g(canonicalize(3, 4, 5));
    const auto faces = bigon_faces(g, 4);
    REQUIRE(faces.size() == 4);
    CHECK(faces[0].size() == 10);
}
