#include <doctest.h>

#include <functional>
#include <random>

#include <json.hpp>

#include "trigon/coding.hpp"

using namespace trigon;

namespace {

const std::array<std::array<int, 3>, 8> kTriples{{{3, 4, 5},
                                                  {3, 3, 4},
                                                  {4, 5, 6},
                                                  {2, 3, 7},
                                                  {2, 4, 5},
                                                  {2, 4, 6},
                                                  {3, 4, kInfinite},
                                                  {2, 3, kInfinite}}};

const CodingContext& context(int p, int q, int r) {
    static std::map<std::array<int, 3>, std::unique_ptr<CodingContext>> cache;
    auto& slot = cache[{p, q, r}];
    if (!slot) slot = std::make_unique<CodingContext>(canonicalize(p, q, r));
    return *slot;
}

std::string letters(const Blocks& code) {
    Blocks merged;
    append(merged, code);
    return expand(merged);
}

}  // namespace

TEST_CASE("normal extremity is equivariant") {
    for (auto [p, q, r] : kTriples) {
        const TriangleGroup g(canonicalize(p, q, r));
        const BoundaryPoint xi = normal_extremity(g, g.base_edge());
        const Isometry moves[] = {g.sector(VertexKind::A), g.sector(VertexKind::B),
                                  g.sector(VertexKind::A) * g.sector(VertexKind::B) * g.sector(VertexKind::B)};
        for (const Isometry& h : moves) {
            const EdgeFrame e{h, true};
            CHECK(circular_distance(normal_extremity(g, e).theta, transform(h, xi).theta) < 1e-9);
        }
    }
}

TEST_CASE("normal extremity from a ball edge") {
    const TriangleGroup g(canonicalize(3, 4, 5));
    const GraphBall ball = expand(g, 2);
    const BoundaryPoint xi = normal_extremity(g, g.base_edge());
    CHECK(circular_distance(normal_extremity(g, ball, {0, 1}).theta, xi.theta) < 1e-9);
}

TEST_CASE("geometric kneading equals the closed forms") {
    for (auto [p, q, r] : kTriples) {
        const auto t = canonicalize(p, q, r);
        CAPTURE(t.label());
        CHECK(geometric_kneading(TriangleGroup(t)) == normalized(closed_form_kneading(t)));
    }
}

TEST_CASE("calibration selects one candidate") {
    for (auto [p, q, r] : kTriples) {
        const CodingContext& ctx = context(p, q, r);
        CAPTURE(ctx.params().label());
        CHECK(ctx.calibration().accepted == 1);
        CHECK(ctx.calibration().orientation == kBoundaryOrientation);
        CHECK(ctx.calibration().report.size() == 4);
        CHECK(ctx.spectacles().I_A2B.left.theta == ctx.xi().theta);
        CHECK(ctx.spectacles().I_B2A.right.theta == ctx.xi().theta);
    }
}

TEST_CASE("spectacles tile the circle at every interior vertex") {
    for (auto [p, q, r] : {std::array{3, 4, 5}, {2, 3, 7}, {3, 4, kInfinite}}) {
        const CodingContext& ctx = context(p, q, r);
        const GraphBall ball = expand(ctx.group(), 3);
        int checked = 0;
        for (int v = 0; v < static_cast<int>(ball.vertices().size()); ++v) {
            const BallVertex& bv = ball.vertices()[static_cast<std::size_t>(v)];
            if (!bv.interior) continue;
            std::vector<BoundaryArc> arcs;
            double total = 0;
            for (int u : bv.rotation) {
                arcs.push_back(edge_spectacle(ctx.group(), ctx.spectacles(), ball, {v, u}));
                total += arcs.back().span(kBoundaryOrientation);
            }
            CHECK(total == doctest::Approx(kTwoPi).epsilon(1e-9));
            for (const auto& a : arcs) {
                const bool chained = std::any_of(arcs.begin(), arcs.end(), [&](const BoundaryArc& b) {
                    return circular_distance(a.right.theta, b.left.theta) < 1e-9;
                });
                CHECK(chained);
            }
            ++checked;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("next edge toward xi") {
    const CodingContext& ctx = context(3, 4, 5);
    const TriangleGroup& g = ctx.group();
    CHECK(next_edge_index(g, ctx.spectacles(), Isometry(), VertexKind::A, ctx.xi()) == 0);
    CHECK(next_edge_index(g, ctx.spectacles(), Isometry(), VertexKind::B, ctx.xi()) != 0);
    const GraphBall ball = expand(g, 2);
    const DirectedEdge e = next_edge(g, ctx.spectacles(), ball, 0, ctx.xi());
    CHECK(e == DirectedEdge{0, 1});
}

TEST_CASE("turn blocks") {
    const auto t = canonicalize(3, 4, 5);
    CHECK(turn_block(t, VertexKind::A, 2) == Block{Letter::a, 2});
    CHECK(turn_block(t, VertexKind::B, 1) == Block{Letter::b, 3});
    CHECK(turn_block(t, VertexKind::B, 3) == Block{Letter::b, 1});
}

TEST_CASE("forward paths toward xi read the kneading words") {
    for (auto [p, q, r] : kTriples) {
        const CodingContext& ctx = context(p, q, r);
        CAPTURE(ctx.params().label());
        const Isometry& h = ctx.base_bigon().translation;
        const GraphPath from_a = forward_path(ctx, Isometry(), VertexKind::A, ctx.xi(), 40, h);
        const GraphPath from_b = forward_path(ctx, Isometry(), VertexKind::B, ctx.xi(), 40, h);
        const std::string a = letters(from_a.code), b = letters(from_b.code);
        CHECK(a.substr(0, 20) == expand(ctx.kneading().v_L, 20));
        CHECK(b.substr(0, 20) == expand(ctx.kneading().u_L, 20));
    }
    const CodingContext& cusp = context(3, 4, kInfinite);
    const GraphPath path =
        forward_path(cusp, Isometry(), VertexKind::B, cusp.xi(), 12, cusp.base_bigon().translation);
    CHECK(letters(path.code).substr(0, 8) == "aabaabaa");
}

TEST_CASE("forward path in a ball") {
    const CodingContext& ctx = context(3, 4, 5);
    const GraphBall ball = expand(ctx.group(), 4);
    const GraphPath path = forward_path(ctx, ball, 0, BoundaryPoint(2.0), 3);
    REQUIRE(path.vertices.size() == 4);
    for (const auto& v : path.vertices) CHECK(v.id >= 0);
    for (std::size_t i = 1; i < path.vertices.size(); ++i)
        CHECK(ball.adjacent(path.vertices[i - 1].id, path.vertices[i].id));
    const auto j = nlohmann::json::parse(path_json(path, ctx.params()));
    CHECK(j["schema"] == 1);
    CHECK(j["vertices"].size() == 4);
}

TEST_CASE("uniqueness of spectacle-consistent paths") {
    for (auto [p, q, r] : {std::array{3, 4, 5}, {2, 3, 7}}) {
        const CodingContext& ctx = context(p, q, r);
        const TriangleGroup& g = ctx.group();
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> angle(0.0, kTwoPi);
        for (int sample = 0; sample < 20; ++sample) {
            const BoundaryPoint x(angle(rng));
            const int length = 8;
            int consistent = 0;
            EdgeFrame last;
            std::function<void(const EdgeFrame&, int)> dfs = [&](const EdgeFrame& e, int depth) {
                if (!spectacle_contains(g, ctx.spectacles(), e, x)) return;
                if (depth == length) {
                    ++consistent;
                    last = e;
                    return;
                }
                const VertexKind head = e.head_kind();
                for (int k = 1; k < g.degree(head); ++k) dfs(g.outgoing(e.transform, head, k), depth + 1);
            };
            for (int k = 0; k < g.degree(VertexKind::A); ++k) dfs(g.outgoing(Isometry(), VertexKind::A, k), 1);
            CHECK(consistent == 1);
            const GraphPath fwd = forward_path(ctx, Isometry(), VertexKind::A, x, length);
            CHECK(distance(fwd.vertices.back().pos, g.head(last)) < 1e-9);
        }
    }
}

TEST_CASE("code order agrees with boundary order") {
    for (auto [p, q, r] : {std::array{3, 4, 5}, {2, 3, 7}, {3, 4, kInfinite}}) {
        const CodingContext& ctx = context(p, q, r);
        const BoundaryArc& arc = ctx.spectacles().I_A2B;
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> frac(0.0, 1.0);
        int compared = 0;
        for (int i = 0; i < 100; ++i) {
            const double s = frac(rng) * arc.span(), t = frac(rng) * arc.span();
            const int o = sign(kBoundaryOrientation);
            const BoundaryPoint x(arc.left.theta + o * s), y(arc.left.theta + o * t);
            const std::string cx = letters(forward_path(ctx, Isometry(), VertexKind::A, x, 30).code);
            const std::string cy = letters(forward_path(ctx, Isometry(), VertexKind::A, y, 30).code);
            const std::size_t n = std::min(cx.size(), cy.size());
            if (cx.compare(0, n, cy, 0, n) == 0) continue;
            CHECK((cx.substr(0, n) < cy.substr(0, n)) == (s < t));
            ++compared;
        }
        CHECK(compared > 90);
    }
}

TEST_CASE("branching arcs lie in the base interval pair") {
    for (auto [p, q, r] : kTriples) {
        const CodingContext& ctx = context(p, q, r);
        CAPTURE(ctx.params().label());
        CHECK(verify_branching(ctx.group(), ctx.spectacles()));
        CHECK_FALSE(verify_branching(ctx.group(), widen(ctx.spectacles(), 0.1)));
    }
}

TEST_CASE("bi-infinite paths") {
    const CodingContext& ctx = context(3, 4, 5);
    CHECK_THROWS_AS(biinfinite_path(ctx, BoundaryPoint(1.0), BoundaryPoint(1.0)), Error);
    const GraphPath window = biinfinite_path(ctx, BoundaryPoint(0.3), BoundaryPoint(2.9));
    CHECK(window.vertices.size() > 10);
    CHECK(!window.certificate);

    // The bigon translation has xi as attracting point; its axis is coded by a periodic word.
    const Isometry& h = ctx.base_bigon().translation;
    const IsometryClass cls = classify(h);
    REQUIRE(cls.kind == IsometryClass::Kind::Hyperbolic);
    const GraphPath closed = biinfinite_path(ctx, cls.repelling, cls.attracting, h);
    REQUIRE(closed.certificate);
    CHECK(closed.period_shift >= 1);
    CHECK(closed.certificate->size() % 2 == 0);
    CHECK_THROWS_AS(biinfinite_path(ctx, cls.attracting, cls.repelling, h), Error);
}

TEST_CASE("reverse code") {
    const auto t = canonicalize(3, 4, 5);
    CHECK(reverse_code(parse_cyclic("<a b>"), t) == parse_cyclic("<a^2 b^3>"));
    CHECK(reverse_code(parse_cyclic("<a^2 b a b>"), t) == parse_cyclic("<a^2 b^3 a b^3>"));
}
