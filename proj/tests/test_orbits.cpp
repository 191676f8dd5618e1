#include <doctest.h>

#include <json.hpp>

#include "trigon/orbits.hpp"

using namespace trigon;

namespace {

const CodingContext& context(int p, int q, int r) {
    static std::map<std::array<int, 3>, std::unique_ptr<CodingContext>> cache;
    auto& slot = cache[{p, q, r}];
    if (!slot) slot = std::make_unique<CodingContext>(canonicalize(p, q, r));
    return *slot;
}

std::vector<std::string> words_of(const OrbitEnumeration& list) {
    std::vector<std::string> out;
    for (const auto& o : list.orbits) out.push_back(to_string(o.word));
    return out;
}

}  // namespace

TEST_CASE("two-block orbits of (3,4,5)") {
    const CodingContext& ctx = context(3, 4, 5);
    const auto list = enumerate_orbits(ctx, 2);
    CHECK(words_of(list) == std::vector<std::string>{"<a^2 b^2>", "<a^2 b^3>", "<a b>", "<a b^2>"});
    CHECK(list.cusp_words.empty());
    // The letterwise oracle over all six candidates.
    for (int j = 1; j <= 2; ++j)
        for (int k = 1; k <= 3; ++k) {
            const CyclicWord w({{Letter::a, j}, {Letter::b, k}});
            const bool listed = std::any_of(list.orbits.begin(), list.orbits.end(),
                                            [&](const PeriodicOrbit& o) { return o.word == w; });
            CHECK(listed == admissible_word(w, ctx.kneading()));
        }
    CHECK_FALSE(admissible_word(parse_cyclic("<a^2 b>"), ctx.kneading()));
    CHECK_THROWS_AS(enumerate_orbits(ctx, 3), Error);
    CHECK_THROWS_AS(enumerate_orbits(ctx, 0), Error);
}

TEST_CASE("two-block orbits of (3,4,inf)") {
    const CodingContext& ctx = context(3, 4, kInfinite);
    const auto list = enumerate_orbits(ctx, 2);
    CHECK(list.orbits.size() == 4);
    REQUIRE(list.cusp_words.size() == 1);
    CHECK(to_string(list.cusp_words[0]) == "<a^2 b>");
    CHECK(classify(holonomy(ctx.group(), parse_cyclic("<a b^3>"))).kind == IsometryClass::Kind::Parabolic);
}

TEST_CASE("pruned enumeration equals brute force") {
    for (auto [p, q, r] : {std::array{3, 4, 5}, {3, 3, 4}, {2, 3, 7}, {2, 4, 6}, {3, 4, kInfinite}}) {
        const CodingContext& ctx = context(p, q, r);
        CAPTURE(ctx.params().label());
        CHECK(admissible_necklaces(ctx.params(), ctx.kneading(), 4) ==
              admissible_necklaces_brute(ctx.params(), ctx.kneading(), 4));
    }
}

TEST_CASE("enumeration yields primitive canonical necklaces") {
    const CodingContext& ctx = context(3, 4, 5);
    const auto list = enumerate_orbits(ctx, 6);
    for (std::size_t i = 0; i < list.orbits.size(); ++i) {
        const CyclicWord& w = list.orbits[i].word;
        CHECK(w.primitive());
        CHECK(w.size() % 2 == 0);
        CHECK(CyclicWord(w.blocks()) == w);
        if (i > 0) {
            const CyclicWord& v = list.orbits[i - 1].word;
            CHECK((v.size() < w.size() || (v.size() == w.size() && lex_compare(v.rotation(0), w.rotation(0)) < 0)));
        }
    }
}

TEST_CASE("holonomy") {
    const CodingContext& ctx = context(3, 4, 5);
    const TriangleGroup& g = ctx.group();
    const Isometry h = holonomy(g, parse_cyclic("<a b>"));
    CHECK(classify(h).kind == IsometryClass::Kind::Hyperbolic);
    CHECK(std::abs(h.trace()) > 2);

    const CyclicWord w = parse_cyclic("<a^2 b a b^3>");
    const Isometry hw = holonomy(g, w);
    // Rotations starting with an a-block are conjugate.
    const CyclicWord rotated(Blocks{{Letter::a, 1}, {Letter::b, 3}, {Letter::a, 2}, {Letter::b, 1}});
    CHECK(rotated == w);
    // Starting two blocks later conjugates by the first two turns.
    const EdgeFrame e1 = g.outgoing(Isometry(), VertexKind::A, 2);
    const EdgeFrame e2 = g.outgoing(e1.transform, VertexKind::B, g.degree(VertexKind::B) - 1);
    const Isometry conj = e2.transform.inverse() * hw * e2.transform;
    CHECK(std::abs(std::abs(conj.trace()) - std::abs(hw.trace())) < 1e-8);

    CHECK_THROWS_AS(holonomy(g, CyclicWord(Blocks{{Letter::a, 3}, {Letter::b, 1}})), Error);
}

TEST_CASE("axes of a holonomy and its inverse swap") {
    const CodingContext& ctx = context(3, 4, 5);
    const PeriodicOrbit o = make_orbit(ctx.group(), parse_cyclic("<a^2 b^3 a b>"));
    const IsometryClass inv = classify(o.holonomy.inverse());
    CHECK(circular_distance(inv.attracting.theta, o.repelling.theta) < 1e-12);
    CHECK(circular_distance(inv.repelling.theta, o.attracting.theta) < 1e-12);
}

TEST_CASE("round trip") {
    const CodingContext& ctx = context(3, 4, 5);
    CHECK(roundtrip_verify(ctx, make_orbit(ctx.group(), parse_cyclic("<a b>"))));
    CHECK(roundtrip_verify(ctx, make_orbit(ctx.group(), parse_cyclic("<a^2 b^3>"))));
    PeriodicOrbit wrong = make_orbit(ctx.group(), parse_cyclic("<a b>"));
    wrong.word = parse_cyclic("<a b^2>");
    CHECK_FALSE(roundtrip_verify(ctx, wrong));
}

TEST_CASE("exceptional pair") {
    for (auto [p, q, r] : {std::array{3, 4, 5}, {3, 3, 4}, {2, 3, 7}, {2, 4, 5}}) {
        const CodingContext& ctx = context(p, q, r);
        CAPTURE(ctx.params().label());
        const auto [w_L, w_R] = closed_form_exceptional(ctx.params());
        CHECK(share_axis(ctx.group(), w_L, w_R));
        const double tl = std::abs(holonomy(ctx.group(), w_L).trace());
        const double tr = std::abs(holonomy(ctx.group(), w_R).trace());
        CHECK(std::abs(tl - tr) < 1e-7);
        const auto list = enumerate_orbits(ctx, 8);
        int flagged = 0;
        for (const auto& o : list.orbits) {
            CHECK_FALSE(o.word == w_R);
            if (!o.exceptional) continue;
            ++flagged;
            CHECK(o.word == w_L);
            CHECK(roundtrip_verify(ctx, o));
        }
        CHECK(flagged == 1);
    }
    const CodingContext& ctx = context(3, 4, 5);
    CHECK_FALSE(share_axis(ctx.group(), parse_cyclic("<a b>"), parse_cyclic("<a^2 b^3>")));
}

TEST_CASE("distinct necklaces have distinct holonomy classes") {
    const CodingContext& ctx = context(3, 4, 5);
    const auto list = enumerate_orbits(ctx, 4);
    for (std::size_t i = 0; i < list.orbits.size(); ++i)
        for (std::size_t j = i + 1; j < list.orbits.size(); ++j) {
            const auto& x = list.orbits[i];
            const auto& y = list.orbits[j];
            const bool traces = std::abs(std::abs(x.holonomy.trace()) - std::abs(y.holonomy.trace())) > 1e-6;
            const bool axes = circular_distance(x.attracting.theta, y.attracting.theta) > 1e-6 ||
                              circular_distance(x.repelling.theta, y.repelling.theta) > 1e-6;
            CHECK((traces || axes));
        }
}

TEST_CASE("tango") {
    const CodingContext& ctx = context(3, 4, 5);
    const TangoPath t = tango(ctx.group(), parse_cyclic("<a b>"));
    REQUIRE(t.arcs.size() == 2);
    CHECK((t.arcs[0].sectors == 1 && t.arcs[1].sectors == 1));
    CHECK((t.arcs[0].direction == 1 && t.arcs[1].direction == -1));
    const TangoPath u = tango(ctx.group(), parse_cyclic("<a^2 b^3>"));
    CHECK((u.arcs[0].sectors == 2 && u.arcs[1].sectors == 3));
    CHECK(tango(ctx.group(), parse_cyclic("<a^2 b a b^3 a b^2>")).arcs.size() == 6);
    CHECK(distance(u.arcs[0].to, u.arcs[1].vertex) < 1e-12);
    CHECK_THROWS_AS(tango(ctx.group(), CyclicWord(Blocks{{Letter::a, 1}, {Letter::b, 4}})), Error);
}

TEST_CASE("orbit json") {
    const CodingContext& ctx = context(3, 4, kInfinite);
    const auto j = nlohmann::json::parse(orbits_json(enumerate_orbits(ctx, 2), ctx.params()));
    CHECK(j["schema"] == 1);
    CHECK(j["params"]["r"] == "inf");
    CHECK(j["orbits"].size() == 4);
    CHECK(j["cusp_words"][0] == "<a^2 b>");
    const auto swapped = canonicalize(4, 3, kInfinite);
    const CodingContext sctx(swapped);
    const auto k = nlohmann::json::parse(orbits_json(enumerate_orbits(sctx, 2), swapped));
    CHECK(k["cusp_words"][0] == "<a b^2>");
}
