#include <doctest.h>

#include <random>

#include "trigon/words.hpp"

using namespace trigon;

namespace {

EPWord W(const char* text) { return parse_epword(text); }

// Letterwise comparison of long explicit prefixes.
int naive_compare(const EPWord& x, const EPWord& y) {
    const std::string sx = expand(x, 400), sy = expand(y, 400);
    return sx < sy ? -1 : (sx > sy ? 1 : 0);
}

EPWord random_word(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, 3), plen(1, 2), ex(1, 3), start(0, 1);
    Blocks pre, per;
    Letter l = start(rng) ? Letter::a : Letter::b;
    for (int i = len(rng); i > 0; --i, l = swap_letter(l)) pre.push_back({l, ex(rng)});
    for (int i = 2 * plen(rng); i > 0; --i, l = swap_letter(l)) per.push_back({l, ex(rng)});
    return EPWord(pre, per);
}

}  // namespace

TEST_CASE("supershift") {
    CHECK(supershift(W("[a b]")) == W("[b a]"));
    CHECK(supershift(W("(a^2 b) [a^2 b^2]")) == W("(b) [a^2 b^2]"));
    CHECK(supershift(supershift(W("[a^2 b]"))) == W("[a^2 b]"));
}

TEST_CASE("lexicographic order") {
    CHECK(lex_compare(W("[a b]"), W("[b a]")) < 0);
    CHECK(lex_compare(W("[a^2 b]"), W("[a^2 b a^2 b^2]")) < 0);
    CHECK(expand(W("[a^2 b]"), 7) == "aabaaba");
    CHECK(expand(W("[a^2 b a^2 b^2]"), 7) == "aabaabb");
    CHECK(lex_compare(W("[a b]"), W("(a) [b a]")) == 0);
    CHECK(lex_compare(W("(a^2) [b a^3]"), W("(a^2 b a^3) [b a^3]")) == 0);

    std::mt19937_64 rng(5);
    std::vector<EPWord> pool;
    for (int i = 0; i < 60; ++i) pool.push_back(random_word(rng));
    for (const auto& x : pool) {
        for (const auto& y : pool) {
            const auto c = lex_compare(x, y);
            const int n = naive_compare(x, y);
            CHECK(((c < 0 && n < 0) || (c == 0 && n == 0) || (c > 0 && n > 0)));
            CHECK((lex_compare(y, x) < 0) == (c > 0));
            CHECK((c == 0) == (x.normalized() == y.normalized()));
        }
    }
    for (const auto& x : pool)
        for (const auto& y : pool)
            for (int k = 0; k < 5; ++k) {
                const auto& z = pool[static_cast<std::size_t>(k)];
                if (lex_compare(x, y) <= 0 && lex_compare(y, z) <= 0) CHECK(lex_compare(x, z) <= 0);
            }
}

TEST_CASE("normal form") {
    CHECK(W("(a) [b a]").normalized() == W("[a b]"));
    CHECK(W("[a b a b]").normalized() == W("[a b]"));
    CHECK(W("(b a^2 b) [a^2 b a^2 b]").normalized() == W("[b a^2]"));
    CHECK(W("(a^3 b a^2) [b a^2]").normalized() == W("(a^3) [b a^2]"));
}

TEST_CASE("kneading closed forms") {
    const auto k345 = closed_form_kneading(canonicalize(3, 4, 5));
    CHECK(k345.u_L == W("[a^2 b a^2 b^2]"));
    CHECK(k345.v_R == W("[b^3 a b^3 a^2]"));
    CHECK(k345.v_L == W("(b) [a^2 b a^2 b^2]"));
    CHECK(k345.u_R == W("(a) [b^3 a b^3 a^2]"));

    CHECK(closed_form_kneading(canonicalize(3, 3, 4)).u_L == W("[a^2 b a b a^2 b^2]"));

    const auto k237 = closed_form_kneading(canonicalize(2, 3, 7));
    CHECK(k237.u_L == W("[a b a b a b^2]"));
    CHECK(k237.v_R == W("(b^2) [a b^2 a b]"));

    const auto k34i = closed_form_kneading(canonicalize(3, 4, kInfinite));
    CHECK(k34i.u_L == W("[a^2 b]"));
    CHECK(k34i.v_R == W("[b^3 a]"));

    // r = 5 with p = 2: the repeated factor disappears.
    CHECK(closed_form_kneading(canonicalize(2, 4, 5)).v_R == W("(b^3) [a b^2]"));
    CHECK(closed_form_kneading(canonicalize(2, 4, 6)).v_R == W("(b^3) [a b^3 a b^2]"));
    CHECK(closed_form_kneading(canonicalize(2, 4, 6)).u_L == W("[a b a b^2]"));

    for (auto [p, q, r] : {std::array{3, 4, 5}, {3, 3, 4}, {4, 5, 6}, {2, 3, 7}, {2, 4, 5}, {2, 4, 6},
                           {3, 4, kInfinite}, {2, 3, kInfinite}, {5, 5, 5}, {3, 7, 8}}) {
        const auto t = canonicalize(p, q, r);
        const auto k = closed_form_kneading(t);
        CHECK(k.v_L == prepend({Letter::b, 1}, k.u_L));
        CHECK(k.u_R == prepend({Letter::a, 1}, k.v_R));
        check_exponents(k.u_L.period(), t);
        check_exponents(k.v_R.period(), t);
        check_exponents(k.v_R.preperiod(), t);
        // Left-closed: u_L meets its own constraint.
        CHECK(lex_compare(k.u_L, k.u_R) < 0);
        CHECK(lex_compare(k.v_L, k.v_R) < 0);
    }
}

TEST_CASE("exceptional pair closed forms") {
    const auto [wl, wr] = closed_form_exceptional(canonicalize(3, 4, 5));
    CHECK(wl == CyclicWord(parse_blocks("a^2 b a b")));
    CHECK(wr == CyclicWord(parse_blocks("b^3 a b^2 a")));
    CHECK(to_string(wr) == "<a b^2 a b^3>");

    const auto [xl, xr] = closed_form_exceptional(canonicalize(2, 3, 7));
    CHECK(xl == CyclicWord(parse_blocks("a b a b a b^2")));
    CHECK(xr == CyclicWord(parse_blocks("a b^2 a b")));
    CHECK_THROWS_AS(closed_form_exceptional(canonicalize(3, 4, kInfinite)), Error);

    for (auto [p, q, r] : {std::array{3, 4, 5}, {3, 3, 4}, {4, 5, 6}, {2, 3, 7}, {2, 4, 5}, {2, 4, 6}}) {
        const auto t = canonicalize(p, q, r);
        const auto k = closed_form_kneading(t);
        const auto [a, b] = closed_form_exceptional(t);
        CHECK(admissible_word(a, k));
        CHECK(admissible_word(b, k));
    }
}

TEST_CASE("admissibility") {
    const auto k = closed_form_kneading(canonicalize(3, 4, 5));
    CHECK(admissible_word(parse_cyclic("<a b>"), k));
    CHECK_FALSE(admissible_word(parse_cyclic("<a^2 b>"), k));
    CHECK(admissible_word(parse_cyclic("<a^2 b^3>"), k));
    CHECK(admissible_word(k.u_L, k));
    CHECK_FALSE(admissible_word(k.u_R, k));
    CHECK_FALSE(admissible_word(k.v_R, k));

    const auto ki = closed_form_kneading(canonicalize(3, 4, kInfinite));
    // (a b^3) expands to u_R itself and falls on the open end.
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(admissible_word(CyclicWord({{Letter::a, i}, {Letter::b, j}}), ki) == !(i == 1 && j == 3));
}

TEST_CASE("relabel") {
    const auto swapped = canonicalize(4, 3, 5);
    REQUIRE(swapped.pq_swapped);
    const CyclicWord w = parse_cyclic("<a^2 b>");
    CHECK(relabel(w, swapped) == parse_cyclic("<a b^2>"));
    CHECK(relabel(relabel(w, swapped), swapped) == w);
    CHECK(relabel(w, canonicalize(3, 4, 5)) == w);
    const EPWord e = W("(b) [a^2 b]");
    CHECK(relabel(relabel(e, swapped), swapped) == e);
}

TEST_CASE("text syntax") {
    for (const char* s : {"[a^2 b a^2 b^2]", "(b^3) [a b^2]", "(a) [b^3 a b^3 a^2]", "[a b]"})
        CHECK(to_string(parse_epword(s)) == s);
    CHECK(to_string(parse_cyclic("<a^2 b a b>")) == "<a^2 b a b>");
    CHECK(to_string(parse_cyclic("<b a^2>")) == "<a^2 b>");
    CHECK(to_string(parse_blocks("a^2 b a b^3")) == "a^2 b a b^3");
    CHECK_THROWS_AS(parse_epword("[a a]"), Error);
    CHECK_THROWS_AS(parse_epword("[a b"), Error);
    CHECK_THROWS_AS(parse_epword("[a^0 b]"), Error);
    CHECK_THROWS_AS(parse_cyclic("<a b a>"), Error);
    CHECK_THROWS_AS(parse_epword("(a) [a b]"), Error);
    CHECK_THROWS_AS(check_exponents(parse_blocks("a^3 b"), canonicalize(3, 4, 5)), Error);
}

TEST_CASE("cyclic words") {
    const CyclicWord w = parse_cyclic("<a b a b>");
    CHECK_FALSE(w.primitive());
    CHECK(parse_cyclic("<a^2 b a b>").primitive());
    CHECK(parse_cyclic("<b^3 a b^2 a>") == parse_cyclic("<a b^2 a b^3>"));
}
