#include "trigon/verify.hpp"

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <memory>
#include <random>

#include "trigon/render.hpp"
#include "trigon/topology.hpp"

namespace trigon {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Runs a check, turning an exception into a failed result.
template <class F>
CheckResult guarded(int criterion, const char* name, F&& f) {
    const auto t0 = Clock::now();
    try {
        return f();
    } catch (const std::exception& e) {
        return {criterion, name, false, std::string("error: ") + e.what(), since(t0)};
    }
}

std::string letters(const Blocks& code) {
    Blocks merged;
    append(merged, code);
    return expand(merged);
}

}  // namespace

int consistent_paths(const TriangleGroup& group, const SpectaclesPair& S, const BoundaryPoint& x, int length,
                     DiskPoint* last) {
    int found = 0;
    std::function<void(const EdgeFrame&, int)> dfs = [&](const EdgeFrame& e, int depth) {
        if (!spectacle_contains(group, S, e, x)) return;
        if (depth == length) {
            ++found;
            if (last) *last = group.head(e);
            return;
        }
        const VertexKind head = e.head_kind();
        for (int k = 1; k < group.degree(head); ++k) dfs(group.outgoing(e.transform, head, k), depth + 1);
    };
    for (int k = 0; k < group.degree(VertexKind::A); ++k) dfs(group.outgoing(Isometry(), VertexKind::A, k), 1);
    return found;
}

namespace {

CheckResult check_kneading_impl(const TriangleParams& params) {
    const auto t0 = Clock::now();
    CheckResult r{1, "kneading reproduction", false, "", 0};
    const KneadingSet geo = geometric_kneading(TriangleGroup(params));
    const KneadingSet table = normalized(closed_form_kneading(params));
    r.seconds = since(t0);
    r.pass = geo == table && r.seconds < 10.0;
    r.detail = "u_L=" + to_string(geo.u_L) + " u_R=" + to_string(geo.u_R) + " v_L=" + to_string(geo.v_L) +
               " v_R=" + to_string(geo.v_R) + (geo == table ? " MATCH" : " DIFF");
    return r;
}

CheckResult check_exceptional_impl(const CodingContext& ctx) {
    const auto t0 = Clock::now();
    CheckResult r{2, "exceptional pair", false, "", 0};
    const auto [w_L, w_R] = closed_form_exceptional(ctx.params());
    const bool admissible = admissible_word(w_L, ctx.kneading()) && admissible_word(w_R, ctx.kneading());
    const bool axis = share_axis(ctx.group(), w_L, w_R, 1e-7);
    int bound = static_cast<int>(std::max(w_L.size(), w_R.size()));
    bound += bound % 2;
    const OrbitEnumeration list = enumerate_orbits(ctx, bound);
    int flagged = 0;
    bool merged = true, roundtrip = true;
    for (const auto& o : list.orbits) {
        if (o.word == w_R) merged = false;
        if (!o.exceptional) continue;
        ++flagged;
        merged = merged && o.word == w_L && o.partner && *o.partner == w_R;
        roundtrip = roundtrip && roundtrip_verify(ctx, o);
    }
    r.pass = admissible && axis && merged && flagged == 1 && roundtrip;
    r.detail = "w_L=" + to_string(w_L) + " w_R=" + to_string(w_R) + " admissible=" + (admissible ? "yes" : "no") +
               " shared axis=" + (axis ? "yes" : "no") + " merged at " + std::to_string(bound) +
               " blocks=" + (merged && flagged == 1 ? "yes" : "no");
    r.seconds = since(t0);
    return r;
}

CheckResult check_roundtrip_impl(const CodingContext& ctx, int max_blocks) {
    const auto t0 = Clock::now();
    CheckResult r{3, "round trip", false, "", 0};
    const OrbitEnumeration list = enumerate_orbits(ctx, max_blocks);
    int ok = 0;
    std::string first_bad;
    for (const auto& o : list.orbits) {
        if (roundtrip_verify(ctx, o))
            ++ok;
        else if (first_bad.empty())
            first_bad = to_string(o.word);
    }
    r.seconds = since(t0);
    const int n = static_cast<int>(list.orbits.size());
    r.pass = ok == n && r.seconds < 60.0;
    r.detail = std::to_string(ok) + "/" + std::to_string(n) + " orbits with <= " + std::to_string(max_blocks) +
               " blocks" + (first_bad.empty() ? "" : ", first failure " + first_bad);
    return r;
}

CheckResult check_uniqueness_impl(const CodingContext& ctx, std::uint64_t seed, int samples, int length) {
    const auto t0 = Clock::now();
    CheckResult r{4, "uniqueness", true, "", 0};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    int good = 0;
    for (int i = 0; i < samples; ++i) {
        const BoundaryPoint x(angle(rng));
        DiskPoint last;
        const int n = consistent_paths(ctx.group(), ctx.spectacles(), x, length, &last);
        const GraphPath fwd = forward_path(ctx, Isometry(), VertexKind::A, x, length);
        if (n == 1 && distance(fwd.vertices.back().pos, last) < 1e-9) ++good;
    }
    r.pass = good == samples;
    r.detail = std::to_string(good) + "/" + std::to_string(samples) + " points with exactly one consistent path of length " +
               std::to_string(length);
    r.seconds = since(t0);
    return r;
}

CheckResult check_ordering_impl(const CodingContext& ctx, std::uint64_t seed, int pairs) {
    const auto t0 = Clock::now();
    CheckResult r{5, "ordering", false, "", 0};
    const TriangleGroup& g = ctx.group();
    const Orientation o = ctx.spectacles().orientation;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    // Keep paths within hyperbolic distance ~18 of the origin, where spectacle tests stay exact.
    const GraphPath probe = forward_path(ctx, Isometry(), VertexKind::A, BoundaryPoint(1.0), 8);
    const double reach = distance(DiskPoint(), probe.vertices.back().pos);
    const int steps = std::clamp(static_cast<int>(8 * 18.0 / std::max(reach, 1e-9)), 8, 30);
    int agree = 0, decided = 0, attempts = 0;
    while (decided < pairs && attempts < 20 * pairs) {
        ++attempts;
        const VertexKind kind = unit(rng) < 0.5 ? VertexKind::A : VertexKind::B;
        const int k = static_cast<int>(unit(rng) * g.degree(kind)) % g.degree(kind);
        const EdgeFrame e = g.outgoing(Isometry(), kind, k);
        const BoundaryArc arc = edge_spectacle(g, ctx.spectacles(), e);
        const double s = unit(rng) * arc.span(o), t = unit(rng) * arc.span(o);
        const BoundaryPoint x(arc.left.theta + sign(o) * s), y(arc.left.theta + sign(o) * t);
        const GraphPath px = forward_path(ctx, Isometry(), kind, x, steps);
        const GraphPath py = forward_path(ctx, Isometry(), kind, y, steps);
        if (distance(px.vertices[1].pos, g.head(e)) > 1e-9 || distance(py.vertices[1].pos, g.head(e)) > 1e-9) continue;
        const std::string cx = letters(px.code), cy = letters(py.code);
        const std::size_t n = std::min(cx.size(), cy.size());
        if (cx.compare(0, n, cy, 0, n) == 0) continue;
        ++decided;
        if ((cx.compare(0, n, cy, 0, n) < 0) == (s < t)) ++agree;
    }
    r.pass = decided == pairs && agree == decided;
    r.detail = std::to_string(agree) + "/" + std::to_string(decided) + " pairs agree, paths of " +
               std::to_string(steps) + " edges";
    r.seconds = since(t0);
    return r;
}

CheckResult check_tiling_impl(const CodingContext& ctx, int depth) {
    const auto t0 = Clock::now();
    CheckResult r{6, "spectacle tiling", true, "", 0};
    const GraphBall ball = expand(ctx.group(), depth);
    const Orientation o = ctx.spectacles().orientation;
    int vertices = 0;
    double worst = 0.0;
    for (int v = 0; v < static_cast<int>(ball.vertices().size()); ++v) {
        const BallVertex& bv = ball.vertices()[static_cast<std::size_t>(v)];
        if (!bv.interior) continue;
        ++vertices;
        std::vector<BoundaryArc> arcs;
        double total = 0.0;
        for (int u : bv.rotation) {
            arcs.push_back(edge_spectacle(ctx.group(), ctx.spectacles(), ball, {v, u}));
            total += arcs.back().span(o);
        }
        worst = std::max(worst, std::abs(total - kTwoPi));
        for (const auto& a : arcs) {
            double gap = kTwoPi;
            for (const auto& b : arcs) gap = std::min(gap, circular_distance(a.right.theta, b.left.theta));
            worst = std::max(worst, gap);
        }
    }
    r.pass = vertices > 0 && worst < 1e-9;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d interior vertices, worst gap/overlap %.2e", vertices, worst);
    r.detail = buf;
    r.seconds = since(t0);
    return r;
}

CheckResult check_homology_impl(const std::vector<TriangleParams>& triples) {
    const auto t0 = Clock::now();
    CheckResult r{7, "homology", true, "", 0};
    int ok = 0;
    for (const auto& t : triples) {
        const AbelianGroupDesc g = h1(surgery_presentation(t));
        const long long expected = std::llabs(static_cast<long long>(t.p) * t.q * t.r - t.p * t.q - t.q * t.r - t.r * t.p);
        if (g.free_rank == 0 && g.order() == expected) ++ok;
    }
    const bool named = to_string(h1(surgery_presentation(canonicalize(2, 3, 7)))) == "0" &&
                       to_string(h1(surgery_presentation(canonicalize(3, 3, 4)))) == "Z/3" &&
                       to_string(h1(surgery_presentation(canonicalize(3, 4, 5)))) == "Z/13";
    r.pass = ok == static_cast<int>(triples.size()) && named;
    r.detail = std::to_string(ok) + "/" + std::to_string(triples.size()) + " orders match; (2,3,7), (3,3,4), (3,4,5) " +
               (named ? "as expected" : "differ");
    r.seconds = since(t0);
    return r;
}

CheckResult check_branching_impl(const CodingContext& ctx) {
    const auto t0 = Clock::now();
    CheckResult r{8, "branching", false, "", 0};
    const bool base = verify_branching(ctx.group(), ctx.spectacles());
    const bool widened = verify_branching(ctx.group(), widen(ctx.spectacles(), 0.1));
    r.pass = base && !widened;
    r.detail = std::string("S^f ") + (base ? "passes" : "fails") + ", widened pair " + (widened ? "passes" : "fails");
    r.seconds = since(t0);
    return r;
}

CheckResult check_determinism_impl(const CodingContext& ctx, int max_blocks, int depth) {
    const auto t0 = Clock::now();
    CheckResult r{9, "determinism", false, "", 0};
    auto orbits = [&] { return orbits_json(enumerate_orbits(ctx, max_blocks), ctx.params()); };
    auto scene = [&] {
        Overlays o;
        o.spectacles = ctx.spectacles();
        o.bigon = bigon_faces(ctx.group(), 4);
        return render_scene(expand(ctx.group(), depth), o);
    };
    const bool same_orbits = orbits() == orbits();
    const bool same_scene = scene() == scene();
    r.pass = same_orbits && same_scene;
    r.detail = std::string("orbits ") + (same_orbits ? "identical" : "differ") + ", render " +
               (same_scene ? "identical" : "differ");
    r.seconds = since(t0);
    return r;
}

}  // namespace

CheckResult check_kneading(const TriangleParams& params) {
    return guarded(1, "kneading reproduction", [&] { return check_kneading_impl(params); });
}

CheckResult check_exceptional(const CodingContext& ctx) {
    return guarded(2, "exceptional pair", [&] { return check_exceptional_impl(ctx); });
}

CheckResult check_roundtrip(const CodingContext& ctx, int max_blocks) {
    return guarded(3, "round trip", [&] { return check_roundtrip_impl(ctx, max_blocks); });
}

CheckResult check_uniqueness(const CodingContext& ctx, std::uint64_t seed, int samples, int length) {
    return guarded(4, "uniqueness", [&] { return check_uniqueness_impl(ctx, seed, samples, length); });
}

CheckResult check_ordering(const CodingContext& ctx, std::uint64_t seed, int pairs) {
    return guarded(5, "ordering", [&] { return check_ordering_impl(ctx, seed, pairs); });
}

CheckResult check_tiling(const CodingContext& ctx, int depth) {
    return guarded(6, "spectacle tiling", [&] { return check_tiling_impl(ctx, depth); });
}

CheckResult check_homology(const std::vector<TriangleParams>& triples) {
    return guarded(7, "homology", [&] { return check_homology_impl(triples); });
}

CheckResult check_branching(const CodingContext& ctx) {
    return guarded(8, "branching", [&] { return check_branching_impl(ctx); });
}

CheckResult check_determinism(const CodingContext& ctx, int max_blocks, int depth) {
    return guarded(9, "determinism", [&] { return check_determinism_impl(ctx, max_blocks, depth); });
}

std::vector<CheckResult> verify_triple(const TriangleParams& params, std::uint64_t seed) {
    std::vector<CheckResult> out;
    out.push_back(check_kneading(params));
    std::unique_ptr<CodingContext> made;
    try {
        made = std::make_unique<CodingContext>(params);
    } catch (const std::exception& e) {
        out.push_back({0, "coding context", false, std::string("error: ") + e.what(), 0});
        return out;
    }
    const CodingContext& ctx = *made;
    if (!params.r_infinite()) out.push_back(check_exceptional(ctx));
    out.push_back(check_roundtrip(ctx));
    out.push_back(check_uniqueness(ctx, seed));
    out.push_back(check_ordering(ctx, seed));
    out.push_back(check_tiling(ctx));
    if (!params.r_infinite()) out.push_back(check_homology({params}));
    out.push_back(check_branching(ctx));
    out.push_back(check_determinism(ctx));
    return out;
}

std::string to_string(const CheckResult& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, " (%.3fs)", r.seconds);
    return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.criterion) + "] " + r.name + ": " +
           r.detail + buf;
}

}  // namespace trigon
