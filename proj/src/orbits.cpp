#include "trigon/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <json.hpp>

namespace trigon {

namespace {

struct Generation {
    const TriangleParams& params;
    const KneadingSet& k;
    int max_blocks;
    bool prune;
    std::vector<CyclicWord> out;
    Blocks prefix;

    /// Some supershift of every completion already leaves the kneading bounds.
    bool hopeless() const {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const Blocks tail(prefix.begin() + static_cast<std::ptrdiff_t>(i), prefix.end());
            const std::string s = expand(tail);
            const bool is_a = tail.front().letter == Letter::a;
            if (s < expand(is_a ? k.u_L : k.v_L, s.size())) return true;
            if (s > expand(is_a ? k.u_R : k.v_R, s.size())) return true;
        }
        return false;
    }

    void visit() {
        const int n = static_cast<int>(prefix.size());
        if (n > 0 && n % 2 == 0) {
            CyclicWord w(prefix);
            if (w.blocks() == prefix && w.primitive() && admissible_word(w, k)) out.push_back(std::move(w));
        }
        if (n == max_blocks) return;
        const Letter letter = n % 2 == 0 ? Letter::a : Letter::b;
        const int limit = letter == Letter::a ? params.p - 1 : params.q - 1;
        for (int e = 1; e <= limit; ++e) {
            prefix.push_back({letter, e});
            if (!prune || !hopeless()) visit();
            prefix.pop_back();
        }
    }
};

std::vector<CyclicWord> generate(const TriangleParams& params, const KneadingSet& k, int max_blocks, bool prune) {
    Generation g{params, k, max_blocks, prune, {}, {}};
    g.visit();
    return std::move(g.out);
}

/// Frames of the path of w over one period, starting with B0 -> A0.
std::vector<EdgeFrame> layout(const TriangleGroup& group, const CyclicWord& w) {
    const TriangleParams& t = group.params();
    if (w.size() == 0 || w.size() % 2 != 0 || !alternates(w.blocks(), true))
        throw Error(ErrorCode::InvalidArgument, "cyclic word must alternate with an even number of blocks");
    check_exponents(w.blocks(), t);
    std::vector<EdgeFrame> frames{{Isometry(), false}};
    // Independent layout by positions, to validate the symbolic frames.
    DiskPoint prev = group.base(VertexKind::B), cur = group.base(VertexKind::A);
    for (const Block& b : w.blocks()) {
        const EdgeFrame& e = frames.back();
        const VertexKind head = e.head_kind();
        if ((head == VertexKind::A) != (b.letter == Letter::a))
            throw Error(ErrorCode::EdgeMismatch, "block letter does not match the vertex kind");
        const int deg = group.degree(head);
        const int k = b.letter == Letter::a ? b.exp : deg - b.exp;
        frames.push_back(group.outgoing(e.transform, head, k));
        const DiskPoint next = transform(rotation_about(cur, k, deg), prev);
        prev = cur;
        cur = next;
    }
    const EdgeFrame& last = frames.back();
    const DiskPoint tail = group.tail(last), head = group.head(last);
    if (last.a_to_b || std::hypot(tail.re - prev.re, tail.im - prev.im) > 1e-8 ||
        std::hypot(head.re - cur.re, head.im - cur.im) > 1e-8)
        throw Error(ErrorCode::EdgeMismatch, "holonomy does not map the first edge onto the last");
    return frames;
}

bool same_axis(const IsometryClass& x, const IsometryClass& y, double tol) {
    return circular_distance(x.attracting.theta, y.attracting.theta) < tol &&
           circular_distance(x.repelling.theta, y.repelling.theta) < tol;
}

}  // namespace

std::vector<CyclicWord> admissible_necklaces(const TriangleParams& params, const KneadingSet& k, int max_blocks) {
    return generate(params, k, max_blocks, true);
}

std::vector<CyclicWord> admissible_necklaces_brute(const TriangleParams& params, const KneadingSet& k,
                                                   int max_blocks) {
    return generate(params, k, max_blocks, false);
}

Isometry holonomy(const TriangleGroup& group, const CyclicWord& w) { return layout(group, w).back().transform; }

PeriodicOrbit make_orbit(const TriangleGroup& group, const CyclicWord& w) {
    PeriodicOrbit o;
    o.word = w;
    o.holonomy = holonomy(group, w);
    const IsometryClass cls = classify(o.holonomy, group.tolerances());
    if (cls.kind != IsometryClass::Kind::Hyperbolic)
        throw Error(ErrorCode::ValidationFailure,
                    "holonomy of " + to_string(w) + " is " + to_string(cls.kind) + ", not hyperbolic");
    o.attracting = cls.attracting;
    o.repelling = cls.repelling;
    return o;
}

OrbitEnumeration enumerate_orbits(const CodingContext& ctx, int max_blocks) {
    if (max_blocks < 2 || max_blocks % 2 != 0)
        throw Error(ErrorCode::InvalidArgument, "max_blocks must be even and at least 2");
    const TriangleGroup& group = ctx.group();
    const TriangleParams& t = ctx.params();
    OrbitEnumeration out;
    for (const CyclicWord& w : admissible_necklaces(t, ctx.kneading(), max_blocks)) {
        const IsometryClass cls = classify(holonomy(group, w), group.tolerances());
        if (cls.kind == IsometryClass::Kind::Parabolic && t.r_infinite())
            out.cusp_words.push_back(w);
        else
            out.orbits.push_back(make_orbit(group, w));
    }
    if (!t.r_infinite()) {
        const auto [w_L, w_R] = closed_form_exceptional(t);
        auto find = [&](const CyclicWord& w) {
            return std::find_if(out.orbits.begin(), out.orbits.end(), [&](const PeriodicOrbit& o) { return o.word == w; });
        };
        auto left = find(w_L), right = find(w_R);
        if (left != out.orbits.end() && right != out.orbits.end()) {
            left->exceptional = true;
            left->partner = w_R;
            out.orbits.erase(right);
        }
    }
    std::stable_sort(out.orbits.begin(), out.orbits.end(), [](const PeriodicOrbit& x, const PeriodicOrbit& y) {
        if (x.word.size() != y.word.size()) return x.word.size() < y.word.size();
        return lex_compare(x.word.rotation(0), y.word.rotation(0)) < 0;
    });
    return out;
}

bool roundtrip_verify(const CodingContext& ctx, const PeriodicOrbit& orbit) {
    try {
        const GraphPath path = biinfinite_path(ctx, orbit.repelling, orbit.attracting, orbit.holonomy);
        if (!path.certificate) return false;
        return *path.certificate == orbit.word || (orbit.partner && *path.certificate == *orbit.partner);
    } catch (const Error&) {
        return false;
    }
}

bool share_axis(const TriangleGroup& group, const CyclicWord& w1, const CyclicWord& w2, double tol) {
    if (group.params().r_infinite()) throw Error(ErrorCode::InfiniteFace, "faces are infinite when r is infinite");
    const IsometryClass axis = classify(holonomy(group, w1), group.tolerances());
    if (axis.kind != IsometryClass::Kind::Hyperbolic) return false;
    const Isometry h2 = holonomy(group, w2);
    const int face_len = 2 * group.params().r;
    for (const EdgeFrame& e : layout(group, w1)) {
        for (EdgeFrame f : {e, TriangleGroup::reverse(e)}) {
            for (int s = 0; s < face_len; ++s, f = group.face_step(f)) {
                const EdgeFrame start = f.head_kind() == VertexKind::A ? f : TriangleGroup::reverse(f);
                const Isometry g = start.transform * h2 * start.transform.inverse();
                const IsometryClass cls = classify(g, group.tolerances());
                if (cls.kind == IsometryClass::Kind::Hyperbolic && same_axis(cls, axis, tol)) return true;
            }
        }
    }
    return false;
}

TangoPath tango(const TriangleGroup& group, const CyclicWord& w) {
    const std::vector<EdgeFrame> frames = layout(group, w);
    TangoPath out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        TangoArc arc;
        arc.kind = frames[i].head_kind();
        arc.vertex = group.head(frames[i]);
        arc.from = group.tail(frames[i]);
        arc.to = group.head(frames[i + 1]);
        arc.sectors = w.blocks()[i].exp;
        arc.direction = arc.kind == VertexKind::A ? 1 : -1;
        out.arcs.push_back(arc);
    }
    return out;
}

std::string orbits_json(const OrbitEnumeration& list, const TriangleParams& params, int indent) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema"] = 1;
    j["params"] = {{"p", params.p},
                   {"q", params.q},
                   {"r", params.r_infinite() ? ordered_json("inf") : ordered_json(params.r)}};
    auto& arr = j["orbits"] = ordered_json::array();
    for (const auto& o : list.orbits) {
        ordered_json item;
        item["word"] = to_string(relabel(o.word, params));
        item["blocks"] = o.word.size();
        item["trace"] = std::abs(o.holonomy.trace());
        item["attracting"] = o.attracting.theta;
        item["repelling"] = o.repelling.theta;
        item["exceptional"] = o.exceptional;
        item["partner"] = o.partner ? ordered_json(to_string(relabel(*o.partner, params))) : ordered_json();
        arr.push_back(std::move(item));
    }
    auto& cusp = j["cusp_words"] = ordered_json::array();
    for (const auto& w : list.cusp_words) cusp.push_back(to_string(relabel(w, params)));
    return j.dump(indent);
}

}  // namespace trigon
