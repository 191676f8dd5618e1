#include "trigon/coding.hpp"

#include <cmath>

#include <json.hpp>

namespace trigon {

namespace {

DiskPoint base_midpoint(const TriangleGroup& group) {
    const double d = distance(group.triangle().A0, group.triangle().B0);
    return DiskPoint(std::tanh(d / 4.0), 0.0);
}

EdgeFrame left_multiply(const Isometry& h, const EdgeFrame& e) { return {h * e.transform, e.a_to_b}; }

EdgeFrame frame_of(const TriangleGroup& group, const GraphBall& ball, const DirectedEdge& e) {
    const bool a_to_b = ball.vertices()[static_cast<std::size_t>(e.src)].kind == VertexKind::A;
    return {edge_transform(group, ball, e), a_to_b};
}

const DiskPoint kOrigin(0.0, 0.0);

/// Pulls e back by r^{-1} while that brings its head closer to the origin; returns the number of pulls.
int pull_back(const TriangleGroup& group, const Isometry& r_inv, EdgeFrame& e) {
    int pulls = 0;
    for (;;) {
        const DiskPoint head = group.head(e);
        const EdgeFrame moved = left_multiply(r_inv, e);
        if (distance(kOrigin, group.head(moved)) < distance(kOrigin, head) - 1e-12) {
            e = moved;
            ++pulls;
        } else {
            return pulls;
        }
    }
}

/// Frames already visited by a walk near the origin; a revisited edge is
/// replaced by its first, less rounded, copy.
class FrameCache {
public:
    /// Index of the cached copy of e (inserting e when new); `e` is snapped in place.
    std::size_t snap(EdgeFrame& e, bool* hit = nullptr) {
        for (std::size_t i = 0; i < frames_.size(); ++i) {
            const EdgeFrame& f = frames_[i];
            if (f.a_to_b == e.a_to_b && (f.transform.inverse() * e.transform).distance_to_identity() < 1e-6) {
                e = f;
                if (hit) *hit = true;
                return i;
            }
        }
        frames_.push_back(e);
        if (hit) *hit = false;
        return frames_.size() - 1;
    }

private:
    std::vector<EdgeFrame> frames_;
};

}  // namespace

Bigon bigon(const TriangleGroup& group, const EdgeFrame& e) {
    Bigon b;
    b.start = e;
    b.chain.push_back(e);
    const TriangleParams& t = group.params();
    if (t.r_infinite()) {
        const EdgeFrame f = group.face_step(group.face_step(e));
        b.chain.push_back(f);
        b.translation = f.transform * e.transform.inverse();
        b.extremity = std::get<BoundaryPoint>(group.face_center(e));
        return b;
    }
    EdgeFrame cur = e;
    for (int i = 1; i <= 2 && b.period == 0; ++i) {
        for (int s = 0; s < t.r; ++s) cur = group.face_step(cur);
        cur = TriangleGroup::reverse(cur);
        b.chain.push_back(cur);
        if (cur.a_to_b == e.a_to_b) b.period = i;
    }
    if (b.period == 0) throw Error(ErrorCode::ValidationFailure, "bigon chain has no period");
    b.translation = b.chain.back().transform * e.transform.inverse();
    const IsometryClass cls = classify(b.translation, group.tolerances());
    if (cls.kind != IsometryClass::Kind::Hyperbolic)
        throw Error(ErrorCode::ValidationFailure, std::string("bigon translation is ") + to_string(cls.kind));
    b.extremity = cls.attracting;
    return b;
}

BoundaryPoint normal_extremity(const TriangleGroup& group, const EdgeFrame& e) {
    const Bigon b = bigon(group, e);
    if (group.params().r_infinite()) return b.extremity;

    // Midpoints of E_i converge to the attracting point of the translation.
    const Tolerances& tol = group.tolerances();
    const DiskPoint mid = base_midpoint(group);
    Isometry shift;
    double prev = std::arg(transform(e.transform, mid).z());
    for (int i = 1; i <= static_cast<int>(tol.extremity_iterations); ++i) {
        const int j = i % b.period;
        if (j == 0) shift = shift * b.translation;
        const double angle = std::arg(transform(shift * b.chain[static_cast<std::size_t>(j)].transform, mid).z());
        if (circular_distance(angle, prev) < tol.extremity) {
            if (circular_distance(angle, b.extremity.theta) > 1e-8)
                throw Error(ErrorCode::ValidationFailure, "midpoint limit disagrees with the translation axis");
            return b.extremity;
        }
        prev = angle;
    }
    throw Error(ErrorCode::NoConvergence, "bigon midpoints did not converge");
}

BoundaryPoint normal_extremity(const TriangleGroup& group, const GraphBall& ball, const DirectedEdge& e) {
    return normal_extremity(group, frame_of(group, ball, e));
}

Block turn_block(const TriangleParams& params, VertexKind kind, int k) {
    if (kind == VertexKind::A) return {Letter::a, k};
    return {Letter::b, params.q - k};
}

namespace {

/// Faces of the base bigon, addressed by their centers.
class BigonFaces {
public:
    BigonFaces(const TriangleGroup& group, const Bigon& b) : group_(group), bigon_(b) {
        if (group.params().r_infinite()) return;
        const int P = b.period;
        const Isometry h_inv = b.translation.inverse();
        for (int i = -2 * P; i <= 3 * P + 2; ++i) {
            // F^i lies on the left of E_{i-1}, and E_{nP+j} = h^n E_j.
            const int idx = i - 1;
            const int n = idx >= 0 ? idx / P : -((-idx + P - 1) / P);
            const int j = idx - n * P;
            const Isometry hn = n >= 0 ? power(b.translation, n) : power(h_inv, -n);
            const EdgeFrame f = left_multiply(hn, b.chain[static_cast<std::size_t>(j)]);
            faces_.push_back({i, std::get<DiskPoint>(group.face_center(f))});
        }
    }

    /// The face on the left of f belongs to the bigon; `shift` counts pull-backs applied to f.
    bool contains(const EdgeFrame& f, int shift) const {
        const Vertex3 c = group_.face_center(f);
        if (const auto* ideal = std::get_if<BoundaryPoint>(&c))
            return circular_distance(ideal->theta, bigon_.extremity.theta) < 1e-9;
        const DiskPoint& center = std::get<DiskPoint>(c);
        for (const auto& face : faces_)
            if (distance(center, face.center) < 1e-6) return face.index + shift * bigon_.period >= 1;
        return false;
    }

private:
    struct Face {
        int index;
        DiskPoint center;
    };
    const TriangleGroup& group_;
    const Bigon& bigon_;
    std::vector<Face> faces_;
};

/// Walks one boundary of the base bigon; `right` keeps the bigon on the left.
Blocks walk_boundary(const TriangleGroup& group, const Bigon& b, const BigonFaces& faces, bool right, int steps) {
    const Isometry h_inv = b.translation.inverse();
    EdgeFrame e = right ? group.base_edge() : TriangleGroup::reverse(group.base_edge());
    int shift = 0;
    Blocks code;
    FrameCache cache;
    for (int s = 0; s < steps; ++s) {
        const VertexKind kind = e.head_kind();
        const int deg = group.degree(kind);
        int m = 1;
        if (right) {
            while (m < deg && faces.contains(TriangleGroup::reverse(group.outgoing(e.transform, kind, deg - m)), shift))
                ++m;
        } else {
            while (m < deg && faces.contains(group.outgoing(e.transform, kind, m), shift)) ++m;
        }
        if (m == deg) throw Error(ErrorCode::ValidationFailure, "bigon surrounds a vertex");
        const int k = right ? deg - m : m;
        code.push_back(turn_block(group.params(), kind, k));
        e = group.outgoing(e.transform, kind, k);
        shift += pull_back(group, h_inv, e);
        cache.snap(e);
    }
    return code;
}

EPWord detect_period(const Blocks& seq, int repetitions) {
    const std::size_t n = seq.size();
    for (std::size_t d = 2; d * static_cast<std::size_t>(repetitions) <= n; d += 2) {
        std::size_t s = n - d;
        while (s > 0 && seq[s - 1] == seq[s - 1 + d]) --s;
        if (n - s >= static_cast<std::size_t>(repetitions) * d) {
            Blocks pre(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(s));
            Blocks per(seq.begin() + static_cast<std::ptrdiff_t>(s), seq.begin() + static_cast<std::ptrdiff_t>(s + d));
            return EPWord(std::move(pre), std::move(per)).normalized();
        }
    }
    throw Error(ErrorCode::PeriodNotDetected, "no period with enough repetitions");
}

}  // namespace

KneadingSet geometric_kneading(const TriangleGroup& group) {
    const Bigon b = bigon(group, group.base_edge());
    const BigonFaces faces(group, b);
    const int r = group.params().r_infinite() ? 2 : group.params().r;
    const int steps = std::max(48, 16 * r + 16);
    KneadingSet k;
    k.v_L = detect_period(walk_boundary(group, b, faces, true, steps), 3);
    k.u_R = detect_period(walk_boundary(group, b, faces, false, steps), 3);
    k.u_L = supershift(k.v_L).normalized();
    k.v_R = supershift(k.u_R).normalized();
    return k;
}

SpectaclesPair spectacles_candidate(const TriangleGroup& group, const BoundaryPoint& xi, Orientation o, int sense) {
    SpectaclesPair S;
    S.orientation = o;
    S.I_A2B = {xi, transform(group.sectors(VertexKind::A, sense), xi)};
    S.I_B2A = {transform(group.sectors(VertexKind::B, -sense), xi), xi};
    return S;
}

BoundaryArc edge_spectacle(const TriangleGroup&, const SpectaclesPair& S, const EdgeFrame& e) {
    return transform(e.transform, S.base(e.a_to_b));
}

BoundaryArc edge_spectacle(const TriangleGroup& group, const SpectaclesPair& S, const GraphBall& ball,
                           const DirectedEdge& e) {
    return edge_spectacle(group, S, frame_of(group, ball, e));
}

bool spectacle_contains(const TriangleGroup& group, const SpectaclesPair& S, const EdgeFrame& e,
                        const BoundaryPoint& x) {
    const BoundaryPoint local = transform(e.transform.inverse(), x);
    return arc_contains(S.base(e.a_to_b), local, S.orientation, group.tolerances().arc_snap);
}

int next_edge_index(const TriangleGroup& group, const SpectaclesPair& S, const Isometry& g, VertexKind kind,
                    const BoundaryPoint& x) {
    int found = -1, count = 0;
    for (int k = 0; k < group.degree(kind); ++k) {
        if (spectacle_contains(group, S, group.outgoing(g, kind, k), x)) {
            found = k;
            ++count;
        }
    }
    if (count == 0) throw Error(ErrorCode::NoMatch, "no outgoing spectacle contains the target");
    if (count > 1) throw Error(ErrorCode::Ambiguous, "several outgoing spectacles contain the target");
    return found;
}

DirectedEdge next_edge(const TriangleGroup& group, const SpectaclesPair& S, const GraphBall& ball, int v,
                       const BoundaryPoint& x) {
    const auto& vert = ball.vertices()[static_cast<std::size_t>(v)];
    if (!vert.interior) throw Error(ErrorCode::BallTooSmall, "vertex is on the rim of the ball");
    DirectedEdge found;
    int count = 0;
    for (int w : vert.rotation) {
        const DirectedEdge e{v, w};
        if (spectacle_contains(group, S, frame_of(group, ball, e), x)) {
            found = e;
            ++count;
        }
    }
    if (count == 0) throw Error(ErrorCode::NoMatch, "no outgoing spectacle contains the target");
    if (count > 1) throw Error(ErrorCode::Ambiguous, "several outgoing spectacles contain the target");
    return found;
}

namespace {

GraphPath walk_forward(const TriangleGroup& group, const SpectaclesPair& S, const Isometry& g, VertexKind kind,
                       const BoundaryPoint& x, int steps, const std::optional<Isometry>& renormalize,
                       const GraphBall* ball) {
    if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be >= 1");
    GraphPath path;
    Isometry acc;  // global = acc * local
    BoundaryPoint target = x;
    auto record = [&](const Isometry& local, VertexKind k) {
        PathVertex v;
        v.kind = k;
        v.g = acc * local;
        v.pos = group.position(v.g, k);
        if (ball) v.id = ball->find(v.pos);
        path.vertices.push_back(v);
    };
    record(g, kind);
    EdgeFrame e = group.outgoing(g, kind, next_edge_index(group, S, g, kind, target));
    record(e.transform, e.head_kind());
    const std::optional<Isometry> r_inv = renormalize ? std::optional<Isometry>(renormalize->inverse()) : std::nullopt;
    FrameCache cache;
    for (int s = 1; s < steps; ++s) {
        if (r_inv) {
            const int pulls = pull_back(group, *r_inv, e);
            for (int i = 0; i < pulls; ++i) {
                acc = acc * *renormalize;
                target = transform(*r_inv, target);
            }
            cache.snap(e);
        }
        const VertexKind head = e.head_kind();
        const int k = next_edge_index(group, S, e.transform, head, target);
        if (k == 0) throw Error(ErrorCode::ValidationFailure, "admissible path backtracks");
        path.code.push_back(turn_block(group.params(), head, k));
        e = group.outgoing(e.transform, head, k);
        record(e.transform, e.head_kind());
    }
    path.end_point = x;
    return path;
}

bool same_vertex(const PathVertex& u, const PathVertex& v, const TriangleGroup& group) {
    if (u.kind != v.kind) return false;
    const DiskPoint rel = transform(u.g.inverse() * v.g, group.base(u.kind));
    // Distinct vertices of one kind are far apart; the slack absorbs drift of long products.
    return distance(rel, group.base(u.kind)) < 1e-3;
}

std::vector<std::string> calibrate(const TriangleGroup& group, const Bigon& b, const KneadingSet& expected,
                                   std::vector<std::pair<SpectaclesPair, int>>& accepted) {
    std::vector<std::string> report;
    const double pi = std::numbers::pi;
    const int letters = 12;
    for (Orientation o : {Orientation::Clockwise, Orientation::Counterclockwise}) {
        for (int sense : {-1, 1}) {
            const SpectaclesPair S = spectacles_candidate(group, b.extremity, o, sense);
            std::string line = std::string(o == Orientation::Clockwise ? "clockwise" : "counterclockwise") +
                               " sense " + std::to_string(sense) + ": ";
            const double span_a = S.I_A2B.span(o);
            const double vl = visual_angle(group.triangle().B0, S.I_B2A.left);
            const double vr = visual_angle(group.triangle().B0, S.I_B2A.right);
            const double span_b = normalize_angle(sign(o) * (vr - vl));
            if (std::abs(span_a - 2 * pi / group.params().p) > 1e-9 ||
                std::abs(span_b - 2 * pi / group.params().q) > 1e-9) {
                report.push_back(line + "rejected (visual spans)");
                continue;
            }
            try {
                const GraphPath from_a =
                    walk_forward(group, S, Isometry(), VertexKind::A, b.extremity, letters + 1, b.translation, nullptr);
                const GraphPath from_b =
                    walk_forward(group, S, Isometry(), VertexKind::B, b.extremity, letters + 1, b.translation, nullptr);
                const std::string ca = expand(from_a.code).substr(0, letters);
                const std::string cb = expand(from_b.code).substr(0, letters);
                if (ca == expand(expected.v_L, letters) && cb == expand(expected.u_L, letters)) {
                    report.push_back(line + "accepted");
                    accepted.emplace_back(S, sense);
                } else {
                    report.push_back(line + "rejected (codes " + ca + ", " + cb + ")");
                }
            } catch (const Error& err) {
                report.push_back(line + "rejected (" + err.what() + ")");
            }
        }
    }
    return report;
}

}  // namespace

CodingContext::CodingContext(const TriangleParams& params, const Tolerances& tol)
    : group_(params, tol), bigon_(bigon(group_, group_.base_edge())), kneading_(normalized(closed_form_kneading(params))) {
    if (!params.r_infinite()) bigon_.extremity = normal_extremity(group_, group_.base_edge());
    std::vector<std::pair<SpectaclesPair, int>> accepted;
    calibration_.report = calibrate(group_, bigon_, kneading_, accepted);
    calibration_.accepted = static_cast<int>(accepted.size());
    if (accepted.size() != 1)
        throw Error(ErrorCode::ValidationFailure,
                    "spectacles calibration accepted " + std::to_string(accepted.size()) + " candidates");
    spectacles_ = accepted.front().first;
    calibration_.orientation = spectacles_.orientation;
    calibration_.sense = accepted.front().second;
}

const SpectaclesPair& base_spectacles_Sf(const CodingContext& ctx) { return ctx.spectacles(); }

GraphPath forward_path(const CodingContext& ctx, const Isometry& g, VertexKind kind, const BoundaryPoint& x, int steps,
                       const std::optional<Isometry>& renormalize) {
    return walk_forward(ctx.group(), ctx.spectacles(), g, kind, x, steps, renormalize, nullptr);
}

GraphPath forward_path(const CodingContext& ctx, const GraphBall& ball, int v, const BoundaryPoint& x, int steps) {
    const auto& vert = ball.vertices()[static_cast<std::size_t>(v)];
    return walk_forward(ctx.group(), ctx.spectacles(), vert.g, vert.kind, x, steps, std::nullopt, &ball);
}

namespace {

struct CycleResult {
    GraphPath path;
    bool found = false;
};

/// Follows the admissible path towards the attracting point of g, modulo g, until a state repeats.
CycleResult close_up(const CodingContext& ctx, VertexKind seed, const Isometry& g, const BoundaryPoint& xi,
                     int cap) {
    const TriangleGroup& group = ctx.group();
    const SpectaclesPair& S = ctx.spectacles();
    const Isometry g_inv = g.inverse();
    struct State {
        EdgeFrame e;
        int shift;
        std::size_t code_size;
    };
    std::vector<State> states;
    Blocks code;
    EdgeFrame e = group.outgoing(Isometry(), seed, next_edge_index(group, S, Isometry(), seed, xi));
    int shift = pull_back(group, g_inv, e);
    CycleResult out;
    FrameCache cache;
    for (int step = 0; step < cap; ++step) {
        bool hit = false;
        const std::size_t j = cache.snap(e, &hit);
        if (hit) {
            GraphPath& path = out.path;
            Blocks cycle(code.begin() + static_cast<std::ptrdiff_t>(states[j].code_size), code.end());
            path.code = cycle;
            path.certificate = CyclicWord(cycle);
            path.period_shift = shift - states[j].shift;
            for (std::size_t i = j; i < states.size(); ++i) {
                PathVertex v;
                v.kind = states[i].e.head_kind();
                v.g = states[i].e.transform;
                v.pos = group.position(v.g, v.kind);
                path.vertices.push_back(v);
            }
            out.found = true;
            return out;
        }
        states.push_back({e, shift, code.size()});
        const VertexKind head = e.head_kind();
        const int k = next_edge_index(group, S, e.transform, head, xi);
        if (k == 0) throw Error(ErrorCode::ValidationFailure, "admissible path backtracks");
        code.push_back(turn_block(group.params(), head, k));
        e = group.outgoing(e.transform, head, k);
        shift += pull_back(group, g_inv, e);
    }
    return out;
}

}  // namespace

GraphPath biinfinite_path(const CodingContext& ctx, const BoundaryPoint& eta, const BoundaryPoint& xi,
                          const std::optional<Isometry>& translation) {
    if (circular_distance(eta.theta, xi.theta) < 1e-12)
        throw Error(ErrorCode::EndpointsEqual, "the endpoints of a bi-infinite path must differ");
    const TriangleGroup& group = ctx.group();

    if (translation) {
        const IsometryClass cls = classify(*translation, group.tolerances());
        if (cls.kind != IsometryClass::Kind::Hyperbolic || circular_distance(cls.attracting.theta, xi.theta) > 1e-7 ||
            circular_distance(cls.repelling.theta, eta.theta) > 1e-7)
            throw Error(ErrorCode::InvalidArgument, "translation does not have the endpoints as fixed points");
        std::optional<GraphPath> result;
        for (VertexKind seed : {VertexKind::A, VertexKind::B}) {
            CycleResult c = close_up(ctx, seed, *translation, xi, 4000);
            if (!c.found) throw Error(ErrorCode::NoStabilization, "admissible path did not close up");
            if (result && !(*result->certificate == *c.path.certificate))
                throw Error(ErrorCode::Ambiguous, "seeds produce different periodic codes");
            if (!result) result = std::move(c.path);
        }
        result->start_point = eta;
        result->end_point = xi;
        return *result;
    }

    // Seeds are the A-vertices of the admissible path from A0 towards eta.
    const int seeds = 8, window = 16;
    const GraphPath back =
        walk_forward(group, ctx.spectacles(), Isometry(), VertexKind::A, eta, 2 * seeds, std::nullopt, nullptr);
    std::vector<GraphPath> paths;
    for (int i = 0; i < seeds; ++i) {
        const PathVertex& s = back.vertices[static_cast<std::size_t>(2 * i)];
        paths.push_back(walk_forward(group, ctx.spectacles(), s.g, s.kind, xi, 2 * i + window, std::nullopt, nullptr));
    }
    // Consecutive seeds must merge and then agree until the end of the shorter window.
    auto merged = [&](const GraphPath& inner, const GraphPath& outer) {
        for (std::size_t t = 0; t < outer.vertices.size(); ++t) {
            for (std::size_t u = 0; u < inner.vertices.size(); ++u) {
                if (!same_vertex(outer.vertices[t], inner.vertices[u], group)) continue;
                for (std::size_t l = 0; u + l < inner.vertices.size() && t + l < outer.vertices.size(); ++l)
                    if (!same_vertex(outer.vertices[t + l], inner.vertices[u + l], group)) return false;
                return true;
            }
        }
        return false;
    };
    if (!merged(paths[seeds - 2], paths[seeds - 1]))
        throw Error(ErrorCode::NoStabilization, "forward paths from successive seeds do not merge");
    GraphPath out = paths.back();
    out.start_point = eta;
    out.end_point = xi;
    return out;
}

CyclicWord reverse_code(const CyclicWord& w, const TriangleParams& params) {
    Blocks out;
    for (auto it = w.blocks().rbegin(); it != w.blocks().rend(); ++it)
        out.push_back({it->letter, (it->letter == Letter::a ? params.p : params.q) - it->exp});
    return CyclicWord(std::move(out));
}

namespace {

bool arc_inside(const BoundaryArc& inner, const BoundaryArc& outer, Orientation o, double tol) {
    double start = outer.offset(inner.left, o);
    if (start > kTwoPi - tol) start = 0.0;
    return start + inner.span(o) <= outer.span(o) + tol;
}

}  // namespace

bool verify_branching(const TriangleGroup& group, const SpectaclesPair& S) {
    const double tol = 1e-9;
    const double pi = std::numbers::pi;
    const Orientation o = S.orientation;
    const DiskPoint& B0 = group.triangle().B0;

    const double span_a = S.I_A2B.span(o);
    const double span_b =
        normalize_angle(sign(o) * (visual_angle(B0, S.I_B2A.right) - visual_angle(B0, S.I_B2A.left)));
    if (std::abs(span_a - 2 * pi / group.params().p) > tol || std::abs(span_b - 2 * pi / group.params().q) > tol)
        return false;
    // Contiguous at the common extremity, hence disjoint as long as the union is not the whole circle.
    if (circular_distance(S.I_B2A.right.theta, S.I_A2B.left.theta) > tol) return false;
    const double total = S.I_A2B.span(o) + S.I_B2A.span(o);
    if (total > kTwoPi + tol) return false;
    // For r infinite the two arcs tile the circle and every branch lies in their union.
    if (total > kTwoPi - tol) return circular_distance(S.I_A2B.right.theta, S.I_B2A.left.theta) < tol;
    const BoundaryArc both{S.I_B2A.left, S.I_A2B.right};
    if (std::abs(total - both.span(o)) > tol) return false;

    // rho_B^{-sense} carries xi to the far end of I_{B->A}; q > 2 makes this unambiguous.
    const int sense =
        circular_distance(transform(group.sectors(VertexKind::B, -1), S.I_B2A.right).theta, S.I_B2A.left.theta) < tol
            ? 1
            : -1;
    const BoundaryArc branches[] = {
        S.I_A2B,
        S.I_B2A,
        transform(group.sectors(VertexKind::A, sense), S.I_B2A),
        transform(group.sectors(VertexKind::B, -sense), S.I_A2B),
    };
    for (const auto& arc : branches)
        if (!arc_inside(arc, both, o, tol)) return false;
    return true;
}

SpectaclesPair widen(const SpectaclesPair& S, double fraction) {
    SpectaclesPair out = S;
    const double grow = 0.5 * fraction * S.I_A2B.span(S.orientation) * sign(S.orientation);
    out.I_A2B.left = BoundaryPoint(S.I_A2B.left.theta - grow);
    out.I_A2B.right = BoundaryPoint(S.I_A2B.right.theta + grow);
    return out;
}

std::string path_json(const GraphPath& path, const TriangleParams& params, int indent) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["params"] = {{"p", params.p},
                   {"q", params.q},
                   {"r", params.r_infinite() ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(params.r)}};
    auto& verts = j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : path.vertices)
        verts.push_back({{"id", v.id}, {"kind", v.kind == VertexKind::A ? "A" : "B"}, {"x", v.pos.re}, {"y", v.pos.im}});
    j["code"] = to_string(path.code);
    j["certificate"] = path.certificate ? nlohmann::ordered_json(to_string(*path.certificate)) : nlohmann::ordered_json();
    j["start_angle"] = path.start_point ? nlohmann::ordered_json(path.start_point->theta) : nlohmann::ordered_json();
    j["end_angle"] = path.end_point ? nlohmann::ordered_json(path.end_point->theta) : nlohmann::ordered_json();
    return j.dump(indent);
}

}  // namespace trigon
