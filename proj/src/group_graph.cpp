#include "trigon/group_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

namespace trigon {

std::string TriangleParams::label() const {
    auto fmt = [](int n) { return is_infinite(n) ? std::string("inf") : std::to_string(n); };
    return "(" + fmt(p) + "," + fmt(q) + "," + fmt(r) + ")";
}

TriangleParams canonicalize(int p, int q, int r) {
    if (p < 2 || q < 2 || (!is_infinite(r) && r < 2) || is_infinite(p) || is_infinite(q))
        throw Error(ErrorCode::InvalidArgument, "p, q must be integers >= 2 and r >= 2 or inf");
    if (reciprocal(p) + reciprocal(q) + reciprocal(r) >= 1.0 - 1e-15)
        throw Error(ErrorCode::NonHyperbolic, "1/p + 1/q + 1/r >= 1");

    TriangleParams t{p, q, r, false, false};
    if (!is_infinite(t.r) && t.r == 2) {
        std::swap(t.q, t.r);
        t.qr_swapped = true;
    }
    if (t.p > t.q) {
        std::swap(t.p, t.q);
        t.pq_swapped = true;
    }
    if (t.p == 2 && !is_infinite(t.r) && t.r < 5) {
        std::swap(t.q, t.r);
        t.qr_swapped = !t.qr_swapped;
    }
    if (t.p > t.q || (t.p == 2 && !is_infinite(t.r) && t.r < 5))
        throw Error(ErrorCode::UnsupportedParams, "cannot canonicalize " + t.label());
    return t;
}

Generators generators(const TriangleParams& params, const Triangle& tri, const Tolerances& tol) {
    // Letters a and b are counterclockwise sector rotations; only the cone generator's sign is free.
    Generators g;
    g.rho_a = rotation_about(tri.A0, 1, params.p);
    g.rho_b = rotation_about(tri.B0, 1, params.q);
    if (tri.ideal_C()) {
        g.rho_c = (g.rho_a * g.rho_b).inverse();
        const auto cls = classify(g.rho_c, tol);
        if (cls.kind == IsometryClass::Kind::Parabolic &&
            circular_distance(cls.fixed.theta, std::get<BoundaryPoint>(tri.C0).theta) < 1e-7)
            return g;
    } else {
        for (int sc : {1, -1}) {
            g.sign_c = sc;
            g.rho_c = rotation_about(std::get<DiskPoint>(tri.C0), sc, params.r);
            if ((g.rho_a * g.rho_b * g.rho_c).distance_to_identity() < tol.relation) return g;
        }
    }
    throw Error(ErrorCode::RelationFailure, "rho_a rho_b rho_c != 1 for " + params.label());
}

TriangleGroup::TriangleGroup(const TriangleParams& params, const Tolerances& tol)
    : params_(params), tol_(tol), triangle_(make_triangle(params.p, params.q, params.r)) {
    rot_a_ = rotation_about(triangle_.A0, 1, params_.p);
    rot_b_ = rotation_about(triangle_.B0, 1, params_.q);
    for (int k = 0; k < params_.p; ++k) powers_a_.push_back(rotation_about(triangle_.A0, k, params_.p));
    for (int k = 0; k < params_.q; ++k) powers_b_.push_back(rotation_about(triangle_.B0, k, params_.q));
    gens_ = trigon::generators(params_, triangle_, tol_);
    const Isometry back = powers_a_[static_cast<std::size_t>(params_.p - 1)];
    lower_center_ = std::visit([&](const auto& c) -> Vertex3 { return transform(back, c); }, triangle_.C0);
}

const Isometry& TriangleGroup::sectors(VertexKind kind, int k) const {
    const auto& table = kind == VertexKind::A ? powers_a_ : powers_b_;
    const int n = static_cast<int>(table.size());
    return table[static_cast<std::size_t>(((k % n) + n) % n)];
}

EdgeFrame TriangleGroup::rotate_about_head(const EdgeFrame& e, int k) const {
    return {e.transform * sectors(e.head_kind(), k), e.a_to_b};
}

EdgeFrame TriangleGroup::rotate_about_tail(const EdgeFrame& e, int k) const {
    return {e.transform * sectors(e.tail_kind(), k), e.a_to_b};
}

EdgeFrame TriangleGroup::outgoing(const Isometry& g, VertexKind kind, int k) const {
    return {g * sectors(kind, k), kind == VertexKind::A};
}

Vertex3 TriangleGroup::face_center(const EdgeFrame& e) const {
    const Vertex3& c = e.a_to_b ? triangle_.C0 : lower_center_;
    return std::visit([&](const auto& pt) -> Vertex3 { return transform(e.transform, pt); }, c);
}

bool TriangleGroup::same_edge(const EdgeFrame& e, const EdgeFrame& f, double tol) const {
    if (e.a_to_b != f.a_to_b) return false;
    return (e.transform.inverse() * f.transform).distance_to_identity() < tol;
}

// ---------------------------------------------------------------------------

int GraphBall::find(const DiskPoint& pos, double tol) const {
    const auto kx = static_cast<std::int64_t>(std::llround(pos.re / grid_));
    const auto ky = static_cast<std::int64_t>(std::llround(pos.im / grid_));
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
        for (std::int64_t dy = -1; dy <= 1; ++dy) {
            const auto it = cells_.find({kx + dx, ky + dy});
            if (it == cells_.end()) continue;
            for (int id : it->second)
                if (distance(vertices_[static_cast<std::size_t>(id)].pos, pos) < tol) return id;
        }
    }
    return -1;
}

int GraphBall::find(const Isometry& g, VertexKind kind) const {
    // Compare through the relative element so that far vertices keep precision.
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const auto& v = vertices_[i];
        if (v.kind != kind) continue;
        const Complex base = (kind == VertexKind::A ? base_a_ : base_b_).z();
        if (std::abs((v.g.inverse() * g).apply(base) - base) < 1e-7) return static_cast<int>(i);
    }
    return -1;
}

int GraphBall::edge_id(int u, int v) const {
    const auto it = edge_index_.find({std::min(u, v), std::max(u, v)});
    return it == edge_index_.end() ? -1 : it->second;
}

int GraphBall::clockwise_next(int v, int u) const {
    const auto& rot = vertices_[static_cast<std::size_t>(v)].rotation;
    const auto it = std::find(rot.begin(), rot.end(), u);
    if (it == rot.end()) return -1;
    const auto idx = static_cast<std::size_t>(it - rot.begin());
    return rot[(idx + rot.size() - 1) % rot.size()];
}

void GraphBall::link(int u, int v) {
    if (u == v) return;
    auto& adj = adjacency_[static_cast<std::size_t>(u)];
    if (std::find(adj.begin(), adj.end(), v) != adj.end()) return;
    adj.push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    edge_index_[{std::min(u, v), std::max(u, v)}] = static_cast<int>(edges_.size());
    edges_.push_back({std::min(u, v), std::max(u, v)});
}

GraphBall expand(const TriangleGroup& group, int depth) {
    if (depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be >= 0");
    GraphBall ball;
    ball.params_ = group.params();
    ball.depth_ = depth;
    ball.grid_ = group.tolerances().vertex_grid;
    ball.base_a_ = group.base(VertexKind::A);
    ball.base_b_ = group.base(VertexKind::B);

    auto& cells = ball.cells_;
    auto lookup_or_insert = [&](const Isometry& g, VertexKind kind, int d) {
        const DiskPoint pos = group.position(g, kind);
        const auto kx = static_cast<std::int64_t>(std::llround(pos.re / ball.grid_));
        const auto ky = static_cast<std::int64_t>(std::llround(pos.im / ball.grid_));
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = cells.find({kx + dx, ky + dy});
                if (it == cells.end()) continue;
                for (int id : it->second) {
                    const auto& v = ball.vertices_[static_cast<std::size_t>(id)];
                    if (v.kind != kind) continue;
                    const DiskPoint rel = transform(v.g.inverse() * g, group.base(kind));
                    if (distance(rel, group.base(kind)) < 1e-6) return id;
                }
            }
        }
        if (ball.vertices_.size() >= group.tolerances().vertex_cap)
            throw Error(ErrorCode::DepthOverflow, "vertex cap exceeded at depth " + std::to_string(d));
        BallVertex v;
        v.kind = kind;
        v.g = g;
        v.pos = pos;
        v.key_x = kx;
        v.key_y = ky;
        v.depth = d;
        ball.vertices_.push_back(std::move(v));
        ball.adjacency_.emplace_back();
        const int id = static_cast<int>(ball.vertices_.size() - 1);
        cells[{kx, ky}].push_back(id);
        return id;
    };

    lookup_or_insert(Isometry::identity(), VertexKind::A, 0);
    lookup_or_insert(Isometry::identity(), VertexKind::B, 0);
    ball.link(0, 1);

    std::vector<int> frontier{0, 1};
    for (int d = 1; d <= depth; ++d) {
        std::vector<int> next;
        for (int id : frontier) {
            const BallVertex v = ball.vertices_[static_cast<std::size_t>(id)];
            for (int k = 0; k < group.degree(v.kind); ++k) {
                const EdgeFrame e = group.outgoing(v.g, v.kind, k);
                const VertexKind nk = other(v.kind);
                const std::size_t before = ball.vertices_.size();
                const int nb = lookup_or_insert(e.transform, nk, d);
                if (ball.vertices_.size() > before) next.push_back(nb);
                ball.link(id, nb);
            }
            ball.vertices_[static_cast<std::size_t>(id)].interior = true;
        }
        frontier = std::move(next);
    }
    // Close the induced subgraph among the outermost vertices.
    for (int id : frontier) {
        const BallVertex v = ball.vertices_[static_cast<std::size_t>(id)];
        int found = 0;
        for (int k = 0; k < group.degree(v.kind); ++k) {
            const EdgeFrame e = group.outgoing(v.g, v.kind, k);
            const int nb = ball.find(group.head(e));
            if (nb >= 0 && ball.vertices_[static_cast<std::size_t>(nb)].kind == other(v.kind)) {
                ball.link(id, nb);
                ++found;
            }
        }
        ball.vertices_[static_cast<std::size_t>(id)].interior = found == group.degree(v.kind);
    }
    // Rotation system: neighbors in counterclockwise order of their direction.
    for (std::size_t i = 0; i < ball.vertices_.size(); ++i) {
        auto& v = ball.vertices_[i];
        std::vector<std::pair<double, int>> order;
        const Isometry to_base = v.g.inverse();
        for (int nb : ball.adjacency_[i]) {
            const auto& w = ball.vertices_[static_cast<std::size_t>(nb)];
            const DiskPoint rel = transform(to_base * w.g, group.base(w.kind));
            order.emplace_back(visual_angle(group.base(v.kind), rel), nb);
        }
        std::sort(order.begin(), order.end());
        v.rotation.clear();
        for (const auto& [angle, nb] : order) v.rotation.push_back(nb);
    }
    return ball;
}

FaceCycle face_left_of(const GraphBall& ball, const DirectedEdge& e) {
    if (ball.params().r_infinite()) throw Error(ErrorCode::InfiniteFace, "faces are infinite when r = inf");
    const int len = 2 * ball.params().r;
    FaceCycle face;
    DirectedEdge cur = e;
    for (int step = 0; step < len; ++step) {
        face.edges.push_back(cur);
        const auto& head = ball.vertices()[static_cast<std::size_t>(cur.dst)];
        if (!head.interior) throw Error(ErrorCode::BallTooSmall, "face walk leaves the ball");
        const int nxt = ball.clockwise_next(cur.dst, cur.src);
        if (nxt < 0) throw Error(ErrorCode::BallTooSmall, "edge missing from the rotation system");
        cur = {cur.dst, nxt};
    }
    if (!(cur == e)) throw Error(ErrorCode::ValidationFailure, "face walk did not close after 2r edges");
    return face;
}

DirectedEdge opposite_edge(const FaceCycle& face, const DirectedEdge& e) {
    const auto it = std::find(face.edges.begin(), face.edges.end(), e);
    if (it == face.edges.end()) throw Error(ErrorCode::EdgeNotInFace, "edge not on the face");
    const std::size_t n = face.edges.size();
    const auto idx = static_cast<std::size_t>(it - face.edges.begin());
    return face.edges[(idx + n / 2) % n];
}

Isometry edge_transform(const TriangleGroup& group, const GraphBall& ball, const DirectedEdge& e) {
    const auto& src = ball.vertices()[static_cast<std::size_t>(e.src)];
    const auto& dst = ball.vertices()[static_cast<std::size_t>(e.dst)];
    const double tol = group.tolerances().edge_check;
    for (int k = 0; k < group.degree(src.kind); ++k) {
        const EdgeFrame f = group.outgoing(src.g, src.kind, k);
        const DiskPoint rel = transform(dst.g.inverse() * f.transform, group.base(dst.kind));
        if (distance(rel, group.base(dst.kind)) < tol) {
            const DiskPoint back = transform(src.g.inverse() * f.transform, group.base(src.kind));
            if (distance(back, group.base(src.kind)) > tol)
                throw Error(ErrorCode::NotRepresentable, "tail check failed");
            return f.transform;
        }
    }
    throw Error(ErrorCode::NotRepresentable, "no group element carries the base edge onto this edge");
}

std::vector<std::vector<int>> inner_faces(const GraphBall& ball) {
    std::vector<std::vector<int>> faces;
    if (ball.params().r_infinite()) return faces;
    std::set<std::vector<int>> seen;
    for (const auto& und : ball.edges()) {
        for (const DirectedEdge e : {und, und.reversed()}) {
            FaceCycle face;
            try {
                face = face_left_of(ball, e);
            } catch (const Error&) {
                continue;
            }
            std::vector<int> ids;
            for (const auto& fe : face.edges) ids.push_back(ball.edge_id(fe.src, fe.dst));
            std::vector<int> key = ids;
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) faces.push_back(std::move(ids));
        }
    }
    return faces;
}

std::string graph_json(const GraphBall& ball, int indent) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["params"] = {{"p", ball.params().p},
                   {"q", ball.params().q},
                   {"r", ball.params().r_infinite() ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(ball.params().r)}};
    j["depth"] = ball.depth();
    auto& verts = j["vertices"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < ball.vertices().size(); ++i) {
        const auto& v = ball.vertices()[i];
        verts.push_back({{"id", i}, {"kind", v.kind == VertexKind::A ? "A" : "B"}, {"x", v.pos.re}, {"y", v.pos.im}});
    }
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : ball.edges()) edges.push_back({{"src", e.src}, {"dst", e.dst}});
    j["faces"] = inner_faces(ball);
    return j.dump(indent);
}

}  // namespace trigon
