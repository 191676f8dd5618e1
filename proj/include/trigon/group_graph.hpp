#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trigon/geom.hpp"

namespace trigon {

/// Orders of the triangle group after canonicalization (p <= q, and r >= 5 or
/// infinite whenever p = 2), with a record of the swaps that were applied.
struct TriangleParams {
    int p = 0;
    int q = 0;
    int r = 0;
    bool pq_swapped = false;
    bool qr_swapped = false;

    bool r_infinite() const { return is_infinite(r); }
    std::string label() const;
};

/// Validate and canonicalize (p, q, r); r may be kInfinite.
TriangleParams canonicalize(int p, int q, int r);

enum class VertexKind : std::uint8_t { A, B };

inline VertexKind other(VertexKind k) { return k == VertexKind::A ? VertexKind::B : VertexKind::A; }

/// A directed edge of the invariant graph, carried by the group element that
/// maps the base edge onto it: transform(A0) -> transform(B0) when a_to_b,
/// transform(B0) -> transform(A0) otherwise.
struct EdgeFrame {
    Isometry transform;
    bool a_to_b = true;

    VertexKind tail_kind() const { return a_to_b ? VertexKind::A : VertexKind::B; }
    VertexKind head_kind() const { return a_to_b ? VertexKind::B : VertexKind::A; }
};

struct Generators {
    Isometry rho_a, rho_b, rho_c;
    int sign_a = 1, sign_b = 1, sign_c = 1;
};

/// The triangle group G_{p,q,r} with its base triangle and the navigation
/// primitives of the invariant graph (orbit of A0, B0 and of the edge A0B0).
class TriangleGroup {
public:
    explicit TriangleGroup(const TriangleParams& params, const Tolerances& tol = default_tolerances());

    const TriangleParams& params() const { return params_; }
    const Triangle& triangle() const { return triangle_; }
    const Tolerances& tolerances() const { return tol_; }
    const Generators& generators() const { return gens_; }

    int degree(VertexKind k) const { return k == VertexKind::A ? params_.p : params_.q; }
    const DiskPoint& base(VertexKind k) const { return k == VertexKind::A ? triangle_.A0 : triangle_.B0; }

    /// Counterclockwise rotation by one sector (2 pi / degree) about the base vertex.
    const Isometry& sector(VertexKind k) const { return k == VertexKind::A ? rot_a_ : rot_b_; }
    /// k sectors, k reduced modulo the degree.
    const Isometry& sectors(VertexKind kind, int k) const;

    DiskPoint position(const Isometry& g, VertexKind k) const { return transform(g, base(k)); }

    EdgeFrame base_edge() const { return {Isometry::identity(), true}; }
    DiskPoint tail(const EdgeFrame& e) const { return position(e.transform, e.tail_kind()); }
    DiskPoint head(const EdgeFrame& e) const { return position(e.transform, e.head_kind()); }

    static EdgeFrame reverse(const EdgeFrame& e) { return {e.transform, !e.a_to_b}; }
    /// Rotate the tail about the head by k counterclockwise sectors.
    EdgeFrame rotate_about_head(const EdgeFrame& e, int k) const;
    /// Rotate the head about the tail by k counterclockwise sectors.
    EdgeFrame rotate_about_tail(const EdgeFrame& e, int k) const;
    /// Next edge of the face lying on the left of e.
    EdgeFrame face_step(const EdgeFrame& e) const { return reverse(rotate_about_head(e, -1)); }
    /// Outgoing edges of a vertex g(base(kind)), starting with the image of the base edge.
    EdgeFrame outgoing(const Isometry& g, VertexKind kind, int k) const;

    /// Center of the face on the left of e (ideal when r is infinite).
    Vertex3 face_center(const EdgeFrame& e) const;

    /// Two frames describe the same directed edge (checked near the origin).
    bool same_edge(const EdgeFrame& e, const EdgeFrame& f, double tol = 1e-7) const;

private:
    TriangleParams params_;
    Tolerances tol_;
    Triangle triangle_;
    Isometry rot_a_, rot_b_;
    std::vector<Isometry> powers_a_, powers_b_;
    Generators gens_;
    Vertex3 lower_center_;
};

/// Counterclockwise generators; the cone rotation is the one with rho_a rho_b rho_c = 1.
Generators generators(const TriangleParams& params, const Triangle& tri, const Tolerances& tol = default_tolerances());

struct BallVertex {
    VertexKind kind = VertexKind::A;
    Isometry g;              ///< carries base(kind) to this vertex
    DiskPoint pos;
    std::int64_t key_x = 0;  ///< quantized position
    std::int64_t key_y = 0;
    int depth = 0;
    bool interior = false;   ///< all neighbors materialized
    std::vector<int> rotation;  ///< neighbors sorted counterclockwise by visual angle
};

struct DirectedEdge {
    int src = -1;
    int dst = -1;

    DirectedEdge reversed() const { return {dst, src}; }
    bool operator==(const DirectedEdge&) const = default;
};

struct FaceCycle {
    std::vector<DirectedEdge> edges;
};

/// Finite portion of the invariant graph around the base edge.
class GraphBall {
public:
    GraphBall() = default;

    const TriangleParams& params() const { return params_; }
    int depth() const { return depth_; }
    const std::vector<BallVertex>& vertices() const { return vertices_; }
    /// Undirected edges, stored with src < dst.
    const std::vector<DirectedEdge>& edges() const { return edges_; }

    /// Vertex id at a position, or -1.
    int find(const DiskPoint& pos, double tol = 1e-6) const;
    int find(const Isometry& g, VertexKind kind) const;
    int edge_id(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_id(u, v) >= 0; }

    /// The neighbor of v following u clockwise in the rotation system.
    int clockwise_next(int v, int u) const;

    friend GraphBall expand(const TriangleGroup& group, int depth);

private:
    void link(int u, int v);

    TriangleParams params_;
    int depth_ = 0;
    double grid_ = 1e-7;
    DiskPoint base_a_, base_b_;
    std::vector<BallVertex> vertices_;
    std::vector<DirectedEdge> edges_;
    std::map<std::pair<int, int>, int> edge_index_;
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<int>> cells_;
    std::vector<std::vector<int>> adjacency_;
};

GraphBall expand(const TriangleGroup& group, int depth);

FaceCycle face_left_of(const GraphBall& ball, const DirectedEdge& e);
DirectedEdge opposite_edge(const FaceCycle& face, const DirectedEdge& e);
/// Isometry mapping (A0, B0) onto the edge; for a B -> A edge, the element
/// mapping (B0, A0) onto it.
Isometry edge_transform(const TriangleGroup& group, const GraphBall& ball, const DirectedEdge& e);

/// All faces lying completely inside the ball (r finite), as edge-id lists.
std::vector<std::vector<int>> inner_faces(const GraphBall& ball);

std::string graph_json(const GraphBall& ball, int indent = 2);

}  // namespace trigon
