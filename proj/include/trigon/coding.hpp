#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigon/group_graph.hpp"
#include "trigon/words.hpp"

namespace trigon {

/// The base intervals I_{A0->B0} and I_{B0->A0}; every other edge carries the
/// image of one of them under its edge transform.
struct SpectaclesPair {
    BoundaryArc I_A2B;
    BoundaryArc I_B2A;
    Orientation orientation = kBoundaryOrientation;

    const BoundaryArc& base(bool a_to_b) const { return a_to_b ? I_A2B : I_B2A; }
};

/// The chain of faces F^1, F^2, ... obtained by crossing to opposite edges,
/// starting with the face on the left of an edge.
struct Bigon {
    EdgeFrame start;
    std::vector<EdgeFrame> chain;  ///< E_0 .. E_period; F^{i+1} lies on the left of E_i
    int period = 0;                ///< faces per translation (0 when r is infinite)
    Isometry translation;          ///< maps E_i onto E_{i+period}
    BoundaryPoint extremity;       ///< the normal extremity of the start edge
};

Bigon bigon(const TriangleGroup& group, const EdgeFrame& e);

/// Limit of the bigon of e; for r infinite the ideal vertex of the face on the left.
/// Throws NoConvergence when the midpoint iteration does not settle.
BoundaryPoint normal_extremity(const TriangleGroup& group, const EdgeFrame& e);
BoundaryPoint normal_extremity(const TriangleGroup& group, const GraphBall& ball, const DirectedEdge& e);

/// Codes of the two boundaries of the base bigon, periods detected over at
/// least three repetitions. Throws PeriodNotDetected.
KneadingSet geometric_kneading(const TriangleGroup& group);

/// Candidate spectacles built on xi for one orientation and one rotation sense.
SpectaclesPair spectacles_candidate(const TriangleGroup& group, const BoundaryPoint& xi, Orientation o, int sense);

struct Calibration {
    Orientation orientation = kBoundaryOrientation;
    int sense = 1;
    int accepted = 0;                 ///< number of candidates that passed
    std::vector<std::string> report;  ///< one line per candidate
};

struct PathVertex {
    VertexKind kind = VertexKind::A;
    Isometry g;  ///< carries base(kind) to the vertex
    DiskPoint pos;
    int id = -1;  ///< ball vertex id when a ball was supplied
};

struct GraphPath {
    std::vector<PathVertex> vertices;
    /// Code letters at every vertex after the first; a closed cycle also codes its first vertex.
    Blocks code;
    std::optional<CyclicWord> certificate;  ///< periodic code of a bi-infinite path
    int period_shift = 0;                   ///< powers of the translation spanned by the cycle
    std::optional<BoundaryPoint> start_point;
    std::optional<BoundaryPoint> end_point;
};

/// The group with its base bigon, the accurate spectacles S^f and the kneading
/// words; built once per parameter triple, read-only afterwards.
class CodingContext {
public:
    explicit CodingContext(const TriangleParams& params, const Tolerances& tol = default_tolerances());

    const TriangleGroup& group() const { return group_; }
    const TriangleParams& params() const { return group_.params(); }
    const Bigon& base_bigon() const { return bigon_; }
    const BoundaryPoint& xi() const { return bigon_.extremity; }
    const SpectaclesPair& spectacles() const { return spectacles_; }
    const Calibration& calibration() const { return calibration_; }
    const KneadingSet& kneading() const { return kneading_; }

private:
    TriangleGroup group_;
    Bigon bigon_;
    SpectaclesPair spectacles_;
    Calibration calibration_;
    KneadingSet kneading_;
};

/// The calibrated S^f of the context.
const SpectaclesPair& base_spectacles_Sf(const CodingContext& ctx);

BoundaryArc edge_spectacle(const TriangleGroup& group, const SpectaclesPair& S, const EdgeFrame& e);
BoundaryArc edge_spectacle(const TriangleGroup& group, const SpectaclesPair& S, const GraphBall& ball,
                           const DirectedEdge& e);

/// Membership of x in the spectacle of e, decided in the frame of e.
bool spectacle_contains(const TriangleGroup& group, const SpectaclesPair& S, const EdgeFrame& e,
                        const BoundaryPoint& x);

/// Index k (counterclockwise sectors) of the unique outgoing edge of the vertex
/// g(base(kind)) whose spectacle contains x. Throws Ambiguous or NoMatch.
int next_edge_index(const TriangleGroup& group, const SpectaclesPair& S, const Isometry& g, VertexKind kind,
                    const BoundaryPoint& x);
DirectedEdge next_edge(const TriangleGroup& group, const SpectaclesPair& S, const GraphBall& ball, int v,
                       const BoundaryPoint& x);

/// Code block for leaving a vertex k counterclockwise sectors after the arrival direction.
Block turn_block(const TriangleParams& params, VertexKind kind, int k);

/// Admissible path from g(base(kind)) towards x, `steps` edges long. When
/// `renormalize` is given (an isometry fixing x), the walk is periodically
/// pulled back by it to keep the arithmetic near the origin.
GraphPath forward_path(const CodingContext& ctx, const Isometry& g, VertexKind kind, const BoundaryPoint& x,
                       int steps, const std::optional<Isometry>& renormalize = std::nullopt);
GraphPath forward_path(const CodingContext& ctx, const GraphBall& ball, int v, const BoundaryPoint& x, int steps);

/// Admissible bi-infinite path from eta to xi. With a hyperbolic `translation`
/// having these fixed points, the path is closed up modulo the translation and
/// its cyclic code returned as the certificate; otherwise a stabilized window is returned.
GraphPath biinfinite_path(const CodingContext& ctx, const BoundaryPoint& eta, const BoundaryPoint& xi,
                          const std::optional<Isometry>& translation = std::nullopt);

/// Code of the same path run backwards.
CyclicWord reverse_code(const CyclicWord& w, const TriangleParams& params);

/// Branch arcs at the base switch lie inside I_{A->B} u I_{B->A}; also checks
/// that S is a genuine pair (disjoint, contiguous at xi, spans 2 pi / p and 2 pi / q).
bool verify_branching(const TriangleGroup& group, const SpectaclesPair& S);

/// S with I_{A0->B0} widened by the given fraction of its span, half on each side.
SpectaclesPair widen(const SpectaclesPair& S, double fraction);

std::string path_json(const GraphPath& path, const TriangleParams& params, int indent = 2);

}  // namespace trigon
