#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <variant>

#include "trigon/config.hpp"

namespace trigon {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Cone-point order; kInfinite marks a cusp (r = infinity).
inline constexpr int kInfinite = 0;

inline bool is_infinite(int order) { return order == kInfinite; }

/// 1/n with 1/infinity = 0.
inline double reciprocal(int order) { return is_infinite(order) ? 0.0 : 1.0 / order; }

/// Reduce an angle to [0, 2pi).
double normalize_angle(double theta);

/// Shortest angular distance between two angles, in [0, pi].
double circular_distance(double x, double y);

struct DiskPoint {
    double re = 0.0;
    double im = 0.0;

    DiskPoint() = default;
    DiskPoint(double re_, double im_) : re(re_), im(im_) {}
    explicit DiskPoint(Complex z) : re(z.real()), im(z.imag()) {}

    Complex z() const { return {re, im}; }
    double norm2() const { return re * re + im * im; }
    bool interior(double eps = default_tolerances().boundary_eps) const { return norm2() < 1.0 - eps; }
};

struct BoundaryPoint {
    double theta = 0.0;

    BoundaryPoint() = default;
    explicit BoundaryPoint(double angle) : theta(normalize_angle(angle)) {}

    static BoundaryPoint from(Complex z) { return BoundaryPoint(std::arg(z)); }
    Complex z() const { return std::polar(1.0, theta); }
};

double distance(const DiskPoint& x, const DiskPoint& y);

/// Orientation-preserving isometry z -> (a z + b) / (conj(b) z + conj(a)),
/// kept on the |a|^2 - |b|^2 = 1 sheet.
class Isometry {
public:
    Isometry() = default;
    Isometry(Complex a, Complex b);

    static Isometry identity() { return {}; }

    Complex a() const { return a_; }
    Complex b() const { return b_; }

    /// Trace of the SU(1,1) matrix; defined up to sign.
    double trace() const { return 2.0 * a_.real(); }

    Isometry inverse() const { return Isometry(std::conj(a_), -b_, Raw{}); }

    Complex apply(Complex z) const { return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_)); }
    /// |g'(z)| on the boundary circle.
    double boundary_derivative(Complex z) const { return 1.0 / std::norm(std::conj(b_) * z + std::conj(a_)); }

    /// Matrix distance to +I or -I, whichever is closer.
    double distance_to_identity() const;

    friend Isometry operator*(const Isometry& g, const Isometry& h);

private:
    struct Raw {};
    Isometry(Complex a, Complex b, Raw) : a_(a), b_(b) {}

    Complex a_{1.0, 0.0};
    Complex b_{0.0, 0.0};
};

Isometry power(const Isometry& g, int k);

/// Isometry taking the origin to c, with real positive derivative at 0.
Isometry translation_to(const DiskPoint& c);

/// Counterclockwise rotation by 2 pi k / n about center.
Isometry rotation_about(const DiskPoint& center, int k, int n);

DiskPoint transform(const Isometry& g, const DiskPoint& x);
BoundaryPoint transform(const Isometry& g, const BoundaryPoint& x);

/// Direction, seen from c, of the geodesic ray towards x.
double visual_angle(const DiskPoint& c, const BoundaryPoint& x);
double visual_angle(const DiskPoint& c, const DiskPoint& x);

struct IsometryClass {
    enum class Kind { Identity, Elliptic, Parabolic, Hyperbolic };

    Kind kind = Kind::Identity;
    DiskPoint center;          ///< Elliptic
    BoundaryPoint fixed;       ///< Parabolic
    BoundaryPoint attracting;  ///< Hyperbolic
    BoundaryPoint repelling;   ///< Hyperbolic
};

const char* to_string(IsometryClass::Kind kind);

IsometryClass classify(const Isometry& g, const Tolerances& tol = default_tolerances());

/// Direction in which arcs run from their closed left end to their open right end.
enum class Orientation { Clockwise = -1, Counterclockwise = 1 };

/// The library-wide boundary orientation. Fixed by the spectacles calibration
/// (see coding.hpp); both values remain selectable in every arc routine.
inline constexpr Orientation kBoundaryOrientation = Orientation::Clockwise;

inline int sign(Orientation o) { return static_cast<int>(o); }

/// Semi-open arc: contains left, excludes right.
struct BoundaryArc {
    BoundaryPoint left;
    BoundaryPoint right;

    /// Angular length measured from left to right in the given orientation.
    double span(Orientation o = kBoundaryOrientation) const;
    /// Position of x along the arc, in [0, 2pi).
    double offset(const BoundaryPoint& x, Orientation o = kBoundaryOrientation) const;
    BoundaryArc complement() const { return {right, left}; }
};

bool arc_contains(const BoundaryArc& arc, const BoundaryPoint& x,
                  Orientation o = kBoundaryOrientation, double snap = default_tolerances().arc_snap);

BoundaryArc transform(const Isometry& g, const BoundaryArc& arc);

/// Either an interior vertex or an ideal one (r = infinity).
using Vertex3 = std::variant<DiskPoint, BoundaryPoint>;

struct Triangle {
    int p = 0, q = 0, r = 0;
    DiskPoint A0;
    DiskPoint B0;
    Vertex3 C0;

    bool ideal_C() const { return std::holds_alternative<BoundaryPoint>(C0); }
};

/// Triangle with angles pi/p, pi/q, pi/r: A0 at the origin, B0 on the positive
/// real axis, C0 in the upper half disk (on the circle when r is infinite).
Triangle make_triangle(int p, int q, int r);

/// cosh of the side A0B0 from the dual law of cosines.
double cosh_side_ab(int p, int q, int r);

/// Interior angle at vertex v between the geodesics to x and y.
double interior_angle(const DiskPoint& v, const Vertex3& x, const Vertex3& y);

}  // namespace trigon
