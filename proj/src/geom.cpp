#include "trigon/geom.hpp"

#include <cmath>

namespace trigon {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHyperbolic: return "NonHyperbolic";
        case ErrorCode::RelationFailure: return "RelationFailure";
        case ErrorCode::DepthOverflow: return "DepthOverflow";
        case ErrorCode::InfiniteFace: return "InfiniteFace";
        case ErrorCode::BallTooSmall: return "BallTooSmall";
        case ErrorCode::EdgeNotInFace: return "EdgeNotInFace";
        case ErrorCode::NotRepresentable: return "NotRepresentable";
        case ErrorCode::UnsupportedParams: return "UnsupportedParams";
        case ErrorCode::NoException: return "NoException";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::ValidationFailure: return "ValidationFailure";
        case ErrorCode::Ambiguous: return "Ambiguous";
        case ErrorCode::NoMatch: return "NoMatch";
        case ErrorCode::EndpointsEqual: return "EndpointsEqual";
        case ErrorCode::NoStabilization: return "NoStabilization";
        case ErrorCode::PeriodNotDetected: return "PeriodNotDetected";
        case ErrorCode::EdgeMismatch: return "EdgeMismatch";
        case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

double normalize_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

double circular_distance(double x, double y) {
    double d = normalize_angle(x - y);
    return std::min(d, kTwoPi - d);
}

double distance(const DiskPoint& x, const DiskPoint& y) {
    const Complex zx = x.z(), zy = y.z();
    const double ratio = std::abs(zx - zy) / std::abs(1.0 - std::conj(zy) * zx);
    return 2.0 * std::atanh(std::min(ratio, 1.0 - 1e-17));
}

Isometry::Isometry(Complex a, Complex b) : a_(a), b_(b) {
    const double det = std::norm(a_) - std::norm(b_);
    if (!(det > 0.0)) throw Error(ErrorCode::InvalidArgument, "isometry needs |a|^2 - |b|^2 > 0");
    const double s = std::sqrt(det);
    a_ /= s;
    b_ /= s;
}

Isometry operator*(const Isometry& g, const Isometry& h) {
    const Complex a = g.a_ * h.a_ + g.b_ * std::conj(h.b_);
    const Complex b = g.a_ * h.b_ + g.b_ * std::conj(h.a_);
    // For large entries |a|^2 - |b|^2 cancels badly; the raw product is then more accurate.
    const double det = std::norm(a) - std::norm(b);
    if (std::norm(a) > 1e8 || !(det > 0.0)) return Isometry(a, b, Isometry::Raw{});
    return Isometry(a, b);
}

double Isometry::distance_to_identity() const {
    const double plus = std::abs(a_ - 1.0) + std::abs(b_);
    const double minus = std::abs(a_ + 1.0) + std::abs(b_);
    return std::min(plus, minus);
}

Isometry power(const Isometry& g, int k) {
    Isometry base = k >= 0 ? g : g.inverse();
    unsigned n = static_cast<unsigned>(k >= 0 ? k : -k);
    Isometry result;
    while (n) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n) base = base * base;
    }
    return result;
}

Isometry translation_to(const DiskPoint& c) {
    const double s = std::sqrt(1.0 - c.norm2());
    return Isometry(Complex(1.0 / s, 0.0), c.z() / s);
}

Isometry rotation_about(const DiskPoint& center, int k, int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "rotation order must be positive");
    const double half = std::numbers::pi * k / n;
    const Isometry spin(std::polar(1.0, half), Complex(0.0, 0.0));
    const Isometry t = translation_to(center);
    return t * spin * t.inverse();
}

DiskPoint transform(const Isometry& g, const DiskPoint& x) { return DiskPoint(g.apply(x.z())); }

BoundaryPoint transform(const Isometry& g, const BoundaryPoint& x) {
    return BoundaryPoint::from(g.apply(x.z()));
}

double visual_angle(const DiskPoint& c, const BoundaryPoint& x) {
    return transform(translation_to(c).inverse(), x).theta;
}

double visual_angle(const DiskPoint& c, const DiskPoint& x) {
    return normalize_angle(std::arg(translation_to(c).inverse().apply(x.z())));
}

const char* to_string(IsometryClass::Kind kind) {
    switch (kind) {
        case IsometryClass::Kind::Identity: return "Identity";
        case IsometryClass::Kind::Elliptic: return "Elliptic";
        case IsometryClass::Kind::Parabolic: return "Parabolic";
        case IsometryClass::Kind::Hyperbolic: return "Hyperbolic";
    }
    return "Unknown";
}

IsometryClass classify(const Isometry& g, const Tolerances& tol) {
    IsometryClass out;
    if (g.distance_to_identity() < tol.identity) return out;

    const Complex a = g.a(), b = g.b();
    const double abs_tr = std::abs(g.trace());
    // Fixed points solve conj(b) z^2 - 2i Im(a) z - b = 0.
    if (abs_tr < 2.0 - tol.trace_band) {
        out.kind = IsometryClass::Kind::Elliptic;
        if (std::abs(b) < 1e-300) {
            out.center = DiskPoint(0.0, 0.0);
            return out;
        }
        const double disc = std::norm(b) - a.imag() * a.imag();  // negative here
        const double root = std::sqrt(std::max(0.0, -disc));
        const Complex z1 = Complex(0.0, a.imag() + root) / std::conj(b);
        const Complex z2 = Complex(0.0, a.imag() - root) / std::conj(b);
        out.center = DiskPoint(std::norm(z1) < std::norm(z2) ? z1 : z2);
        return out;
    }
    if (abs_tr <= 2.0 + tol.trace_band) {
        out.kind = IsometryClass::Kind::Parabolic;
        out.fixed = BoundaryPoint::from(Complex(0.0, a.imag()) / std::conj(b));
        return out;
    }
    out.kind = IsometryClass::Kind::Hyperbolic;
    const double root = std::sqrt(a.real() * a.real() - 1.0);
    const Complex z1 = Complex(root, a.imag()) / std::conj(b);
    const Complex z2 = Complex(-root, a.imag()) / std::conj(b);
    const Complex u1 = z1 / std::abs(z1), u2 = z2 / std::abs(z2);
    if (g.boundary_derivative(u1) < g.boundary_derivative(u2)) {
        out.attracting = BoundaryPoint::from(u1);
        out.repelling = BoundaryPoint::from(u2);
    } else {
        out.attracting = BoundaryPoint::from(u2);
        out.repelling = BoundaryPoint::from(u1);
    }
    return out;
}

double BoundaryArc::span(Orientation o) const { return offset(right, o); }

double BoundaryArc::offset(const BoundaryPoint& x, Orientation o) const {
    return normalize_angle(sign(o) * (x.theta - left.theta));
}

bool arc_contains(const BoundaryArc& arc, const BoundaryPoint& x, Orientation o, double snap) {
    if (circular_distance(x.theta, arc.left.theta) < snap) return true;
    if (circular_distance(x.theta, arc.right.theta) < snap) return false;
    return arc.offset(x, o) < arc.span(o);
}

BoundaryArc transform(const Isometry& g, const BoundaryArc& arc) {
    return {transform(g, arc.left), transform(g, arc.right)};
}

double cosh_side_ab(int p, int q, int r) {
    const double pi = std::numbers::pi;
    const double cos_r = is_infinite(r) ? 1.0 : std::cos(pi / r);
    return (std::cos(pi / p) * std::cos(pi / q) + cos_r) / (std::sin(pi / p) * std::sin(pi / q));
}

Triangle make_triangle(int p, int q, int r) {
    if (p < 2 || q < 2 || (!is_infinite(r) && r < 2))
        throw Error(ErrorCode::InvalidArgument, "orders must be at least 2");
    if (reciprocal(p) + reciprocal(q) + reciprocal(r) >= 1.0 - 1e-15)
        throw Error(ErrorCode::NonHyperbolic, "1/p + 1/q + 1/r must be < 1");

    const double pi = std::numbers::pi;
    Triangle t;
    t.p = p;
    t.q = q;
    t.r = r;
    t.A0 = DiskPoint(0.0, 0.0);
    // A point at hyperbolic distance d from the origin has Euclidean radius tanh(d/2).
    const double d_ab = std::acosh(cosh_side_ab(p, q, r));
    t.B0 = DiskPoint(std::tanh(d_ab / 2.0), 0.0);
    if (is_infinite(r)) {
        t.C0 = BoundaryPoint(pi / p);
    } else {
        const double cosh_ac = (std::cos(pi / p) * std::cos(pi / r) + std::cos(pi / q)) /
                               (std::sin(pi / p) * std::sin(pi / r));
        t.C0 = DiskPoint(std::polar(std::tanh(std::acosh(cosh_ac) / 2.0), pi / p));
    }
    return t;
}

namespace {
double direction_from(const DiskPoint& v, const Vertex3& x) {
    return std::visit([&](const auto& pt) { return visual_angle(v, pt); }, x);
}
}  // namespace

double interior_angle(const DiskPoint& v, const Vertex3& x, const Vertex3& y) {
    return circular_distance(direction_from(v, x), direction_from(v, y));
}

}  // namespace trigon
