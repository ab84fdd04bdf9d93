#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace cuoco {

enum class GeometryErrc {
    non_finite_coordinate,
    non_positive_side,
    triangle_inequality_violated,
    collinear_vertices,
    domain_error,
};

class GeometryError : public std::runtime_error {
public:
    GeometryError(GeometryErrc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    GeometryErrc code() const noexcept { return code_; }

private:
    GeometryErrc code_;
};

struct Vector {
    double x{0};
    double y{0};

    constexpr Vector operator+(Vector o) const { return {x + o.x, y + o.y}; }
    constexpr Vector operator-(Vector o) const { return {x - o.x, y - o.y}; }
    constexpr Vector operator-() const { return {-x, -y}; }
    constexpr Vector operator*(double k) const { return {x * k, y * k}; }
    constexpr bool operator==(const Vector&) const = default;
};

struct Point {
    double x{0};
    double y{0};

    constexpr Vector operator-(Point o) const { return {x - o.x, y - o.y}; }
    constexpr Point operator+(Vector v) const { return {x + v.x, y + v.y}; }
    constexpr bool operator==(const Point&) const = default;
};

constexpr double dot(Vector u, Vector v) { return u.x * v.x + u.y * v.y; }
constexpr double cross(Vector u, Vector v) { return u.x * v.y - u.y * v.x; }
inline double norm(Vector v) { return std::hypot(v.x, v.y); }
inline double distance(Point p, Point q) { return norm(q - p); }
/// Counterclockwise quarter turn.
constexpr Vector perp(Vector v) { return {-v.y, v.x}; }

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Twice the signed area of the polygon (shoelace). Positive when counterclockwise.
template <class Range>
double twice_signed_area(const Range& polygon) {
    double acc = 0;
    const auto n = std::size(polygon);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = polygon[i];
        const Point& q = polygon[(i + 1) % n];
        acc += p.x * q.y - q.x * p.y;
    }
    return acc;
}

enum class Vertex { A = 0, B = 1, C = 2 };

/// Sides are named after the opposite vertex: a = |BC|, b = |CA|, c = |AB|.
enum class Side { a = 0, b = 1, c = 2 };

constexpr int index(Vertex v) { return static_cast<int>(v); }
constexpr int index(Side s) { return static_cast<int>(s); }
constexpr Vertex next(Vertex v) { return static_cast<Vertex>((index(v) + 1) % 3); }
constexpr Vertex prev(Vertex v) { return static_cast<Vertex>((index(v) + 2) % 3); }
constexpr Side opposite(Vertex v) { return static_cast<Side>(index(v)); }
constexpr Vertex opposite(Side s) { return static_cast<Vertex>(index(s)); }

const char* name(Vertex v);
const char* name(Side s);

/// A proper planar triangle, stored counterclockwise.
///
/// Clockwise input is relabeled by exchanging B and C; collinear or
/// non-finite input is rejected.
class Triangle {
public:
    Triangle(Point a, Point b, Point c);

    const Point& A() const { return v_[0]; }
    const Point& B() const { return v_[1]; }
    const Point& C() const { return v_[2]; }
    const Point& operator[](Vertex v) const { return v_[index(v)]; }
    const std::array<Point, 3>& vertices() const { return v_; }

    /// (B - A) x (C - A); strictly positive.
    double twice_area() const { return cross(v_[1] - v_[0], v_[2] - v_[0]); }

    /// Endpoints of a side in cyclic order: a = (B, C), b = (C, A), c = (A, B).
    std::array<Point, 2> endpoints(Side s) const;
    double length(Side s) const;

    /// True if the input had to be relabeled to become counterclockwise.
    bool relabeled() const { return relabeled_; }

private:
    std::array<Point, 3> v_;
    bool relabeled_{false};
};

/// Canonical placement: B at the origin, C on the positive x axis, A above it.
Triangle triangle_from_sides(double a, double b, double c);

struct TriangleMetrics {
    double a{0}, b{0}, c{0};
    double alpha{0}, beta{0}, gamma{0};
    /// Law-of-cosines cosines, one per vertex.
    double cos_alpha{0}, cos_beta{0}, cos_gamma{0};
    double s{0};
    double area{0};

    double side(Side k) const;
    double angle(Vertex v) const;
    double cosine(Vertex v) const;
    double max_side_squared() const;
};

TriangleMetrics metrics(const Triangle& t);

struct Classification {
    enum class Kind { acute, right, obtuse };
    Kind kind{Kind::acute};
    /// Set for right and obtuse triangles.
    std::optional<Vertex> vertex;

    bool operator==(const Classification&) const = default;
};

inline constexpr double kDefaultRightEps = 1e-12;

/// Decided on the cosines: |cos| <= eps is right, cos < -eps is obtuse.
Classification classify(const TriangleMetrics& m, double eps = kDefaultRightEps);
std::string to_string(const Classification& c);
const char* kind_name(Classification::Kind k);

struct AltitudeFoot {
    Point foot;
    /// Affine coordinate along the opposite side, 0 at its first endpoint.
    double tparam{0};
};

/// Orthogonal projection of a vertex onto the line of its opposite side.
AltitudeFoot foot_of_altitude(const Triangle& t, Vertex from);

/// Signed length of the projection of edge at->along onto the direction at->onto.
/// Negative exactly when the angle at `at` is obtuse.
double signed_projection(const Triangle& t, Vertex at, Vertex along, Vertex onto);

}  // namespace cuoco
