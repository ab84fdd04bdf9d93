#pragma once

#include "cuoco/geometry.hpp"

#include <array>

namespace cuoco {

struct IncircleData {
    Triangle triangle;
    Point center;
    double radius{0};
    /// Indexed by side: touch point on a (BC), b (CA), c (AB).
    std::array<Point, 3> tangent_points{};
    /// Indexed by vertex: s - a, s - b, s - c.
    std::array<double, 3> tangent_lengths{};
};

IncircleData incircle(const Triangle& t);

struct TangentLengths {
    /// s - a, s - b, s - c at A, B, C.
    std::array<double, 3> closed_form{};
    /// Distance from each vertex to the touch points on its two sides,
    /// (toward next vertex, toward previous vertex).
    std::array<std::array<double, 2>, 3> measured{};
    /// Worst |measured - closed form| over the longest side. Measured touch
    /// points carry absolute error of order eps * longest side, so short
    /// tangent lengths of flat obtuse triangles are compared on that scale.
    double max_relative_error{0};
};

TangentLengths tangent_lengths(const Triangle& t);

struct VertexSplit {
    /// Signed angle from the side toward next(v) to the ray v->O.
    double toward_next{0};
    /// Signed angle from the ray v->O to the side toward prev(v).
    double toward_prev{0};

    double sum() const { return toward_next + toward_prev; }
};

struct CircumcircleData {
    Triangle triangle;
    Point center;
    double radius{0};
    std::array<VertexSplit, 3> splits{};
};

CircumcircleData circumcircle(const Triangle& t);

/// Splits measured from the circumcenter's position. Negative when O lies
/// beyond the corresponding side line.
std::array<VertexSplit, 3> vertex_splits(const Triangle& t);

/// pi/2 minus the angle at the far end of each side, from the isosceles
/// triangles OAB, OBC, OCA.
std::array<VertexSplit, 3> vertex_splits_closed_form(const Triangle& t);

/// True when p is on the inner side of all three side lines.
bool strictly_inside(const Triangle& t, Point p);

}  // namespace cuoco
