#pragma once

#include "cuoco/geometry.hpp"

#include <array>

namespace cuoco {

/// Side opposite `gamma` given the two enclosing sides.
double third_side(double a, double b, double gamma);

/// Cosine of the angle opposite `c`: (a^2 + b^2 - c^2) / (2ab).
double cos_from_sides(double a, double b, double c);

namespace detail {
// Same formula without the triangle-inequality gate. Sides measured from a
// valid Triangle can tie in floating point for slivers.
double cos_from_sides_unchecked(double a, double b, double c);
}  // namespace detail

/// Euclid's defect at one vertex V, with P = prev(V), N = next(V):
/// defect = 2 |VN| * proj(VP onto VN), residual = |PN|^2 - |VP|^2 - |VN|^2 + defect.
///
/// The projection is signed, so the obtuse case comes out with a negative
/// defect and the same residual.
struct EuclidDefect {
    Vertex at{Vertex::B};
    double projection{0};
    double defect{0};
    double residual{0};
    /// |PN|^2, the square the proposition is about.
    double opposite_square{0};
};

EuclidDefect euclid_defect(const Triangle& t, Vertex at = Vertex::B);

struct CosineIdentityReport {
    /// residual[k] = side_k^2 - (other two squared) + 2 * product * cos(angle_k).
    std::array<double, 3> residuals{};
    double scale{1};
    double tolerance{0};
    bool pass{false};

    double max_relative() const;
};

CosineIdentityReport verify_cosine_identity(const TriangleMetrics& m, double tol);

}  // namespace cuoco
