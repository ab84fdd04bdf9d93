#include "cuoco/cosine_law.hpp"

#include <algorithm>
#include <numbers>

namespace cuoco {

double third_side(double a, double b, double gamma) {
    if (!(a > 0) || !(b > 0)) {
        throw GeometryError(GeometryErrc::non_positive_side, "side lengths must be positive");
    }
    if (!(gamma > 0) || !(gamma < std::numbers::pi)) {
        throw GeometryError(GeometryErrc::domain_error, "angle must lie in (0, pi)");
    }
    // a^2 + b^2 - 2ab cos g rewritten as (a - b)^2 + 4ab sin^2(g/2); no cancellation at small g.
    const double h = std::sin(0.5 * gamma);
    const double d = a - b;
    return std::sqrt(d * d + 4 * a * b * h * h);
}

namespace detail {
double cos_from_sides_unchecked(double a, double b, double c) {
    return (a * a + b * b - c * c) / (2 * a * b);
}
}  // namespace detail

double cos_from_sides(double a, double b, double c) {
    if (!(a > 0) || !(b > 0) || !(c > 0)) {
        throw GeometryError(GeometryErrc::non_positive_side, "side lengths must be positive");
    }
    if (!(a < b + c) || !(b < a + c) || !(c < a + b)) {
        throw GeometryError(GeometryErrc::triangle_inequality_violated, "triangle inequality violated");
    }
    return detail::cos_from_sides_unchecked(a, b, c);
}

EuclidDefect euclid_defect(const Triangle& t, Vertex at) {
    const Vertex p = prev(at);
    const Vertex n = next(at);
    const Vector vp = t[p] - t[at];
    const Vector vn = t[n] - t[at];
    const Vector pn = t[n] - t[p];

    EuclidDefect out;
    out.at = at;
    out.projection = signed_projection(t, at, p, n);
    out.defect = 2 * norm(vn) * out.projection;
    out.opposite_square = dot(pn, pn);
    out.residual = out.opposite_square - dot(vp, vp) - dot(vn, vn) + out.defect;
    return out;
}

double CosineIdentityReport::max_relative() const {
    double worst = 0;
    for (double r : residuals) worst = std::max(worst, std::abs(r) / scale);
    return worst;
}

CosineIdentityReport verify_cosine_identity(const TriangleMetrics& m, double tol) {
    CosineIdentityReport rep;
    const double a2 = m.a * m.a, b2 = m.b * m.b, c2 = m.c * m.c;
    rep.residuals[0] = a2 - b2 - c2 + 2 * m.b * m.c * std::cos(m.alpha);
    rep.residuals[1] = b2 - a2 - c2 + 2 * m.a * m.c * std::cos(m.beta);
    rep.residuals[2] = c2 - a2 - b2 + 2 * m.a * m.b * std::cos(m.gamma);
    rep.scale = std::max({a2, b2, c2});
    rep.tolerance = tol;
    rep.pass = rep.max_relative() <= tol;
    return rep;
}

}  // namespace cuoco
