#include "cuoco/geometry.hpp"

#include "cuoco/cosine_law.hpp"

#include <algorithm>
#include <numbers>

namespace cuoco {

const char* name(Vertex v) {
    switch (v) {
        case Vertex::A: return "A";
        case Vertex::B: return "B";
        case Vertex::C: return "C";
    }
    return "?";
}

const char* name(Side s) {
    switch (s) {
        case Side::a: return "a";
        case Side::b: return "b";
        case Side::c: return "c";
    }
    return "?";
}

Triangle::Triangle(Point a, Point b, Point c) : v_{a, b, c} {
    for (const Point& p : v_) {
        if (!is_finite(p)) {
            throw GeometryError(GeometryErrc::non_finite_coordinate, "vertex coordinate is not finite");
        }
    }
    const double w = twice_area();
    if (w == 0 || !std::isfinite(w)) {
        throw GeometryError(GeometryErrc::collinear_vertices, "vertices are collinear");
    }
    if (w < 0) {
        std::swap(v_[1], v_[2]);
        relabeled_ = true;
    }
}

std::array<Point, 2> Triangle::endpoints(Side s) const {
    const Vertex first = next(opposite(s));
    return {(*this)[first], (*this)[next(first)]};
}

double Triangle::length(Side s) const {
    const auto [p, q] = endpoints(s);
    return distance(p, q);
}

Triangle triangle_from_sides(double a, double b, double c) {
    if (!(a > 0) || !(b > 0) || !(c > 0)) {
        throw GeometryError(GeometryErrc::non_positive_side, "side lengths must be positive");
    }
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        throw GeometryError(GeometryErrc::non_finite_coordinate, "side lengths must be finite");
    }
    if (!(a < b + c) || !(b < a + c) || !(c < a + b)) {
        throw GeometryError(GeometryErrc::triangle_inequality_violated, "triangle inequality violated");
    }
    // Kahan's arrangement of Heron's formula; needs x >= y >= z.
    std::array<double, 3> s{a, b, c};
    std::sort(s.begin(), s.end(), std::greater<>());
    const auto [x, y, z] = s;
    const double prod = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
    if (!(prod > 0)) {
        throw GeometryError(GeometryErrc::triangle_inequality_violated, "triangle is flat");
    }
    const double area = 0.25 * std::sqrt(prod);
    const double ax = (a * a + c * c - b * b) / (2 * a);
    const double ay = 2 * area / a;
    return Triangle({ax, ay}, {0, 0}, {a, 0});
}

double TriangleMetrics::side(Side k) const {
    switch (k) {
        case Side::a: return a;
        case Side::b: return b;
        case Side::c: return c;
    }
    return 0;
}

double TriangleMetrics::angle(Vertex v) const {
    switch (v) {
        case Vertex::A: return alpha;
        case Vertex::B: return beta;
        case Vertex::C: return gamma;
    }
    return 0;
}

double TriangleMetrics::cosine(Vertex v) const {
    switch (v) {
        case Vertex::A: return cos_alpha;
        case Vertex::B: return cos_beta;
        case Vertex::C: return cos_gamma;
    }
    return 0;
}

double TriangleMetrics::max_side_squared() const {
    const double m = std::max({a, b, c});
    return m * m;
}

TriangleMetrics metrics(const Triangle& t) {
    TriangleMetrics m;
    m.a = t.length(Side::a);
    m.b = t.length(Side::b);
    m.c = t.length(Side::c);
    m.cos_alpha = detail::cos_from_sides_unchecked(m.b, m.c, m.a);
    m.cos_beta = detail::cos_from_sides_unchecked(m.c, m.a, m.b);
    m.cos_gamma = detail::cos_from_sides_unchecked(m.a, m.b, m.c);

    // Angles come from atan2 on the vertex vectors. acos of the cosine above
    // loses digits near 0 and pi.
    const double w = t.twice_area();
    auto angle_at = [&](Vertex v) {
        return std::atan2(w, dot(t[next(v)] - t[v], t[prev(v)] - t[v]));
    };
    m.alpha = angle_at(Vertex::A);
    m.beta = angle_at(Vertex::B);
    m.gamma = angle_at(Vertex::C);
    m.s = 0.5 * (m.a + m.b + m.c);
    m.area = 0.5 * w;
    return m;
}

Classification classify(const TriangleMetrics& m, double eps) {
    Vertex worst = Vertex::A;
    for (Vertex v : {Vertex::B, Vertex::C}) {
        if (m.cosine(v) < m.cosine(worst)) worst = v;
    }
    const double cw = m.cosine(worst);
    if (std::abs(cw) <= eps) return {Classification::Kind::right, worst};
    if (cw < -eps) return {Classification::Kind::obtuse, worst};
    return {Classification::Kind::acute, std::nullopt};
}

const char* kind_name(Classification::Kind k) {
    switch (k) {
        case Classification::Kind::acute: return "acute";
        case Classification::Kind::right: return "right";
        case Classification::Kind::obtuse: return "obtuse";
    }
    return "?";
}

std::string to_string(const Classification& c) {
    std::string out = kind_name(c.kind);
    if (c.vertex) {
        out += "(";
        out += name(*c.vertex);
        out += ")";
    }
    return out;
}

AltitudeFoot foot_of_altitude(const Triangle& t, Vertex from) {
    const auto [p, q] = t.endpoints(opposite(from));
    const Vector d = q - p;
    const double tp = dot(t[from] - p, d) / dot(d, d);
    return {p + d * tp, tp};
}

double signed_projection(const Triangle& t, Vertex at, Vertex along, Vertex onto) {
    if (at == along || at == onto || along == onto) {
        throw std::invalid_argument("signed_projection needs three distinct vertices");
    }
    const Vector u = t[along] - t[at];
    const Vector v = t[onto] - t[at];
    return dot(u, v) / norm(v);
}

}  // namespace cuoco
