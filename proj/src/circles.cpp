#include "cuoco/circles.hpp"

#include <algorithm>
#include <numbers>

namespace cuoco {

namespace {

Point project_on_line(Point x, Point p, Point q) {
    const Vector d = q - p;
    return p + d * (dot(x - p, d) / dot(d, d));
}

// Intersection of the perpendicular bisectors, relative to A.
Point circumcenter(const Triangle& t) {
    const Vector u = t.B() - t.A();
    const Vector w = t.C() - t.A();
    const double d = 2 * cross(u, w);
    const double uu = dot(u, u);
    const double ww = dot(w, w);
    return t.A() + Vector{(w.y * uu - u.y * ww) / d, (u.x * ww - w.x * uu) / d};
}

}  // namespace

IncircleData incircle(const Triangle& t) {
    const double a = t.length(Side::a);
    const double b = t.length(Side::b);
    const double c = t.length(Side::c);
    const double perimeter = a + b + c;
    const Point center{(a * t.A().x + b * t.B().x + c * t.C().x) / perimeter,
                       (a * t.A().y + b * t.B().y + c * t.C().y) / perimeter};
    const double s = 0.5 * perimeter;

    IncircleData data{t, center, 0.5 * t.twice_area() / s, {}, {s - a, s - b, s - c}};
    for (Side k : {Side::a, Side::b, Side::c}) {
        const auto [p, q] = t.endpoints(k);
        data.tangent_points[index(k)] = project_on_line(center, p, q);
    }
    return data;
}

TangentLengths tangent_lengths(const Triangle& t) {
    const IncircleData in = incircle(t);
    TangentLengths out;
    out.closed_form = in.tangent_lengths;
    const double scale = std::max({t.length(Side::a), t.length(Side::b), t.length(Side::c)});
    for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
        // The side joining v and next(v) is the one opposite prev(v).
        const Point& to_next = in.tangent_points[index(opposite(prev(v)))];
        const Point& to_prev = in.tangent_points[index(opposite(next(v)))];
        auto& m = out.measured[index(v)];
        m = {distance(t[v], to_next), distance(t[v], to_prev)};
        const double expected = out.closed_form[index(v)];
        for (double got : m) {
            out.max_relative_error = std::max(out.max_relative_error, std::abs(got - expected) / scale);
        }
    }
    return out;
}

CircumcircleData circumcircle(const Triangle& t) {
    const Point center = circumcenter(t);

    const double a = t.length(Side::a);
    const double b = t.length(Side::b);
    const double c = t.length(Side::c);
    const double radius = a * b * c / (2 * t.twice_area());
    CircumcircleData data{t, center, radius, {}};
    data.splits = vertex_splits(t);
    return data;
}

std::array<VertexSplit, 3> vertex_splits(const Triangle& t) {
    const Point o = circumcenter(t);

    std::array<VertexSplit, 3> out{};
    for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
        const Vector vn = t[next(v)] - t[v];
        const Vector vp = t[prev(v)] - t[v];
        const Vector vo = o - t[v];
        out[index(v)] = {std::atan2(cross(vn, vo), dot(vn, vo)), std::atan2(cross(vo, vp), dot(vo, vp))};
    }
    return out;
}

std::array<VertexSplit, 3> vertex_splits_closed_form(const Triangle& t) {
    const TriangleMetrics m = metrics(t);
    constexpr double half_pi = 0.5 * std::numbers::pi;
    std::array<VertexSplit, 3> out{};
    for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
        out[index(v)] = {half_pi - m.angle(prev(v)), half_pi - m.angle(next(v))};
    }
    return out;
}

bool strictly_inside(const Triangle& t, Point p) {
    for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
        if (!(cross(t[next(v)] - t[v], p - t[v]) > 0)) return false;
    }
    return true;
}

}  // namespace cuoco
