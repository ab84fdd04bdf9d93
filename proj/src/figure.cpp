#include "cuoco/figure.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <limits>
#include <sstream>
#include <vector>

namespace cuoco {

const char* name(FigureKind k) {
    switch (k) {
        case FigureKind::euclid_defect: return "euclid_defect";
        case FigureKind::cuoco: return "cuoco";
        case FigureKind::cuoco_pairs: return "cuoco_pairs";
        case FigureKind::cuoco_obtuse: return "cuoco_obtuse";
        case FigureKind::incircle: return "incircle";
        case FigureKind::circumcircle: return "circumcircle";
    }
    return "?";
}

std::optional<FigureKind> parse_figure_kind(std::string_view s) {
    for (FigureKind k : {FigureKind::euclid_defect, FigureKind::cuoco, FigureKind::cuoco_pairs,
                         FigureKind::cuoco_obtuse, FigureKind::incircle, FigureKind::circumcircle}) {
        if (s == name(k)) return k;
    }
    return std::nullopt;
}

FigureData figure_data_for(FigureKind kind, const Triangle& t) {
    switch (kind) {
        case FigureKind::euclid_defect: return t;
        case FigureKind::cuoco:
        case FigureKind::cuoco_pairs:
        case FigureKind::cuoco_obtuse: return build(t);
        case FigureKind::incircle: return incircle(t);
        case FigureKind::circumcircle: return circumcircle(t);
    }
    return t;
}

namespace {

struct Palette {
    const char* triangle;
    const char* square;
    const char* panel;
    const char* pair_r;
    const char* pair_s;
    const char* pair_t;
    const char* negative;
};

constexpr std::array<Palette, 3> kFillPalettes{{
    {"#f4f1e8", "#ffffff", "#eeeeee", "#e4572e", "#76b041", "#17bebb", "#b22222"},
    {"#ffffff", "#fafafa", "#dddddd", "#888888", "#bbbbbb", "#555555", "#222222"},
    {"#fff8dc", "#f0f8ff", "#e6e6fa", "#ff8c00", "#9acd32", "#4169e1", "#8b0000"},
}};

constexpr std::array<const char*, 3> kStrokePalettes{"#222222", "#000000", "#1f3a93"};

struct Bounds {
    double min_x{std::numeric_limits<double>::infinity()};
    double min_y{std::numeric_limits<double>::infinity()};
    double max_x{-std::numeric_limits<double>::infinity()};
    double max_y{-std::numeric_limits<double>::infinity()};

    void add(Point p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    void add_circle(Point c, double r) {
        add({c.x - r, c.y - r});
        add({c.x + r, c.y + r});
    }
    double extent() const { return std::max({max_x - min_x, max_y - min_y, 1e-9}); }
};

struct Polygon {
    std::string cls;
    std::string label;
    std::optional<double> signed_area;
    std::vector<Point> points;
};

struct Circle {
    std::string cls;
    Point center;
    double radius{0};
};

struct Segment {
    std::string cls;
    Point from;
    Point to;
};

struct Label {
    std::string text;
    Point at;
};

// Everything a figure draws, in math coordinates.
struct Scene {
    std::vector<Polygon> squares;
    std::vector<Polygon> panels;
    std::optional<Polygon> triangle;
    std::vector<Circle> circles;
    std::vector<Segment> lines;
    std::vector<Label> labels;
};

class Formatter {
public:
    explicit Formatter(int precision) : precision_(precision) {}

    std::string operator()(double v) const {
        if (!std::isfinite(v)) throw std::logic_error("non-finite coordinate in figure");
        std::array<char, 64> buf{};
        auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, precision_);
        std::string s(buf.data(), res.ptr);
        if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
        return s;
    }

private:
    int precision_;
};

Scene triangle_scene(const Triangle& t) {
    Scene sc;
    sc.triangle = Polygon{"triangle", "", std::nullopt, {t.A(), t.B(), t.C()}};
    for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) sc.labels.push_back({name(v), t[v]});
    return sc;
}

void add_squares(Scene& sc, const CuocoDecomposition& d) {
    for (const SquareOnSide& s : d.squares) {
        sc.squares.push_back({std::string("square side-") + name(s.side), "", std::nullopt,
                              {s.vertices.begin(), s.vertices.end()}});
    }
}

bool degenerate(const RectanglePanel& p, const CuocoDecomposition& d) {
    return std::abs(p.signed_area) <= 1e-12 * std::max(1.0, d.metrics.max_side_squared());
}

Scene cuoco_scene(const CuocoDecomposition& d, const FigureSpec& spec) {
    Scene sc = triangle_scene(d.triangle);
    add_squares(sc, d);

    std::vector<RectanglePanel> panels(d.panels.begin(), d.panels.end());
    std::sort(panels.begin(), panels.end(),
              [](const auto& l, const auto& r) { return std::string(name(l.label)) < name(r.label); });
    for (const RectanglePanel& p : panels) {
        const bool degen = degenerate(p, d);
        if (degen && spec.omit_degenerate) continue;
        bool highlight = false;
        switch (spec.kind) {
            case FigureKind::cuoco: highlight = pair_of(p.label) == PairClass::R; break;
            case FigureKind::cuoco_pairs: highlight = true; break;
            default: highlight = !panel_within_square(d, p.label);
        }
        std::string cls = std::string("panel pair-") + name(pair_of(p.label));
        cls += p.signed_area < 0 && !degen ? " negative" : " positive";
        if (highlight) cls += " highlight";
        if (degen) cls += " degenerate";
        sc.panels.push_back({cls, name(p.label), p.signed_area, {p.quad.begin(), p.quad.end()}});
    }

    for (Side s : {Side::a, Side::b, Side::c}) {
        const Vertex from = opposite(s);
        const SquareOnSide& sq = d.square(s);
        const AltitudeFoot f = foot_of_altitude(d.triangle, from);
        const Point far = f.foot + (sq.vertices[2] - sq.vertices[1]);
        sc.lines.push_back({"altitude", d.triangle[from], far});
    }
    if (spec.labels) {
        for (const RectanglePanel& p : panels) {
            if (degenerate(p, d) && spec.omit_degenerate) continue;
            Point c{0, 0};
            for (const Point& q : p.quad) c = c + Vector{q.x / 4, q.y / 4};
            sc.labels.push_back({name(p.label), c});
        }
    }
    return sc;
}

Scene euclid_scene(const Triangle& t) {
    const CuocoDecomposition d = build(t);
    Scene sc = triangle_scene(t);
    add_squares(sc, d);
    // BC x BD sits in the square on BC next to B.
    const RectanglePanel& p = d.panel(PanelLabel::T2);
    std::string cls = "panel defect";
    cls += p.signed_area < 0 ? " negative" : " positive";
    sc.panels.push_back({cls, "BCxBD", p.signed_area, {p.quad.begin(), p.quad.end()}});
    const AltitudeFoot f = foot_of_altitude(t, Vertex::A);
    sc.lines.push_back({"altitude", t.A(), f.foot});
    if (f.tparam < 0 || f.tparam > 1) sc.lines.push_back({"extension", t.B(), f.foot});
    sc.labels.push_back({"D", f.foot});
    return sc;
}

Scene incircle_scene(const IncircleData& in) {
    Scene sc = triangle_scene(in.triangle);
    sc.circles.push_back({"incircle", in.center, in.radius});
    for (const Point& p : in.tangent_points) {
        sc.lines.push_back({"radius", in.center, p});
    }
    sc.labels.push_back({"I", in.center});
    for (Side s : {Side::a, Side::b, Side::c}) {
        sc.labels.push_back({std::string("T") + name(s), in.tangent_points[index(s)]});
    }
    return sc;
}

Scene circumcircle_scene(const CircumcircleData& cc) {
    Scene sc = triangle_scene(cc.triangle);
    sc.circles.push_back({"circumcircle", cc.center, cc.radius});
    for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
        sc.lines.push_back({"radius", cc.center, cc.triangle[v]});
    }
    sc.labels.push_back({"O", cc.center});
    return sc;
}

Scene make_scene(const FigureData& data, const FigureSpec& spec) {
    auto mismatch = [&] {
        return FigureError(FigureErrc::kind_mismatch,
                           std::string("figure kind ") + name(spec.kind) + " does not match the data");
    };
    switch (spec.kind) {
        case FigureKind::euclid_defect:
            if (auto* t = std::get_if<Triangle>(&data)) return euclid_scene(*t);
            throw mismatch();
        case FigureKind::cuoco:
        case FigureKind::cuoco_pairs:
        case FigureKind::cuoco_obtuse:
            if (auto* d = std::get_if<CuocoDecomposition>(&data)) return cuoco_scene(*d, spec);
            throw mismatch();
        case FigureKind::incircle:
            if (auto* in = std::get_if<IncircleData>(&data)) return incircle_scene(*in);
            throw mismatch();
        case FigureKind::circumcircle:
            if (auto* cc = std::get_if<CircumcircleData>(&data)) return circumcircle_scene(*cc);
            throw mismatch();
    }
    throw mismatch();
}

}  // namespace

std::string render(const FigureData& data, const FigureSpec& spec) {
    if (spec.precision < 1 || spec.precision > 12) {
        throw FigureError(FigureErrc::invalid_precision, "precision must lie in [1, 12]");
    }
    Scene sc = make_scene(data, spec);
    if (!spec.labels) sc.labels.clear();

    Bounds box;
    for (const auto* group : {&sc.squares, &sc.panels}) {
        for (const Polygon& p : *group) {
            for (const Point& q : p.points) box.add(q);
        }
    }
    if (sc.triangle) {
        for (const Point& q : sc.triangle->points) box.add(q);
    }
    for (const Circle& c : sc.circles) box.add_circle(c.center, c.radius);
    for (const Segment& s : sc.lines) {
        box.add(s.from);
        box.add(s.to);
    }

    const double extent = box.extent();
    const double margin = 0.05 * extent;
    const double vb_x = box.min_x - margin;
    const double vb_y = -box.max_y - margin;  // y is flipped by the top-level group
    const double vb_w = box.max_x - box.min_x + 2 * margin;
    const double vb_h = box.max_y - box.min_y + 2 * margin;
    const double stroke = 0.004 * extent;
    const double font = 0.035 * extent;

    const Formatter num(spec.precision);
    const Palette& fill = kFillPalettes[static_cast<std::size_t>(spec.fill_palette) % kFillPalettes.size()];
    const char* ink = kStrokePalettes[static_cast<std::size_t>(spec.stroke_palette) % kStrokePalettes.size()];

    auto points_attr = [&](const std::vector<Point>& pts) {
        std::string s;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (i) s += ' ';
            s += num(pts[i].x) + "," + num(pts[i].y);
        }
        return s;
    };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\""
        << num(800 * vb_h / vb_w) << "\" viewBox=\"" << num(vb_x) << ' ' << num(vb_y) << ' ' << num(vb_w) << ' '
        << num(vb_h) << "\" data-kind=\"" << name(spec.kind) << "\">\n";
    out << "<defs>\n";
    out << "<pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"" << num(4 * stroke) << "\" height=\""
        << num(4 * stroke) << "\" patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\""
        << num(4 * stroke) << "\" stroke=\"" << fill.negative << "\" stroke-width=\"" << num(stroke) << "\"/></pattern>\n";
    out << "<style type=\"text/css\"><![CDATA[\n"
        << "polygon, path, line, circle { stroke: " << ink << "; stroke-width: " << num(stroke) << "; }\n"
        << ".square { fill: " << fill.square << "; }\n"
        << ".panel { fill: " << fill.panel << "; fill-opacity: 0.6; }\n"
        << ".panel.highlight.pair-R { fill: " << fill.pair_r << "; }\n"
        << ".panel.highlight.pair-S { fill: " << fill.pair_s << "; }\n"
        << ".panel.highlight.pair-T { fill: " << fill.pair_t << "; }\n"
        << ".panel.defect { fill: " << fill.pair_t << "; }\n"
        << ".panel.negative { fill: url(#hatch); fill-opacity: 1; }\n"
        << ".triangle { fill: " << fill.triangle << "; }\n"
        << "circle { fill: none; }\n"
        << ".altitude, .extension, .radius { stroke-dasharray: " << num(3 * stroke) << ' ' << num(2 * stroke) << "; }\n"
        << "text { font-family: sans-serif; font-size: " << num(font) << "px; fill: " << ink << "; }\n"
        << "]]></style>\n";
    out << "</defs>\n";
    out << "<g transform=\"scale(1,-1)\">\n";

    out << "<g id=\"squares\">\n";
    for (const Polygon& p : sc.squares) {
        out << "<path class=\"" << p.cls << "\" d=\"M";
        for (std::size_t i = 0; i < p.points.size(); ++i) {
            out << (i ? " L" : "") << ' ' << num(p.points[i].x) << ' ' << num(p.points[i].y);
        }
        out << " Z\"/>\n";
    }
    out << "</g>\n";

    out << "<g id=\"panels\">\n";
    for (const Polygon& p : sc.panels) {
        out << "<polygon class=\"" << p.cls << "\" data-label=\"" << p.label << "\"";
        if (p.signed_area) out << " data-signed-area=\"" << num(*p.signed_area) << "\"";
        out << " points=\"" << points_attr(p.points) << "\"/>\n";
    }
    out << "</g>\n";

    if (sc.triangle) {
        out << "<polygon class=\"triangle\" points=\"" << points_attr(sc.triangle->points) << "\"/>\n";
    }

    out << "<g id=\"circles\">\n";
    for (const Circle& c : sc.circles) {
        out << "<circle class=\"" << c.cls << "\" cx=\"" << num(c.center.x) << "\" cy=\"" << num(c.center.y)
            << "\" r=\"" << num(c.radius) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g id=\"lines\">\n";
    for (const Segment& s : sc.lines) {
        out << "<line class=\"" << s.cls << "\" x1=\"" << num(s.from.x) << "\" y1=\"" << num(s.from.y) << "\" x2=\""
            << num(s.to.x) << "\" y2=\"" << num(s.to.y) << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g id=\"labels\">\n";
    for (const Label& l : sc.labels) {
        // Counter-flip so the glyphs read upright.
        out << "<text x=\"" << num(l.at.x) << "\" y=\"" << num(-l.at.y) << "\" transform=\"scale(1,-1)\">" << l.text
            << "</text>\n";
    }
    out << "</g>\n";

    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace cuoco
