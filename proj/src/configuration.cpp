#include "cuoco/configuration.hpp"

#include <algorithm>

namespace cuoco {

namespace {

struct LabelInfo {
    PairClass pair;
    Side host;
    PanelLabel partner;
};

constexpr std::array<LabelInfo, 6> kLabels{{
    {PairClass::R, Side::a, PanelLabel::R2},  // R1
    {PairClass::R, Side::b, PanelLabel::R1},  // R2
    {PairClass::S, Side::b, PanelLabel::S2},  // S1
    {PairClass::S, Side::c, PanelLabel::S1},  // S2
    {PairClass::T, Side::c, PanelLabel::T2},  // T1
    {PairClass::T, Side::a, PanelLabel::T1},  // T2
}};

const LabelInfo& info(PanelLabel l) { return kLabels[static_cast<int>(l)]; }

PairClass class_at(Vertex v) {
    switch (v) {
        case Vertex::A: return PairClass::S;
        case Vertex::B: return PairClass::T;
        case Vertex::C: return PairClass::R;
    }
    return PairClass::R;
}

PanelLabel label_for(PairClass pair, Side host) {
    for (int i = 0; i < 6; ++i) {
        if (kLabels[i].pair == pair && kLabels[i].host == host) return static_cast<PanelLabel>(i);
    }
    throw std::logic_error("no panel for class on this side");
}

// Panel hosted on `host` and adjacent to its endpoint `corner`.
PanelLabel panel_at(Side host, Vertex corner) { return label_for(class_at(corner), host); }

std::string sq(Side s) { return std::string(name(s)) + "^2"; }

}  // namespace

const char* name(PairClass p) {
    switch (p) {
        case PairClass::R: return "R";
        case PairClass::S: return "S";
        case PairClass::T: return "T";
    }
    return "?";
}

const char* name(PanelLabel l) {
    switch (l) {
        case PanelLabel::R1: return "R1";
        case PanelLabel::R2: return "R2";
        case PanelLabel::S1: return "S1";
        case PanelLabel::S2: return "S2";
        case PanelLabel::T1: return "T1";
        case PanelLabel::T2: return "T2";
    }
    return "?";
}

PairClass pair_of(PanelLabel l) { return info(l).pair; }
Side host_side(PanelLabel l) { return info(l).host; }

Vertex angle_vertex(PairClass p) {
    switch (p) {
        case PairClass::R: return Vertex::C;
        case PairClass::S: return Vertex::A;
        case PairClass::T: return Vertex::B;
    }
    return Vertex::C;
}

double PairAreas::operator[](PairClass p) const {
    switch (p) {
        case PairClass::R: return R;
        case PairClass::S: return S;
        case PairClass::T: return T;
    }
    return 0;
}

double panel_area_trig(PairClass pair, const TriangleMetrics& m) {
    switch (pair) {
        case PairClass::R: return m.a * m.b * std::cos(m.gamma);
        case PairClass::S: return m.b * m.c * std::cos(m.alpha);
        case PairClass::T: return m.a * m.c * std::cos(m.beta);
    }
    return 0;
}

double panel_area_exact(PairClass pair, const Triangle& t) {
    return panel_area_exact_generic<double>(pair, t.A(), t.B(), t.C());
}

std::int64_t panel_area_exact(PairClass pair, const LatticePoint& A, const LatticePoint& B,
                              const LatticePoint& C) {
    return panel_area_exact_generic<std::int64_t>(pair, A, B, C);
}

CuocoDecomposition build(const Triangle& t) {
    CuocoDecomposition d{t, metrics(t), {}, {}, {}};

    for (Side s : {Side::a, Side::b, Side::c}) {
        const auto [p, q] = t.endpoints(s);
        const Vector along = q - p;
        const Vector out = -perp(along);  // right of p->q is outside a ccw triangle
        d.squares[index(s)] = {s, {q, p, p + out, q + out}};

        const Vertex first = next(opposite(s));
        const Vertex second = next(first);
        const AltitudeFoot f = foot_of_altitude(t, opposite(s));
        const double len2 = dot(along, along);

        RectanglePanel& near_second = d.panels[static_cast<int>(panel_at(s, second))];
        near_second.label = panel_at(s, second);
        near_second.host = s;
        near_second.signed_area = (1 - f.tparam) * len2;
        near_second.quad = {q, f.foot, f.foot + out, q + out};

        RectanglePanel& near_first = d.panels[static_cast<int>(panel_at(s, first))];
        near_first.label = panel_at(s, first);
        near_first.host = s;
        near_first.signed_area = f.tparam * len2;
        near_first.quad = {f.foot, p, p + out, f.foot + out};
    }

    d.pair_areas = {panel_area_exact(PairClass::R, t), panel_area_exact(PairClass::S, t),
                    panel_area_exact(PairClass::T, t)};
    return d;
}

PairReport verify_pairs(const CuocoDecomposition& d, double tol) {
    PairReport rep;
    rep.scale = std::max(1.0, d.metrics.max_side_squared());
    rep.tolerance = tol;
    rep.pass = true;
    const std::array<std::array<PanelLabel, 2>, 3> groups{{
        {PanelLabel::R1, PanelLabel::R2},
        {PanelLabel::S1, PanelLabel::S2},
        {PanelLabel::T1, PanelLabel::T2},
    }};
    for (int i = 0; i < 3; ++i) {
        PairCheck& c = rep.pairs[i];
        c.pair = static_cast<PairClass>(i);
        c.first = d.panel(groups[i][0]).signed_area;
        c.second = d.panel(groups[i][1]).signed_area;
        c.difference = c.first - c.second;
        c.pass = std::abs(c.difference) <= tol * rep.scale;
        rep.pass = rep.pass && c.pass;
    }
    return rep;
}

SimilarityReport similarity_check(const Triangle& t, Vertex at, double tol) {
    const Vertex n = next(at);
    const Vertex p = prev(at);
    const Point& v = t[at];
    const double vn = distance(v, t[n]);
    const double vp = distance(v, t[p]);

    const Point h = foot_of_altitude(t, n).foot;
    const Point k = foot_of_altitude(t, p).foot;

    SimilarityReport rep;
    rep.at = at;
    rep.vh = dot(h - v, (t[p] - v) * (1 / vp));
    rep.vk = dot(k - v, (t[n] - v) * (1 / vn));
    rep.residual = vn * rep.vk - vp * rep.vh;
    rep.scale = std::max({1.0, vn * vn, vp * vp});
    rep.pass = std::abs(rep.residual) <= tol * rep.scale;
    return rep;
}

DerivationTrace derive_cosine_theorem(const CuocoDecomposition& d, Side side) {
    const Vertex opp = opposite(side);
    // Hosted panels and their partners, both in label order.
    std::array<PanelLabel, 2> hosted{panel_at(side, next(opp)), panel_at(side, prev(opp))};
    std::sort(hosted.begin(), hosted.end());
    std::array<PanelLabel, 2> partners{info(hosted[0]).partner, info(hosted[1]).partner};
    const std::array<PanelLabel, 2> partner_pair = partners;
    // Each partner's square also hosts a panel of the class at `opp`.
    std::sort(partners.begin(), partners.end(),
              [](PanelLabel l, PanelLabel r) { return index(info(l).host) < index(info(r).host); });
    const Side y = info(partners[0]).host;
    const Side z = info(partners[1]).host;
    const PanelLabel qy = panel_at(y, opp);
    const PanelLabel qz = panel_at(z, opp);

    auto area = [&](PanelLabel l) { return d.panel(l).signed_area; };
    auto side2 = [&](Side s) { return d.metrics.side(s) * d.metrics.side(s); };
    auto plus = [](PanelLabel l, PanelLabel r) { return std::string(name(l)) + " + " + name(r); };

    DerivationTrace tr;
    tr.side = side;
    tr.steps.push_back({sq(side), side2(side)});
    tr.steps.push_back({plus(hosted[0], hosted[1]), area(hosted[0]) + area(hosted[1])});
    tr.steps.push_back({plus(partner_pair[0], partner_pair[1]), area(partner_pair[0]) + area(partner_pair[1])});
    tr.steps.push_back({"(" + sq(y) + " - " + name(qy) + ") + (" + sq(z) + " - " + name(qz) + ")",
                        (side2(y) - area(qy)) + (side2(z) - area(qz))});
    const double closed = side2(y) + side2(z) - 2 * area(qy);
    tr.steps.push_back({sq(y) + " + " + sq(z) + " - 2*" + name(qy), closed});
    tr.residual = side2(side) - closed;
    return tr;
}

bool panel_within_square(const CuocoDecomposition& d, PanelLabel l, double slack) {
    const SquareOnSide& sq = d.square(host_side(l));
    const Point origin = sq.vertices[1];
    const Vector u = sq.vertices[0] - origin;
    const Vector w = sq.vertices[2] - origin;
    const double len2 = dot(u, u);
    for (const Point& x : d.panel(l).quad) {
        const double cu = dot(x - origin, u) / len2;
        const double cw = dot(x - origin, w) / len2;
        if (cu < -slack || cu > 1 + slack || cw < -slack || cw > 1 + slack) return false;
    }
    return true;
}

}  // namespace cuoco
