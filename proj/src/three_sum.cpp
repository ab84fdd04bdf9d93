#include "cuoco/three_sum.hpp"

#include "cuoco/circles.hpp"
#include "cuoco/configuration.hpp"

#include <algorithm>

namespace cuoco {

double Solution::min() const { return std::min({x, y, z}); }

Solution solve(const ThreeSum& s) {
    return {0.5 * (s.L + s.M - s.N), 0.5 * (s.L + s.N - s.M), 0.5 * (s.M + s.N - s.L)};
}

double reconstruction_error(const ThreeSum& s, const Solution& sol) {
    const double scale = std::max({std::abs(s.L), std::abs(s.M), std::abs(s.N), 1.0});
    const double worst = std::max({std::abs(sol.x + sol.y - s.L), std::abs(sol.x + sol.z - s.M),
                                   std::abs(sol.y + sol.z - s.N)});
    return worst / scale;
}

bool all_positive(const ThreeSum& s) { return s.L < s.M + s.N && s.M < s.L + s.N && s.N < s.L + s.M; }

const char* name(Interpretation i) {
    switch (i) {
        case Interpretation::squares: return "squares";
        case Interpretation::sides: return "sides";
        case Interpretation::angles: return "angles";
    }
    return "?";
}

namespace {

InterpretationReport start(Interpretation kind, const ThreeSum& sys, double tol) {
    InterpretationReport rep;
    rep.kind = kind;
    rep.system = sys;
    rep.solution = solve(sys);
    rep.all_positive = all_positive(sys);
    rep.tolerance = tol;
    return rep;
}

std::array<double, 3> as_array(const Solution& s) { return {s.x, s.y, s.z}; }

}  // namespace

InterpretationReport interpret_squares(const Triangle& t, double tol, double right_eps) {
    const CuocoDecomposition d = build(t);
    const TriangleMetrics& m = d.metrics;
    InterpretationReport rep =
        start(Interpretation::squares, {m.a * m.a, m.b * m.b, m.c * m.c}, tol);
    rep.mapping = {"x = R = ab cos(gamma) [R1, R2]", "y = T = ac cos(beta) [T1, T2]",
                   "z = S = bc cos(alpha) [S1, S2]"};

    const std::array<std::array<PanelLabel, 2>, 3> panels{{
        {PanelLabel::R1, PanelLabel::R2},
        {PanelLabel::T1, PanelLabel::T2},
        {PanelLabel::S1, PanelLabel::S2},
    }};
    const auto sol = as_array(rep.solution);
    const double scale = std::max(1.0, m.max_side_squared());
    for (int i = 0; i < 3; ++i) {
        rep.geometric[i] = d.panel(panels[i][0]).signed_area;
        for (PanelLabel l : panels[i]) {
            rep.max_deviation = std::max(rep.max_deviation, std::abs(d.panel(l).signed_area - sol[i]) / scale);
        }
    }
    rep.matches = rep.max_deviation <= tol;
    rep.acute = classify(m, right_eps).kind == Classification::Kind::acute;
    rep.positivity_consistent = rep.all_positive == rep.acute;
    return rep;
}

InterpretationReport interpret_sides(const Triangle& t, double tol) {
    const TriangleMetrics m = metrics(t);
    InterpretationReport rep = start(Interpretation::sides, {m.a, m.b, m.c}, tol);
    rep.mapping = {"x = s - c, tangent length at C", "y = s - b, tangent length at B",
                   "z = s - a, tangent length at A"};

    const TangentLengths tl = tangent_lengths(t);
    const std::array<Vertex, 3> at{Vertex::C, Vertex::B, Vertex::A};
    const auto sol = as_array(rep.solution);
    const double scale = std::max({m.a, m.b, m.c});
    for (int i = 0; i < 3; ++i) {
        const auto& measured = tl.measured[index(at[i])];
        rep.geometric[i] = measured[0];
        for (double v : {measured[0], measured[1], tl.closed_form[index(at[i])]}) {
            rep.max_deviation = std::max(rep.max_deviation, std::abs(v - sol[i]) / scale);
        }
    }
    rep.matches = rep.max_deviation <= tol;
    rep.acute = classify(m).kind == Classification::Kind::acute;
    rep.positivity_consistent = rep.all_positive;
    return rep;
}

InterpretationReport interpret_angles(const Triangle& t, double tol, double right_eps) {
    const TriangleMetrics m = metrics(t);
    InterpretationReport rep = start(Interpretation::angles, {m.alpha, m.beta, m.gamma}, tol);
    rep.mapping = {"x = pi/2 - gamma, split at A toward B and at B toward A",
                   "y = pi/2 - beta, split at A toward C and at C toward A",
                   "z = pi/2 - alpha, split at B toward C and at C toward B"};

    const auto sp = vertex_splits(t);
    const auto& A = sp[index(Vertex::A)];
    const auto& B = sp[index(Vertex::B)];
    const auto& C = sp[index(Vertex::C)];
    const std::array<std::array<double, 2>, 3> measured{{
        {A.toward_next, B.toward_prev},
        {A.toward_prev, C.toward_next},
        {B.toward_next, C.toward_prev},
    }};
    const auto sol = as_array(rep.solution);
    for (int i = 0; i < 3; ++i) {
        rep.geometric[i] = measured[i][0];
        for (double v : measured[i]) rep.max_deviation = std::max(rep.max_deviation, std::abs(v - sol[i]));
    }
    rep.matches = rep.max_deviation <= tol;
    rep.acute = classify(m, right_eps).kind == Classification::Kind::acute;
    rep.positivity_consistent = rep.all_positive == rep.acute;
    return rep;
}

}  // namespace cuoco
