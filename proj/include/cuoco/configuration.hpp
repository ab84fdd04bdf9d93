#pragma once

// The Cuoco configuration: squares erected outward on each side of a
// triangle, each cut in two by the extended altitude that meets its side.
// The six rectangles fall into three classes of equal signed area,
//
//   R = ab cos(gamma),  S = bc cos(alpha),  T = ac cos(beta),
//
// hosted as  square(a) = R1 + T2,  square(b) = R2 + S1,  square(c) = S2 + T1.
// A class is negative when its angle is obtuse; the rectangle then lies
// outside its square and its sibling overruns the square by the same amount.

#include "cuoco/cosine_law.hpp"
#include "cuoco/geometry.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace cuoco {

enum class PairClass { R = 0, S = 1, T = 2 };

enum class PanelLabel { R1, R2, S1, S2, T1, T2 };

const char* name(PairClass p);
const char* name(PanelLabel l);
PairClass pair_of(PanelLabel l);
Side host_side(PanelLabel l);
/// Vertex whose angle carries the class: R at C, S at A, T at B.
Vertex angle_vertex(PairClass p);

struct SquareOnSide {
    Side side{Side::a};
    /// Counterclockwise; the first two are the side's endpoints (second, first).
    std::array<Point, 4> vertices{};
};

struct RectanglePanel {
    PanelLabel label{PanelLabel::R1};
    Side host{Side::a};
    double signed_area{0};
    /// Shoelace orientation matches the sign of signed_area. Two pairs of
    /// coincident corners when the panel's angle is right.
    std::array<Point, 4> quad{};
};

struct PairAreas {
    double R{0}, S{0}, T{0};

    double operator[](PairClass p) const;
};

struct CuocoDecomposition {
    Triangle triangle;
    TriangleMetrics metrics;
    std::array<SquareOnSide, 3> squares;
    /// Ordered R1, R2, S1, S2, T1, T2.
    std::array<RectanglePanel, 6> panels;
    /// Exact dot-product route.
    PairAreas pair_areas;

    const RectanglePanel& panel(PanelLabel l) const { return panels[static_cast<int>(l)]; }
    const SquareOnSide& square(Side s) const { return squares[index(s)]; }
};

CuocoDecomposition build(const Triangle& t);

/// R = ab cos(gamma), S = bc cos(alpha), T = ac cos(beta).
double panel_area_trig(PairClass pair, const TriangleMetrics& m);

/// R = (A-C).(B-C), S = (B-A).(C-A), T = (A-B).(C-B).
template <class Scalar, class P>
Scalar panel_area_exact_generic(PairClass pair, const P& A, const P& B, const P& C) {
    auto dot3 = [](const P& at, const P& u, const P& v) -> Scalar {
        return Scalar(u.x - at.x) * Scalar(v.x - at.x) + Scalar(u.y - at.y) * Scalar(v.y - at.y);
    };
    switch (pair) {
        case PairClass::R: return dot3(C, A, B);
        case PairClass::S: return dot3(A, B, C);
        case PairClass::T: return dot3(B, A, C);
    }
    return Scalar{};
}

double panel_area_exact(PairClass pair, const Triangle& t);

struct LatticePoint {
    std::int64_t x{0};
    std::int64_t y{0};
};

/// Integer-coordinate route; exact for any lattice triangle with |coordinates| < 2^30.
std::int64_t panel_area_exact(PairClass pair, const LatticePoint& A, const LatticePoint& B,
                              const LatticePoint& C);

struct PairCheck {
    PairClass pair{PairClass::R};
    double first{0};
    double second{0};
    double difference{0};
    bool pass{false};
};

struct PairReport {
    std::array<PairCheck, 3> pairs{};
    double scale{1};
    double tolerance{0};
    bool pass{false};
};

/// |X1 - X2| <= tol * max(1, a^2, b^2, c^2) for each class.
PairReport verify_pairs(const CuocoDecomposition& d, double tol);

/// Similar right triangles at one vertex V (N = next, P = prev):
/// H is the foot from N on line VP and K the foot from P on line VN, so that
/// |VN| * VK = |VP| * VH with VH, VK signed along the side lines.
struct SimilarityReport {
    Vertex at{Vertex::C};
    double vh{0};
    double vk{0};
    double residual{0};
    double scale{1};
    bool pass{false};
};

SimilarityReport similarity_check(const Triangle& t, Vertex at = Vertex::C, double tol = 1e-9);

struct DerivationStep {
    std::string expression;
    double value{0};
};

/// The identity chain proving the theorem for one side; for side a:
/// a^2 = R1 + T2 = R2 + T1 = (b^2 - S1) + (c^2 - S2) = b^2 + c^2 - 2 S1.
struct DerivationTrace {
    Side side{Side::a};
    std::vector<DerivationStep> steps;
    /// side^2 - (other^2 + other^2 - 2 * class area).
    double residual{0};
};

DerivationTrace derive_cosine_theorem(const CuocoDecomposition& d, Side side = Side::a);

/// Whether every corner of a panel lies in its host square, with `slack` in
/// units of the side length.
bool panel_within_square(const CuocoDecomposition& d, PanelLabel l, double slack = 1e-9);

}  // namespace cuoco
