// Acceptance suite: one PASS/FAIL line per criterion. Exits 1 if any fails.

#include "cuoco/audit.hpp"
#include "cuoco/circles.hpp"
#include "cuoco/configuration.hpp"
#include "cuoco/cosine_law.hpp"
#include "cuoco/figure.hpp"
#include "cuoco/three_sum.hpp"
#include "oracles.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace cuoco;

namespace {

constexpr std::size_t kFuzzCount = 10000;
constexpr std::uint64_t kFuzzSeed = 20240101;
constexpr double kTol = 1e-9;
constexpr std::array<Vertex, 3> kVertices{Vertex::A, Vertex::B, Vertex::C};
constexpr std::array<Side, 3> kSides{Side::a, Side::b, Side::c};

int failures = 0;

void report(int id, bool pass, const std::string& what) {
    std::printf("AC%-2d %s  %s\n", id, pass ? "PASS" : "FAIL", what.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

std::vector<Triangle> fuzz_set() {
    TriangleSampler sampler(kFuzzSeed);
    std::vector<Triangle> out;
    out.reserve(kFuzzCount);
    for (std::size_t i = 0; i < kFuzzCount; ++i) out.push_back(sampler.next());
    return out;
}

bool near_right(const TriangleMetrics& m, double band) {
    return std::abs(m.cos_alpha) <= band || std::abs(m.cos_beta) <= band || std::abs(m.cos_gamma) <= band;
}

void ac1() {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<Triangle> set = fuzz_set();
    double worst = 0;
    for (const Triangle& t : set) {
        const TriangleMetrics m = metrics(t);
        const double scale = m.max_side_squared();
        // Cosines from the measured angles, not from the sides.
        const double r[3] = {m.a * m.a - (m.b * m.b + m.c * m.c - 2 * m.b * m.c * std::cos(m.alpha)),
                             m.b * m.b - (m.c * m.c + m.a * m.a - 2 * m.c * m.a * std::cos(m.beta)),
                             m.c * m.c - (m.a * m.a + m.b * m.b - 2 * m.a * m.b * std::cos(m.gamma))};
        for (double x : r) worst = std::max(worst, std::abs(x) / scale);
        worst = std::max(worst, verify_cosine_identity(m, kTol).max_relative());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report(1, worst <= kTol && secs < 5.0,
           fmt("cosine identity: max residual/max side^2 = %.2e (<= 1e-9) over %zu triangles in %.3f s (< 5 s)",
               worst, set.size(), secs));
}

void ac2(const std::vector<Triangle>& set) {
    double worst = 0;
    std::size_t negative_pairs = 0, failed = 0;
    for (const Triangle& t : set) {
        const PairReport r = verify_pairs(build(t), kTol);
        if (!r.pass) ++failed;
        for (const PairCheck& p : r.pairs) {
            worst = std::max(worst, std::abs(p.difference) / r.scale);
            if (p.first < 0) ++negative_pairs;
        }
    }
    report(2, failed == 0 && worst <= kTol && negative_pairs > 0,
           fmt("pair equivalence: max |X1-X2|/max side^2 = %.2e (<= 1e-9), %zu negative pairs seen, %zu failures",
               worst, negative_pairs, failed));
}

void ac3() {
    auto sq = [](LatticePoint p, LatticePoint q) { return (q.x - p.x) * (q.x - p.x) + (q.y - p.y) * (q.y - p.y); };
    std::size_t checked = 0, bad = 0;
    auto check = [&](LatticePoint A, LatticePoint B, LatticePoint C) {
        if ((B.x - A.x) * (C.y - A.y) - (B.y - A.y) * (C.x - A.x) == 0) return;
        ++checked;
        const std::int64_t a2 = sq(B, C), b2 = sq(C, A), c2 = sq(A, B);
        const std::int64_t R = panel_area_exact(PairClass::R, A, B, C);
        const std::int64_t S = panel_area_exact(PairClass::S, A, B, C);
        const std::int64_t T = panel_area_exact(PairClass::T, A, B, C);
        if (R + T != a2 || R + S != b2 || S + T != c2 || 2 * R != oracle::twice_ab_cos(a2, b2, c2)) ++bad;
    };
    // Every lattice triangle in the box is a translate of one with A at the origin
    // and B, C in [-40, 40]; the exhaustive sweep covers the B, C in [-20, 20] part.
    const LatticePoint O{0, 0};
    for (std::int64_t bx = -20; bx <= 20; ++bx)
        for (std::int64_t by = -20; by <= 20; ++by)
            for (std::int64_t cx = -20; cx <= 20; ++cx)
                for (std::int64_t cy = -20; cy <= 20; ++cy) check(O, {bx, by}, {cx, cy});
    const std::size_t exhaustive = checked;

    // Sampled triangles with all coordinates in [-20, 20], also through the
    // floating point Triangle route, which must be exact on small integers.
    std::mt19937_64 rng(kFuzzSeed);
    auto coord = [&] { return static_cast<std::int64_t>(rng() % 41) - 20; };
    std::size_t sampled = 0, bad_double = 0;
    while (sampled < 10000) {
        const LatticePoint A{coord(), coord()}, B{coord(), coord()}, C{coord(), coord()};
        if ((B.x - A.x) * (C.y - A.y) - (B.y - A.y) * (C.x - A.x) == 0) continue;
        ++sampled;
        check(A, B, C);
        auto P = [](LatticePoint p) { return Point{double(p.x), double(p.y)}; };
        const Triangle t(P(A), P(B), P(C));
        const CuocoDecomposition d = build(t);
        auto side2 = [&](Side s) {
            const auto [p, q] = t.endpoints(s);
            const Vector v = q - p;
            return v.x * v.x + v.y * v.y;
        };
        const PairAreas& pa = d.pair_areas;
        if (pa.R + pa.T != side2(Side::a) || pa.R + pa.S != side2(Side::b) || pa.S + pa.T != side2(Side::c)) {
            ++bad_double;
        }
    }
    report(3, bad == 0 && bad_double == 0,
           fmt("exact integer identities R+T=a^2, R+S=b^2, S+T=c^2: %zu exhaustive (A=0, B,C in [-20,20]^2) + "
               "%zu sampled, %zu integer and %zu double mismatches",
               exhaustive, sampled, bad, bad_double));
}

void ac4(const std::vector<Triangle>& set) {
    double worst = 0;
    std::size_t sign_mismatch = 0;
    for (const Triangle& t : set) {
        const TriangleMetrics m = metrics(t);
        for (Vertex v : kVertices) {
            const EuclidDefect e = euclid_defect(t, v);
            worst = std::max(worst, std::abs(e.residual) / m.max_side_squared());
            const double cv = std::cos(m.angle(v));
            if ((e.defect > 0) != (cv > 0) || (e.defect < 0) != (cv < 0)) ++sign_mismatch;
        }
    }
    report(4, worst <= kTol && sign_mismatch == 0,
           fmt("Euclid defect: max residual/max side^2 = %.2e (<= 1e-9) at %zu vertices, %zu sign mismatches",
               worst, 3 * set.size(), sign_mismatch));
}

void ac5() {
    std::mt19937_64 rng(kFuzzSeed + 5);
    auto u = [&] { return (rng() >> 11) * 0x1.0p-53 * 200.0 - 100.0; };
    double worst = 0, worst_oracle = 0;
    std::size_t mismatched = 0, banded = 0, negative_inputs = 0;
    for (int i = 0; i < 10000; ++i) {
        const ThreeSum s{u(), u(), u()};
        if (s.L < 0 || s.M < 0 || s.N < 0) ++negative_inputs;
        const Solution x = solve(s);
        const double scale = std::max({std::abs(s.L), std::abs(s.M), std::abs(s.N), 1.0});
        worst = std::max({worst, std::abs(x.x + x.y - s.L) / scale, std::abs(x.x + x.z - s.M) / scale,
                          std::abs(x.y + x.z - s.N) / scale, reconstruction_error(s, x)});
        const auto o = oracle::three_sum_by_elimination(s.L, s.M, s.N);
        worst_oracle = std::max({worst_oracle, std::abs(o[0] - x.x) / scale, std::abs(o[1] - x.y) / scale,
                                 std::abs(o[2] - x.z) / scale});
        const double m = x.min();
        if (std::abs(m) <= 1e-12 * scale) {
            ++banded;
            continue;
        }
        if (all_positive(s) != (m > 0)) ++mismatched;
    }
    report(5, worst <= 1e-12 && worst_oracle <= 1e-12 && mismatched == 0,
           fmt("three-sum: max reconstruction error %.2e (<= 1e-12), max deviation from elimination %.2e, "
               "all_positive<=>min>0 mismatches %zu (%zu triples with negative inputs, %zu in the 1e-12 band)",
               worst, worst_oracle, mismatched, negative_inputs, banded));
}

void ac6(const std::vector<Triangle>& set) {
    std::size_t considered = 0, excluded = 0, sq_bad = 0, ang_bad = 0, acute = 0;
    for (const Triangle& t : set) {
        const TriangleMetrics m = metrics(t);
        if (near_right(m, 1e-9)) {
            ++excluded;
            continue;
        }
        ++considered;
        const bool is_acute = m.cos_alpha > 0 && m.cos_beta > 0 && m.cos_gamma > 0;
        if (is_acute) ++acute;
        const InterpretationReport sq = interpret_squares(t, kTol, 1e-9);
        const InterpretationReport an = interpret_angles(t, kTol, 1e-9);
        if (!sq.matches || sq.all_positive != is_acute) ++sq_bad;
        if (!an.matches || an.all_positive != is_acute) ++ang_bad;
    }
    report(6, sq_bad == 0 && ang_bad == 0 && acute > 0 && acute < considered,
           fmt("positivity <=> acute: %zu triangles (%zu acute, %zu excluded by the 1e-9 band), "
               "%zu squares and %zu angles exceptions",
               considered, acute, excluded, sq_bad, ang_bad));
}

void ac7(const std::vector<Triangle>& set) {
    double worst = 0, worst_sum = 0;
    for (const Triangle& t : set) {
        const TangentLengths tl = tangent_lengths(t);
        const TriangleMetrics m = metrics(t);
        worst = std::max(worst, tl.max_relative_error);
        for (Side s : kSides) {
            const Vertex p = next(opposite(s)), q = prev(opposite(s));
            const double len = m.side(s);
            // Closed form and measured, both from each end of the side.
            const double closed = tl.closed_form[index(p)] + tl.closed_form[index(q)];
            const double measured = tl.measured[index(p)][0] + tl.measured[index(q)][1];
            worst_sum = std::max({worst_sum, std::abs(closed - len) / len, std::abs(measured - len) / len});
        }
    }
    report(7, worst <= kTol && worst_sum <= kTol,
           fmt("tangent lengths: max |measured - (s-x)|/longest side = %.2e, max |t_P + t_Q - side|/side = %.2e "
               "(both <= 1e-9)",
               worst, worst_sum));
}

void ac8(const std::vector<Triangle>& set) {
    double worst = 0, worst_sum = 0;
    auto account = [&](const Triangle& t) {
        const TriangleMetrics m = metrics(t);
        const auto measured = vertex_splits(t);
        const auto closed = vertex_splits_closed_form(t);
        for (Vertex v : kVertices) {
            const VertexSplit& a = measured[index(v)];
            const VertexSplit& b = closed[index(v)];
            worst = std::max({worst, std::abs(a.toward_next - b.toward_next), std::abs(a.toward_prev - b.toward_prev)});
            worst_sum = std::max(worst_sum, std::abs(a.sum() - m.angle(v)));
        }
        return measured;
    };
    for (const Triangle& t : set) account(t);

    int zero_splits = 0, negative_splits = 0;
    for (const VertexSplit& s : account(triangle_from_sides(3, 4, 5))) {
        for (double x : {s.toward_next, s.toward_prev}) zero_splits += std::abs(x) <= 1e-12;
    }
    for (const VertexSplit& s : account(triangle_from_sides(2, 3, 4))) {
        for (double x : {s.toward_next, s.toward_prev}) negative_splits += x < -1e-3;
    }
    report(8, worst <= kTol && worst_sum <= kTol && zero_splits > 0 && negative_splits > 0,
           fmt("vertex splits: max |measured - closed form| = %.2e, max |sum - angle| = %.2e (<= 1e-9 rad); "
               "3-4-5 has %d zero splits, (2,3,4) has %d negative splits",
               worst, worst_sum, zero_splits, negative_splits));
}

void ac9() {
    auto close = [](double x, double y) { return std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(y)); };
    std::vector<std::string> misses;

    const PairAreas obtuse = build(triangle_from_sides(2, 3, 4)).pair_areas;
    if (!close(obtuse.R, -1.5) || !close(obtuse.S, 10.5) || !close(obtuse.T, 5.5)) misses.push_back("(2,3,4) pairs");

    const Solution sol = solve({4, 9, 16});
    const auto o = oracle::three_sum_by_elimination(4, 9, 16);
    if (!close(sol.x, o[0]) || !close(sol.y, o[1]) || !close(sol.z, o[2])) misses.push_back("elimination oracle");
    if (!close(sol.x, -1.5) || !close(sol.y, 5.5) || !close(sol.z, 10.5)) misses.push_back("solve(4,9,16)");

    const Triangle rt = triangle_from_sides(3, 4, 5);
    const PairAreas right = build(rt).pair_areas;
    if (!close(right.R, 0) || !close(right.S, 16) || !close(right.T, 9)) misses.push_back("3-4-5 pairs");
    const IncircleData in = incircle(rt);
    const TangentLengths tl = tangent_lengths(rt);
    for (Vertex v : kVertices) {
        const double want = std::array{3.0, 2.0, 1.0}[index(v)];
        if (!close(in.tangent_lengths[index(v)], want) || !close(tl.measured[index(v)][0], want) ||
            !close(tl.measured[index(v)][1], want)) {
            misses.push_back(std::string("3-4-5 tangent length at ") + name(v));
        }
    }
    std::string detail = "(2,3,4) -> (-1.5, 10.5, 5.5); solve(4,9,16) -> (-1.5, 5.5, 10.5); "
                         "3-4-5 -> R=0 S=16 T=9, tangents {3,2,1}";
    for (const std::string& m : misses) detail += "; MISMATCH " + m;
    report(9, misses.empty(), detail);
}

struct Counts {
    std::size_t squares, panels, triangles, circles, lines;
    bool operator==(const Counts&) const = default;
};

Counts structure(const std::string& svg) {
    std::istringstream in(svg);
    boost::property_tree::ptree tree;
    boost::property_tree::read_xml(in, tree);
    Counts c{};
    std::function<void(const std::string&, const boost::property_tree::ptree&)> walk =
        [&](const std::string& tag, const boost::property_tree::ptree& node) {
            const std::string cls = node.get("<xmlattr>.class", "");
            if (tag == "path" && cls.rfind("square", 0) == 0) ++c.squares;
            if (tag == "polygon" && cls.rfind("panel", 0) == 0) ++c.panels;
            if (tag == "polygon" && cls == "triangle") ++c.triangles;
            if (tag == "circle") ++c.circles;
            if (tag == "line" && !cls.empty()) ++c.lines;
            for (const auto& [k, child] : node) {
                if (k != "<xmlattr>") walk(k, child);
            }
        };
    for (const auto& [k, child] : tree) walk(k, child);
    return c;
}

void ac10() {
    const std::array<std::pair<const char*, Triangle>, 3> triangles{{
        {"equilateral", triangle_from_sides(1, 1, 1)},
        {"3-4-5", triangle_from_sides(3, 4, 5)},
        {"2-3-4", triangle_from_sides(2, 3, 4)},
    }};
    const std::array kinds{FigureKind::euclid_defect, FigureKind::cuoco,    FigureKind::cuoco_pairs,
                           FigureKind::cuoco_obtuse,  FigureKind::incircle, FigureKind::circumcircle};
    std::size_t documents = 0;
    std::vector<std::string> problems;
    for (const auto& [label, t] : triangles) {
        for (FigureKind k : kinds) {
            FigureSpec spec;
            spec.kind = k;
            const std::string first = render(figure_data_for(k, t), spec);
            const std::string second = render(figure_data_for(k, t), spec);
            ++documents;
            const std::string where = std::string(name(k)) + "/" + label;
            if (first != second) problems.push_back(where + " not byte-identical");
            Counts expected{};
            switch (k) {
                case FigureKind::euclid_defect: {
                    // Altitude from A onto side a, plus an extension when the foot leaves the side.
                    const double tp = foot_of_altitude(t, Vertex::A).tparam;
                    expected = {3, 1, 1, 0, (tp < 0 || tp > 1) ? 2u : 1u};
                    break;
                }
                case FigureKind::cuoco:
                case FigureKind::cuoco_pairs:
                case FigureKind::cuoco_obtuse: expected = {3, 6, 1, 0, 3}; break;
                case FigureKind::incircle:
                case FigureKind::circumcircle: expected = {0, 0, 1, 1, 3}; break;
            }
            try {
                const Counts got = structure(first);
                if (!(got == expected)) {
                    problems.push_back(where + fmt(" counts squares/panels/triangle/circles/lines %zu/%zu/%zu/%zu/%zu",
                                                   got.squares, got.panels, got.triangles, got.circles, got.lines));
                }
            } catch (const std::exception& e) {
                problems.push_back(where + " does not parse: " + e.what());
            }
        }
    }
    std::string detail = fmt("figure determinism: %zu documents rendered twice, byte-identical, parsed as XML with "
                             "expected element counts",
                             documents);
    for (const std::string& p : problems) detail += "; " + p;
    report(10, problems.empty(), detail);
}

}  // namespace

int main() {
    ac1();
    const std::vector<Triangle> set = fuzz_set();
    ac2(set);
    ac3();
    ac4(set);
    ac5();
    ac6(set);
    ac7(set);
    ac8(set);
    ac9();
    ac10();
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
