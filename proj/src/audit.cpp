#include "cuoco/audit.hpp"

#include "cuoco/circles.hpp"
#include "cuoco/configuration.hpp"
#include "cuoco/cosine_law.hpp"
#include "cuoco/three_sum.hpp"

#include <algorithm>
#include <numbers>
#include <thread>

namespace cuoco {

TriangleSampler::TriangleSampler(std::uint64_t seed, double range, double min_shape)
    : rng_(seed), range_(range), min_shape_(min_shape) {}

double TriangleSampler::uniform(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

Triangle TriangleSampler::next() {
    for (;;) {
        const Point a{uniform(-range_, range_), uniform(-range_, range_)};
        const Point b{uniform(-range_, range_), uniform(-range_, range_)};
        const Point c{uniform(-range_, range_), uniform(-range_, range_)};
        const double w = std::abs(cross(b - a, c - a));
        const double longest = std::max({distance(a, b), distance(b, c), distance(c, a)});
        if (w > min_shape_ * longest * longest) return Triangle(a, b, c);
    }
}

namespace {

class Collector {
public:
    void add(std::string name, double value, double threshold) {
        const bool ok = value <= threshold && !std::isnan(value);
        out_.push_back({std::move(name), value, threshold, ok});
    }
    void add_count(std::string name, int mismatches) { add(std::move(name), mismatches, 0); }
    std::vector<CheckValue> take() { return std::move(out_); }

private:
    std::vector<CheckValue> out_;
};

int sign_with_band(double v, double band) { return v > band ? 1 : (v < -band ? -1 : 0); }

// The triangle with vertices relabeled A->B->C->A.
Triangle rotated(const Triangle& t) { return Triangle(t.B(), t.C(), t.A()); }

}  // namespace

std::vector<CheckValue> audit_triangle(const Triangle& t, const AuditOptions& opt) {
    const double tol = opt.tol;
    const double pi = std::numbers::pi;
    Collector col;

    const TriangleMetrics m = metrics(t);
    const double L2 = m.max_side_squared();
    const Classification cls = classify(m, opt.right_band);
    const bool near_right = cls.kind == Classification::Kind::right;
    const bool acute = cls.kind == Classification::Kind::acute;

    // geometry_core
    col.add("angle_sum", std::abs(m.alpha + m.beta + m.gamma - pi), tol);
    {
        const std::array<double, 3> ratios{m.a / std::sin(m.alpha), m.b / std::sin(m.beta), m.c / std::sin(m.gamma)};
        const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
        col.add("law_of_sines", (*hi - *lo) / *hi, tol);
    }
    {
        const double heron = std::sqrt(m.s * (m.s - m.a) * (m.s - m.b) * (m.s - m.c));
        col.add("heron_area", std::abs(heron - m.area) / L2, tol);
    }
    {
        const TriangleMetrics back = metrics(triangle_from_sides(m.a, m.b, m.c));
        col.add("placement_round_trip",
                std::max({std::abs(back.a - m.a) / m.a, std::abs(back.b - m.b) / m.b, std::abs(back.c - m.c) / m.c}),
                tol);
    }
    {
        int bad = 0;
        const Triangle scaled(Point{t.A().x * 3.5, t.A().y * 3.5}, Point{t.B().x * 3.5, t.B().y * 3.5},
                              Point{t.C().x * 3.5, t.C().y * 3.5});
        if (classify(metrics(scaled), opt.right_band).kind != cls.kind) ++bad;
        const Classification rc = classify(metrics(rotated(t)), opt.right_band);
        // Vertex v of the original is vertex prev(v) after rotation.
        if (rc.kind != cls.kind) ++bad;
        if (cls.vertex && (!rc.vertex || *rc.vertex != prev(*cls.vertex))) ++bad;
        col.add_count("classify_invariance", bad);
    }

    // cosine_law
    col.add("cosine_identity", verify_cosine_identity(m, tol).max_relative(), tol);
    {
        double worst = 0;
        int sign_bad = 0;
        for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
            const EuclidDefect e = euclid_defect(t, v);
            worst = std::max(worst, std::abs(e.residual) / L2);
            if (sign_with_band(e.defect, opt.right_band * L2) != sign_with_band(m.cosine(v), opt.right_band)) {
                ++sign_bad;
            }
        }
        col.add("euclid_defect", worst, tol);
        if (near_right) sign_bad = 0;
        col.add_count("euclid_defect_sign", sign_bad);
    }
    {
        double worst = 0;
        for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
            const double c = cos_from_sides(m.side(opposite(next(v))), m.side(opposite(prev(v))), m.side(opposite(v)));
            worst = std::max(worst, std::abs(third_side(m.side(opposite(next(v))), m.side(opposite(prev(v))),
                                                        std::acos(c)) -
                                             m.side(opposite(v))) /
                                        m.side(opposite(v)));
        }
        col.add("third_side_round_trip", worst, tol);
    }

    // cuoco_config
    const CuocoDecomposition d = build(t);
    const double scale = std::max(1.0, L2);
    {
        const PairReport pr = verify_pairs(d, tol);
        double worst = 0;
        for (const PairCheck& c : pr.pairs) worst = std::max(worst, std::abs(c.difference) / pr.scale);
        col.add("pair_equivalence", worst, tol);
    }
    {
        double worst = 0;
        for (PairClass p : {PairClass::R, PairClass::S, PairClass::T}) {
            worst = std::max(worst, std::abs(panel_area_trig(p, m) - panel_area_exact(p, t)) / scale);
        }
        col.add("trig_vs_exact", worst, tol);
    }
    {
        const PairAreas& pa = d.pair_areas;
        const double worst = std::max({std::abs(pa.R + pa.T - m.a * m.a), std::abs(pa.R + pa.S - m.b * m.b),
                                       std::abs(pa.S + pa.T - m.c * m.c)}) /
                             scale;
        col.add("pair_identities", worst, tol);
    }
    {
        double worst = 0;
        for (const RectanglePanel& p : d.panels) {
            worst = std::max(worst, std::abs(0.5 * twice_signed_area(p.quad) - p.signed_area) / scale);
        }
        col.add("panel_shoelace", worst, tol);
    }
    {
        int bad = 0;
        for (PairClass p : {PairClass::R, PairClass::S, PairClass::T}) {
            const double c = m.cosine(angle_vertex(p));
            if (sign_with_band(d.pair_areas[p], opt.right_band * scale) != sign_with_band(c, opt.right_band)) ++bad;
        }
        if (near_right) bad = 0;
        col.add_count("pair_sign_pattern", bad);
    }
    {
        // A panel stays inside its square iff neither angle on the host side is obtuse.
        int bad = 0;
        if (!near_right) {
            for (const RectanglePanel& p : d.panels) {
                const auto [e0, e1] = std::array{next(opposite(p.host)), prev(opposite(p.host))};
                // Within the containment slack of a right angle the answer is ambiguous.
                if (std::min(std::abs(m.cosine(e0)), std::abs(m.cosine(e1))) < 1e-6) continue;
                const bool expect = m.cosine(e0) > 0 && m.cosine(e1) > 0;
                if (panel_within_square(d, p.label) != expect) ++bad;
            }
        }
        col.add_count("panel_containment", bad);
    }
    {
        double worst = 0;
        for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
            const SimilarityReport s = similarity_check(t, v, tol);
            worst = std::max(worst, std::abs(s.residual) / s.scale);
        }
        col.add("similarity", worst, tol);
    }
    {
        double worst = 0;
        for (Side s : {Side::a, Side::b, Side::c}) {
            const DerivationTrace tr = derive_cosine_theorem(d, s);
            worst = std::max(worst, std::abs(tr.residual) / scale);
            for (const DerivationStep& st : tr.steps) {
                worst = std::max(worst, std::abs(st.value - tr.steps.front().value) / scale);
            }
        }
        col.add("derivation_chain", worst, tol);
    }

    // three_sum_system interpretations
    const InterpretationReport sq = interpret_squares(t, tol, opt.right_band);
    const InterpretationReport sd = interpret_sides(t, tol);
    const InterpretationReport an = interpret_angles(t, tol, opt.right_band);
    col.add("squares_interpretation", sq.max_deviation, tol);
    col.add_count("squares_positive_iff_acute", near_right || sq.positivity_consistent ? 0 : 1);
    col.add("sides_interpretation", sd.max_deviation, tol);
    col.add_count("sides_always_positive", sd.all_positive && sd.solution.min() > 0 ? 0 : 1);
    col.add("angles_interpretation", an.max_deviation, tol);
    col.add_count("angles_positive_iff_acute", near_right || an.positivity_consistent ? 0 : 1);

    // circle_interpretations
    {
        const IncircleData in = incircle(t);
        double worst = 0;
        int outside = 0;
        for (Side s : {Side::a, Side::b, Side::c}) {
            const auto [p, q] = t.endpoints(s);
            const double dist = std::abs(cross(q - p, in.center - p)) / distance(p, q);
            worst = std::max(worst, std::abs(dist - in.radius) / in.radius);
            const double tp = dot(in.tangent_points[index(s)] - p, q - p) / dot(q - p, q - p);
            if (!(tp > 0 && tp < 1)) ++outside;
        }
        col.add("incircle_tangency", worst, tol);
        col.add_count("tangent_points_inside_sides", outside);

        const TangentLengths tl = tangent_lengths(t);
        col.add("tangent_lengths", tl.max_relative_error, tol);
        double sums = 0;
        for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
            const Vertex n = next(v);
            const double side = distance(t[v], t[n]);
            sums = std::max(sums, std::abs(tl.measured[index(v)][0] + tl.measured[index(n)][1] - side) / side);
        }
        col.add("tangent_side_sums", sums, tol);
    }
    {
        const CircumcircleData cc = circumcircle(t);
        double worst = 0;
        for (const Point& p : t.vertices()) worst = std::max(worst, std::abs(distance(cc.center, p) - cc.radius) / cc.radius);
        col.add("circumradius", worst, tol);

        const auto closed = vertex_splits_closed_form(t);
        double dev = 0, sum_dev = 0;
        bool all_pos = true;
        for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
            const VertexSplit& g = cc.splits[index(v)];
            const VertexSplit& c = closed[index(v)];
            dev = std::max({dev, std::abs(g.toward_next - c.toward_next), std::abs(g.toward_prev - c.toward_prev)});
            sum_dev = std::max(sum_dev, std::abs(g.sum() - m.angle(v)));
            all_pos = all_pos && g.toward_next > 0 && g.toward_prev > 0;
        }
        col.add("splits_closed_form", dev, tol);
        col.add("split_sums", sum_dev, tol);
        col.add_count("splits_positive_iff_acute", near_right || all_pos == acute ? 0 : 1);
    }
    return col.take();
}

FuzzSummary run_fuzz(std::size_t count, std::uint64_t seed, const AuditOptions& opt, unsigned threads) {
    TriangleSampler sampler(seed);
    std::vector<Triangle> tris;
    tris.reserve(count);
    for (std::size_t i = 0; i < count; ++i) tris.push_back(sampler.next());

    std::vector<std::vector<CheckValue>> results(count);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < count; i += threads) results[i] = audit_triangle(tris[i], opt);
            });
        }
    }

    FuzzSummary sum;
    sum.count = count;
    sum.seed = seed;
    for (std::size_t i = 0; i < count; ++i) {
        switch (classify(metrics(tris[i]), opt.right_band).kind) {
            case Classification::Kind::acute: ++sum.acute; break;
            case Classification::Kind::right: ++sum.right; break;
            case Classification::Kind::obtuse: ++sum.obtuse; break;
        }
        const auto& r = results[i];
        if (sum.checks.empty()) {
            for (const CheckValue& c : r) sum.checks.push_back({c.name, 0, c.threshold, 0});
        }
        for (std::size_t k = 0; k < r.size(); ++k) {
            CheckSummary& cs = sum.checks[k];
            cs.max_value = std::max(cs.max_value, r[k].value);
            if (!r[k].pass) {
                ++cs.failures;
                if (!sum.first_failure) {
                    sum.first_failure = i;
                    sum.counterexample = tris[i];
                }
                if (*sum.first_failure == i) sum.counterexample_checks.push_back(r[k].name);
            }
        }
    }
    return sum;
}

}  // namespace cuoco
