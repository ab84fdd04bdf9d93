// cuoco: verify the Cuoco configuration proof of the law of cosines, solve the
// three-sum system, emit figures and fuzz the identities.
//
// Exit codes: 0 everything passed, 1 a verification failed, 2 bad usage or input.

#include "cuoco/audit.hpp"
#include "cuoco/circles.hpp"
#include "cuoco/configuration.hpp"
#include "cuoco/cosine_law.hpp"
#include "cuoco/figure.hpp"
#include "cuoco/geometry.hpp"
#include "cuoco/three_sum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace cuoco;

constexpr const char* kSchema = "cuoco-report/1";

enum Exit { kPass = 0, kFail = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reports carry 12 significant digits so that output is stable and readable.
double num(double v) {
    if (!std::isfinite(v)) return v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    const double r = std::strtod(buf, nullptr);
    return r == 0 ? 0.0 : r;
}

json point_json(Point p) { return json::array({num(p.x), num(p.y)}); }

std::vector<double> parse_list(const std::string& text, std::size_t expected, const char* flag) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        double v = 0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || res.ec != std::errc{} || res.ptr != item.data() + item.size() || !std::isfinite(v)) {
            throw UsageError(std::string(flag) + ": malformed number '" + item + "'");
        }
        out.push_back(v);
        pos = comma + 1;
    }
    if (out.size() != expected) {
        throw UsageError(std::string(flag) + ": expected " + std::to_string(expected) + " comma-separated numbers");
    }
    return out;
}

struct TriangleInput {
    std::string sides;
    std::string points;
    std::string sas;
    bool degrees{false};

    void attach(CLI::App* cmd) {
        auto* s = cmd->add_option("--sides", sides, "Side lengths a,b,c");
        auto* p = cmd->add_option("--points", points, "Vertices x1,y1,x2,y2,x3,y3 (A, B, C)");
        auto* g = cmd->add_option("--sas", sas, "Two sides and the included angle a,b,gamma");
        s->excludes(p)->excludes(g);
        p->excludes(g);
        cmd->add_flag("--degrees", degrees, "Angle inputs are in degrees");
    }

    bool given() const { return !sides.empty() || !points.empty() || !sas.empty(); }

    Triangle get() const {
        try {
            if (!sides.empty()) {
                const auto v = parse_list(sides, 3, "--sides");
                return triangle_from_sides(v[0], v[1], v[2]);
            }
            if (!points.empty()) {
                const auto v = parse_list(points, 6, "--points");
                return Triangle({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
            }
            if (!sas.empty()) {
                const auto v = parse_list(sas, 3, "--sas");
                const double gamma = degrees ? v[2] * std::numbers::pi / 180 : v[2];
                return triangle_from_sides(v[0], v[1], third_side(v[0], v[1], gamma));
            }
        } catch (const GeometryError& e) {
            throw UsageError(e.what());
        }
        throw UsageError("a triangle is required: --sides, --points or --sas");
    }
};

json triangle_json(const Triangle& t) {
    return json{{"A", point_json(t.A())}, {"B", point_json(t.B())}, {"C", point_json(t.C())},
                {"relabeled", t.relabeled()}};
}

json metrics_json(const TriangleMetrics& m) {
    return json{{"a", num(m.a)},         {"b", num(m.b)},         {"c", num(m.c)},
                {"alpha", num(m.alpha)}, {"beta", num(m.beta)},   {"gamma", num(m.gamma)},
                {"s", num(m.s)},         {"area", num(m.area)}};
}

json classification_json(const Classification& c) {
    json j{{"kind", kind_name(c.kind)}};
    j["vertex"] = c.vertex ? json(name(*c.vertex)) : json(nullptr);
    return j;
}

json interpretation_json(const InterpretationReport& r) {
    json j{{"kind", name(r.kind)},
           {"system", {{"L", num(r.system.L)}, {"M", num(r.system.M)}, {"N", num(r.system.N)}}},
           {"solution", {{"x", num(r.solution.x)}, {"y", num(r.solution.y)}, {"z", num(r.solution.z)}}},
           {"geometric", {num(r.geometric[0]), num(r.geometric[1]), num(r.geometric[2])}},
           {"mapping", {{"x", r.mapping[0]}, {"y", r.mapping[1]}, {"z", r.mapping[2]}}},
           {"mapping_is_convention", true},
           {"max_deviation", num(r.max_deviation)},
           {"matches", r.matches},
           {"all_positive", r.all_positive},
           {"acute", r.acute},
           {"positivity_consistent", r.positivity_consistent}};
    return j;
}

int cmd_verify(const Triangle& t, double tol) {
    const CuocoDecomposition d = build(t);
    const TriangleMetrics& m = d.metrics;
    bool pass = true;

    json checks;
    {
        const CosineIdentityReport r = verify_cosine_identity(m, tol);
        checks["cosine_identity"] = {{"residuals", {num(r.residuals[0]), num(r.residuals[1]), num(r.residuals[2])}},
                                     {"max_relative", num(r.max_relative())},
                                     {"pass", r.pass}};
        pass = pass && r.pass;
    }
    {
        json arr = json::array();
        const double scale = m.max_side_squared();
        for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
            const EuclidDefect e = euclid_defect(t, v);
            const bool ok = std::abs(e.residual) <= tol * scale;
            arr.push_back({{"vertex", name(v)},
                           {"projection", num(e.projection)},
                           {"defect", num(e.defect)},
                           {"residual", num(e.residual)},
                           {"pass", ok}});
            pass = pass && ok;
        }
        checks["euclid_defect"] = arr;
    }
    {
        const PairReport r = verify_pairs(d, tol);
        json pairs;
        for (const PairCheck& c : r.pairs) {
            pairs[name(c.pair)] = {{"first", num(c.first)},
                                   {"second", num(c.second)},
                                   {"difference", num(c.difference)},
                                   {"pass", c.pass}};
        }
        checks["pairs"] = pairs;
        pass = pass && r.pass;
    }
    {
        json arr = json::array();
        for (Vertex v : {Vertex::A, Vertex::B, Vertex::C}) {
            const SimilarityReport s = similarity_check(t, v, tol);
            arr.push_back({{"vertex", name(v)},
                           {"vh", num(s.vh)},
                           {"vk", num(s.vk)},
                           {"residual", num(s.residual)},
                           {"pass", s.pass}});
            pass = pass && s.pass;
        }
        checks["similarity"] = arr;
    }
    {
        json arr = json::array();
        const double scale = std::max(1.0, m.max_side_squared());
        for (Side s : {Side::a, Side::b, Side::c}) {
            const DerivationTrace tr = derive_cosine_theorem(d, s);
            json steps = json::array();
            for (const DerivationStep& st : tr.steps) steps.push_back({{"expression", st.expression}, {"value", num(st.value)}});
            const bool ok = std::abs(tr.residual) <= tol * scale;
            arr.push_back({{"side", name(s)}, {"steps", steps}, {"residual", num(tr.residual)}, {"pass", ok}});
            pass = pass && ok;
        }
        checks["derivation"] = arr;
    }

    json out;
    out["schema"] = kSchema;
    out["command"] = "verify";
    out["triangle"] = triangle_json(t);
    out["metrics"] = metrics_json(m);
    out["classification"] = classification_json(classify(m));
    out["tolerance"] = tol;
    out["pair_order"] = {"R", "S", "T"};
    out["pair_areas"] = {num(d.pair_areas.R), num(d.pair_areas.S), num(d.pair_areas.T)};
    out["pair_areas_trig"] = {num(panel_area_trig(PairClass::R, m)), num(panel_area_trig(PairClass::S, m)),
                              num(panel_area_trig(PairClass::T, m))};
    json panels = json::array();
    for (const RectanglePanel& p : d.panels) {
        panels.push_back({{"label", name(p.label)}, {"host", name(p.host)}, {"signed_area", num(p.signed_area)}});
    }
    out["panels"] = panels;
    out["checks"] = checks;
    out["pass"] = pass;
    std::cout << out.dump(2) << '\n';
    return pass ? kPass : kFail;
}

struct SolveArgs {
    std::optional<double> L, M, N;
    std::string interpret;
    double tol{1e-9};
};

int cmd_solve(const SolveArgs& a, const TriangleInput& tri) {
    const double to_rad = tri.degrees ? std::numbers::pi / 180 : 1.0;
    json out;
    out["schema"] = kSchema;
    out["command"] = "solve";

    if (!a.interpret.empty()) {
        if (a.L || a.M || a.N) throw UsageError("--interpret takes L, M, N from the triangle; drop --L/--M/--N");
        const Triangle t = tri.get();
        InterpretationReport r;
        if (a.interpret == "squares") {
            r = interpret_squares(t, a.tol);
        } else if (a.interpret == "sides") {
            r = interpret_sides(t, a.tol);
        } else {
            r = interpret_angles(t, a.tol);
        }
        out["units"] = a.interpret == "angles" ? "radians" : (a.interpret == "sides" ? "length" : "area");
        out["x"] = num(r.solution.x);
        out["y"] = num(r.solution.y);
        out["z"] = num(r.solution.z);
        out["all_positive"] = r.all_positive;
        out["triangle"] = triangle_json(t);
        out["interpretation"] = interpretation_json(r);
        const bool pass = r.matches && r.positivity_consistent;
        out["pass"] = pass;
        std::cout << out.dump(2) << '\n';
        return pass ? kPass : kFail;
    }

    if (!a.L || !a.M || !a.N) throw UsageError("--L, --M and --N are required");
    for (double v : {*a.L, *a.M, *a.N}) {
        if (!std::isfinite(v)) throw UsageError("L, M, N must be finite");
    }
    const ThreeSum sys{*a.L * to_rad, *a.M * to_rad, *a.N * to_rad};
    const Solution s = solve(sys);
    // Back to the caller's unit.
    out["units"] = tri.degrees ? "degrees" : "input";
    out["x"] = num(s.x / to_rad);
    out["y"] = num(s.y / to_rad);
    out["z"] = num(s.z / to_rad);
    out["all_positive"] = all_positive(sys);
    out["reconstruction_error"] = num(reconstruction_error(sys, s));
    std::cout << out.dump(2) << '\n';
    return kPass;
}

struct FigureArgs {
    std::string kind;
    std::string out;
    int precision{6};
    bool no_labels{false};
    bool omit_degenerate{false};
    int fill_palette{0};
    int stroke_palette{0};
};

json figure_sidecar(const FigureData& data, FigureKind kind) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = name(kind);
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Triangle>) {
                j["triangle"] = triangle_json(v);
                const EuclidDefect e = euclid_defect(v, Vertex::B);
                j["euclid_defect"] = {{"vertex", "B"},
                                      {"bd", num(e.projection)},
                                      {"defect", num(e.defect)},
                                      {"residual", num(e.residual)}};
            } else if constexpr (std::is_same_v<T, CuocoDecomposition>) {
                j["triangle"] = triangle_json(v.triangle);
                json panels = json::array();
                for (const RectanglePanel& p : v.panels) {
                    panels.push_back({{"label", name(p.label)}, {"host", name(p.host)}, {"signed_area", num(p.signed_area)}});
                }
                j["panels"] = panels;
            } else if constexpr (std::is_same_v<T, IncircleData>) {
                j["triangle"] = triangle_json(v.triangle);
                j["center"] = point_json(v.center);
                j["radius"] = num(v.radius);
                j["tangent_lengths"] = {{"A", num(v.tangent_lengths[0])},
                                        {"B", num(v.tangent_lengths[1])},
                                        {"C", num(v.tangent_lengths[2])}};
                j["tangent_points"] = {{"a", point_json(v.tangent_points[0])},
                                       {"b", point_json(v.tangent_points[1])},
                                       {"c", point_json(v.tangent_points[2])}};
            } else {
                j["triangle"] = triangle_json(v.triangle);
                j["center"] = point_json(v.center);
                j["radius"] = num(v.radius);
                json splits;
                for (Vertex w : {Vertex::A, Vertex::B, Vertex::C}) {
                    const VertexSplit& s = v.splits[index(w)];
                    splits[name(w)] = {num(s.toward_next), num(s.toward_prev)};
                }
                j["splits"] = splits;
            }
        },
        data);
    return j;
}

int cmd_figure(const FigureArgs& a, const TriangleInput& tri) {
    const auto kind = parse_figure_kind(a.kind);
    if (!kind) throw UsageError("unknown figure kind '" + a.kind + "'");
    if (a.precision < 1 || a.precision > 12) throw UsageError("--precision must lie in [1, 12]");
    const Triangle t = tri.get();

    FigureSpec spec;
    spec.kind = *kind;
    spec.precision = a.precision;
    spec.labels = !a.no_labels;
    spec.omit_degenerate = a.omit_degenerate;
    spec.fill_palette = a.fill_palette;
    spec.stroke_palette = a.stroke_palette;
    const FigureData data = figure_data_for(*kind, t);
    const std::string svg = render(data, spec);

    const std::string sidecar = a.out + ".json";
    {
        std::ofstream f(a.out, std::ios::binary);
        f << svg;
        if (!f) throw UsageError("cannot write " + a.out);
    }
    {
        std::ofstream f(sidecar, std::ios::binary);
        f << figure_sidecar(data, *kind).dump(2) << '\n';
        if (!f) throw UsageError("cannot write " + sidecar);
    }
    json out{{"schema", kSchema}, {"command", "figure"}, {"kind", name(*kind)}, {"path", a.out}, {"sidecar", sidecar}};
    std::cout << out.dump(2) << '\n';
    return kPass;
}

struct FuzzArgs {
    std::size_t count{10000};
    std::string seed{"42"};
    double tol{1e-9};
    unsigned threads{0};
};

// Numeric seeds are used as is; anything else is hashed (FNV-1a).
std::uint64_t seed_from(const std::string& s) {
    std::uint64_t v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (!s.empty() && res.ec == std::errc{} && res.ptr == s.data() + s.size()) return v;
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

int cmd_fuzz(const FuzzArgs& a) {
    if (a.count < 1) throw UsageError("--count must be at least 1");
    AuditOptions opt;
    opt.tol = a.tol;
    const FuzzSummary s = run_fuzz(a.count, seed_from(a.seed), opt, a.threads);

    json out;
    out["schema"] = kSchema;
    out["command"] = "fuzz";
    out["count"] = s.count;
    out["seed"] = a.seed;
    out["tolerance"] = a.tol;
    out["classification"] = {{"acute", s.acute}, {"right", s.right}, {"obtuse", s.obtuse}};
    json checks = json::array();
    for (const CheckSummary& c : s.checks) {
        checks.push_back({{"name", c.name},
                          {"max", num(c.max_value)},
                          {"threshold", c.threshold},
                          {"failures", c.failures}});
    }
    out["checks"] = checks;
    out["pass"] = s.pass();
    if (!s.pass()) {
        out["counterexample"] = {{"index", *s.first_failure},
                                 {"triangle", triangle_json(*s.counterexample)},
                                 {"failed_checks", s.counterexample_checks}};
    }
    std::cout << out.dump(2) << '\n';
    return s.pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cuoco configuration and law of cosines verifier"};
    app.require_subcommand(1);

    double verify_tol = 1e-9;
    TriangleInput verify_in;
    auto* verify = app.add_subcommand("verify", "Check every identity of the configuration for one triangle");
    verify_in.attach(verify);
    verify->add_option("--tol", verify_tol, "Relative tolerance")->check(CLI::PositiveNumber);

    SolveArgs solve_args;
    TriangleInput solve_in;
    auto* solve_cmd = app.add_subcommand("solve", "Solve x+y=L, x+z=M, y+z=N");
    solve_cmd->add_option("--L", solve_args.L, "First right-hand side");
    solve_cmd->add_option("--M", solve_args.M, "Second right-hand side");
    solve_cmd->add_option("--N", solve_args.N, "Third right-hand side");
    solve_cmd->add_option("--interpret", solve_args.interpret, "Geometric reading: squares, sides or angles")
        ->check(CLI::IsMember({"squares", "sides", "angles"}));
    solve_cmd->add_option("--tol", solve_args.tol, "Tolerance for the geometric cross-check")->check(CLI::PositiveNumber);
    solve_in.attach(solve_cmd);

    FigureArgs fig_args;
    TriangleInput fig_in;
    auto* figure = app.add_subcommand("figure", "Write an SVG figure");
    fig_in.attach(figure);
    figure->add_option("--kind", fig_args.kind,
                       "euclid_defect, cuoco, cuoco_pairs, cuoco_obtuse, incircle or circumcircle")
        ->required();
    figure->add_option("--out", fig_args.out, "Output SVG path")->required();
    figure->add_option("--precision", fig_args.precision, "Digits after the decimal point (1..12)");
    figure->add_flag("--no-labels", fig_args.no_labels, "Leave out text labels");
    figure->add_flag("--omit-degenerate", fig_args.omit_degenerate, "Skip zero-area panels");
    figure->add_option("--fill-palette", fig_args.fill_palette, "Fill palette index");
    figure->add_option("--stroke-palette", fig_args.stroke_palette, "Stroke palette index");

    FuzzArgs fuzz_args;
    auto* fuzz = app.add_subcommand("fuzz", "Audit random triangles");
    fuzz->add_option("--count", fuzz_args.count, "Number of triangles");
    fuzz->add_option("--seed", fuzz_args.seed, "PRNG seed (integer or any string)");
    fuzz->add_option("--tol", fuzz_args.tol, "Relative tolerance")->check(CLI::PositiveNumber);
    fuzz->add_option("--threads", fuzz_args.threads, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify) return cmd_verify(verify_in.get(), verify_tol);
        if (*solve_cmd) return cmd_solve(solve_args, solve_in);
        if (*figure) return cmd_figure(fig_args, fig_in);
        if (*fuzz) return cmd_fuzz(fuzz_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
