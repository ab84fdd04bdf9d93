#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;
using doctest::Approx;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CUOCO_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

json run_json(const std::string& args, int expected_status = 0) {
    const Run r = run(args);
    CAPTURE(args);
    REQUIRE(r.status == expected_status);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("verify (2,3,4)") {
    const json j = run_json("verify --sides 2,3,4");
    CHECK(j["schema"] == "cuoco-report/1");
    CHECK(j["classification"]["kind"] == "obtuse");
    CHECK(j["classification"]["vertex"] == "C");
    CHECK(j["pair_areas"][0].get<double>() == Approx(-1.5));
    CHECK(j["pair_areas"][1].get<double>() == Approx(10.5));
    CHECK(j["pair_areas"][2].get<double>() == Approx(5.5));
    CHECK(j["pass"] == true);
}

TEST_CASE("verify from points puts the right angle at B") {
    const json j = run_json("verify --points 0,0,3,0,3,4");
    CHECK(j["classification"]["kind"] == "right");
    CHECK(j["classification"]["vertex"] == "B");
    CHECK(j["pair_areas"][2].get<double>() == 0.0);
    CHECK(j["pair_areas"][0].get<double>() == Approx(16.0));
    CHECK(j["pass"] == true);

    const json s = run_json("verify --sides 3,4,5");
    CHECK(s["pair_areas"][0].get<double>() == 0.0);
}

TEST_CASE("verify from side-angle-side") {
    const json j = run_json("verify --sas 3,4,90 --degrees");
    CHECK(j["metrics"]["c"].get<double>() == Approx(5.0));
    CHECK(j["classification"]["vertex"] == "C");
}

TEST_CASE("exit codes") {
    CHECK(run("verify --sides 1,2,5").status == 2);
    CHECK(run("verify --sides 1,2").status == 2);
    CHECK(run("verify --sides 1,x,2").status == 2);
    CHECK(run("verify --points 0,0,1,1,2,2").status == 2);
    CHECK(run("verify").status == 2);
    CHECK(run("nonsense").status == 2);
    CHECK(run("solve --L 1").status == 2);
    CHECK(run("solve --L 1 --M 2 --N 3 --interpret sides --sides 3,4,5").status == 2);
    CHECK(run("figure --sides 3,4,5 --kind nope --out /tmp/x.svg").status == 2);
    CHECK(run("figure --sides 3,4,5 --kind cuoco --out /nonexistent-dir/x.svg").status == 2);
    CHECK(run("--help").status == 0);
    // A tolerance no floating point residual can meet is a verification failure, not a usage error.
    CHECK(run("verify --sides 1.1,2.3,3.3 --tol 1e-300").status == 1);
    CHECK(run("fuzz --count 10 --seed 1 --tol 1e-300").status == 1);
}

TEST_CASE("solve") {
    json j = run_json("solve --L 4 --M 9 --N 16");
    CHECK(j["x"].get<double>() == -1.5);
    CHECK(j["y"].get<double>() == 5.5);
    CHECK(j["z"].get<double>() == 10.5);
    CHECK(j["all_positive"] == false);

    j = run_json("solve --L 3 --M 4 --N 5");
    CHECK(j["x"].get<double>() == 1.0);
    CHECK(j["y"].get<double>() == 2.0);
    CHECK(j["z"].get<double>() == 3.0);
    CHECK(j["all_positive"] == true);

    j = run_json("solve --interpret sides --sides 3,4,5");
    CHECK(j["interpretation"]["matches"] == true);
    CHECK(j["x"].get<double>() == Approx(1.0));

    j = run_json("solve --interpret squares --sides 2,3,4");
    CHECK(j["interpretation"]["matches"] == true);
    CHECK(j["all_positive"] == false);

    j = run_json("solve --interpret angles --sides 4,5,6");
    CHECK(j["interpretation"]["matches"] == true);
    CHECK(j["all_positive"] == true);
}

TEST_CASE("figure writes the SVG and a sidecar") {
    const auto dir = std::filesystem::temp_directory_path() / "cuoco_cli_test";
    std::filesystem::create_directories(dir);
    const auto svg = dir / "incircle.svg";
    const json j = run_json("figure --sides 3,4,5 --kind incircle --out " + svg.string());
    CHECK(j["path"] == svg.string());
    REQUIRE(std::filesystem::exists(svg));
    std::ifstream in(svg.string() + ".json");
    REQUIRE(in.good());
    const json side = json::parse(in);
    CHECK(side["tangent_lengths"]["A"].get<double>() == Approx(3.0));
    CHECK(side["tangent_lengths"]["B"].get<double>() == Approx(2.0));
    CHECK(side["tangent_lengths"]["C"].get<double>() == Approx(1.0));
    CHECK(side["radius"].get<double>() == Approx(1.0));

    const auto a = dir / "a.svg";
    const auto b = dir / "b.svg";
    run_json("figure --sides 2,3,4 --kind cuoco_obtuse --out " + a.string());
    run_json("figure --sides 2,3,4 --kind cuoco_obtuse --out " + b.string());
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream s;
        s << f.rdbuf();
        return s.str();
    };
    CHECK(slurp(a) == slurp(b));
    std::filesystem::remove_all(dir);
}

TEST_CASE("fuzz is deterministic for a seed") {
    const Run first = run("fuzz --count 500 --seed 42");
    const Run second = run("fuzz --count 500 --seed 42 --threads 1");
    REQUIRE(first.status == 0);
    CHECK(first.out == second.out);
    const json j = json::parse(first.out);
    CHECK(j["pass"] == true);
    const auto& cls = j["classification"];
    CHECK(cls["acute"].get<int>() + cls["right"].get<int>() + cls["obtuse"].get<int>() == 500);

    const Run other = run("fuzz --count 500 --seed 43");
    CHECK(other.out != first.out);

    CHECK(run("fuzz --count 1 --seed fixed-degenerate-avoidance").status == 0);
}
