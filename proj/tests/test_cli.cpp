#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <eulercc/eulercc.hpp>

namespace fs = std::filesystem;

namespace {

struct Run
{
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "")
{
    const std::string cmd = env + " " + EULERCC_CLI_PATH + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        r.out.append(buf, n);
    const int st = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::string data(const std::string& rel)
{
    return std::string(EULERCC_DATA_DIR) + "/" + rel;
}

eulercc::Json json_of(const Run& r)
{
    return eulercc::parse_json_text(r.out, "cli output");
}

fs::path scratch(const std::string& name)
{
    auto dir = fs::temp_directory_path() / ("eulercc_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

void write(const fs::path& p, const std::string& text)
{
    std::ofstream(p) << text;
}

} // namespace

TEST_CASE("euler and the intersection formula from sample files", "[cli]")
{
    const auto e = run("euler --complex " + data("sphere/complex.json") + " --alpha " + data("sphere/one.json"));
    CHECK(e.status == 0);
    CHECK(e.out == "2\n");

    const auto t = run("theorem1 --json --complex " + data("circle/complex.json") + " --alpha " +
                       data("circle/one.json") + " --f " + data("circle/height.json"));
    REQUIRE(t.status == 0);
    const auto j = json_of(t);
    CHECK(j["lhs"] == 1);
    CHECK(j["rhs"] == 1);
    CHECK(j["holds"] == true);
}

TEST_CASE("json reports are byte-identical across runs", "[cli]")
{
    const std::string args = "cc --json --complex " + data("cone3/complex.json") + " --alpha " + data("cone3/random.json");
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    const auto g1 = run("global-index --json --seed 7 --complex " + data("book3/complex.json") + " --alpha " + data("book3/one.json"));
    const auto g2 = run("global-index --json --seed 7 --complex " + data("book3/complex.json") + " --alpha " + data("book3/one.json"));
    CHECK(g1.status == 0);
    CHECK(g1.out == g2.out);
    CHECK(json_of(g1)["holds"] == true);
}

TEST_CASE("output file matches the printed report", "[cli]")
{
    const auto dir = scratch("output");
    const auto file = dir / "dual.json";
    const auto r = run("dual --json -o " + file.string() + " --complex " + data("interval/complex.json") +
                       " --alpha " + data("interval/one.json"));
    REQUIRE(r.status == 0);
    CHECK(eulercc::read_json_file(file.string()) == json_of(r));
}

TEST_CASE("invalid inputs exit with status 2", "[cli][guard]")
{
    const auto dir = scratch("invalid");
    write(dir / "bad_delta.json", R"({"linear": ["0", "1"], "constant": "1/0"})");
    const auto zero_den = run("theorem1 --complex " + data("circle/complex.json") + " --alpha " +
                              data("circle/one.json") + " --f " + (dir / "bad_delta.json").string());
    CHECK(zero_den.status == 2);

    // the minimum of the circle is not on {y = 1/2}
    write(dir / "shifted.json", R"({"linear": ["0", "1"], "constant": "-1/2"})");
    const auto hyp = run("theorem1 --json --complex " + data("circle/complex.json") + " --alpha " +
                         data("circle/one.json") + " --f " + (dir / "shifted.json").string());
    CHECK(hyp.status == 2);
    CHECK(json_of(hyp).contains("error"));

    // the level passes through a vertex of the interval
    const auto trans = run("boundary-estimate --delta 1 --complex " + data("interval/complex.json") + " --alpha " +
                           data("interval/one.json") + " --g " + data("interval/coordinate.json"));
    CHECK(trans.status == 2);

    CHECK(run("euler --complex " + (dir / "missing.json").string() + " --alpha " + data("circle/one.json")).status == 2);
    CHECK(run("").status == 2);
    CHECK(run("fixtures dump nope").status == 2);
}

TEST_CASE("validate reports violations with status 1", "[cli][validate]")
{
    const auto dir = scratch("validate");
    // two edges crossing at an interior point
    write(dir / "crossing.json", R"({"ambient_dim": 2,
        "vertices": [["0","0"],["2","2"],["0","2"],["2","0"]],
        "simplices": [[0],[1],[2],[3],[0,1],[2,3]]})");
    const auto bad = run("validate --json --complex " + (dir / "crossing.json").string());
    CHECK(bad.status == 1);
    const auto j = json_of(bad);
    CHECK(j["valid"] == false);
    CHECK_FALSE(j["violations"].empty());
    CHECK(run("validate --complex " + data("sphere/complex.json")).status == 0);
    CHECK(run("euler --complex " + (dir / "crossing.json").string() + " --alpha " + data("circle/one.json")).status == 2);
}

TEST_CASE("fixture listing, dumping and directory override", "[cli][fixtures]")
{
    const auto list = run("fixtures list --json");
    REQUIRE(list.status == 0);
    CHECK(json_of(list)["fixtures"].size() == eulercc::builtin_fixtures().size());

    const auto dir = scratch("dump");
    REQUIRE(run("fixtures dump circle -o " + dir.string()).status == 0);
    CHECK(fs::exists(dir / "circle" / "complex.json"));
    CHECK(fs::exists(dir / "circle" / "fixture.json"));

    // relative paths resolve against EULERCC_FIXTURE_DIR
    const auto e = run("euler --complex circle/complex.json --alpha circle/one.json",
                       "cd / && EULERCC_FIXTURE_DIR=" + dir.string());
    CHECK(e.status == 0);
    CHECK(e.out == "0\n");
}

TEST_CASE("local index and boundary estimates from the command line", "[cli]")
{
    const auto l = run("local-index --json --complex " + data("y_graph/complex.json") + " --alpha " + data("y_graph/random.json"));
    REQUIRE(l.status == 0);
    CHECK(l.out.find("false") == std::string::npos);

    for (const char* side : {"shriek", "star"}) {
        const auto b = run(std::string("boundary-estimate --json --delta 1/2 --side ") + side + " --complex " +
                           data("interval/complex.json") + " --alpha " + data("interval/one.json") + " --g " +
                           data("interval/coordinate.json"));
        REQUIRE(b.status == 0);
        CHECK(json_of(b)["holds"] == true);
    }
}
