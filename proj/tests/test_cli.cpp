#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <bookthick/embedding.hpp>
#include <bookthick/validate.hpp>

namespace fs = std::filesystem;

namespace {

struct run_result {
    int status = -1;
    std::string out;
};

run_result run(const std::string &args)
{
    const std::string command = std::string(BOOKTHICK_CLI) + " " + args + " 2>/dev/null";
    run_result r;
    FILE *pipe = popen(command.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string sample(const char *name)
{
    return std::string(SAMPLES_DIR) + "/" + name;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir = fs::temp_directory_path() / ("bookthick_cli_" + std::to_string(::getpid()) + "_" +
                                           ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir);
    }
    void TearDown() override { fs::remove_all(dir); }
    std::string path(const char *name) const { return (dir / name).string(); }
    fs::path dir;
};

} // namespace

TEST_F(Cli, FobtFeasibleWritesValidDocument)
{
    auto r = run("fobt " + sample("k4.txt") + " --k 2 --algo vc --out " + path("k4.json"));
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("feasible: yes"), std::string::npos);
    auto doc = bookthick::read_embedding_document(slurp(path("k4.json")));
    EXPECT_TRUE(bookthick::validate(doc.g, doc.embedding).ok);
    EXPECT_EQ(run("check " + path("k4.json")).status, 0);
}

TEST_F(Cli, FobtInfeasible)
{
    EXPECT_EQ(run("fobt " + sample("k4.txt") + " --k 1 --algo vc").status, 1);
    EXPECT_EQ(run("fobt " + sample("k4.txt") + " --k 1 --algo pw").status, 1);
    EXPECT_EQ(run("fobt " + sample("k4.txt") + " --k 1 --algo oracle").status, 1);
}

TEST_F(Cli, FobtInputErrors)
{
    EXPECT_EQ(run("fobt " + sample("k23.txt") + " --k 2").status, 2);
    EXPECT_EQ(run("fobt " + sample("k4.txt") + " --k -1").status, 2);
    EXPECT_EQ(run("fobt " + sample("k4.txt") + " --algo nope").status, 2);
    EXPECT_EQ(run("fobt " + path("missing.txt")).status, 2);
    std::ofstream(path("bad.txt")) << "n 3\nedge 0 9\n";
    EXPECT_EQ(run("fobt " + path("bad.txt")).status, 2);
}

TEST_F(Cli, FobtMinimumAndAutoSelection)
{
    auto r = run("fobt " + sample("pentagram.txt"));
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("pages: 3"), std::string::npos);
    EXPECT_NE(r.out.find("algorithm: "), std::string::npos);
    auto k5 = run("fobt " + sample("k5.txt") + " --algo pw");
    EXPECT_NE(k5.out.find("pages: 3"), std::string::npos);
}

TEST_F(Cli, FobtPipesIntoCheck)
{
    for (const char *algo : {"vc", "pw", "oracle", "auto"}) {
        auto r = run(std::string("fobt ") + sample("k5.txt") + " --algo " + algo + " --out - | " + BOOKTHICK_CLI + " check -");
        EXPECT_EQ(r.status, 0) << algo;
    }
}

TEST_F(Cli, BtExamples)
{
    auto k23 = run("bt " + sample("k23.txt"));
    EXPECT_EQ(k23.status, 0);
    EXPECT_NE(k23.out.find("pages: 2"), std::string::npos);
    EXPECT_EQ(run("bt " + sample("k5.txt") + " --k 2").status, 1);
    auto edgeless = run("bt " + sample("edgeless.txt"));
    EXPECT_EQ(edgeless.status, 0);
    EXPECT_NE(edgeless.out.find("pages: 0"), std::string::npos);
    EXPECT_EQ(run("bt " + sample("k5.txt") + " --k 3 --jobs 2 --out - | " + BOOKTHICK_CLI + " check -").status, 0);
    EXPECT_EQ(run("bt " + sample("k23.txt") + " --algo vc").status, 2);
}

TEST_F(Cli, CheckReportsCrossings)
{
    auto r = run("check " + sample("k4_one_page.json"));
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("(0 2) x (1 3)"), std::string::npos);
    std::ofstream(path("cut.json")) << R"({"n": 4, "k": 1, "order": [0, 1)";
    EXPECT_EQ(run("check " + path("cut.json")).status, 2);
}

TEST_F(Cli, RenderWritesSvg)
{
    ASSERT_EQ(run("fobt " + sample("k4.txt") + " --k 2 --out " + path("k4.json")).status, 0);
    ASSERT_EQ(run("render " + path("k4.json") + " --out " + path("k4.svg")).status, 0);
    auto svg = slurp(path("k4.svg"));
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    std::size_t arcs = 0;
    for (auto at = svg.find("<path"); at != std::string::npos; at = svg.find("<path", at + 1))
        ++arcs;
    EXPECT_EQ(arcs, 6u);
    EXPECT_EQ(run("render " + sample("k4_one_page.json") + " --out " + path("x.svg")).status, 2);
}

TEST_F(Cli, GenProducesParsableGraphs)
{
    auto r = run("gen bipartite 2 3 --order identity");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("order 0 1 2 3 4"), std::string::npos);
    ASSERT_EQ(run("gen random 12 --p 0.15 --seed 5 --order random --out " + path("r.txt")).status, 0);
    EXPECT_EQ(run("fobt " + path("r.txt") + " --out - | " + BOOKTHICK_CLI + " check -").status, 0);
    EXPECT_EQ(run("gen cycle 2").status, 2);
    EXPECT_EQ(run("gen bipartite 2").status, 2);
}

TEST_F(Cli, Deterministic)
{
    auto a = run("fobt " + sample("pentagram.txt") + " --out -");
    auto b = run("fobt " + sample("pentagram.txt") + " --out -");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run("bt " + sample("k5.txt")).out, run("bt " + sample("k5.txt")).out);
}
