#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + "\"" SBALG_CLI "\" " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string gold(const std::string& name) { return "\"" + sbalg::test::golden_path(name) + "\""; }

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

fs::path scratch(const std::string& name) {
    auto dir = fs::temp_directory_path() / "sbalg_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_scratch(const std::string& name, const std::string& text) {
    auto p = scratch(name);
    std::ofstream(p) << text;
    return p;
}

const char* golden_names[] = {"ww_two_loops",  "ww_two_bars",  "ww_crossed_loops",  "ww_two_bars_twisted",
                              "ww_long_bar",   "ww_five_bars", "ww_three_ramified", "barbell_two_loops",
                              "barbell_loop_triangle", "barbell_serial_bar"};

} // namespace

TEST(Cli, ClassifyBarbell) {
    auto r = run("classify " + gold("barbell_two_loops"));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(first_line(r.out), "BarbellNonSerialBar");
    auto s = run("classify --expect-mri " + gold("barbell_serial_bar"));
    EXPECT_EQ(s.code, 1) << s.out;
    EXPECT_EQ(first_line(s.out), "NotMinimalRepInfinite");
    EXPECT_EQ(run("classify --expect-mri " + gold("barbell_two_loops")).code, 0);
}

TEST(Cli, WindWheelSummary) {
    auto r = run("windwheel --word \"alpha beta ~gamma ~beta\"");
    EXPECT_EQ(r.code, 0) << r.out;
    for (const char* piece : {"t=1", "\xcf\x80=()", "ramification (1)", "\xcf\x87=-1", "z-words: 1"})
        EXPECT_NE(r.out.find(piece), std::string::npos) << piece << "\n" << r.out;
    auto bad = run("windwheel --word \"alpha beta gamma\"");
    EXPECT_EQ(bad.code, 2) << bad.out;
}

TEST(Cli, SyntaxErrorsCarryLineNumbers) {
    auto f = write_scratch("bad.alg", "vertex 1\nfoo bar\n");
    auto r = run("classify \"" + f.string() + "\"");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
    auto g = write_scratch("noncomposable.alg", "vertex 1 2 3\narrow alpha 1 2\narrow beta 3 1\nrel alpha beta\n");
    auto s = run("check \"" + g.string() + "\"");
    EXPECT_EQ(s.code, 2);
    EXPECT_NE(s.out.find("line 4"), std::string::npos) << s.out;
    EXPECT_EQ(run("classify /nonexistent/file.alg").code, 2);
    EXPECT_EQ(run("no-such-command").code, 2);
}

TEST(Cli, JsonOutputParses) {
    auto r = run("classify --json " + gold("ww_two_bars_twisted"));
    ASSERT_EQ(r.code, 0) << r.out;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["tag"], "WindWheel");
    auto b = run("barbell --eps + --eta -+ --eps2 + --json");
    ASSERT_EQ(b.code, 0) << b.out;
    EXPECT_TRUE(nlohmann::json::accept(b.out));
    auto w = run("windwheel --word \"f ~d ~a g e ~c b a ~h ~e\" --json");
    ASSERT_EQ(w.code, 0) << w.out;
    auto wj = nlohmann::json::parse(w.out);
    EXPECT_EQ(wj["t"], 2);
    EXPECT_EQ(wj["euler_characteristic"], -2);
}

TEST(Cli, FieldSelection) {
    std::string args = "endo " + gold("ww_two_loops") + " --band \"alpha beta ~gamma ~beta\" --lambda 2";
    auto q = run(args);
    EXPECT_EQ(q.code, 0) << q.out;
    EXPECT_NE(q.out.find("dim rad End = 1"), std::string::npos) << q.out;
    auto p = run(args, "BISERIAL_FIELD=fp:7");
    EXPECT_EQ(p.code, 0) << p.out;
    EXPECT_NE(p.out.find("fp:7"), std::string::npos);
    EXPECT_NE(p.out.find("dim rad End = 1"), std::string::npos) << p.out;
    EXPECT_EQ(run(args, "BISERIAL_FIELD=fp:8").code, 2);
    EXPECT_EQ(run(args, "BISERIAL_FIELD=real").code, 2);
    EXPECT_EQ(run(args, "BISERIAL_FIELD=fp:4294967311").code, 2);
    auto four = run("endo " + gold("ww_two_bars") + " --band \"" + "$(" "\"" SBALG_CLI "\" bands --max-len 12 " +
                    gold("ww_two_bars") + " | head -1)\"");
    EXPECT_EQ(four.code, 0) << four.out;
    EXPECT_NE(four.out.find("dim rad End = 2"), std::string::npos) << four.out;
}

TEST(Cli, ArPatchFiles) {
    auto dot = scratch("patch.dot"), js = scratch("patch.json");
    fs::remove(dot);
    fs::remove(js);
    auto r = run("ar " + gold("ww_long_bar") + " --seed @0 --radius 3 --dot \"" + dot.string() + "\" --json \"" +
                 js.string() + "\"");
    EXPECT_EQ(r.code, 0) << r.out;
    ASSERT_TRUE(fs::exists(dot));
    ASSERT_TRUE(fs::exists(js));
    std::ifstream d(dot);
    std::string first;
    std::getline(d, first);
    EXPECT_EQ(first, "digraph patch {");
    auto j = nlohmann::json::parse(std::ifstream(js));
    EXPECT_EQ(j["seed"], "@0");
    EXPECT_EQ(j["radius"], 3);
    EXPECT_FALSE(j["nodes"].empty());
    EXPECT_EQ(run("ar " + gold("ww_long_bar") + " --seed \"beta1 beta1\"").code, 2);
}

TEST(Cli, Ramify) {
    auto r = run("ramify --t 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(1,1,1,1)\n(3,1)\n");
    EXPECT_EQ(run("ramify --t 0").code, 2);
}

TEST(Cli, SmallCorpus) {
    auto r = run("corpus --max-vertices 2 --max-arrows 3");
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, EveryGoldenFile) {
    for (const char* name : golden_names) {
        std::string f = gold(name);
        bool positive = std::string(name) != "barbell_serial_bar";
        auto c = run("check " + f);
        EXPECT_EQ(c.code, 0) << name << "\n" << c.out;
        auto k = run("classify --expect-mri " + f);
        EXPECT_EQ(k.code, positive ? 0 : 1) << name << "\n" << k.out;
        auto o = run("oracle " + f);
        EXPECT_EQ(o.code, 0) << name << "\n" << o.out;
        auto b = run("bands --max-len 8 --json " + f);
        EXPECT_EQ(b.code, 0) << name;
        EXPECT_TRUE(nlohmann::json::accept(b.out)) << name;
        auto s = run("strings --max-len 3 " + f);
        EXPECT_EQ(s.code, 0) << name;
        auto g = run("growth " + f);
        EXPECT_EQ(g.code, 0) << name;
        bool barbell = std::string(name).rfind("barbell", 0) == 0;
        EXPECT_EQ(g.out.rfind("non-domestic witness", 0) == 0, barbell) << name << g.out;
    }
}
