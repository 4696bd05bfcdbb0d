#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cyclodyn_cli/json_io.hpp"

#include "cyclodyn_cli/report.hpp"

namespace fs = std::filesystem;
using cyclodyn::cli::json;

namespace {

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("cyclodyn_cli_") + info->name() + "_" + std::to_string(::getpid()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& body) const {
        std::ofstream(dir_ / name) << body;
        return dir_ / name;
    }

    // Exit status of the tool; stdout is kept in out_.
    int run(const std::string& args, const std::string& env = "") {
        const fs::path log = dir_ / "stdout.txt";
        const std::string cmd = "cd '" + dir_.string() + "' && " + env + " '" CYCLODYN_CLI_PATH "' " + args + " > '" +
                                log.string() + "' 2> '" + (dir_ / "stderr.txt").string() + "'";
        const int st = std::system(cmd.c_str());
        std::ifstream in(log);
        std::stringstream ss;
        ss << in.rdbuf();
        out_ = ss.str();
        return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    }

    json report(const std::string& sub) const {
        std::ifstream in(dir_ / sub / "report.json");
        return json::parse(in);
    }

    std::string hash_line() const { return json::parse(out_).at("report_sha256").get<std::string>(); }

    fs::path dir_;
    std::string out_;
};

}  // namespace

TEST_F(Cli, SpecialSquareMap) {
    write("sys.json", "[[0, 0, 1]]");
    ASSERT_EQ(run("special --system sys.json --out r"), 0);
    const json r = report("r");
    EXPECT_EQ(r["result"]["verdict"], "special");
    EXPECT_EQ(r["result"]["findings"][0]["condition"], 1);
}

TEST_F(Cli, BoundsExample) {
    write("x2p1.json", "[[1, 0, 1]]");
    ASSERT_EQ(run("bounds --system x2p1.json --A 1 --out r"), 0);
    const json res = report("r")["result"];
    EXPECT_EQ(res["L"], "3");
    EXPECT_EQ(res["D"], "1");
    EXPECT_EQ(res["m"], 2);
    EXPECT_EQ(res["M"], 15);
}

TEST_F(Cli, ConfigErrorsExitTwo) {
    write("bad.json", "[[1, 0, 1");
    EXPECT_EQ(run("bounds --system bad.json --A 1 --out r"), 2);
    EXPECT_EQ(run("bounds --system missing.json --A 1 --out r"), 2);
    write("deg1.json", "[[1, 1]]");
    EXPECT_EQ(run("special --system deg1.json --out r"), 2);
    write("sys.json", "[[0, 0, 1]]");
    EXPECT_EQ(run("orbit --system sys.json --alpha 'z(3' --depth 2 --out r"), 2);
    EXPECT_EQ(run("bounds --system sys.json --A -1 --out r"), 2);
}

TEST_F(Cli, BudgetExhaustionExitThreeWithReport) {
    write("sys.json", "[[-1, 0, 1], [1, 0, 1]]");
    EXPECT_EQ(run("orbit --system sys.json --alpha 'z(7)' --depth 10 --max-words 50 --out r"), 3);
    EXPECT_EQ(report("r")["status"], "budget_exhausted");
}

TEST_F(Cli, VerifyFreshReport) {
    write("sys.json", "[[1, 4, 2], [0, 0, 0, 1]]");
    ASSERT_EQ(run("special --system sys.json --out r"), 0);
    EXPECT_EQ(run("verify r/report.json"), 0);
    EXPECT_TRUE(json::parse(out_)["ok"].get<bool>());
}

TEST_F(Cli, VerifyRejectsFlippedByte) {
    write("sys.json", "[[1, 0, 1]]");
    ASSERT_EQ(run("bounds --system sys.json --A 1 --out r"), 0);
    const fs::path p = dir_ / "r" / "report.json";
    std::string body;
    {
        std::ifstream in(p);
        std::stringstream ss;
        ss << in.rdbuf();
        body = ss.str();
    }
    const auto pos = body.find("\"27\"");
    ASSERT_NE(pos, std::string::npos);
    body[pos + 2] = '8';
    std::ofstream(p) << body;
    EXPECT_EQ(run("verify r/report.json"), 1);
}

TEST_F(Cli, VerifyRejectsTamperedWitnessEvenWithMatchingHash) {
    write("sys.json", "[[1, 4, 2]]");
    ASSERT_EQ(run("special --system sys.json --out r"), 0);
    json r = report("r");
    r["result"]["findings"][0]["witnesses"][0]["v"]["coords"][0] = "-2";
    const std::string body = cyclodyn::cli::serialize_report(r);
    std::ofstream(dir_ / "r" / "report.json") << body;
    // Re-seal the manifest so only the expansion check can catch it.
    json m = json::parse(std::ifstream(dir_ / "r" / "manifest.json"));
    m["runs"].back()["report_sha256"] = cyclodyn::cli::sha256_hex(body);
    std::ofstream(dir_ / "r" / "manifest.json") << m.dump(2);
    EXPECT_EQ(run("verify r/report.json"), 1);
    const json v = json::parse(out_);
    EXPECT_TRUE(v["hash_ok"].get<bool>());
    EXPECT_FALSE(v["failures"].empty());
}

TEST_F(Cli, VerifyMissingReportIsNotFound) { EXPECT_EQ(run("verify nowhere/report.json"), 2); }

TEST_F(Cli, ManifestIsAppendOnly) {
    write("sys.json", "[[1, 0, 1]]");
    ASSERT_EQ(run("bounds --system sys.json --A 1 --out r"), 0);
    ASSERT_EQ(run("bounds --system sys.json --A 2 --out r"), 0);
    const json m = json::parse(std::ifstream(dir_ / "r" / "manifest.json"));
    ASSERT_EQ(m["runs"].size(), 2u);
    EXPECT_EQ(m["runs"][0]["config"]["A"], "1");
    EXPECT_EQ(m["runs"][1]["config"]["A"], "2");
}

TEST_F(Cli, ReportsIndependentOfThreadCount) {
    ASSERT_EQ(run("growth --random 100 --seed 5 --out a", "CYCLODYN_THREADS=1"), 0);
    const std::string h1 = hash_line();
    ASSERT_EQ(run("growth --random 100 --seed 5 --out b", "CYCLODYN_THREADS=3"), 0);
    EXPECT_EQ(hash_line(), h1);
    ASSERT_EQ(run("fz-check --random 100 --seed 5 --out c", "CYCLODYN_THREADS=2"), 0);
    const std::string f1 = hash_line();
    ASSERT_EQ(run("fz-check --random 100 --seed 5 --out d", "CYCLODYN_THREADS=1"), 0);
    EXPECT_EQ(hash_line(), f1);
    ASSERT_EQ(run("fz-check --random 100 --seed 6 --out e"), 0);
    EXPECT_NE(hash_line(), f1);
}

TEST_F(Cli, TextAndObjectElementSyntaxAgree) {
    write("a.json", "[[\"z(3)\", 0, 1]]");
    write("b.json", "[[{\"conductor\": 3, \"coords\": [\"0\", \"1\"]}, 0, 1]]");
    ASSERT_EQ(run("special --system a.json --out a"), 0);
    const std::string ha = hash_line();
    ASSERT_EQ(run("special --system b.json --out b"), 0);
    EXPECT_EQ(hash_line(), ha);
}
