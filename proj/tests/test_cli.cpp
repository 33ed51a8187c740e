#include "htower/tables.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + std::string(HTOWER_CLI) + " " + args + " 2>&1";
    CliResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

} // namespace

TEST(Cli, CascadeE8) {
    CliResult r = run("cascade E8");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "height 4")) << r.out;
    EXPECT_TRUE(contains(r.out, "layers [57,33,17,9]")) << r.out;
    auto j = nlohmann::json::parse(run("cascade E8 --format json").out);
    EXPECT_EQ(j["layer_dims"], nlohmann::json({57, 33, 17, 9}));
}

TEST(Cli, RankChartText) {
    CliResult r = run("rankchart \"SO(6,6)\"");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "  2 | 4, 6")) << r.out;
    EXPECT_TRUE(contains(run("rankchart \"SO(5,11)\"").out, "  2 | 4\n"));
}

TEST(Cli, TableTwoCsvRoundTrips) {
    CliResult r = run("tables --which 2 --format csv");
    EXPECT_EQ(r.code, 1);  // one known mismatching row
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    auto header = htower::parse_csv_line(line);
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        EXPECT_EQ(htower::parse_csv_line(line).size(), header.size()) << line;
        ++rows;
    }
    EXPECT_EQ(rows, 44);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("tables --which 1").code, 0);
    CliResult gd = run("cascade \"sp(2,3)\"");
    EXPECT_EQ(gd.code, 3);
    EXPECT_TRUE(contains(gd.out, "condition (gdefine) fails: sp(2,3): highest restricted root multiplicity 3")) << gd.out;
    EXPECT_EQ(run("orbit \"su(2,3)\"").code, 3);
    EXPECT_EQ(run("info \"bogus(3)\"").code, 2);
    EXPECT_EQ(run("info").code, 2);
    EXPECT_EQ(run("verify \"SU(2,2)\" --trials 20").code, 0);
    EXPECT_EQ(run("verify \"SO(2,5)\" --trials 5").code, 3);
}

TEST(Cli, DeterministicGivenSeed) {
    EXPECT_EQ(run("orbit F4 --seed 5 --format json").out, run("orbit F4 --seed 5 --format json").out);
    auto j = nlohmann::json::parse(run("orbit C3 --format json", "HTOWER_SEED=77").out);
    EXPECT_EQ(j["seed"], 77);
    auto k = nlohmann::json::parse(run("orbit C3 --format json --seed 9", "HTOWER_SEED=77").out);
    EXPECT_EQ(k["seed"], 9);
}

TEST(Cli, AlternateCatalog) {
    CliResult r = run("--catalog " + std::string(HTOWER_SOURCE_DIR) + "/data/forms.catalog info \"so(5,11)\"");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(run("--catalog /nonexistent info E8").code, 2);
}

TEST(Cli, InfoJson) {
    auto j = nlohmann::json::parse(run("info \"so(1,5)\" --format json").out);
    EXPECT_EQ(j["gdefine"], false);
    EXPECT_EQ(j["gdefine_reason"], "highest restricted root multiplicity 4");
}
