// Copyright 2026 The qconcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qconcat/bounds.hpp"

namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

CliRun run(const std::string &args, bool with_stderr = false) {
    std::string cmd = std::string(QCONCAT_CLI_PATH) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
    CliRun r;
    FILE *p = popen(cmd.c_str(), "r");
    if (p == nullptr) {
        return r;
    }
    std::array<char, 4096> buf;
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) {
        r.out.append(buf.data(), got);
    }
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string &hay, const std::string &needle) { return hay.find(needle) != std::string::npos; }

std::vector<std::string> data_rows(const std::string &csv) {
    std::vector<std::string> rows;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#' && line[0] != 'R') {
            rows.push_back(line);
        }
    }
    return rows;
}

}  // namespace

TEST(Cli, BuildQrs) {
    CliRun r = run("build qrs --m 2 --k 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "[[6,2]] d_lower=2\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "# qconcat build qrs\n# m=2\n# k=1\n")) << r.out;
}

TEST(Cli, BuildQrsRejectsLargeK) {
    CliRun r = run("build qrs --m 3 --k 4", true);
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.out, "k exceeds 2^{m-1}-1")) << r.out;
}

TEST(Cli, BuildConcatFiveFive) {
    auto path = std::filesystem::temp_directory_path() / "qconcat_cli_gens.txt";
    CliRun r = run("build concat --outer five --inner five --emit-generators " + path.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "[[25,1]] d_lower=9\n")) << r.out;
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    EXPECT_EQ(header, "25 24");
    std::filesystem::remove(path);
}

TEST(Cli, BuildGeneralized) {
    CliRun r = run("build gconcat --s 2 --m 2 --ks 1,1 --inner-n 4 --inner-d 2,1 --seed 3");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "[[12,4]] d_lower=2\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "rate=0.333333\n")) << r.out;
}

TEST(Cli, MindistAndBudget) {
    CliRun ok = run("mindist --code five+five");
    EXPECT_EQ(ok.code, 0);
    EXPECT_TRUE(contains(ok.out, "[[25,1]] d=9\n")) << ok.out;
    CliRun refused = run("mindist --code five+five --budget 1000", true);
    EXPECT_EQ(refused.code, 3);
    EXPECT_TRUE(contains(refused.out, "refused")) << refused.out;
    CliRun blocks = run("mindist --code qrs:3:2 --block-width 3");
    EXPECT_EQ(blocks.code, 0);
    EXPECT_TRUE(contains(blocks.out, "[[21,9]] d=3\n")) << blocks.out;
}

TEST(Cli, BoundsGvEndpoints) {
    CliRun r = run("bounds --kind gv --grid 101");
    ASSERT_EQ(r.code, 0);
    auto rows = data_rows(r.out);
    ASSERT_EQ(rows.size(), 101u);
    EXPECT_EQ(rows.front(), "0.000000,0.189290");
    EXPECT_EQ(rows.back(), "1.000000,0.000000");
    EXPECT_TRUE(contains(r.out, "R,delta\n"));
}

TEST(Cli, BoundsGcqOrderOneMatchesZyablov) {
    CliRun g = run("bounds --kind gcq --s 1 --grid 21");
    CliRun z = run("bounds --kind zyablov --grid 21");
    ASSERT_EQ(g.code, 0);
    ASSERT_EQ(z.code, 0);
    auto gr = data_rows(g.out);
    auto zr = data_rows(z.out);
    ASSERT_EQ(gr.size(), zr.size());
    for (std::size_t i = 0; i < gr.size(); i++) {
        double r1 = 0, d1 = 0, r2 = 0, d2 = 0;
        ASSERT_EQ(std::sscanf(gr[i].c_str(), "%lf,%lf", &r1, &d1), 2);
        ASSERT_EQ(std::sscanf(zr[i].c_str(), "%lf,%lf", &r2, &d2), 2);
        EXPECT_EQ(r1, r2);
        // Both are printed to 6 decimals; allow one unit of rounding.
        EXPECT_LE(std::abs(d1 - d2), 1e-6 + 1e-12) << i;
    }
}

TEST(Cli, BoundsKtvNeedsTable) {
    CliRun r = run("bounds --kind ktv", true);
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.out, "--table")) << r.out;
    CliRun ok = run(std::string("bounds --kind ktv --grid 11 --table ") + QCONCAT_DATA_DIR + "/ktv_synthetic.txt");
    EXPECT_EQ(ok.code, 0);
    auto rows = data_rows(ok.out);
    ASSERT_EQ(rows.size(), 11u);
    char expect[32];
    std::snprintf(expect, sizeof(expect), "0.000000,%.6f", qconcat::ktv_delta(0, {{10, 4, 3}, {20, 6, 7}, {40, 8, 13}}));
    EXPECT_EQ(rows.front(), expect);
}

TEST(Cli, BoundsOverlayAndOutput) {
    auto dir = std::filesystem::temp_directory_path();
    auto ov = dir / "altm.csv";
    auto out = dir / "qconcat_bounds_out.csv";
    {
        std::ofstream f(ov);
        f << "R,delta\n0,0.2\n1,0\n";
    }
    CliRun r = run("bounds --kind gv --grid 3 --overlay " + ov.string() + " --output " + out.string());
    EXPECT_EQ(r.code, 0);
    std::ifstream f(out);
    std::stringstream ss;
    ss << f.rdbuf();
    EXPECT_TRUE(contains(ss.str(), "R,delta,altm\n")) << ss.str();
    EXPECT_TRUE(contains(ss.str(), "0.500000,")) << ss.str();
    EXPECT_TRUE(contains(ss.str(), ",0.100000\n")) << ss.str();
    {
        std::ofstream bad(ov);
        bad << "rate,d\n";
    }
    EXPECT_EQ(run("bounds --kind gv --overlay " + ov.string()).code, 2);
    std::filesystem::remove(ov);
    std::filesystem::remove(out);
}

TEST(Cli, SimulateIsByteIdenticalAcrossThreads) {
    CliRun a = run("simulate --code five+five --p 0.05 --trials 20000 --seed 9 --threads 1");
    CliRun b = run("simulate --code five+five --p 0.05 --trials 20000 --seed 9 --threads 8");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(contains(a.out, "trials=20000\n"));
    CliRun zero = run("simulate --code five --p 0 --trials 10000");
    EXPECT_EQ(zero.code, 0);
    EXPECT_TRUE(contains(zero.out, "failures=0\n")) << zero.out;
    EXPECT_TRUE(contains(zero.out, "failure_rate=0.000000\n"));
}

TEST(Cli, SeedFromEnvironment) {
    CliRun a = run("simulate --code five+five --p 0.05 --trials 2000 --seed 11");
    CliRun b = run("simulate --code five+five --p 0.05 --trials 2000");
    std::string cmd = "QCONCAT_SEED=11 ";
    CliRun c;
    {
        std::string full = cmd + QCONCAT_CLI_PATH + " simulate --code five+five --p 0.05 --trials 2000 2>/dev/null";
        FILE *p = popen(full.c_str(), "r");
        std::array<char, 4096> buf;
        std::size_t got = 0;
        while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) {
            c.out.append(buf.data(), got);
        }
        c.code = WEXITSTATUS(pclose(p));
    }
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(a.out, c.out);
    EXPECT_NE(a.out, b.out);
}

TEST(Cli, VerifySuites) {
    for (const char *suite : {"counting", "symplectic", "rho", "distance", "decoder"}) {
        CliRun r = run(std::string("verify --suite ") + suite);
        EXPECT_EQ(r.code, 0) << suite << "\n" << r.out;
        EXPECT_TRUE(contains(r.out, "all checks passed")) << r.out;
        EXPECT_FALSE(contains(r.out, "FAIL")) << r.out;
    }
    EXPECT_EQ(run("verify --suite nope").code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("build qrs --m 2").code, 2);
    EXPECT_EQ(run("bounds --kind bogus").code, 2);
    EXPECT_EQ(run("simulate --code five+five --p 2 --trials 10").code, 2);
    EXPECT_EQ(run("mindist --code nosuchcode").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}
