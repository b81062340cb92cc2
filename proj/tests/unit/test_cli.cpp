// SPDX-License-Identifier: Apache-2.0
//
// leochan: stochastic channel models for LEO satellite mega-constellations
// Copyright (C) 2026 The leochan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "catch_amalgamated.hpp"

#include <nlohmann/json.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace
{

const std::string cli = LEOCHAN_CLI_PATH;

fs::path scratch(const std::string &name)
{
    const fs::path p = fs::temp_directory_path() / ("leochan_cli_test_" + std::to_string(::getpid())) / name;
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

int run(const std::string &args)
{
    const int status = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::string> lines(const fs::path &p)
{
    std::vector<std::string> out;
    std::ifstream in(p);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

} // namespace

TEST_CASE("Exit codes", "[cli]")
{
    const fs::path dir = scratch("exit");
    const std::string out = " --out " + dir.string();

    const fs::path bad = dir / "bad.conf";
    std::ofstream(bad) << "user.lat_deg = 10\nuser.colour = blue\n";
    CHECK(run("coverage --config " + bad.string() + out) == 2);
    CHECK(run("coverage --config " + (dir / "missing.conf").string() + out) == 2);
    CHECK(run("coverage --no-such-flag" + out) == 2);
    CHECK(run("coverage --format xml" + out) == 2);
    CHECK(run("scattering --lat-deg 75" + out) == 3);
    CHECK(run("scattering --nu-step-hz 50000" + out) == 4);
    CHECK(run("coverage" + out) == 0);
}

TEST_CASE("Coverage table", "[cli]")
{
    const fs::path dir = scratch("coverage");
    REQUIRE(run("coverage --out " + dir.string()) == 0);
    const auto l = lines(dir / "coverage.csv");
    REQUIRE(l.size() == 2 + 2 * 91);
    CHECK(l[0].rfind("# leochan coverage ", 0) == 0);
    CHECK(l[0].find("user.sweep_min_elev_deg=10,30") != std::string::npos);
    CHECK(l[1] == "min_elev_deg,latitude_deg,p_sat,avg_visible,availability");
    CHECK(l[2].rfind("10,0,", 0) == 0);
    CHECK(l.back().rfind("30,90,0,0,0", 0) == 0);
}

TEST_CASE("Flags override the file and appear in the header", "[cli]")
{
    const fs::path dir = scratch("override");
    const fs::path conf = dir / "run.conf";
    std::ofstream(conf) << "user.lat_deg = 10\nuser.min_elev_deg = 20\n";
    REQUIRE(run("distributions --mc-samples 0 --config " + conf.string() + " --lat-deg 40 --out " + dir.string()) == 0);
    const auto l = lines(dir / "gain.csv");
    REQUIRE(l.size() == 2 + 401);
    CHECK(l[0].find("user.lat_deg=40") != std::string::npos);
    CHECK(l[0].find("user.min_elev_deg=20") != std::string::npos);
    CHECK(l[0].find("mc.samples=0") != std::string::npos);
    CHECK(l[1] == "gain,cdf,pdf");
}

TEST_CASE("Reruns are byte-identical", "[cli]")
{
    const fs::path a = scratch("rerun_a"), b = scratch("rerun_b"), c = scratch("rerun_c");
    const std::string args = "distributions --lat-deg 60 --min-elev-deg 10 --mc-samples 20000 --seed 9 --out ";
    REQUIRE(run(args + a.string()) == 0);
    REQUIRE(std::system(("LEO_CHANNEL_THREADS=3 " + cli + " " + args + b.string() + " >/dev/null 2>&1").c_str()) == 0);
    REQUIRE(run("distributions --lat-deg 60 --min-elev-deg 10 --mc-samples 20000 --seed 10 --out " + c.string()) == 0);
    for (const char *f : {"gain.csv", "delay.csv", "doppler_cdf.csv", "doppler_pdf.csv"})
    {
        CHECK(slurp(a / f) == slurp(b / f));
        CHECK_FALSE(slurp(a / f).empty());
    }
    CHECK(slurp(a / "gain.csv") != slurp(c / "gain.csv"));
}

TEST_CASE("Scattering outputs", "[cli]")
{
    const fs::path dir = scratch("scattering");
    REQUIRE(run("scattering --format json --out " + dir.string()) == 0);
    const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
    CHECK(summary.at("summary").at("path_loss_db").get<double>() == Catch::Approx(117.62).margin(0.01));
    CHECK(summary.at("summary").contains("rms_doppler_spread_hz"));
    CHECK(summary.contains("config"));
    CHECK(fs::exists(dir / "scattering.json"));
    CHECK_NOTHROW(nlohmann::json::parse(slurp(dir / "scattering.json")));

    const fs::path csv = scratch("scattering_csv");
    REQUIRE(run("scattering --out " + csv.string()) == 0);
    const auto l = lines(csv / "scattering.csv");
    REQUIRE(l.size() > 3);
    CHECK(l[0].rfind("# leochan scattering ", 0) == 0);
}
