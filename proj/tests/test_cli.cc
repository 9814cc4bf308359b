// Copyright 2026 The lulc Authors
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
#include <unistd.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "json.hpp"

namespace {

using Json = nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

std::string quote(const std::string &s) {
    std::string q = "'";
    for (char c : s) {
        if (c == '\'') {
            q += "'\\''";
        } else {
            q += c;
        }
    }
    return q + "'";
}

Result run(const std::vector<std::string> &args) {
    static int counter = 0;
    auto err_path = std::filesystem::temp_directory_path() /
                    ("lulc_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::string cmd = quote(LULC_CLI_PATH);
    for (const auto &a : args) {
        cmd += " " + quote(a);
    }
    cmd += " 2>" + quote(err_path.string()) + " </dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, got);
    }
    int status = pclose(pipe);
    std::ifstream ef(err_path);
    std::string err((std::istreambuf_iterator<char>(ef)), std::istreambuf_iterator<char>());
    std::filesystem::remove(err_path);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, err};
}

Json run_json(const std::vector<std::string> &args) {
    Result r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return Json::parse(r.out);
}

std::complex<double> amp(const Json &a) {
    return {a[0].get<double>(), a[1].get<double>()};
}

}  // namespace

TEST(Cli, quadrep_worked_example) {
    Json out = run_json({"quadrep", "--S", R"(["110","011"])", "--f", "1,-1,1,1", "--level", "2"});
    EXPECT_EQ(out["assignment"]["b"], Json::array({1, 1, 3}));
    EXPECT_EQ(out["complex_representable"], true);
    Json one = run_json({"quadrep", "--S", R"(["110","011"])", "--f", "1,-1,1,1", "--level", "1"});
    EXPECT_TRUE(one["assignment"].is_null());
}

TEST(Cli, quadrep_from_instance_json) {
    Json out = run_json({"quadrep", "--json", R"({"S":["10","01"],"theta":["01","00"],"lambda":"00"})"});
    EXPECT_TRUE(out["assignment"].is_null());
    EXPECT_EQ(out["complex_representable"], false);
}

TEST(Cli, synth_epr) {
    Json out = run_json({"synth", "--json", R"({"n":2,"generators":["+XX","+ZZ"]})"});
    const double r = 1 / std::sqrt(2.0);
    std::vector<double> expected{r, 0, 0, r};
    for (size_t i = 0; i < 4; i++) {
        EXPECT_NEAR(std::abs(amp(out["amps"][i]) - expected[i]), 0, 1e-12);
    }
}

TEST(Cli, extract_then_synth_round_trips) {
    std::vector<std::string> fixtures{
        R"({"n":2,"generators":["+XX","+ZZ"]})",
        R"({"n":3,"generators":["+XXX","+ZZI","+IZZ"]})",
        R"({"n":3,"generators":["+XZI","+ZXZ","-IZY"]})",
        R"({"n":2,"generators":["-ZI","+IY"]})",
    };
    for (const auto &g : fixtures) {
        Json psi = run_json({"synth", "--json", g});
        Json sf = run_json({"extract", "--json", psi.dump()});
        Json back = run_json({"synth", "--json", sf.dump()});
        std::complex<double> ip = 0;
        for (size_t i = 0; i < psi["amps"].size(); i++) {
            ip += std::conj(amp(psi["amps"][i])) * amp(back["amps"][i]);
        }
        EXPECT_NEAR(std::abs(ip), 1.0, 1e-10) << g;
    }
}

TEST(Cli, validate_and_invariants) {
    Json v = run_json({"validate", "--json", R"({"n":2,"generators":["+XX","+ZZ"]})"});
    EXPECT_EQ(v["maximal"], true);
    Json inv = run_json({"invariants", "--json", R"({"n":2,"generators":["+XX","+ZZ"]})"});
    EXPECT_EQ(inv["pi_index"], 4);
    EXPECT_EQ(inv["pi_case"], "iii");
    EXPECT_EQ(inv["is_2m_code"], true);
}

TEST(Cli, domain_errors_exit_one_with_json) {
    Result r = run({"validate", "--json", R"({"n":2,"generators":["+XX","+ZX"]})"});
    EXPECT_EQ(r.code, 1);
    Json err = Json::parse(r.err);
    EXPECT_EQ(err["error"], "NonCommuting");
    Result bad = run({"extract", "--json", "{not json"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(Json::parse(bad.err)["error"], "ParseError");
}

TEST(Cli, usage_errors_exit_two) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"search", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"search", "--n", "3", "--exhaustive", "--partition", "x"}).code, 2);
}

TEST(Cli, search_is_deterministic) {
    Result a = run({"search", "--n", "3", "--exhaustive", "--no-timing"});
    Result b = run({"search", "--n", "3", "--exhaustive", "--no-timing", "--workers", "2"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    Json report = Json::parse(a.out);
    EXPECT_EQ(report["hit_count"], 0);
    EXPECT_EQ(report["forms_examined"], 135);
    Result s1 = run({"search", "--n", "5", "--samples", "20", "--seed", "4", "--no-timing"});
    Result s2 = run({"search", "--n", "5", "--samples", "20", "--seed", "4", "--no-timing"});
    EXPECT_EQ(s1.out, s2.out);
}

TEST(Cli, semiclifford_purify_and_equivalence) {
    Json t = run_json({"semiclifford", "--json", R"({"U":[[1,0],[0,[0.7071067811865476,0.7071067811865476]]]})"});
    EXPECT_EQ(t["semi"], true);
    EXPECT_EQ(t["clifford"], false);
    EXPECT_EQ(t["fixed_axis"], "Z");

    Json p = run_json({"purify", "--json", R"({"n":1,"generators":[]})"});
    EXPECT_EQ(p["big_state"]["n"], 2);

    std::string plus = R"({"n":1,"amps":[1,1]})";
    std::string zero = R"({"n":1,"amps":[1,0]})";
    std::string minus = R"({"n":1,"amps":[1,-1]})";
    Json lc = run_json({"lc-oracle", "--json", "{\"psi\":" + plus + ",\"phi\":" + zero + "}"});
    EXPECT_EQ(lc["equivalent"], true);
    Json dlu = run_json({"dlu-check", "--json", "{\"psi\":" + plus + ",\"phi\":" + minus + "}"});
    EXPECT_EQ(dlu["related"], true);
    EXPECT_EQ(dlu["clifford_rep"]["b"], Json::array({2}));
    Json mismatch = run_json({"dlu-check", "--json", "{\"psi\":" + plus + ",\"phi\":" + zero + "}"});
    EXPECT_EQ(mismatch["related"], false);
    EXPECT_EQ(mismatch["reason"], "S mismatch");

    Json st = run_json({"standardize", "--json", R"({"S":["11"],"t":"01","mu":"1","theta":["0"],"lambda":"0"})"});
    EXPECT_EQ(st["t"], "01");
}

TEST(Cli, output_file) {
    auto path = std::filesystem::temp_directory_path() / ("lulc_cli_out_" + std::to_string(::getpid()) + ".json");
    Result r = run({"validate", "--json", R"({"n":1,"generators":["+Z"]})", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    Json j = Json::parse(f);
    EXPECT_EQ(j["valid"], true);
    std::filesystem::remove(path);
}
