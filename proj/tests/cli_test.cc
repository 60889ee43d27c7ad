// Copyright 2026 The cvmap Authors
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

#include "cli.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include <json.hpp>

using cvmap::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("cvmap_cli_test_" + name);
}

}  // namespace

TEST(CliGens, QubitDense) {
    const Result r = invoke({"gens", "--n", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json doc = Json::parse(r.out);
    ASSERT_EQ(doc["generators"].size(), 3u);
    EXPECT_EQ(doc["metadata"]["n"], 2);
    // v_12 entry (0, 1) is i.
    EXPECT_EQ(doc["generators"][1][0][1][1], 1.0);
    bool found = false;
    for (const auto &e : doc["structure_constants"]["nonzero"]) {
        if (e[0] == 1 && e[1] == 2 && e[2] == 3) {
            EXPECT_NEAR(e[3].get<double>(), 1.0, 1e-14);
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(CliGens, EmbeddedSparse) {
    const Result r = invoke({"gens", "--n", "2", "--N", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json doc = Json::parse(r.out);
    ASSERT_EQ(doc["generators"].size(), 3u);
    for (const auto &g : doc["generators"]) EXPECT_EQ(g["dim"], 6);
    EXPECT_EQ(doc["generators"][0]["entries"].size(), 6u);
    EXPECT_EQ(doc["metadata"]["blocks"], 3);
}

TEST(CliGens, UsageErrors) {
    EXPECT_EQ(invoke({"gens", "--n", "1"}).code, 2);
    EXPECT_EQ(invoke({"gens"}).code, 2);
    EXPECT_EQ(invoke({"gens", "--n", "3", "--N", "2"}).code, 2);
    EXPECT_EQ(invoke({"gens", "--n", "2", "--format", "csv"}).code, 2);
    EXPECT_EQ(invoke({"nonsense"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
}

TEST(CliVerify, PassesAndDetectsCorruption) {
    const Result ok = invoke({"verify", "--max-n", "4", "--max-N", "10"});
    EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
    EXPECT_NE(ok.out.find("all invariants hold"), std::string::npos);
    EXPECT_EQ(invoke({"verify", "--max-n", "2", "--max-N", "2"}).code, 0);
    const Result bad = invoke({"verify", "--max-n", "3", "--max-N", "6", "--corrupt"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(invoke({"verify", "--max-n", "1"}).code, 2);
}

TEST(CliSweep, CsvShapeAndSummary) {
    const auto path = temp_path("sweep.csv");
    const Result r = invoke({"sweep", "--rmin", "0", "--rmax", "6", "--steps", "601", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string csv = slurp(path);
    std::istringstream lines(csv);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    ASSERT_EQ(rows.size(), 602u);
    EXPECT_EQ(rows[0], "r,B");
    EXPECT_EQ(rows[1], "0.000000,0.000000");
    EXPECT_EQ(rows[151].substr(0, 9), "1.500000,");
    EXPECT_NEAR(std::stod(rows[151].substr(9)), 2.9011, 5e-4);
    EXPECT_EQ(csv.back(), '\n');
    EXPECT_EQ(csv.find('\r'), std::string::npos);
    EXPECT_NE(r.out.find("r* = 1.4998"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("crossed at r = 0.486959"), std::string::npos) << r.out;
    std::filesystem::remove(path);
}

TEST(CliSweep, JobsDoNotChangeBytes) {
    const std::string one = invoke({"sweep", "--steps", "601", "--jobs", "1"}).out;
    EXPECT_EQ(invoke({"sweep", "--steps", "601", "--jobs", "4"}).out, one);
    EXPECT_EQ(invoke({"sweep", "--steps", "601", "--jobs", "7"}).out, one);
    const std::string json = invoke({"sweep", "--steps", "11", "--format", "json"}).out;
    EXPECT_EQ(Json::parse(json)["B"].size(), 11u);
}

TEST(CliSweep, Errors) {
    EXPECT_EQ(invoke({"sweep", "--rmin", "2", "--rmax", "1"}).code, 2);
    EXPECT_EQ(invoke({"sweep", "--steps", "1"}).code, 2);
    EXPECT_EQ(invoke({"sweep", "--format", "xml"}).code, 2);
    EXPECT_EQ(invoke({"sweep", "--out", "/nonexistent-dir/x/y.csv"}).code, 3);
}

TEST(CliMapNopa, Examples) {
    const Result at_max = invoke({"map-nopa", "--r", "1.4998", "--n", "3", "--format", "json"});
    ASSERT_EQ(at_max.code, 0) << at_max.err;
    const Json doc = Json::parse(at_max.out);
    EXPECT_NEAR(doc["bell_value"].get<double>(), 2.9011, 5e-4);
    for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(doc["schmidt_coefficients"][k].get<double>(), doc["closed_form_coefficients"][k].get<double>(),
                    1e-9);
    }

    const Json vac = Json::parse(invoke({"map-nopa", "--r", "0", "--n", "3", "--format", "json"}).out);
    EXPECT_NEAR(vac["schmidt_coefficients"][0].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(vac["bell_value"].get<double>(), 0.0, 1e-12);

    const Json qubit = Json::parse(invoke({"map-nopa", "--r", "1", "--n", "2", "--format", "json"}).out);
    const double t = std::tanh(1.0);
    EXPECT_NEAR(qubit["schmidt_coefficients"][0].get<double>(), 1 / std::sqrt(1 + t * t), 1e-9);
    EXPECT_NEAR(qubit["schmidt_coefficients"][1].get<double>(), t / std::sqrt(1 + t * t), 1e-9);
    EXPECT_TRUE(qubit["bell_value"].is_null());

    const Result text = invoke({"map-nopa", "--r", "1"});
    EXPECT_EQ(text.code, 0);
    EXPECT_NE(text.out.find("qutrit Bell value B"), std::string::npos);
    EXPECT_EQ(invoke({"map-nopa"}).code, 2);
    EXPECT_EQ(invoke({"map-nopa", "--r", "-1"}).code, 2);
}

TEST(CliChsh, Examples) {
    const Json mix = Json::parse(invoke({"chsh", "--mixture", "geometric:0.5", "--trunc", "64", "--format", "json"}).out);
    EXPECT_NEAR(mix["textbook_value"].get<double>(), 2 * std::sqrt(2.0), 1e-6);

    const Json vac = Json::parse(invoke({"chsh", "--r", "0", "--trunc", "8", "--format", "json"}).out);
    EXPECT_LE(std::abs(vac["textbook_value"].get<double>()), 2.0);
    EXPECT_LE(std::abs(vac["refined_value"].get<double>()), 2.0 + 1e-12);

    EXPECT_EQ(invoke({"chsh"}).code, 2);
    EXPECT_EQ(invoke({"chsh", "--r", "1", "--mixture", "geometric:0.5"}).code, 2);
    EXPECT_EQ(invoke({"chsh", "--mixture", "uniform"}).code, 2);
    EXPECT_EQ(invoke({"chsh", "--mixture", "geometric:1.5"}).code, 2);
}

TEST(CurveFormat, CsvRows) {
    const cvmap::BellCurve c = cvmap::bell_curve(0, 1, 3);
    const std::string csv = cvmap::cli::format_curve_csv(c);
    EXPECT_EQ(csv.substr(0, 22), "r,B\n0.000000,0.000000\n");
    EXPECT_NE(csv.find("\n1.000000,"), std::string::npos);
}
