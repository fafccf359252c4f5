// Copyright 2026 The polcap Authors
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "polcap/polcap.hpp"
#include "run_command.hpp"

using polcap::testing::run_cli;

namespace {

std::vector<std::string> lines(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

}  // namespace

TEST(Cli, curve_csv_default_grid) {
    const auto r = run_cli("curve");
    ASSERT_EQ(r.exit_code, 0);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 12u);
    EXPECT_EQ(rows[0], "eta,chi_total_entangled,chi_total_separable,chi_total_baseline");
    EXPECT_EQ(rows[1], "0.000000000,2.000000000,2.000000000,2.000000000");
    EXPECT_EQ(rows[11], "1.000000000,2.321928095,2.087462841,2.000000000");
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, curve_values_parse_back) {
    const auto r = run_cli("curve --steps 37");
    ASSERT_EQ(r.exit_code, 0);
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 38u);
    const polcap::CurveMode modes[] = {polcap::CurveMode::entangled, polcap::CurveMode::separable,
                                       polcap::CurveMode::baseline};
    double prev_eta = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].find(' '), std::string::npos);
        std::istringstream in(rows[i]);
        std::string field;
        std::getline(in, field, ',');
        const double eta = std::stod(field);
        EXPECT_GT(eta, prev_eta);
        prev_eta = eta;
        const double exact_eta = static_cast<double>(i - 1) / 36.0;
        for (const auto m : modes) {
            std::getline(in, field, ',');
            const double expected = polcap::capacity_curve(m, std::vector<double>{exact_eta})[0].chi_total;
            EXPECT_LE(std::abs(std::stod(field) - expected), 5e-10);
        }
    }
}

TEST(Cli, curve_single_mode_and_json) {
    const auto csv = run_cli("curve --mode separable --eta-min 0.5 --eta-max 1 --steps 3");
    ASSERT_EQ(csv.exit_code, 0);
    const auto rows = lines(csv.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "eta,chi_total_separable");
    EXPECT_EQ(rows[2].substr(0, 11), "0.750000000");

    const auto js = run_cli("curve --format json --steps 2");
    ASSERT_EQ(js.exit_code, 0);
    EXPECT_NE(js.out.find("\"chi_total_entangled\": 2.321928094887362"), std::string::npos) << js.out;
}

TEST(Cli, usage_errors_exit_two) {
    EXPECT_EQ(run_cli("").exit_code, 2);
    EXPECT_EQ(run_cli("curve --eta-min 0.5 --eta-max 0.5 --steps 3").exit_code, 2);
    EXPECT_EQ(run_cli("curve --eta-max 1.5").exit_code, 2);
    EXPECT_EQ(run_cli("curve --format xml").exit_code, 2);
    EXPECT_EQ(run_cli("simulate --mode entangled").exit_code, 2);
    EXPECT_EQ(run_cli("simulate --mode entangled --q 0.5 --shots 10").exit_code, 2);
    EXPECT_EQ(run_cli("ensemble").exit_code, 2);
    EXPECT_EQ(run_cli("verify --suite nope").exit_code, 2);
    EXPECT_EQ(run_cli("curve --out /nonexistent-dir/x.csv").exit_code, 2);
    EXPECT_EQ(run_cli("--help").exit_code, 0);
}

TEST(Cli, verify_selected_suites_pass) {
    const auto r = run_cli("verify --suite endpoints --suite protocol --suite f-entropy");
    ASSERT_EQ(r.exit_code, 0) << r.out;
    EXPECT_NE(r.out.find("\"all_pass\": true"), std::string::npos);
}

TEST(Cli, ensemble_reports_total) {
    const auto r = run_cli("ensemble --mode entangled --eta 1");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\"total_chi\": 2.321928094887362"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("|Psi->"), std::string::npos);
    EXPECT_NE(r.out.find("\"block_probabilities\": [\n    0.2,\n    0.4,\n    0.4"), std::string::npos);
    EXPECT_EQ(run_cli("ensemble --mode baseline").exit_code, 2);
}

TEST(Cli, protocol_rate) {
    const auto r = run_cli("protocol --p 0.5 --eta 1 --optimize");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\"extended_rate\": 2.5"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("\"p_star\""), std::string::npos);
}

TEST(Cli, simulate_is_deterministic_and_writes_files) {
    const std::string path = ::testing::TempDir() + "polcap_sim.json";
    const std::string args = "simulate --mode separable --q 0.6 --shots 20000 --seed 9 --shards 2";
    const auto a = run_cli(args);
    ASSERT_EQ(a.exit_code, 0);
    ASSERT_EQ(run_cli(args + " --out " + path).exit_code, 0);
    std::ifstream f(path, std::ios::binary);
    const std::string file((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    EXPECT_EQ(a.out, file);
    std::remove(path.c_str());
    EXPECT_NE(run_cli("simulate --mode separable --q 0.6 --shots 20000 --seed 10 --shards 2").out, a.out);
}
