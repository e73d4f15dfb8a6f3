// Copyright 2026 The triqubit Authors
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

// Drives the built command-line tool as a subprocess and checks its exit
// codes and output files.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "triqubit/io.h"

namespace fs = std::filesystem;
using namespace triqubit;

namespace {

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("triqubit_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    // Runs the tool with `args`; stdout lands in out_ and stderr in err_.
    int run(const std::string &args) {
        const std::string out = path("stdout.txt");
        const std::string err = path("stderr.txt");
        const std::string cmd = std::string("\"") + TRIQUBIT_CLI_PATH + "\" " + args + " >\"" + out + "\" 2>\"" + err + "\"";
        const int status = std::system(cmd.c_str());
        out_ = slurp(out);
        err_ = slurp(err);
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    void write(const std::string &name, const std::string &text) const {
        std::ofstream f(path(name));
        f << text;
    }

    static std::string slurp(const std::string &p) {
        std::ifstream f(p, std::ios::binary);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    static std::vector<std::string> lines(const std::string &text) {
        std::vector<std::string> out;
        std::stringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) out.push_back(line);
        return out;
    }

    static std::vector<std::string> cells(const std::string &line) {
        std::vector<std::string> out;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) out.push_back(cell);
        return out;
    }

    fs::path dir_;
    std::string out_;
    std::string err_;
};

std::size_t column(const std::string &header, const std::string &name) {
    std::stringstream ss(header);
    std::string cell;
    for (std::size_t k = 0; std::getline(ss, cell, ','); ++k) {
        if (cell == name) return k;
    }
    ADD_FAILURE() << "no column " << name;
    return 0;
}

}  // namespace

TEST_F(CliTest, measure_ghz_file) {
    write("ghz.json", state_to_json(canonical(CanonicalState::Ghz)));
    ASSERT_EQ(run("measure " + path("ghz.json")), 0) << err_;
    const auto rows = lines(out_);
    ASSERT_EQ(rows.size(), 2U);
    ASSERT_EQ(rows[0], csv_header());
    const auto row = cells(rows[1]);
    auto value = [&](const std::string &name) { return std::stod(row[column(rows[0], name)]); };
    ASSERT_NEAR(value("N_tri"), 1.0, 1e-12);
    ASSERT_NEAR(value("D"), 0.0, 1e-12);
    ASSERT_NEAR(value("S_max"), 0.0, 1e-12);
    ASSERT_EQ(value("B_max"), 0.0);
    ASSERT_EQ(row[column(rows[0], "kind")], "file");
}

TEST_F(CliTest, measure_product_density_file) {
    write("prod.json", state_to_json(canonical(CanonicalState::Product000).density()));
    ASSERT_EQ(run("measure " + path("prod.json")), 0) << err_;
    const auto rows = lines(out_);
    const auto row = cells(rows[1]);
    ASSERT_EQ(row[column(rows[0], "N_tri")], "0");
    ASSERT_EQ(row[column(rows[0], "D")], "1");
}

TEST_F(CliTest, measure_sampled_state_reproduces_sweep_row) {
    ASSERT_EQ(run("sample --kind ginibre_mixed --seed 5 --index 3 --rank 4 --out " + path("s.json")), 0) << err_;
    ASSERT_EQ(run("measure " + path("s.json")), 0) << err_;
    const auto measured = cells(lines(out_)[1]);
    ASSERT_EQ(run("verify --mode mixed --ranks 4 --count 4 --seed 5 --out " + path("v.csv")), 0) << err_;
    const auto swept = cells(lines(slurp(path("v.csv")))[4]);
    // Every numeric column from N_tri onward agrees; provenance columns differ.
    ASSERT_EQ(measured.size(), swept.size());
    for (std::size_t k = 5; k < measured.size(); ++k) ASSERT_EQ(measured[k], swept[k]) << "column " << k;
}

TEST_F(CliTest, malformed_json_exits_2) {
    write("bad.json", "{\"kind\": \"pure\", \"data\": [");
    ASSERT_EQ(run("measure " + path("bad.json")), 2);
    ASSERT_TRUE(out_.empty());
}

TEST_F(CliTest, invalid_state_exits_3_naming_the_invariant) {
    nlohmann::json j;
    j["kind"] = "density";
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) j["data"].push_back({r == c ? 0.25 : 0.0, 0.0});
    }
    write("trace.json", j.dump());
    ASSERT_EQ(run("measure " + path("trace.json")), 3);
    ASSERT_NE(err_.find("trace"), std::string::npos) << err_;
    ASSERT_TRUE(out_.empty());
}

TEST_F(CliTest, missing_file_exits_4) { ASSERT_EQ(run("measure " + path("nope.json")), 4); }

TEST_F(CliTest, usage_errors_exit_2) {
    ASSERT_EQ(run("verify --count 0 --out " + path("x.csv")), 2);
    ASSERT_EQ(run("verify --mode sideways"), 2);
    ASSERT_EQ(run("verify --mode mixed --ranks 0,3 --count 3 --out " + path("x.csv")), 2);
    ASSERT_EQ(run("verify --mode mixed --ranks two --count 3 --out " + path("x.csv")), 2);
    ASSERT_EQ(run("scan-boundary --family q"), 2);
    ASSERT_EQ(run("scan-boundary --family m --grid 1"), 2);
    ASSERT_EQ(run("frobnicate"), 2);
    ASSERT_EQ(run(""), 2);
}

TEST_F(CliTest, unwritable_output_exits_4) {
    ASSERT_EQ(run("verify --count 3 --out /nonexistent/dir/v.csv"), 4);
}

TEST_F(CliTest, verify_writes_csv_and_summary) {
    ASSERT_EQ(run("verify --mode mixed --ranks 1-3 --count 300 --seed 9 --out " + path("v.csv")), 0) << err_;
    const auto rows = lines(slurp(path("v.csv")));
    ASSERT_EQ(rows.size(), 301U);
    ASSERT_EQ(rows[0], csv_header());
    const auto summary = nlohmann::json::parse(slurp(path("v.csv.summary.json")));
    ASSERT_EQ(summary.at("total").get<int>(), 300);
    ASSERT_EQ(summary.at("per_rank_bell_fraction").size(), 3U);
    ASSERT_NE(out_.find("rank 1 bell-violation fraction"), std::string::npos);
}

TEST_F(CliTest, verify_filter_drops_rows_but_keeps_totals) {
    ASSERT_EQ(run("verify --mode mixed --ranks 2,8 --count 200 --filter steering-nonneg --out " + path("f.csv") +
                  " --summary " + path("f.json")),
              0)
        << err_;
    const auto rows = lines(slurp(path("f.csv")));
    const auto summary = nlohmann::json::parse(slurp(path("f.json")));
    ASSERT_EQ(summary.at("total").get<int>(), 200);
    ASSERT_EQ(summary.at("emitted").get<int>() + 1, static_cast<int>(rows.size()));
    const std::size_t s_col = column(rows[0], "S_max");
    for (std::size_t k = 1; k < rows.size(); ++k) ASSERT_GE(std::stod(cells(rows[k])[s_col]), 0.0);
}

TEST_F(CliTest, verify_is_byte_identical_across_workers) {
    ASSERT_EQ(run("verify --count 500 --seed 42 --workers 1 --out " + path("a.csv")), 0);
    ASSERT_EQ(run("verify --count 500 --seed 42 --workers 8 --out " + path("b.csv")), 0);
    ASSERT_EQ(run("verify --count 500 --seed 42 --workers 8 --out " + path("c.csv")), 0);
    ASSERT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
    ASSERT_EQ(slurp(path("b.csv")), slurp(path("c.csv")));
}

TEST_F(CliTest, scan_boundary_m) {
    ASSERT_EQ(run("scan-boundary --family m --grid 201 --out " + path("m.csv")), 0) << err_;
    const auto rows = lines(slurp(path("m.csv")));
    ASSERT_EQ(rows.size(), 202U);
    const std::size_t eq = column(rows[0], "equality_residual");
    const std::size_t an = column(rows[0], "analytic_residual");
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const auto row = cells(rows[k]);
        ASSERT_LT(std::stod(row[eq]), 1e-8);
        ASSERT_LT(std::stod(row[an]), 1e-8);
    }
}

TEST_F(CliTest, scan_boundary_alpha_endpoints) {
    ASSERT_EQ(run("scan-boundary --family alpha --grid 2"), 0) << err_;
    const auto rows = lines(out_);
    ASSERT_EQ(rows.size(), 3U);
    const auto first = cells(rows[1]);
    const auto last = cells(rows[2]);
    ASSERT_EQ(first[1], "0");
    ASSERT_EQ(first[2], "0");
    ASSERT_EQ(last[2], "0");
    ASSERT_EQ(first[column(rows[0], "S_analytic")], "NA");
}

TEST_F(CliTest, sample_writes_parseable_states) {
    for (const std::string kind : {"haar_pure", "ghz", "w", "product000"}) {
        ASSERT_EQ(run("sample --kind " + kind + " --seed 1 --index 2"), 0) << kind;
        ASSERT_TRUE(std::holds_alternative<PureState3>(parse_state_json(out_))) << kind;
    }
    ASSERT_EQ(run("sample --kind m --param 0.5"), 0);
    ASSERT_EQ(run("sample --kind m --param 1.5"), 2);
    ASSERT_EQ(run("sample --kind ginibre_mixed --rank 9"), 2);
    ASSERT_EQ(run("sample --kind ginibre_mixed --rank 3"), 0);
    ASSERT_TRUE(std::holds_alternative<Density3>(parse_state_json(out_)));
}
