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

// Command-line front end: measure, verify, scan-boundary and sample.
//
// Exit codes: 0 pass, 1 relation violated, 2 usage / parse error,
// 3 state validation error, 4 I/O failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "triqubit/io.h"
#include "triqubit/montecarlo.h"
#include "triqubit/relations.h"

namespace {

using namespace triqubit;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

int exit_code_for(const Error &e) {
    switch (e.code()) {
        case ErrorCode::ParseError:
        case ErrorCode::BadConfig:
        case ErrorCode::BadCurveId:
        case ErrorCode::UnknownName:
        case ErrorCode::OutOfRange:
        case ErrorCode::BadRank:
            return kExitUsage;
        case ErrorCode::SinkFailure:
            return kExitIo;
        default:
            return kExitValidation;
    }
}

std::vector<int> parse_ranks(const std::string &text) {
    std::vector<int> ranks;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto dash = item.find('-');
        try {
            if (dash != std::string::npos && dash > 0) {
                const int lo = std::stoi(item.substr(0, dash));
                const int hi = std::stoi(item.substr(dash + 1));
                for (int r = lo; r <= hi; ++r) ranks.push_back(r);
            } else {
                ranks.push_back(std::stoi(item));
            }
        } catch (const std::logic_error &) {
            throw Error(ErrorCode::BadConfig, "cannot parse rank list '" + text + "'");
        }
    }
    return ranks;
}

std::ofstream open_output(const std::string &path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::SinkFailure, "cannot open " + path + " for writing");
    return out;
}

int cmd_measure(const std::string &path) {
    const LoadedState state = read_state_file(path);
    StateProvenance prov;
    prov.kind = StateKind::File;
    SweepRow row;
    row.record = std::holds_alternative<PureState3>(state) ? measure(std::get<PureState3>(state), prov)
                                                           : measure(std::get<Density3>(state), prov);
    row.report = evaluate_relations(row.record);
    std::cout << csv_header() << '\n' << format_csv_row(row) << '\n';
    return kExitPass;
}

struct VerifyOptions {
    std::string mode = "pure";
    std::int64_t count = 10000;
    std::string ranks = "1-8";
    std::uint64_t seed = 0;
    int workers = 1;
    std::string out = "verify.csv";
    std::string summary;
    std::string filter = "none";
};

int cmd_verify(const VerifyOptions &opt) {
    SweepConfig cfg;
    cfg.mode = opt.mode == "mixed" ? SweepMode::Mixed : SweepMode::Pure;
    cfg.count = opt.count;
    cfg.seed = opt.seed;
    cfg.workers = opt.workers;
    cfg.filter = opt.filter == "steering-nonneg" ? SweepFilter::SteeringNonneg : SweepFilter::None;
    if (cfg.mode == SweepMode::Mixed) cfg.ranks = parse_ranks(opt.ranks);
    validate(cfg);

    std::ofstream csv = open_output(opt.out);
    csv << csv_header() << '\n';
    const SweepSummary summary = run_sweep(cfg, [&csv](const SweepRow &row) {
        csv << format_csv_row(row) << '\n';
        if (!csv) throw Error(ErrorCode::SinkFailure, "write failed");
    });
    csv.close();
    if (!csv) throw Error(ErrorCode::SinkFailure, "cannot finish writing " + opt.out);

    const std::string summary_path = opt.summary.empty() ? opt.out + ".summary.json" : opt.summary;
    std::ofstream js = open_output(summary_path);
    js << summary_to_json(summary) << '\n';
    js.close();
    if (!js) throw Error(ErrorCode::SinkFailure, "cannot finish writing " + summary_path);

    std::printf("draws: %lld  emitted: %lld  violations: %lld\n", static_cast<long long>(summary.total),
                static_cast<long long>(summary.emitted), static_cast<long long>(summary.total_violations()));
    for (const auto &[rank, fraction] : summary.per_rank_bell_fraction) {
        std::printf("rank %d bell-violation fraction: %s\n", rank, format_real(fraction).c_str());
    }
    if (summary.total_violations() == 0) return kExitPass;

    const std::int64_t draw = summary.worst_draw;
    std::printf("worst residual %s in %s; replay: kind=%s seed=%llu draw=%lld", format_real(summary.max_negative_residual).c_str(),
                summary.worst_relation.c_str(), cfg.mode == SweepMode::Pure ? "haar_pure" : "ginibre_mixed",
                static_cast<unsigned long long>(cfg.seed), static_cast<long long>(draw));
    if (cfg.mode == SweepMode::Mixed) std::printf(" rank=%d", rank_for_draw(cfg, draw));
    std::printf("\n");
    return kExitViolation;
}

int cmd_scan_boundary(const std::string &family_name, int grid, const std::string &out_path) {
    if (family_name != "alpha" && family_name != "m") {
        throw Error(ErrorCode::UnknownName, "family must be 'alpha' or 'm', got '" + family_name + "'");
    }
    if (grid < 2) throw Error(ErrorCode::BadConfig, "grid must be >= 2");
    const Family family = family_name == "alpha" ? Family::Alpha : Family::M;
    const auto rows = sweep_boundary_families(family, grid);

    std::ofstream file;
    if (out_path != "-") file = open_output(out_path);
    std::ostream &out = out_path == "-" ? std::cout : file;
    out << "family,parameter,N,N_analytic,D,D_analytic,S,S_analytic,B,B_analytic,equality_residual,analytic_residual\n";

    auto opt_real = [](const std::optional<double> &x) { return x ? format_real(*x) : std::string("NA"); };
    double worst = 0.0;
    for (const SweepRow &row : rows) {
        const ResourceRecord &r = row.record;
        const double p = *r.provenance.parameter;
        const FamilyClosedForm f = family == Family::Alpha ? closed_form_alpha(p) : closed_form_m(p);
        const double n = r.negativity_tri;
        const double d = r.coherence;
        const double n6 = std::pow(n, 6);
        double equality = 0.0;
        double analytic = std::max(std::abs(n - f.negativity), std::abs(d - f.coherence));
        if (family == Family::Alpha) {
            equality = std::abs(n * n + d * d - 1.0);
        } else {
            equality = std::max({std::abs(n6 + 3.0 * d * d - 1.0), std::abs(2.0 * n6 + r.steering_max - 2.0),
                                 std::abs(n6 + r.bell_violation_max - 1.0)});
            analytic = std::max({analytic, std::abs(r.steering_max - *f.steering),
                                 std::abs(r.bell_violation_max - *f.bell)});
        }
        worst = std::max({worst, equality, analytic});
        out << family_name << ',' << format_real(p) << ',' << format_real(n) << ',' << format_real(f.negativity)
            << ',' << format_real(d) << ',' << format_real(f.coherence) << ',' << format_real(r.steering_max)
            << ',' << opt_real(f.steering) << ',' << format_real(r.bell_violation_max) << ',' << opt_real(f.bell)
            << ',' << format_real(equality) << ',' << format_real(analytic) << '\n';
    }
    out.flush();
    if (!out) throw Error(ErrorCode::SinkFailure, "cannot write boundary table");
    std::fprintf(stderr, "max boundary residual: %s\n", format_real(worst).c_str());
    return worst < kEqualityTol ? kExitPass : kExitViolation;
}

struct SampleOptions {
    std::string kind = "haar_pure";
    std::uint64_t seed = 0;
    std::int64_t index = 0;
    int rank = 8;
    double param = 0.0;
    std::string out = "-";
};

int cmd_sample(const SampleOptions &opt) {
    std::string json;
    if (opt.kind == "haar_pure") {
        SeededRng rng = draw_rng(opt.seed, opt.index);
        json = state_to_json(sample_haar_pure(rng));
    } else if (opt.kind == "ginibre_mixed") {
        SeededRng rng = draw_rng(opt.seed, opt.index);
        json = state_to_json(sample_ginibre_mixed(opt.rank, rng));
    } else if (opt.kind == "alpha") {
        json = state_to_json(psi_alpha(opt.param));
    } else if (opt.kind == "m") {
        json = state_to_json(psi_m(opt.param));
    } else {
        json = state_to_json(canonical(opt.kind));
    }
    if (opt.out == "-") {
        std::cout << json << '\n';
    } else {
        std::ofstream f = open_output(opt.out);
        f << json << '\n';
        if (!f) throw Error(ErrorCode::SinkFailure, "cannot write " + opt.out);
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Entanglement, coherence, steering and Bell-violation relations for three-qubit states"};
    app.require_subcommand(1);

    std::string measure_path;
    auto *measure_cmd = app.add_subcommand("measure", "Measure one state file and print a CSV row");
    measure_cmd->add_option("input", measure_path, "State JSON file")->required();

    VerifyOptions vopt;
    auto *verify_cmd = app.add_subcommand("verify", "Sample states and check every relation");
    verify_cmd->add_option("--mode", vopt.mode)->check(CLI::IsMember({"pure", "mixed"}));
    verify_cmd->add_option("--count", vopt.count)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--ranks", vopt.ranks, "Comma list, ranges allowed (e.g. 2,4,8 or 1-8)");
    verify_cmd->add_option("--seed", vopt.seed);
    verify_cmd->add_option("--workers", vopt.workers)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", vopt.out, "CSV output path");
    verify_cmd->add_option("--summary", vopt.summary, "JSON summary path (default: <out>.summary.json)");
    verify_cmd->add_option("--filter", vopt.filter)->check(CLI::IsMember({"none", "steering-nonneg"}));

    std::string family;
    int grid = 201;
    std::string scan_out = "-";
    auto *scan_cmd = app.add_subcommand("scan-boundary", "Tabulate a boundary family against its closed form");
    scan_cmd->add_option("--family", family)->required();
    scan_cmd->add_option("--grid", grid);
    scan_cmd->add_option("--out", scan_out, "CSV output path, - for stdout");

    SampleOptions sopt;
    auto *sample_cmd = app.add_subcommand("sample", "Write one state as JSON");
    sample_cmd->add_option("--kind", sopt.kind)
        ->check(CLI::IsMember({"haar_pure", "ginibre_mixed", "alpha", "m", "ghz", "w", "product000"}));
    sample_cmd->add_option("--seed", sopt.seed);
    sample_cmd->add_option("--index", sopt.index);
    sample_cmd->add_option("--rank", sopt.rank);
    sample_cmd->add_option("--param", sopt.param);
    sample_cmd->add_option("--out", sopt.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*measure_cmd) return cmd_measure(measure_path);
        if (*verify_cmd) return cmd_verify(vopt);
        if (*scan_cmd) return cmd_scan_boundary(family, grid, scan_out);
        if (*sample_cmd) return cmd_sample(sopt);
    } catch (const Error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e);
    }
    return kExitUsage;
}
