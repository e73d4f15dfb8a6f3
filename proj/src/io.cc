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

#include "triqubit/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace triqubit {

namespace {

using nlohmann::json;

Complex parse_complex(const json &entry) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        throw Error(ErrorCode::ParseError, "each data entry must be [re, im]");
    }
    return {entry[0].get<double>(), entry[1].get<double>()};
}

json complex_array(const std::vector<Complex> &values) {
    json data = json::array();
    for (const Complex &z : values) data.push_back(json::array({z.real(), z.imag()}));
    return data;
}

std::string optional_real(const std::optional<double> &x) { return x ? format_real(*x) : "NA"; }

}  // namespace

LoadedState parse_state_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object() || !doc.contains("kind") || !doc.contains("data") || !doc["kind"].is_string() ||
        !doc["data"].is_array()) {
        throw Error(ErrorCode::ParseError, R"(expected {"kind": ..., "data": [...]})");
    }
    const std::string kind = doc["kind"].get<std::string>();
    const json &data = doc["data"];
    if (kind == "pure") {
        if (data.size() != 8) throw Error(ErrorCode::ParseError, "pure state needs 8 amplitudes");
        PureState3::Amplitudes amps;
        for (std::size_t i = 0; i < 8; ++i) amps[i] = parse_complex(data[i]);
        return PureState3::from_amplitudes(amps);
    }
    if (kind == "density") {
        if (data.size() != 64) throw Error(ErrorCode::ParseError, "density matrix needs 64 entries");
        std::vector<Complex> entries;
        entries.reserve(64);
        for (const json &e : data) entries.push_back(parse_complex(e));
        return Density3::from_matrix(ComplexMatrix::from_row_major(entries));
    }
    throw Error(ErrorCode::ParseError, "kind must be \"pure\" or \"density\", got \"" + kind + "\"");
}

LoadedState read_state_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SinkFailure, "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_state_json(buffer.str());
}

std::string state_to_json(const PureState3 &psi) {
    const auto &a = psi.amplitudes();
    return json{{"kind", "pure"}, {"data", complex_array({a.begin(), a.end()})}}.dump();
}

std::string state_to_json(const Density3 &rho) {
    return json{{"kind", "density"}, {"data", complex_array(rho.matrix().row_major())}}.dump();
}

std::string format_real(double x) {
    char buf[32];
    // Negative zero would print as "-0".
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string csv_header() {
    std::string h =
        "id,kind,parameter,rank,seed,N_tri,N_A_BC,N_B_AC,N_C_AB,G,D,D_A,D_B,D_C,S_AB,S_AC,S_BC,S_max,S_argmax,"
        "M_AB,M_AC,M_BC,B_max,B_argmax";
    for (std::string_view name : relation_names()) {
        h += ",res_";
        h += name;
    }
    return h;
}

std::string format_csv_row(const SweepRow &row) {
    const ResourceRecord &r = row.record;
    const StateProvenance &p = r.provenance;
    std::string out = std::to_string(row.draw_index);
    auto cell = [&out](const std::string &s) {
        out += ',';
        out += s;
    };
    cell(std::string(name_of(p.kind)));
    cell(optional_real(p.parameter));
    cell(p.rank ? std::to_string(*p.rank) : "NA");
    cell(p.seed ? std::to_string(*p.seed) : "NA");
    cell(format_real(r.negativity_tri));
    for (double n : r.negativity_bi) cell(format_real(n));
    cell(optional_real(r.gbc));
    cell(format_real(r.coherence));
    for (double d : r.coherence_sub) cell(format_real(d));
    for (double s : r.steering_pair) cell(format_real(s));
    cell(format_real(r.steering_max));
    cell(std::string(name_of(r.steering_argmax)));
    for (double m : r.bell_M_pair) cell(format_real(m));
    cell(format_real(r.bell_violation_max));
    cell(r.bell_argmax ? std::string(name_of(*r.bell_argmax)) : "NA");
    for (std::string_view name : relation_names()) {
        const RelationEntry &e = row.report.at(name);
        cell(e.applicable ? format_real(e.residual) : "NA");
    }
    return out;
}

std::string summary_to_json(const SweepSummary &summary) {
    json violations = json::object();
    for (const auto &[name, n] : summary.violations) violations[name] = n;
    json fractions = json::object();
    for (const auto &[rank, f] : summary.per_rank_bell_fraction) fractions[std::to_string(rank)] = f;
    json counts = json::object();
    for (const auto &[rank, n] : summary.per_rank_count) counts[std::to_string(rank)] = n;
    json doc{
        {"total", summary.total},
        {"emitted", summary.emitted},
        {"violations", violations},
        {"max_negative_residual", summary.max_negative_residual},
        {"worst_relation", summary.worst_relation.empty() ? json(nullptr) : json(summary.worst_relation)},
        {"worst_draw", summary.worst_draw < 0 ? json(nullptr) : json(summary.worst_draw)},
        {"per_rank_bell_fraction", fractions},
        {"per_rank_count", counts},
        {"wall_time_seconds", summary.wall_time_seconds},
    };
    return doc.dump(2);
}

}  // namespace triqubit
