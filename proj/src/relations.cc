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

#include "triqubit/relations.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "triqubit/error.h"

namespace triqubit {

namespace {

constexpr std::array<std::string_view, 15> kRelationNames{
    "T1_N_eq_G", "T2_upper", "T2_lower", "T3",      "C1_A_BC", "C1_B_AC", "C1_C_AB",       "T4",
    "C2_A_BC",   "C2_B_AC",  "C2_C_AB",  "CHSH_AB", "CHSH_AC", "CHSH_BC", "Bell_monogamy",
};

// lhs <= rhs
RelationEntry upper_bound(std::string_view name, double lhs, double rhs) {
    RelationEntry e{std::string(name), lhs, rhs, rhs - lhs, true, true};
    e.satisfied = e.residual >= -kInequalityTol;
    return e;
}

// lhs >= rhs
RelationEntry lower_bound(std::string_view name, double lhs, double rhs) {
    RelationEntry e{std::string(name), lhs, rhs, lhs - rhs, true, true};
    e.satisfied = e.residual >= -kInequalityTol;
    return e;
}

RelationEntry not_applicable(std::string_view name) {
    return RelationEntry{std::string(name), 0.0, 0.0, 0.0, true, false};
}

std::string cut_suffix(Qubit q) {
    const Pair rest = complement(q);
    return std::string(name_of(q)) + "_" + std::string(name_of(rest));
}

double pow6(double x) {
    const double x3 = x * x * x;
    return x3 * x3;
}

double chsh_rhs(double pair_purity, const std::array<double, 4> &e) {
    return pair_purity - 2.0 * (e[0] * e[3] + e[1] * e[2]);
}

}  // namespace

const RelationEntry &RelationReport::at(std::string_view name) const {
    for (const auto &e : entries) {
        if (e.name == name) return e;
    }
    throw Error(ErrorCode::InvalidLabel, "no relation named '" + std::string(name) + "'");
}

bool RelationReport::all_satisfied() const {
    return std::all_of(entries.begin(), entries.end(), [](const RelationEntry &e) { return e.satisfied; });
}

std::span<const std::string_view> relation_names() { return kRelationNames; }

RelationEntry check_theorem1(const ResourceRecord &record) {
    if (!record.gbc) return not_applicable(kRelationNames[0]);
    RelationEntry e{std::string(kRelationNames[0]), record.negativity_tri, *record.gbc, 0.0, true, true};
    e.residual = -std::abs(e.lhs - e.rhs);
    e.satisfied = e.residual >= -kInequalityTol;
    return e;
}

std::array<RelationEntry, 2> check_theorem2(const ResourceRecord &record, bool is_pure) {
    const double n = record.negativity_tri;
    const double d2 = record.coherence * record.coherence;
    return {upper_bound(kRelationNames[1], n * n + d2, 1.0),
            is_pure ? lower_bound(kRelationNames[2], pow6(n) + 3.0 * d2, 1.0) : not_applicable(kRelationNames[2])};
}

RelationEntry check_theorem3(const ResourceRecord &record) {
    return upper_bound(kRelationNames[3], 2.0 * pow6(record.negativity_tri) + record.steering_max, 2.0);
}

std::array<RelationEntry, 3> check_corollary1(const std::array<double, 3> &negativity_bi,
                                              const std::array<double, 3> &steering_pair) {
    std::array<RelationEntry, 3> out;
    for (Qubit q : kQubits) {
        const double n = negativity_bi[index_of(q)];
        const double s = steering_pair[index_of(complement(q))];
        out[index_of(q)] = upper_bound("C1_" + cut_suffix(q), 2.0 * n * n + s, 2.0);
    }
    return out;
}

RelationEntry check_theorem4(const ResourceRecord &record) {
    return upper_bound(kRelationNames[7], pow6(record.negativity_tri) + record.bell_violation_max, 1.0);
}

std::array<RelationEntry, 3> check_corollary2(const std::array<double, 3> &negativity_bi,
                                              const std::array<double, 3> &bell_pair) {
    std::array<RelationEntry, 3> out;
    for (Qubit q : kQubits) {
        const double n = negativity_bi[index_of(q)];
        const double b = bell_pair[index_of(complement(q))];
        out[index_of(q)] = upper_bound("C2_" + cut_suffix(q), n * n + b, 1.0);
    }
    return out;
}

RelationEntry check_coherence_chsh_pair(const ResourceRecord &record, Pair pair) {
    const int i = index_of(pair);
    const auto [first, second] = qubits_of(pair);
    const double d1 = record.coherence_sub[index_of(first)];
    const double d2 = record.coherence_sub[index_of(second)];
    const double coherence_pair_sq = (d1 * d1 + d2 * d2) / 2.0;
    // (B' / (2 sqrt 2))^2 with B' = 2 sqrt(M) is M / 2.
    const double lhs = coherence_pair_sq / 2.0 + record.bell_M_pair[i] / 2.0;
    return upper_bound("CHSH_" + std::string(name_of(pair)), lhs,
                       chsh_rhs(record.pair_purity[i], record.pair_spectrum[i]));
}

RelationEntry check_coherence_chsh_pair(const Density3 &rho, Pair pair) {
    const ComplexMatrix reduced = partial_trace(rho.matrix(), pair);
    const double d = coherence_pair(rho, pair);
    const double lhs = d * d / 2.0 + bell_M_pair(rho, pair) / 2.0;
    const auto values = hermitian_eigenvalues(reduced, true);
    const std::array<double, 4> e{values[0], values[1], values[2], values[3]};
    return upper_bound("CHSH_" + std::string(name_of(pair)), lhs, chsh_rhs(purity(reduced), e));
}

RelationEntry check_bell_monogamy(const ResourceRecord &record) {
    const auto violating = static_cast<double>(std::count_if(
        record.bell_pair.begin(), record.bell_pair.end(), [](double b) { return b > kMonogamyThreshold; }));
    RelationEntry e = upper_bound(kRelationNames[14], violating, 1.0);
    e.satisfied = violating <= 1.0;
    return e;
}

RelationReport evaluate_relations(const ResourceRecord &record) {
    RelationReport report;
    report.entries.reserve(kRelationNames.size());
    report.entries.push_back(check_theorem1(record));
    for (auto &e : check_theorem2(record, record.is_pure)) report.entries.push_back(std::move(e));
    report.entries.push_back(check_theorem3(record));
    for (auto &e : check_corollary1(record.negativity_bi, record.steering_pair)) report.entries.push_back(std::move(e));
    report.entries.push_back(check_theorem4(record));
    for (auto &e : check_corollary2(record.negativity_bi, record.bell_pair)) report.entries.push_back(std::move(e));
    for (Pair p : kPairs) report.entries.push_back(check_coherence_chsh_pair(record, p));
    report.entries.push_back(check_bell_monogamy(record));
    return report;
}

std::string_view name_of(CurveId id) {
    switch (id) {
        case CurveId::AlphaND: return "alpha_ND";
        case CurveId::MND: return "m_ND";
        case CurveId::MNS: return "m_NS";
        case CurveId::MNB: return "m_NB";
    }
    return "alpha_ND";
}

CurveId parse_curve_id(std::string_view s) {
    for (CurveId id : {CurveId::AlphaND, CurveId::MND, CurveId::MNS, CurveId::MNB}) {
        if (name_of(id) == s) return id;
    }
    throw Error(ErrorCode::BadCurveId, "unknown curve '" + std::string(s) + "'");
}

std::vector<double> family_grid(CurveId id, int grid) {
    if (grid < 2) throw Error(ErrorCode::OutOfRange, "grid must have at least 2 points");
    const double upper = id == CurveId::AlphaND ? std::numbers::pi / 2.0 : 1.0;
    std::vector<double> out(static_cast<std::size_t>(grid));
    for (int k = 0; k < grid; ++k) out[static_cast<std::size_t>(k)] = upper * k / (grid - 1);
    // Pin the endpoint exactly so that m = 1 stays inside the family's domain.
    out.back() = upper;
    return out;
}

FamilyClosedForm closed_form_alpha(double alpha) {
    return {std::abs(std::sin(2.0 * alpha)), std::abs(std::cos(2.0 * alpha)), std::nullopt, std::nullopt};
}

FamilyClosedForm closed_form_m(double m) {
    const double m2 = m * m;
    const double denom = (1.0 + m2) * (1.0 + m2);
    return {std::cbrt((1.0 - m2) / (1.0 + m2)), 2.0 * m / (std::sqrt(3.0) * (1.0 + m2)), 8.0 * m2 / denom,
            4.0 * m2 / denom};
}

std::vector<BoundaryCurvePoint> boundary_curves(CurveId id, int grid) {
    std::vector<BoundaryCurvePoint> out;
    for (double p : family_grid(id, grid)) {
        const FamilyClosedForm f = id == CurveId::AlphaND ? closed_form_alpha(p) : closed_form_m(p);
        BoundaryCurvePoint pt{p, 0.0, 0.0, id};
        switch (id) {
            case CurveId::AlphaND:
            case CurveId::MND:
                pt.x = f.negativity * f.negativity;
                pt.y = f.coherence * f.coherence;
                break;
            case CurveId::MNS:
                pt.x = pow6(f.negativity);
                pt.y = *f.steering;
                break;
            case CurveId::MNB:
                pt.x = pow6(f.negativity);
                pt.y = *f.bell;
                break;
        }
        out.push_back(pt);
    }
    return out;
}

BoundaryCurvePoint numeric_curve_point(CurveId id, double parameter) {
    const ResourceRecord r = id == CurveId::AlphaND ? measure(psi_alpha(parameter)) : measure(psi_m(parameter));
    BoundaryCurvePoint pt{parameter, 0.0, 0.0, id};
    switch (id) {
        case CurveId::AlphaND:
        case CurveId::MND:
            pt.x = r.negativity_tri * r.negativity_tri;
            pt.y = r.coherence * r.coherence;
            break;
        case CurveId::MNS:
            pt.x = pow6(r.negativity_tri);
            pt.y = r.steering_max;
            break;
        case CurveId::MNB:
            pt.x = pow6(r.negativity_tri);
            pt.y = r.bell_violation_max;
            break;
    }
    return pt;
}

double BoundaryResiduals::max() const { return std::max({alpha_upper, m_lower, m_steering, m_bell, analytic}); }

BoundaryResiduals boundary_residuals(int grid) {
    BoundaryResiduals res;
    const auto alpha_curve = boundary_curves(CurveId::AlphaND, grid);
    for (const auto &analytic : alpha_curve) {
        const auto r = measure(psi_alpha(analytic.parameter));
        const double n2 = r.negativity_tri * r.negativity_tri;
        const double d2 = r.coherence * r.coherence;
        res.alpha_upper = std::max(res.alpha_upper, std::abs(n2 + d2 - 1.0));
        res.analytic = std::max({res.analytic, std::abs(n2 - analytic.x), std::abs(d2 - analytic.y)});
    }

    const auto nd = boundary_curves(CurveId::MND, grid);
    const auto ns = boundary_curves(CurveId::MNS, grid);
    const auto nb = boundary_curves(CurveId::MNB, grid);
    for (std::size_t k = 0; k < nd.size(); ++k) {
        const auto r = measure(psi_m(nd[k].parameter));
        const double n2 = r.negativity_tri * r.negativity_tri;
        const double n6 = pow6(r.negativity_tri);
        const double d2 = r.coherence * r.coherence;
        res.m_lower = std::max(res.m_lower, std::abs(n6 + 3.0 * d2 - 1.0));
        res.m_steering = std::max(res.m_steering, std::abs(2.0 * n6 + r.steering_max - 2.0));
        res.m_bell = std::max(res.m_bell, std::abs(n6 + r.bell_violation_max - 1.0));
        res.analytic = std::max({res.analytic, std::abs(n2 - nd[k].x), std::abs(d2 - nd[k].y),
                                 std::abs(n6 - ns[k].x), std::abs(r.steering_max - ns[k].y),
                                 std::abs(r.bell_violation_max - nb[k].y)});
    }
    return res;
}

double boundary_consistency(int grid) { return boundary_residuals(grid).max(); }

}  // namespace triqubit
