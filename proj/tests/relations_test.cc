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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle.h"
#include "triqubit/error.h"

using namespace triqubit;

namespace {

RelationReport report_for(const PureState3 &psi) { return evaluate_relations(measure(psi)); }

double pow6(double x) { return x * x * x * x * x * x; }

// Maximum of `y` per bin of `x` over [0, 1]; bins with too few points are
// dropped (left as NaN) because their maxima are dominated by sampling noise.
std::vector<double> binned_max(const std::vector<double> &x, const std::vector<double> &y, int bins, int min_count) {
    std::vector<double> best(static_cast<std::size_t>(bins), -INFINITY);
    std::vector<int> count(static_cast<std::size_t>(bins), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const int b = std::min(bins - 1, static_cast<int>(x[i] * bins));
        best[static_cast<std::size_t>(b)] = std::max(best[static_cast<std::size_t>(b)], y[i]);
        ++count[static_cast<std::size_t>(b)];
    }
    for (std::size_t b = 0; b < best.size(); ++b) {
        if (count[b] < min_count) best[b] = std::nan("");
    }
    return best;
}

}  // namespace

TEST(relations, names_are_stable) {
    const auto names = relation_names();
    ASSERT_EQ(names.size(), 15U);
    ASSERT_EQ(names.front(), "T1_N_eq_G");
    ASSERT_EQ(names.back(), "Bell_monogamy");
    const RelationReport r = report_for(canonical(CanonicalState::W));
    ASSERT_EQ(r.entries.size(), names.size());
    for (std::size_t k = 0; k < names.size(); ++k) ASSERT_EQ(r.entries[k].name, names[k]);
    ASSERT_THROW(r.at("T9"), Error);
}

TEST(relations, theorem2_on_ghz_and_psi_m) {
    const RelationReport ghz = report_for(canonical(CanonicalState::Ghz));
    ASSERT_NEAR(ghz.at("T2_upper").lhs, 1.0, 1e-12);
    ASSERT_NEAR(ghz.at("T2_upper").residual, 0.0, 1e-12);
    ASSERT_NEAR(ghz.at("T2_lower").lhs, 1.0, 1e-12);
    ASSERT_TRUE(ghz.all_satisfied());

    const RelationReport m1 = report_for(psi_m(1.0));
    ASSERT_NEAR(m1.at("T2_lower").lhs, 1.0, 1e-12);
    ASSERT_NEAR(m1.at("T2_lower").residual, 0.0, 1e-12);
}

TEST(relations, lower_bound_is_pure_only) {
    SeededRng rng(5);
    const ResourceRecord r = measure(sample_ginibre_mixed(4, rng));
    const auto pair = check_theorem2(r, false);
    ASSERT_TRUE(pair[0].applicable);
    ASSERT_FALSE(pair[1].applicable);
    ASSERT_TRUE(pair[1].satisfied);
    ASSERT_FALSE(check_theorem1(r).applicable);
}

TEST(relations, theorem3_and_corollary1) {
    for (double m : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const RelationReport r = report_for(psi_m(m));
        ASSERT_NEAR(r.at("T3").residual, 0.0, 1e-10) << "m=" << m;
    }
    const RelationReport prod = report_for(canonical(CanonicalState::Product000));
    ASSERT_NEAR(prod.at("T3").lhs, 0.0, 1e-12);
    for (auto name : {"C1_A_BC", "C1_B_AC", "C1_C_AB"}) ASSERT_NEAR(prod.at(name).lhs, 0.0, 1e-12);

    // psi_m(1): the B|AC cut is separable (brute-force check) while S_AC = 2.
    const auto ref = oracle::projector(oracle::to_eigen(psi_m(1.0)));
    ASSERT_NEAR(oracle::negativity_cut(ref, 1), 0.0, 1e-12);
    const RelationReport m1 = report_for(psi_m(1.0));
    ASSERT_NEAR(m1.at("C1_B_AC").lhs, 2.0, 1e-10);
    ASSERT_NEAR(m1.at("C1_B_AC").residual, 0.0, 1e-10);
    ASSERT_TRUE(m1.at("C1_B_AC").satisfied);
}

TEST(relations, theorem4_and_corollary2) {
    for (double m : {0.0, 0.3, 0.6, 1.0}) {
        ASSERT_NEAR(report_for(psi_m(m)).at("T4").residual, 0.0, 1e-10) << "m=" << m;
    }
    const RelationReport ghz = report_for(canonical(CanonicalState::Ghz));
    ASSERT_NEAR(ghz.at("T4").lhs, 1.0, 1e-12);
    const RelationReport m1 = report_for(psi_m(1.0));
    ASSERT_NEAR(m1.at("C2_B_AC").lhs, 1.0, 1e-10);
    ASSERT_NEAR(m1.at("C2_B_AC").residual, 0.0, 1e-10);
    const RelationReport prod = report_for(canonical(CanonicalState::Product000));
    for (auto name : {"C2_A_BC", "C2_B_AC", "C2_C_AB"}) ASSERT_NEAR(prod.at(name).lhs, 0.0, 1e-12);
}

TEST(relations, coherence_chsh_examples) {
    const auto prod = check_coherence_chsh_pair(canonical(CanonicalState::Product000).density(), Pair::AB);
    ASSERT_NEAR(prod.lhs, 1.0, 1e-12);
    ASSERT_NEAR(prod.rhs, 1.0, 1e-12);
    const auto ghz = check_coherence_chsh_pair(canonical(CanonicalState::Ghz).density(), Pair::AB);
    ASSERT_NEAR(ghz.lhs, 0.5, 1e-12);
    ASSERT_NEAR(ghz.rhs, 0.5, 1e-12);

    // Record-based and state-based evaluations agree.
    SeededRng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Density3 rho = sample_ginibre_mixed(1 + trial % 8, rng);
        const ResourceRecord rec = measure(rho);
        for (Pair p : kPairs) {
            const auto a = check_coherence_chsh_pair(rho, p);
            const auto b = check_coherence_chsh_pair(rec, p);
            ASSERT_NEAR(a.residual, b.residual, 1e-10);
            ASSERT_TRUE(a.satisfied);
        }
    }
}

TEST(relations, monogamy_flags_two_violating_pairs) {
    ResourceRecord r;
    r.bell_pair = {0.2, 0.0, 0.0};
    ASSERT_TRUE(check_bell_monogamy(r).satisfied);
    r.bell_pair = {0.2, 0.1, 0.0};
    ASSERT_FALSE(check_bell_monogamy(r).satisfied);
}

TEST(relations, all_relations_hold_on_random_states) {
    SeededRng rng(2024);
    for (int trial = 0; trial < 2000; ++trial) {
        const RelationReport pure = report_for(sample_haar_pure(rng));
        ASSERT_TRUE(pure.all_satisfied()) << "pure trial " << trial;
        const RelationReport mixed = evaluate_relations(measure(sample_ginibre_mixed(1 + trial % 8, rng)));
        ASSERT_TRUE(mixed.all_satisfied()) << "mixed trial " << trial;
    }
}

TEST(relations, curve_ids) {
    for (auto name : {"alpha_ND", "m_ND", "m_NS", "m_NB"}) ASSERT_EQ(name_of(parse_curve_id(name)), name);
    try {
        parse_curve_id("m_XY");
        FAIL();
    } catch (const Error &e) {
        ASSERT_EQ(e.code(), ErrorCode::BadCurveId);
    }
}

TEST(relations, boundary_curve_examples) {
    const auto alpha = boundary_curves(CurveId::AlphaND, 3);
    ASSERT_NEAR(alpha[1].parameter, std::numbers::pi / 4, 1e-15);
    ASSERT_NEAR(alpha[1].x, 1.0, 1e-15);
    ASSERT_NEAR(alpha[1].y, 0.0, 1e-15);

    const auto ns = boundary_curves(CurveId::MNS, 11);
    ASSERT_EQ(ns.back().parameter, 1.0);
    ASSERT_NEAR(ns.back().x, 0.0, 1e-15);
    ASSERT_NEAR(ns.back().y, 2.0, 1e-15);
    const auto nb = boundary_curves(CurveId::MNB, 11);
    ASSERT_NEAR(nb.front().x, 1.0, 1e-15);
    ASSERT_NEAR(nb.front().y, 0.0, 1e-15);

    // Each closed-form point satisfies its defining equality.
    for (const auto &p : boundary_curves(CurveId::AlphaND, 201)) ASSERT_NEAR(p.x + p.y, 1.0, 1e-10);
    for (const auto &p : boundary_curves(CurveId::MND, 201)) ASSERT_NEAR(p.x * p.x * p.x + 3.0 * p.y, 1.0, 1e-10);
    for (const auto &p : boundary_curves(CurveId::MNS, 201)) ASSERT_NEAR(2.0 * p.x + p.y, 2.0, 1e-10);
    for (const auto &p : boundary_curves(CurveId::MNB, 201)) ASSERT_NEAR(p.x + p.y, 1.0, 1e-10);
    ASSERT_THROW(boundary_curves(CurveId::MND, 1), Error);
}

TEST(relations, numeric_points_follow_closed_forms) {
    for (CurveId id : {CurveId::AlphaND, CurveId::MND, CurveId::MNS, CurveId::MNB}) {
        for (const auto &analytic : boundary_curves(id, 51)) {
            const auto numeric = numeric_curve_point(id, analytic.parameter);
            ASSERT_NEAR(numeric.x, analytic.x, 1e-10) << name_of(id) << " at " << analytic.parameter;
            ASSERT_NEAR(numeric.y, analytic.y, 1e-10) << name_of(id) << " at " << analytic.parameter;
        }
    }
}

TEST(relations, boundary_consistency_on_fine_grid) {
    const BoundaryResiduals res = boundary_residuals(201);
    ASSERT_LT(res.alpha_upper, 1e-10);
    ASSERT_LT(res.m_lower, 1e-8);
    ASSERT_LT(res.m_steering, 1e-8);
    ASSERT_LT(res.m_bell, 1e-8);
    ASSERT_LT(res.analytic, 1e-8);
    ASSERT_EQ(boundary_consistency(201), res.max());
}

TEST(relations, pure_cloud_lies_between_boundary_curves) {
    // For a given N^2 no pure state has more coherence than the alpha family
    // or less than the m family.
    SeededRng rng(3);
    for (int trial = 0; trial < 5000; ++trial) {
        const ResourceRecord r = measure(sample_haar_pure(rng));
        const double n2 = r.negativity_tri * r.negativity_tri;
        const double d2 = r.coherence * r.coherence;
        ASSERT_LE(d2, 1.0 - n2 + 1e-9);
        ASSERT_GE(d2, (1.0 - pow6(r.negativity_tri)) / 3.0 - 1e-9);
    }
}

TEST(relations, steering_envelope_tracks_bipartite_negativity) {
    // Binned upper envelope of S_AC rises with N_{A|BC} and falls with N_{B|AC}.
    SeededRng rng(4);
    constexpr int kSamples = 20000;
    std::vector<double> n_a, n_b, s_ac;
    for (int trial = 0; trial < kSamples; ++trial) {
        const ResourceRecord r = measure(sample_haar_pure(rng));
        n_a.push_back(r.negativity_bi[index_of(Qubit::A)]);
        n_b.push_back(r.negativity_bi[index_of(Qubit::B)]);
        s_ac.push_back(r.steering_pair[index_of(Pair::AC)]);
    }
    constexpr double kSlack = 0.05;
    const auto rising = binned_max(n_a, s_ac, 10, 50);
    const auto falling = binned_max(n_b, s_ac, 10, 50);
    int checked = 0;
    for (std::size_t b = 1; b < rising.size(); ++b) {
        if (std::isnan(rising[b]) || std::isnan(rising[b - 1])) continue;
        ASSERT_GE(rising[b], rising[b - 1] - kSlack) << "bin " << b;
        ++checked;
    }
    for (std::size_t b = 1; b < falling.size(); ++b) {
        if (std::isnan(falling[b]) || std::isnan(falling[b - 1])) continue;
        ASSERT_LE(falling[b], falling[b - 1] + kSlack) << "bin " << b;
        ++checked;
    }
    ASSERT_GE(checked, 10);
}
