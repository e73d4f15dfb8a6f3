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

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "triqubit/measures.h"

namespace triqubit {

/// Inequalities pass when residual >= -kInequalityTol.
inline constexpr double kInequalityTol = 1e-9;
/// End-to-end tolerance for boundary-curve equalities.
inline constexpr double kEqualityTol = 1e-8;
/// Pairwise Bell violations above this count towards monogamy.
inline constexpr double kMonogamyThreshold = 1e-9;

/// One checked relation. `residual` is signed so that negative means violated;
/// entries whose hypothesis does not hold are kept with applicable = false.
struct RelationEntry {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    bool satisfied = true;
    bool applicable = true;
};

struct RelationReport {
    std::vector<RelationEntry> entries;

    const RelationEntry &at(std::string_view name) const;
    bool all_satisfied() const;
};

/// Column order of every report; stable across releases.
std::span<const std::string_view> relation_names();

/// |N - G| on pure states.
RelationEntry check_theorem1(const ResourceRecord &record);
/// {N^2 + D^2 <= 1, N^6 + 3 D^2 >= 1 (pure only)}.
std::array<RelationEntry, 2> check_theorem2(const ResourceRecord &record, bool is_pure);
/// 2 N^6 + S <= 2.
RelationEntry check_theorem3(const ResourceRecord &record);
/// 2 N_{I|JK}^2 + S_JK <= 2 for I = A, B, C.
std::array<RelationEntry, 3> check_corollary1(const std::array<double, 3> &negativity_bi,
                                              const std::array<double, 3> &steering_pair);
/// N^6 + B <= 1.
RelationEntry check_theorem4(const ResourceRecord &record);
/// N_{I|JK}^2 + B_JK <= 1 for I = A, B, C.
std::array<RelationEntry, 3> check_corollary2(const std::array<double, 3> &negativity_bi,
                                              const std::array<double, 3> &bell_pair);
/// D_JK^2 / 2 + M_JK / 2 <= Tr(rho_JK^2) - 2 (e1 e4 + e2 e3).
RelationEntry check_coherence_chsh_pair(const Density3 &rho, Pair pair);
RelationEntry check_coherence_chsh_pair(const ResourceRecord &record, Pair pair);
/// At most one pair violates CHSH.
RelationEntry check_bell_monogamy(const ResourceRecord &record);

RelationReport evaluate_relations(const ResourceRecord &record);

enum class CurveId { AlphaND, MND, MNS, MNB };

std::string_view name_of(CurveId id);
/// Accepts alpha_ND, m_ND, m_NS, m_NB; throws BadCurveId otherwise.
CurveId parse_curve_id(std::string_view s);

struct BoundaryCurvePoint {
    double parameter = 0.0;
    double x = 0.0;
    double y = 0.0;
    CurveId curve = CurveId::AlphaND;
};

/// Closed-form measures of the boundary families. The alpha family has no
/// steering or Bell closed form here.
struct FamilyClosedForm {
    double negativity = 0.0;
    double coherence = 0.0;
    std::optional<double> steering;
    std::optional<double> bell;
};

/// N = |sin 2 alpha|, D = |cos 2 alpha|.
FamilyClosedForm closed_form_alpha(double alpha);
/// N = ((1 - m^2)/(1 + m^2))^{1/3}, D = 2m / (sqrt 3 (1 + m^2)),
/// S = 8 m^2 / (1 + m^2)^2, B = 4 m^2 / (1 + m^2)^2.
FamilyClosedForm closed_form_m(double m);

/// Uniform parameter grid: alpha in [0, pi/2], m in [0, 1].
std::vector<double> family_grid(CurveId id, int grid);

/// Closed-form points: alpha_ND and m_ND give (N^2, D^2), m_NS gives (N^6, S),
/// m_NB gives (N^6, B).
std::vector<BoundaryCurvePoint> boundary_curves(CurveId id, int grid);

/// Same point computed from the constructed state's measures.
BoundaryCurvePoint numeric_curve_point(CurveId id, double parameter);

struct BoundaryResiduals {
    /// max |N^2 + D^2 - 1| over the alpha family.
    double alpha_upper = 0.0;
    /// max |N^6 + 3 D^2 - 1| over the m family.
    double m_lower = 0.0;
    /// max |2 N^6 + S - 2| over the m family.
    double m_steering = 0.0;
    /// max |N^6 + B - 1| over the m family.
    double m_bell = 0.0;
    /// max |numeric - closed form| over every curve coordinate.
    double analytic = 0.0;

    double max() const;
};

BoundaryResiduals boundary_residuals(int grid);
double boundary_consistency(int grid);

}  // namespace triqubit
