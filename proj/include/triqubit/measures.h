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

#include "triqubit/labels.h"
#include "triqubit/linalg.h"
#include "triqubit/states.h"

namespace triqubit {

/// Partial-transpose eigenvalues in (-1e-10, 0) count as zero.
inline constexpr double kNegativityCutoff = 1e-10;
/// M - 1 at or below this floor is reported as no Bell violation.
inline constexpr double kBellFloor = 1e-12;
/// A density matrix counts as pure when its top eigenvalue is within this of 1.
inline constexpr double kPurityRankTol = 1e-9;

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// Two-qubit state in the Pauli basis:
///   rho = (I(x)I + a.sigma(x)I + I(x)b.sigma + sum_ij t_ij sigma_i(x)sigma_j) / 4
/// with indices 0,1,2 standing for sigma_x, sigma_y, sigma_z.
struct BlochPairDecomposition {
    Vec3 a{};
    Vec3 b{};
    Mat3 t{};

    ComplexMatrix reconstruct() const;
};

/// Full Pauli expansion of a three-qubit state. `coefficients[i][j][k]` is
/// Tr(rho sigma_i (x) sigma_j (x) sigma_k) with 0 = identity, 1..3 = x, y, z;
/// the named accessors slice it into Bloch vectors and correlation tensors.
struct BlochTripleDecomposition {
    std::array<std::array<std::array<double, 4>, 4>, 4> coefficients{};

    Vec3 bloch(Qubit q) const;
    Mat3 correlation(Pair p) const;
    double three_body(int i, int j, int k) const { return coefficients[i + 1][j + 1][k + 1]; }

    ComplexMatrix reconstruct() const;
};

BlochTripleDecomposition bloch_triple_decomposition(const Density3 &rho);
BlochPairDecomposition bloch_pair_decomposition(const Density3 &rho, Pair pair);
BlochPairDecomposition bloch_pair_decomposition(const ComplexMatrix &rho_pair);

double negativity_bipartite(const Density3 &rho, Cut cut);
double negativity_tripartite(const Density3 &rho);
/// 2 (prod_i det rho_i)^{1/6}
double negativity_pure(const PureState3 &psi);

double concurrence_bipartition(const PureState3 &psi, Cut cut);
double gbc_pure(const PureState3 &psi);
/// Number of bipartitions of n parties.
long long bipartition_cardinality(int n);

double coherence_subsystem(const Density3 &rho, Qubit sub);
double coherence_tripartite(const Density3 &rho);
double coherence_pair(const Density3 &rho, Pair pair);

/// Tr(T^T T) - 1, unclamped.
double steering_violation_pair(const Density3 &rho, Pair pair);
double steering_from_correlation(const Mat3 &t);

struct PairMaximum {
    double value = 0.0;
    Pair argmax = Pair::AB;
};
PairMaximum steering_violation_max(const Density3 &rho);

/// Sum of the two largest eigenvalues of T^T T.
double bell_M_pair(const Density3 &rho, Pair pair);
double bell_M_from_correlation(const Mat3 &t);
/// max{0, M - 1} with M - 1 <= kBellFloor mapped to 0.
double bell_violation_from_M(double m);
double bell_violation_pair(const Density3 &rho, Pair pair);

struct BellMaximum {
    double value = 0.0;
    std::optional<Pair> argmax;
};
BellMaximum bell_violation_max(const Density3 &rho);

/// Largest deviation among Tr(rho_i^2) = (1 + |r_i|^2)/2 and
/// Tr(rho_jk^2) = (2 + |r_j|^2 + |r_k|^2 + S_jk)/4.
double purity_identities_check(const Density3 &rho);

/// Top eigenvector if `rho` is rank one within kPurityRankTol.
std::optional<PureState3> extract_pure(const Density3 &rho);

/// Every quantifier for one state. Per-label arrays are indexed by index_of().
struct ResourceRecord {
    double negativity_tri = 0.0;
    std::array<double, 3> negativity_bi{};
    /// Set only for pure inputs; the convex roof is not computed.
    std::optional<double> gbc;
    double coherence = 0.0;
    std::array<double, 3> coherence_sub{};
    std::array<double, 3> steering_pair{};
    double steering_max = 0.0;
    Pair steering_argmax = Pair::AB;
    std::array<double, 3> bell_M_pair{};
    std::array<double, 3> bell_pair{};
    double bell_violation_max = 0.0;
    std::optional<Pair> bell_argmax;
    /// Eigenvalues of each reduced pair state, descending.
    std::array<std::array<double, 4>, 3> pair_spectrum{};
    std::array<double, 3> pair_purity{};
    bool is_pure = false;
    int rank = 0;
    StateProvenance provenance;
};

ResourceRecord measure(const Density3 &rho, const StateProvenance &provenance = {});
/// Same as measure(psi.density()) but takes the GBC from `psi` directly.
ResourceRecord measure(const PureState3 &psi, const StateProvenance &provenance = {});

}  // namespace triqubit
