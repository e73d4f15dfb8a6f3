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
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "triqubit/linalg.h"

namespace triqubit {

/// Explicitly seeded 64-bit generator; samplers never seed themselves.
using SeededRng = std::mt19937_64;

inline constexpr double kNormTol = 1e-12;
inline constexpr double kDensityTol = 1e-10;

class Density3;

/// Normalized three-qubit state vector over |000>, |001>, ..., |111>.
/// The global phase is kept as given.
class PureState3 {
   public:
    using Amplitudes = std::array<Complex, 8>;

    /// Throws NotNormalized unless sum |a_i|^2 = 1 within 1e-12.
    static PureState3 from_amplitudes(const Amplitudes &amplitudes);
    /// Rescales to unit norm first; throws NotNormalized for a zero vector and
    /// NonFinite for NaN/inf entries.
    static PureState3 normalized(const Amplitudes &amplitudes);

    const Amplitudes &amplitudes() const noexcept { return amplitudes_; }
    Complex operator[](std::size_t i) const { return amplitudes_[i]; }

    ComplexMatrix projector() const;
    Density3 density() const;

   private:
    explicit PureState3(const Amplitudes &amplitudes) : amplitudes_(amplitudes) {}
    Amplitudes amplitudes_{};
};

/// Validated 8x8 density matrix: Hermitian, unit trace, positive semidefinite,
/// each within 1e-10.
class Density3 {
   public:
    /// Throws InvalidState naming the violated invariant.
    static Density3 from_matrix(const ComplexMatrix &matrix, std::optional<int> rank_hint = std::nullopt);

    const ComplexMatrix &matrix() const noexcept { return matrix_; }
    std::optional<int> rank_hint() const noexcept { return rank_hint_; }

   private:
    friend class PureState3;
    Density3(const ComplexMatrix &matrix, std::optional<int> rank_hint) : matrix_(matrix), rank_hint_(rank_hint) {}
    ComplexMatrix matrix_;
    std::optional<int> rank_hint_;
};

enum class StateKind { HaarPure, GinibreMixed, FamilyAlpha, FamilyM, Canonical, File };

std::string_view name_of(StateKind kind);
std::optional<StateKind> parse_state_kind(std::string_view s);

/// Where a state came from, enough to regenerate it.
struct StateProvenance {
    StateKind kind = StateKind::File;
    std::optional<double> parameter;
    std::optional<std::uint64_t> seed;
    std::optional<int> rank;
    std::int64_t draw_index = 0;
};

/// cos(alpha)|000> + sin(alpha)|111>.
PureState3 psi_alpha(double alpha);

/// (|000> + m(|010> + |101>) + |111>) / sqrt(2 + 2m^2), m in [0, 1].
PureState3 psi_m(double m);

enum class CanonicalState { Ghz, W, Product000 };

PureState3 canonical(CanonicalState name);
/// Accepts "ghz", "w", "product000"; throws UnknownName otherwise.
PureState3 canonical(std::string_view name);

/// Normalized vector of eight i.i.d. standard complex Gaussians.
PureState3 sample_haar_pure(SeededRng &rng);

/// GG^dag / Tr(GG^dag) with G an 8 x rank complex Ginibre matrix.
Density3 sample_ginibre_mixed(int rank, SeededRng &rng);

/// Haar-random dim x dim unitary (QR of a Ginibre matrix with phase fix).
ComplexMatrix sample_haar_unitary(std::size_t dim, SeededRng &rng);

struct Decomposition {
    std::vector<double> weights;
    std::vector<PureState3> states;
};

/// Pure-state ensembles of `rho`, each built from the eigendecomposition mixed by
/// a Haar-random size x rank isometry. Throws SizeTooSmall if size < rank.
std::vector<Decomposition> random_decompositions(const Density3 &rho, int count, int size, SeededRng &rng);

/// Numerical rank: eigenvalues above 1e-10.
int numerical_rank(const Density3 &rho);

/// (U_A (x) U_B (x) U_C) |psi>.
PureState3 apply_local_unitaries(const PureState3 &psi, const ComplexMatrix &ua, const ComplexMatrix &ub,
                                 const ComplexMatrix &uc);

/// lambda rho1 + (1 - lambda) rho2.
Density3 mix(double lambda, const Density3 &rho1, const Density3 &rho2);

}  // namespace triqubit
