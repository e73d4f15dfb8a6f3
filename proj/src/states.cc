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

#include "triqubit/states.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "triqubit/error.h"

namespace triqubit {

namespace {

constexpr double kRankCutoff = 1e-10;
constexpr double kNegligibleWeight = 1e-15;

Complex standard_complex_gaussian(SeededRng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

// Orthonormalizes the columns of a rows x cols row-major matrix in place
// (modified Gram-Schmidt). Column norms before normalization are positive
// with probability one for Gaussian input.
void orthonormalize_columns(std::vector<Complex> &m, std::size_t rows, std::size_t cols) {
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            Complex dot = 0.0;
            for (std::size_t i = 0; i < rows; ++i) dot += std::conj(m[i * cols + k]) * m[i * cols + j];
            for (std::size_t i = 0; i < rows; ++i) m[i * cols + j] -= dot * m[i * cols + k];
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < rows; ++i) norm += std::norm(m[i * cols + j]);
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < rows; ++i) m[i * cols + j] /= norm;
    }
}

}  // namespace

PureState3 PureState3::from_amplitudes(const Amplitudes &amplitudes) {
    double norm = 0.0;
    for (const Complex &a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::NonFinite, "amplitude is not finite");
        }
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > kNormTol) {
        throw Error(ErrorCode::NotNormalized, "squared norm " + std::to_string(norm) + " differs from 1");
    }
    return PureState3(amplitudes);
}

PureState3 PureState3::normalized(const Amplitudes &amplitudes) {
    double norm = 0.0;
    for (const Complex &a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::NonFinite, "amplitude is not finite");
        }
        norm += std::norm(a);
    }
    if (norm == 0.0) throw Error(ErrorCode::NotNormalized, "zero vector");
    const double scale = 1.0 / std::sqrt(norm);
    Amplitudes out;
    for (std::size_t i = 0; i < 8; ++i) out[i] = amplitudes[i] * scale;
    return PureState3(out);
}

ComplexMatrix PureState3::projector() const { return ComplexMatrix::outer(amplitudes_); }

Density3 PureState3::density() const { return Density3(projector(), 1); }

Density3 Density3::from_matrix(const ComplexMatrix &matrix, std::optional<int> rank_hint) {
    if (matrix.dim() != 8) {
        throw Error(ErrorCode::InvalidState, "density matrix must be 8x8, got " + std::to_string(matrix.dim()));
    }
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            if (!std::isfinite(matrix(r, c).real()) || !std::isfinite(matrix(r, c).imag())) {
                throw Error(ErrorCode::InvalidState, "non-finite entry");
            }
        }
    }
    const double defect = matrix.hermiticity_defect();
    if (defect > kDensityTol) {
        throw Error(ErrorCode::InvalidState, "not Hermitian: ||rho - rho^dag||_max = " + std::to_string(defect));
    }
    const Complex tr = matrix.trace();
    if (std::abs(tr - 1.0) > kDensityTol) {
        throw Error(ErrorCode::InvalidState, "trace " + std::to_string(tr.real()) + " differs from 1");
    }
    const auto values = hermitian_eigenvalues(matrix, true);
    if (values.back() < -kDensityTol) {
        throw Error(ErrorCode::InvalidState,
                    "not positive semidefinite: smallest eigenvalue " + std::to_string(values.back()));
    }
    if (rank_hint && (*rank_hint < 1 || *rank_hint > 8)) {
        throw Error(ErrorCode::BadRank, "rank hint " + std::to_string(*rank_hint) + " outside 1..8");
    }
    return Density3(matrix, rank_hint);
}

std::string_view name_of(StateKind kind) {
    switch (kind) {
        case StateKind::HaarPure: return "haar_pure";
        case StateKind::GinibreMixed: return "ginibre_mixed";
        case StateKind::FamilyAlpha: return "family_alpha";
        case StateKind::FamilyM: return "family_m";
        case StateKind::Canonical: return "canonical";
        case StateKind::File: return "file";
    }
    return "file";
}

std::optional<StateKind> parse_state_kind(std::string_view s) {
    for (StateKind k : {StateKind::HaarPure, StateKind::GinibreMixed, StateKind::FamilyAlpha, StateKind::FamilyM,
                        StateKind::Canonical, StateKind::File}) {
        if (name_of(k) == s) return k;
    }
    return std::nullopt;
}

PureState3 psi_alpha(double alpha) {
    if (!std::isfinite(alpha)) throw Error(ErrorCode::NonFinite, "alpha is not finite");
    PureState3::Amplitudes a{};
    a[0] = std::cos(alpha);
    a[7] = std::sin(alpha);
    return PureState3::normalized(a);
}

PureState3 psi_m(double m) {
    if (!(m >= 0.0 && m <= 1.0)) throw Error(ErrorCode::OutOfRange, "m = " + std::to_string(m) + " outside [0, 1]");
    const double scale = 1.0 / std::sqrt(2.0 + 2.0 * m * m);
    PureState3::Amplitudes a{};
    a[0b000] = scale;
    a[0b010] = m * scale;
    a[0b101] = m * scale;
    a[0b111] = scale;
    return PureState3::normalized(a);
}

PureState3 canonical(CanonicalState name) {
    PureState3::Amplitudes a{};
    switch (name) {
        case CanonicalState::Ghz:
            a[0b000] = 1.0 / std::sqrt(2.0);
            a[0b111] = 1.0 / std::sqrt(2.0);
            break;
        case CanonicalState::W:
            a[0b001] = 1.0 / std::sqrt(3.0);
            a[0b010] = 1.0 / std::sqrt(3.0);
            a[0b100] = 1.0 / std::sqrt(3.0);
            break;
        case CanonicalState::Product000:
            a[0b000] = 1.0;
            break;
    }
    return PureState3::normalized(a);
}

PureState3 canonical(std::string_view name) {
    if (name == "ghz") return canonical(CanonicalState::Ghz);
    if (name == "w") return canonical(CanonicalState::W);
    if (name == "product000") return canonical(CanonicalState::Product000);
    throw Error(ErrorCode::UnknownName, "unknown canonical state '" + std::string(name) + "'");
}

PureState3 sample_haar_pure(SeededRng &rng) {
    PureState3::Amplitudes a;
    for (Complex &x : a) x = standard_complex_gaussian(rng);
    return PureState3::normalized(a);
}

Density3 sample_ginibre_mixed(int rank, SeededRng &rng) {
    if (rank < 1 || rank > 8) throw Error(ErrorCode::BadRank, "rank " + std::to_string(rank) + " outside 1..8");
    const auto cols = static_cast<std::size_t>(rank);
    std::vector<Complex> g(8 * cols);
    for (Complex &x : g) x = standard_complex_gaussian(rng);

    ComplexMatrix rho(8);
    double trace = 0.0;
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = r; c < 8; ++c) {
            Complex sum = 0.0;
            for (std::size_t k = 0; k < cols; ++k) sum += g[r * cols + k] * std::conj(g[c * cols + k]);
            rho(r, c) = sum;
        }
        rho(r, r) = Complex(rho(r, r).real(), 0.0);
        trace += rho(r, r).real();
    }
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = r; c < 8; ++c) {
            rho(r, c) /= trace;
            rho(c, r) = std::conj(rho(r, c));
        }
    }
    return Density3::from_matrix(rho, rank);
}

ComplexMatrix sample_haar_unitary(std::size_t dim, SeededRng &rng) {
    std::vector<Complex> g(dim * dim);
    for (Complex &x : g) x = standard_complex_gaussian(rng);
    orthonormalize_columns(g, dim, dim);
    return ComplexMatrix::from_row_major(g);
}

int numerical_rank(const Density3 &rho) {
    const auto values = hermitian_eigenvalues(rho.matrix(), true);
    return static_cast<int>(std::count_if(values.begin(), values.end(), [](double v) { return v > kRankCutoff; }));
}

std::vector<Decomposition> random_decompositions(const Density3 &rho, int count, int size, SeededRng &rng) {
    if (count < 1) throw Error(ErrorCode::OutOfRange, "decomposition count must be >= 1");
    const auto eig = hermitian_eigen(rho.matrix(), true);
    std::size_t rank = 0;
    while (rank < 8 && eig.values[rank] > kRankCutoff) ++rank;
    if (size < 1 || static_cast<std::size_t>(size) < rank) {
        throw Error(ErrorCode::SizeTooSmall,
                    "decomposition size " + std::to_string(size) + " below rank " + std::to_string(rank));
    }
    const auto n = static_cast<std::size_t>(size);

    // Subnormalized eigenvectors sqrt(lambda_k) e_k.
    std::vector<PureState3::Amplitudes> scaled(rank);
    for (std::size_t k = 0; k < rank; ++k) {
        const double w = std::sqrt(eig.values[k]);
        for (std::size_t i = 0; i < 8; ++i) scaled[k][i] = w * eig.vectors(i, k);
    }

    std::vector<Decomposition> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<Complex> iso(n * rank);
    for (int d = 0; d < count; ++d) {
        for (Complex &x : iso) x = standard_complex_gaussian(rng);
        orthonormalize_columns(iso, n, rank);

        Decomposition dec;
        for (std::size_t i = 0; i < n; ++i) {
            PureState3::Amplitudes phi{};
            for (std::size_t k = 0; k < rank; ++k) {
                const Complex u = iso[i * rank + k];
                for (std::size_t j = 0; j < 8; ++j) phi[j] += u * scaled[k][j];
            }
            double weight = 0.0;
            for (const Complex &x : phi) weight += std::norm(x);
            if (weight < kNegligibleWeight) continue;
            dec.weights.push_back(weight);
            dec.states.push_back(PureState3::normalized(phi));
        }
        out.push_back(std::move(dec));
    }
    return out;
}

PureState3 apply_local_unitaries(const PureState3 &psi, const ComplexMatrix &ua, const ComplexMatrix &ub,
                                 const ComplexMatrix &uc) {
    const ComplexMatrix u = kron(ua, kron(ub, uc));
    PureState3::Amplitudes out{};
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) out[r] += u(r, c) * psi[c];
    }
    return PureState3::normalized(out);
}

Density3 mix(double lambda, const Density3 &rho1, const Density3 &rho2) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw Error(ErrorCode::OutOfRange, "mixing weight outside [0, 1]");
    return Density3::from_matrix(lambda * rho1.matrix() + (1.0 - lambda) * rho2.matrix());
}

}  // namespace triqubit
