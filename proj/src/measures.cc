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

#include "triqubit/measures.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "triqubit/error.h"

namespace triqubit {

namespace {

constexpr double kPureNormTol = 1e-10;

double clamp_sqrt(double x) { return std::sqrt(std::clamp(x, 0.0, 1.0)); }

// Tr(rho (sigma_i (x) sigma_j (x) sigma_k)). Pauli strings are monomial: row r
// of the string has its single nonzero in column r ^ flip.
double pauli_string_expectation(const ComplexMatrix &rho, int i, int j, int k) {
    const std::array<int, 3> idx{i, j, k};
    std::size_t flip = 0;
    for (int q = 0; q < 3; ++q) {
        if (idx[q] == 1 || idx[q] == 2) flip |= std::size_t{1} << (2 - q);
    }
    Complex sum = 0.0;
    for (std::size_t r = 0; r < 8; ++r) {
        const std::size_t c = r ^ flip;
        Complex entry = 1.0;  // P(c, r)
        for (int q = 0; q < 3; ++q) {
            const std::size_t shift = static_cast<std::size_t>(2 - q);
            entry *= pauli(idx[q])((c >> shift) & 1U, (r >> shift) & 1U);
        }
        sum += rho(r, c) * entry;
    }
    return sum.real();
}

// det(rho_q) of a pure state through the Lagrange identity
// |u|^2 |v|^2 - |<u,v>|^2 = sum_{j<k} |u_j v_k - u_k v_j|^2, where u and v are
// the branches with qubit q in |0> and |1>. Unlike the 2x2 determinant of the
// marginal this cannot go negative and keeps product states near zero.
double reduced_determinant(const PureState3 &psi, Qubit q) {
    const std::size_t mask = std::size_t{1} << (2 - index_of(q));
    std::array<Complex, 4> u{}, v{};
    std::size_t n = 0;
    for (std::size_t i = 0; i < 8; ++i) {
        if (i & mask) continue;
        u[n] = psi[i];
        v[n] = psi[i | mask];
        ++n;
    }
    double det = 0.0;
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = j + 1; k < 4; ++k) det += std::norm(u[j] * v[k] - u[k] * v[j]);
    }
    return det;
}

PureState3 require_normalized(const PureState3 &psi) {
    double norm = 0.0;
    for (const Complex &a : psi.amplitudes()) norm += std::norm(a);
    if (std::abs(norm - 1.0) > kPureNormTol) {
        throw Error(ErrorCode::NotNormalized, "squared norm " + std::to_string(norm));
    }
    return psi;
}

ResourceRecord measure_impl(const Density3 &rho, const std::optional<PureState3> &known_pure,
                            const StateProvenance &provenance) {
    ResourceRecord rec;
    rec.provenance = provenance;

    for (Cut cut : kCuts) rec.negativity_bi[index_of(cut)] = negativity_bipartite(rho, cut);
    rec.negativity_tri = std::cbrt(rec.negativity_bi[0] * rec.negativity_bi[1] * rec.negativity_bi[2]);

    double coherence_sq = 0.0;
    for (Qubit q : kQubits) {
        const double d = coherence_subsystem(rho, q);
        rec.coherence_sub[index_of(q)] = d;
        coherence_sq += d * d;
    }
    rec.coherence = clamp_sqrt(coherence_sq / 3.0);

    for (Pair p : kPairs) {
        const int i = index_of(p);
        const ComplexMatrix reduced = partial_trace(rho.matrix(), p);
        const auto bloch = bloch_pair_decomposition(reduced);
        rec.steering_pair[i] = steering_from_correlation(bloch.t);
        rec.bell_M_pair[i] = bell_M_from_correlation(bloch.t);
        rec.bell_pair[i] = bell_violation_from_M(rec.bell_M_pair[i]);
        const auto spectrum = hermitian_eigenvalues(reduced, true);
        std::copy(spectrum.begin(), spectrum.end(), rec.pair_spectrum[i].begin());
        rec.pair_purity[i] = purity(reduced);
    }

    rec.steering_max = rec.steering_pair[0];
    rec.steering_argmax = Pair::AB;
    for (Pair p : kPairs) {
        if (rec.steering_pair[index_of(p)] > rec.steering_max) {
            rec.steering_max = rec.steering_pair[index_of(p)];
            rec.steering_argmax = p;
        }
    }
    rec.bell_violation_max = 0.0;
    for (Pair p : kPairs) {
        if (rec.bell_pair[index_of(p)] > rec.bell_violation_max) {
            rec.bell_violation_max = rec.bell_pair[index_of(p)];
            rec.bell_argmax = p;
        }
    }

    if (known_pure) {
        rec.is_pure = true;
        rec.rank = 1;
        rec.gbc = gbc_pure(*known_pure);
    } else {
        const auto eig = hermitian_eigen(rho.matrix(), true);
        rec.rank = static_cast<int>(
            std::count_if(eig.values.begin(), eig.values.end(), [](double v) { return v > 1e-10; }));
        if (eig.values[0] >= 1.0 - kPurityRankTol) {
            PureState3::Amplitudes top;
            for (std::size_t r = 0; r < 8; ++r) top[r] = eig.vectors(r, 0);
            rec.is_pure = true;
            rec.gbc = gbc_pure(PureState3::normalized(top));
        }
    }
    return rec;
}

}  // namespace

ComplexMatrix BlochPairDecomposition::reconstruct() const {
    ComplexMatrix out = kron(pauli(0), pauli(0));
    for (int i = 0; i < 3; ++i) {
        out += a[i] * kron(pauli(i + 1), pauli(0));
        out += b[i] * kron(pauli(0), pauli(i + 1));
        for (int j = 0; j < 3; ++j) out += t[i][j] * kron(pauli(i + 1), pauli(j + 1));
    }
    return 0.25 * out;
}

Vec3 BlochTripleDecomposition::bloch(Qubit q) const {
    Vec3 v{};
    for (int i = 0; i < 3; ++i) {
        switch (q) {
            case Qubit::A: v[i] = coefficients[i + 1][0][0]; break;
            case Qubit::B: v[i] = coefficients[0][i + 1][0]; break;
            case Qubit::C: v[i] = coefficients[0][0][i + 1]; break;
        }
    }
    return v;
}

Mat3 BlochTripleDecomposition::correlation(Pair p) const {
    Mat3 t{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            switch (p) {
                case Pair::AB: t[i][j] = coefficients[i + 1][j + 1][0]; break;
                case Pair::AC: t[i][j] = coefficients[i + 1][0][j + 1]; break;
                case Pair::BC: t[i][j] = coefficients[0][i + 1][j + 1]; break;
            }
        }
    }
    return t;
}

ComplexMatrix BlochTripleDecomposition::reconstruct() const {
    ComplexMatrix out(8);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) {
                const double w = coefficients[i][j][k];
                if (w == 0.0) continue;
                out += w * kron(pauli(i), kron(pauli(j), pauli(k)));
            }
        }
    }
    return 0.125 * out;
}

BlochTripleDecomposition bloch_triple_decomposition(const Density3 &rho) {
    BlochTripleDecomposition d;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            for (int k = 0; k < 4; ++k) d.coefficients[i][j][k] = pauli_string_expectation(rho.matrix(), i, j, k);
        }
    }
    return d;
}

BlochPairDecomposition bloch_pair_decomposition(const ComplexMatrix &rho_pair) {
    if (rho_pair.dim() != 4) throw Error(ErrorCode::NonSquare, "pair state must be 4x4");
    BlochPairDecomposition d;
    for (int i = 0; i < 3; ++i) {
        d.a[i] = trace_product_real(rho_pair, kron(pauli(i + 1), pauli(0)));
        d.b[i] = trace_product_real(rho_pair, kron(pauli(0), pauli(i + 1)));
        for (int j = 0; j < 3; ++j) d.t[i][j] = trace_product_real(rho_pair, kron(pauli(i + 1), pauli(j + 1)));
    }
    return d;
}

BlochPairDecomposition bloch_pair_decomposition(const Density3 &rho, Pair pair) {
    return bloch_pair_decomposition(partial_trace(rho.matrix(), pair));
}

double negativity_bipartite(const Density3 &rho, Cut cut) {
    const auto values = hermitian_eigenvalues(partial_transpose(rho.matrix(), single_side(cut)), true);
    double negative = 0.0;
    for (double v : values) {
        if (v <= -kNegativityCutoff) negative += v;
    }
    return negative < 0.0 ? -2.0 * negative : 0.0;
}

double negativity_tripartite(const Density3 &rho) {
    double product = 1.0;
    for (Cut cut : kCuts) product *= negativity_bipartite(rho, cut);
    return std::cbrt(product);
}

double negativity_pure(const PureState3 &psi) {
    require_normalized(psi);
    double product = 1.0;
    for (Qubit q : kQubits) product *= reduced_determinant(psi, q);
    return 2.0 * std::pow(product, 1.0 / 6.0);
}

double concurrence_bipartition(const PureState3 &psi, Cut cut) {
    // 2 (1 - Tr rho_I^2) equals 4 det rho_I for a qubit marginal.
    require_normalized(psi);
    return clamp_sqrt(4.0 * reduced_determinant(psi, single_side(cut)));
}

double gbc_pure(const PureState3 &psi) {
    double product = 1.0;
    for (Cut cut : kCuts) product *= concurrence_bipartition(psi, cut);
    return std::cbrt(product);
}

long long bipartition_cardinality(int n) {
    if (n < 2) throw Error(ErrorCode::BadN, "need at least two parties, got " + std::to_string(n));
    if (n > 62) throw Error(ErrorCode::BadN, "party count " + std::to_string(n) + " overflows");
    auto binomial = [](int top, int k) {
        long long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (top - k + i) / i;
        return r;
    };
    long long total = 0;
    if (n % 2 == 1) {
        for (int m = 1; m <= (n - 1) / 2; ++m) total += binomial(n, m);
    } else {
        for (int m = 1; m <= (n - 2) / 2; ++m) total += binomial(n, m);
        total += binomial(n, n / 2) / 2;
    }
    return total;
}

double coherence_subsystem(const Density3 &rho, Qubit sub) {
    // 2 Tr(rho_i^2) - 1 is the squared Bloch length. Summing its components
    // directly avoids the cancellation near maximally mixed marginals.
    const ComplexMatrix m = partial_trace(rho.matrix(), sub);
    const double z = m(0, 0).real() - m(1, 1).real();
    return clamp_sqrt(z * z + 4.0 * std::norm(m(0, 1)));
}

double coherence_tripartite(const Density3 &rho) {
    double sum = 0.0;
    for (Qubit q : kQubits) {
        const double d = coherence_subsystem(rho, q);
        sum += d * d;
    }
    return clamp_sqrt(sum / 3.0);
}

double coherence_pair(const Density3 &rho, Pair pair) {
    const auto [first, second] = qubits_of(pair);
    const double d1 = coherence_subsystem(rho, first);
    const double d2 = coherence_subsystem(rho, second);
    return clamp_sqrt((d1 * d1 + d2 * d2) / 2.0);
}

double steering_from_correlation(const Mat3 &t) {
    double sum = 0.0;
    for (const auto &row : t) {
        for (double x : row) sum += x * x;
    }
    return sum - 1.0;
}

double steering_violation_pair(const Density3 &rho, Pair pair) {
    return steering_from_correlation(bloch_pair_decomposition(rho, pair).t);
}

PairMaximum steering_violation_max(const Density3 &rho) {
    PairMaximum best{steering_violation_pair(rho, Pair::AB), Pair::AB};
    for (Pair p : {Pair::AC, Pair::BC}) {
        const double s = steering_violation_pair(rho, p);
        if (s > best.value) best = {s, p};
    }
    return best;
}

double bell_M_from_correlation(const Mat3 &t) {
    ComplexMatrix ttt(3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double sum = 0.0;
            for (int k = 0; k < 3; ++k) sum += t[k][i] * t[k][j];
            ttt(i, j) = sum;
        }
    }
    const auto values = hermitian_eigenvalues(ttt);
    return std::max(0.0, values[0] + values[1]);
}

double bell_M_pair(const Density3 &rho, Pair pair) {
    return bell_M_from_correlation(bloch_pair_decomposition(rho, pair).t);
}

double bell_violation_from_M(double m) {
    const double excess = m - 1.0;
    return excess > kBellFloor ? excess : 0.0;
}

double bell_violation_pair(const Density3 &rho, Pair pair) { return bell_violation_from_M(bell_M_pair(rho, pair)); }

BellMaximum bell_violation_max(const Density3 &rho) {
    BellMaximum best;
    for (Pair p : kPairs) {
        const double b = bell_violation_pair(rho, p);
        if (b > best.value) {
            best.value = b;
            best.argmax = p;
        }
    }
    return best;
}

double purity_identities_check(const Density3 &rho) {
    const auto bloch = bloch_triple_decomposition(rho);
    auto norm_sq = [](const Vec3 &v) { return v[0] * v[0] + v[1] * v[1] + v[2] * v[2]; };

    double worst = 0.0;
    for (Qubit q : kQubits) {
        const double measured = purity(partial_trace(rho.matrix(), q));
        const double predicted = (1.0 + norm_sq(bloch.bloch(q))) / 2.0;
        worst = std::max(worst, std::abs(measured - predicted));
    }
    for (Pair p : kPairs) {
        const auto [first, second] = qubits_of(p);
        const double measured = purity(partial_trace(rho.matrix(), p));
        const double predicted = (2.0 + norm_sq(bloch.bloch(first)) + norm_sq(bloch.bloch(second)) +
                                  steering_from_correlation(bloch.correlation(p))) /
                                 4.0;
        worst = std::max(worst, std::abs(measured - predicted));
    }
    return worst;
}

std::optional<PureState3> extract_pure(const Density3 &rho) {
    const auto eig = hermitian_eigen(rho.matrix(), true);
    if (eig.values[0] < 1.0 - kPurityRankTol) return std::nullopt;
    PureState3::Amplitudes top;
    for (std::size_t r = 0; r < 8; ++r) top[r] = eig.vectors(r, 0);
    return PureState3::normalized(top);
}

ResourceRecord measure(const Density3 &rho, const StateProvenance &provenance) {
    return measure_impl(rho, std::nullopt, provenance);
}

ResourceRecord measure(const PureState3 &psi, const StateProvenance &provenance) {
    return measure_impl(psi.density(), psi, provenance);
}

}  // namespace triqubit
