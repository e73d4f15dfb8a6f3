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

#include "triqubit/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "triqubit/error.h"

namespace triqubit {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeOffDiagonalTol = 1e-14;
constexpr double kHermitianTol = 1e-8;
constexpr double kTraceTol = 1e-8;

// Bit position of a qubit inside a basis index |abc> = 4a + 2b + c.
constexpr int bit_of(Qubit q) { return 2 - index_of(q); }

void require_dim(std::size_t dim) {
    if (dim == 0 || dim > kMaxDim) {
        throw Error(ErrorCode::NonSquare, "matrix dimension " + std::to_string(dim) + " outside 1..8");
    }
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double sum = 0.0;
    const std::size_t n = a.dim();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (r != c) sum += std::norm(a(r, c));
        }
    }
    return std::sqrt(sum);
}

template <bool WithVectors>
HermitianEigenResult jacobi(const ComplexMatrix &m, bool symmetrize) {
    const std::size_t n = m.dim();
    require_dim(n);
    const double defect = m.hermiticity_defect();
    if (!symmetrize && defect > kHermitianTol) {
        throw Error(ErrorCode::NotHermitian, "||M - M^dag||_max = " + std::to_string(defect));
    }

    // Work on the Hermitian part; for an exactly Hermitian input this is a copy.
    ComplexMatrix a(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
        a(r, r) = Complex(a(r, r).real(), 0.0);
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double threshold = kRelativeOffDiagonalTol * a.frobenius_norm();
    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (++sweep > kMaxSweeps) {
            throw Error(ErrorCode::NoConvergence, "Jacobi iteration exceeded " + std::to_string(kMaxSweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) continue;
                const Complex phase = std::conj(apq) / mag;  // e^{-i phi}
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                // J acts on columns p, q: [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
                const Complex jpp = c;
                const Complex jpq = s;
                const Complex jqp = -s * phase;
                const Complex jqq = c * phase;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = Complex(a(p, p).real(), 0.0);
                a(q, q) = Complex(a(q, q).real(), 0.0);

                if constexpr (WithVectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const Complex vkp = v(k, p);
                        const Complex vkq = v(k, q);
                        v(k, p) = vkp * jpp + vkq * jqp;
                        v(k, q) = vkp * jpq + vkq * jqq;
                    }
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    HermitianEigenResult result;
    result.values.reserve(n);
    for (std::size_t k : order) result.values.push_back(a(k, k).real());
    if constexpr (WithVectors) {
        result.vectors = ComplexMatrix(n);
        for (std::size_t col = 0; col < n; ++col) {
            for (std::size_t r = 0; r < n; ++r) result.vectors(r, col) = v(r, order[col]);
        }
    }
    return result;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { require_dim(dim); }

ComplexMatrix ComplexMatrix::from_row_major(std::span<const Complex> entries) {
    const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
    if (dim * dim != entries.size()) {
        throw Error(ErrorCode::NonSquare, std::to_string(entries.size()) + " entries do not form a square matrix");
    }
    ComplexMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = entries[r * dim + c];
    }
    return m;
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) m(k, k) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) m(k, k) = values[k];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size());
    for (std::size_t r = 0; r < v.size(); ++r) {
        for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = v[r] * std::conj(v[c]);
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(c, r));
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) out(r, c) = (*this)(c, r);
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t k = 0; k < dim_; ++k) t += (*this)(k, k);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) sum += std::norm((*this)(r, c));
    }
    return std::sqrt(sum);
}

double ComplexMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

std::vector<Complex> ComplexMatrix::row_major() const {
    std::vector<Complex> out;
    out.reserve(dim_ * dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) out.push_back((*this)(r, c));
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) += rhs(r, c);
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) -= rhs(r, c);
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) (*this)(r, c) *= s;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    const std::size_t n = lhs.dim();
    ComplexMatrix out(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex l = lhs(r, k);
            if (l == Complex{}) continue;
            for (std::size_t c = 0; c < n; ++c) out(r, c) += l * rhs(k, c);
        }
    }
    return out;
}

bool ComplexMatrix::operator==(const ComplexMatrix &rhs) const {
    if (dim_ != rhs.dim_) return false;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            if ((*this)(r, c) != rhs(r, c)) return false;
        }
    }
    return true;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::NonSquare, "dimension mismatch in max_abs_diff");
    double worst = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    }
    return worst;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t ar = 0; ar < na; ++ar) {
        for (std::size_t ac = 0; ac < na; ++ac) {
            for (std::size_t br = 0; br < nb; ++br) {
                for (std::size_t bc = 0; bc < nb; ++bc) out(ar * nb + br, ac * nb + bc) = a(ar, ac) * b(br, bc);
            }
        }
    }
    return out;
}

HermitianEigenResult hermitian_eigen(const ComplexMatrix &m, bool symmetrize) {
    return jacobi<true>(m, symmetrize);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, bool symmetrize) {
    return jacobi<false>(m, symmetrize).values;
}

ComplexMatrix partial_transpose(const ComplexMatrix &rho, Qubit sub) {
    if (rho.dim() != 8) throw Error(ErrorCode::NonSquare, "partial transpose needs an 8x8 matrix");
    const std::size_t mask = std::size_t{1} << bit_of(sub);
    ComplexMatrix out(8);
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            const std::size_t src_r = (r & ~mask) | (c & mask);
            const std::size_t src_c = (c & ~mask) | (r & mask);
            out(r, c) = rho(src_r, src_c);
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::span<const Qubit> keep) {
    if (rho.dim() != 8) throw Error(ErrorCode::NonSquare, "partial trace needs an 8x8 matrix");
    if (keep.empty() || keep.size() > 2 || (keep.size() == 2 && keep[0] == keep[1])) {
        throw Error(ErrorCode::InvalidLabel, "keep must name one or two distinct qubits");
    }
    std::array<Qubit, 2> kept{keep[0], keep.size() == 2 ? keep[1] : keep[0]};
    if (keep.size() == 2 && index_of(kept[0]) > index_of(kept[1])) std::swap(kept[0], kept[1]);
    const std::size_t nkeep = keep.size();

    std::array<int, 3> traced{};
    std::size_t ntraced = 0;
    for (Qubit q : kQubits) {
        if (q != kept[0] && !(nkeep == 2 && q == kept[1])) traced[ntraced++] = bit_of(q);
    }

    // Maps a local index over the kept qubits onto its bits in the full index.
    auto scatter = [&](std::size_t local) {
        std::size_t full = 0;
        for (std::size_t k = 0; k < nkeep; ++k) {
            const std::size_t bit = (local >> (nkeep - 1 - k)) & 1U;
            full |= bit << bit_of(kept[k]);
        }
        return full;
    };

    const std::size_t dim = std::size_t{1} << nkeep;
    ComplexMatrix out(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            Complex sum = 0.0;
            for (std::size_t env = 0; env < (std::size_t{1} << ntraced); ++env) {
                std::size_t env_bits = 0;
                for (std::size_t k = 0; k < ntraced; ++k) env_bits |= ((env >> k) & 1U) << traced[k];
                sum += rho(scatter(r) | env_bits, scatter(c) | env_bits);
            }
            out(r, c) = sum;
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, Qubit keep) {
    const std::array<Qubit, 1> k{keep};
    return partial_trace(rho, k);
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, Pair keep) {
    const auto k = qubits_of(keep);
    return partial_trace(rho, k);
}

double purity(const ComplexMatrix &m) {
    const Complex tr = m.trace();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw Error(ErrorCode::NotDensityLike, "trace " + std::to_string(tr.real()) + " deviates from 1");
    }
    double sum = 0.0;
    const std::size_t n = m.dim();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) sum += (m(r, c) * m(c, r)).real();
    }
    return std::clamp(sum, 0.0, 1.0);
}

const ComplexMatrix &pauli(int index) {
    static const std::array<ComplexMatrix, 4> matrices = [] {
        std::array<ComplexMatrix, 4> p{ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2), ComplexMatrix(2)};
        p[0](0, 0) = 1.0;
        p[0](1, 1) = 1.0;
        p[1](0, 1) = 1.0;
        p[1](1, 0) = 1.0;
        p[2](0, 1) = Complex(0.0, -1.0);
        p[2](1, 0) = Complex(0.0, 1.0);
        p[3](0, 0) = 1.0;
        p[3](1, 1) = -1.0;
        return p;
    }();
    return matrices.at(static_cast<std::size_t>(index));
}

double trace_product_real(const ComplexMatrix &m, const ComplexMatrix &p) {
    double sum = 0.0;
    const std::size_t n = m.dim();
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) sum += (m(r, c) * p(c, r)).real();
    }
    return sum;
}

}  // namespace triqubit
