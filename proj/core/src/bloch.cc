// Copyright 2026 The cvmap Authors
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

#include "cvmap/bloch.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cvmap {

namespace {

std::size_t ipow(std::size_t base, int exponent) {
    std::size_t r = 1;
    for (int k = 0; k < exponent; ++k) {
        r *= base;
    }
    return r;
}

// Number of identity slots in a multi-index.
int identity_slots(std::span<const int> index) {
    return static_cast<int>(std::count(index.begin(), index.end(), 0));
}

double slot_normalization(int n, int parties, int zeros) {
    return std::pow(static_cast<double>(n), zeros) * std::pow(2.0, parties - zeros);
}

std::vector<ComplexMatrix> dense_basis(const GeneratorSet &gens) {
    std::vector<ComplexMatrix> basis;
    basis.push_back(ComplexMatrix::identity(static_cast<std::size_t>(gens.n())));
    for (const auto &g : gens.generators()) {
        basis.push_back(g);
    }
    return basis;
}

template <class Basis>
auto kron_chain(const std::vector<Basis> &basis, std::span<const int> index) {
    auto out = basis[static_cast<std::size_t>(index[0])];
    for (std::size_t p = 1; p < index.size(); ++p) {
        out = kron(out, basis[static_cast<std::size_t>(index[p])]);
    }
    return out;
}

std::vector<SparseMatrix> sparse_basis(const EmbeddedGeneratorSet &eg) {
    std::vector<SparseMatrix> basis;
    basis.push_back(used_subspace_projector(eg.ambient_dim(), eg.n()));
    for (const auto &g : eg.generators()) {
        basis.push_back(g);
    }
    return basis;
}

// sum over full-correlation slots of coeffs[x] S_{x1} (x) ... (x) S_{xL}.
SparseMatrix lift_coefficients(const BlochTensor &shape, std::span<const double> coeffs,
                               const EmbeddedGeneratorSet &eg) {
    const auto basis = sparse_basis(eg);
    const std::size_t dim = ipow(static_cast<std::size_t>(eg.ambient_dim()), shape.parties());
    std::vector<SparseEntry> entries;
    for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
        const double a = coeffs[flat];
        if (a == 0.0) {
            continue;
        }
        const auto index = shape.multi_index(flat);
        if (identity_slots(index) > 0) {
            continue;
        }
        const SparseMatrix term = kron_chain(basis, index);
        for (const auto &e : term.entries()) {
            entries.push_back({e.row, e.col, a * e.value});
        }
    }
    return accumulate(dim, std::move(entries));
}

template <class Expect>
InducedState induce(int N, int n, int parties, double total_weight, Expect expect) {
    const auto eg = build_embedded(N, n);
    const auto basis = sparse_basis(eg);
    const std::size_t count = ipow(static_cast<std::size_t>(n) * n, parties);
    std::vector<double> coeffs(count);
    const BlochTensor shape = BlochTensor::zeros(n, parties, TensorKind::kState);
    double inside_weight = 0;
    for (std::size_t flat = 0; flat < count; ++flat) {
        const auto index = shape.multi_index(flat);
        const Complex value = expect(kron_chain(basis, index));
        if (std::abs(value.imag()) >= kExpectationTol) {
            throw NumericalError("induced_qudit_state: imaginary residue " + std::to_string(value.imag()));
        }
        if (flat == 0) {
            inside_weight = value.real();
        }
        coeffs[flat] = value.real() / slot_normalization(n, parties, identity_slots(index));
    }
    BlochTensor t(n, parties, TensorKind::kState, std::move(coeffs));
    ComplexMatrix rho = reconstruct(t, eg.qudit());
    const double lowest = min_eigenvalue(rho);
    const double outside = std::max(0.0, total_weight - inside_weight);
    std::optional<std::string> warning;
    if (outside > kOutsideWeightWarning) {
        warning = "state has weight " + std::to_string(outside) +
                  " outside the used subspace; induced state is not renormalized";
    }
    return InducedState{std::move(rho), std::move(t), lowest, outside, std::move(warning)};
}

}  // namespace

// ---------------------------------------------------------------------------
// BlochTensor

BlochTensor::BlochTensor(int n, int parties, TensorKind kind, std::vector<double> coeffs)
    : n_(n), parties_(parties), kind_(kind), coeffs_(std::move(coeffs)) {
    require(n >= 2, "BlochTensor: n must be >= 2");
    require(parties >= 1, "BlochTensor: parties must be >= 1");
    require(coeffs_.size() == ipow(static_cast<std::size_t>(n) * n, parties),
            "BlochTensor: coefficient count must be (n^2)^parties");
    for (double c : coeffs_) {
        require(std::isfinite(c), "BlochTensor: coefficients must be finite");
    }
}

BlochTensor BlochTensor::zeros(int n, int parties, TensorKind kind) {
    require(n >= 2 && parties >= 1, "BlochTensor::zeros: require n >= 2, parties >= 1");
    return BlochTensor(n, parties, kind, std::vector<double>(ipow(static_cast<std::size_t>(n) * n, parties)));
}

std::size_t BlochTensor::flat_index(std::span<const int> index) const {
    require(index.size() == static_cast<std::size_t>(parties_), "BlochTensor: index arity must equal parties");
    const int range = n_ * n_;
    std::size_t flat = 0;
    for (int x : index) {
        require(x >= 0 && x < range, "BlochTensor: index component outside 0..n^2-1");
        flat = flat * static_cast<std::size_t>(range) + static_cast<std::size_t>(x);
    }
    return flat;
}

std::vector<int> BlochTensor::multi_index(std::size_t flat) const {
    const auto range = static_cast<std::size_t>(n_ * n_);
    std::vector<int> index(static_cast<std::size_t>(parties_));
    for (auto it = index.rbegin(); it != index.rend(); ++it) {
        *it = static_cast<int>(flat % range);
        flat /= range;
    }
    return index;
}

double BlochTensor::at(std::span<const int> index) const {
    return coeffs_[flat_index(index)];
}

bool BlochTensor::has_identity_components(double tol) const {
    for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
        if (std::abs(coeffs_[flat]) > tol && identity_slots(multi_index(flat)) > 0) {
            return true;
        }
    }
    return false;
}

BlochTensor BlochTensor::with(std::span<const int> index, double value) const {
    std::vector<double> c(coeffs_);
    c[flat_index(index)] = value;
    return BlochTensor(n_, parties_, kind_, std::move(c));
}

// ---------------------------------------------------------------------------
// Decomposition

BlochTensor decompose(const ComplexMatrix &op, const GeneratorSet &gens, int parties, TensorKind kind) {
    const int n = gens.n();
    require(parties >= 1, "decompose: parties must be >= 1");
    require(op.dim() == ipow(static_cast<std::size_t>(n), parties), "decompose: operator dimension must be n^L");
    require(op.is_hermitian(), "decompose: operator is not Hermitian");
    if (kind == TensorKind::kState) {
        require(std::abs(op.trace() - 1.0) < kExpectationTol, "decompose: state must have unit trace");
    }
    const auto basis = dense_basis(gens);
    BlochTensor shape = BlochTensor::zeros(n, parties, kind);
    std::vector<double> coeffs(shape.size());
    for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
        const auto index = shape.multi_index(flat);
        const Complex value = trace_product(op, kron_chain(basis, index));
        if (std::abs(value.imag()) >= kExpectationTol) {
            throw NumericalError("decompose: imaginary residue " + std::to_string(value.imag()));
        }
        coeffs[flat] = value.real() / slot_normalization(n, parties, identity_slots(index));
    }
    return BlochTensor(n, parties, kind, std::move(coeffs));
}

BlochTensor decompose(const ComplexMatrix &op, int n, int parties, TensorKind kind) {
    return decompose(op, build_generators(n), parties, kind);
}

ComplexMatrix reconstruct(const BlochTensor &t, const GeneratorSet &gens) {
    require(t.n() == gens.n(), "reconstruct: generator set dimension mismatch");
    const auto basis = dense_basis(gens);
    const std::size_t dim = ipow(static_cast<std::size_t>(t.n()), t.parties());
    std::vector<Complex> sum(dim * dim);
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const double c = t.coeffs()[flat];
        if (c == 0.0) {
            continue;
        }
        const ComplexMatrix term = kron_chain(basis, t.multi_index(flat));
        for (std::size_t k = 0; k < sum.size(); ++k) {
            sum[k] += c * term.data()[k];
        }
    }
    return ComplexMatrix(dim, std::move(sum));
}

ComplexMatrix reconstruct(const BlochTensor &t) {
    return reconstruct(t, build_generators(t.n()));
}

double bloch_expectation(const BlochTensor &state, const BlochTensor &obs) {
    require(state.n() == obs.n() && state.parties() == obs.parties(), "bloch_expectation: mismatched n or parties");
    require(state.kind() == TensorKind::kState, "bloch_expectation: first argument must be a state tensor");
    require(obs.kind() == TensorKind::kObservable, "bloch_expectation: second argument must be an observable tensor");
    double sum = 0;
    for (std::size_t flat = 0; flat < state.size(); ++flat) {
        if (identity_slots(state.multi_index(flat)) == 0) {
            sum += state.coeffs()[flat] * obs.coeffs()[flat];
        }
    }
    return std::pow(2.0, state.parties()) * sum;
}

SparseMatrix lift_observable(const BlochTensor &obs, const EmbeddedGeneratorSet &embedded) {
    require(obs.kind() == TensorKind::kObservable, "lift_observable: observable tensor required");
    require(obs.n() == embedded.n(), "lift_observable: qudit dimension mismatch");
    require(!obs.has_identity_components(), "lift_observable: identity-slot components cannot be lifted");
    return lift_coefficients(obs, obs.coeffs(), embedded);
}

// ---------------------------------------------------------------------------
// Classes of N-dimensional states

ClassCoefficients::ClassCoefficients(int n, int parties, int ambient_dim, std::vector<double> values)
    : n_(n), parties_(parties), N_(ambient_dim), values_(std::move(values)) {
    require(n >= 2 && n <= ambient_dim, "ClassCoefficients: require 2 <= n <= N");
    require(parties >= 1, "ClassCoefficients: parties must be >= 1");
    require(values_.size() == ipow(static_cast<std::size_t>(n) * n, parties),
            "ClassCoefficients: value count must be (n^2)^parties");
}

ClassCoefficients class_coefficients(const BlochTensor &state, int N) {
    require(state.kind() == TensorKind::kState, "class_coefficients: state tensor required");
    require(N >= state.n(), "class_coefficients: N must be >= n");
    const double scale = std::pow(static_cast<double>(N / state.n()), state.parties());
    std::vector<double> T(state.size());
    for (std::size_t flat = 0; flat < T.size(); ++flat) {
        if (identity_slots(state.multi_index(flat)) == 0) {
            T[flat] = state.coeffs()[flat] / scale;
        }
    }
    return ClassCoefficients(state.n(), state.parties(), N, std::move(T));
}

double class_expectation(const ClassCoefficients &T, const BlochTensor &obs) {
    require(T.n() == obs.n() && T.parties() == obs.parties(), "class_expectation: mismatched n or parties");
    require(obs.kind() == TensorKind::kObservable, "class_expectation: observable tensor required");
    double sum = 0;
    for (std::size_t flat = 0; flat < obs.size(); ++flat) {
        if (identity_slots(obs.multi_index(flat)) == 0) {
            sum += T.values()[flat] * obs.coeffs()[flat];
        }
    }
    return std::pow(2.0 * T.blocks(), T.parties()) * sum;
}

SparseMatrix class_operator(const ClassCoefficients &T, const EmbeddedGeneratorSet &embedded) {
    require(T.n() == embedded.n() && T.ambient_dim() == embedded.ambient_dim(),
            "class_operator: embedding does not match the class coefficients");
    return lift_coefficients(BlochTensor::zeros(T.n(), T.parties(), TensorKind::kState), T.values(), embedded);
}

ComplexMatrix block_class_member(const ComplexMatrix &rho, int n, int parties, int N, std::span<const double> weights) {
    require(n >= 2 && n <= N && parties >= 1, "block_class_member: require 2 <= n <= N, parties >= 1");
    const std::size_t small = ipow(static_cast<std::size_t>(n), parties);
    const std::size_t big = ipow(static_cast<std::size_t>(N), parties);
    require(rho.dim() == small, "block_class_member: rho dimension must be n^L");
    require(weights.size() == static_cast<std::size_t>(N / n), "block_class_member: one weight per block required");
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    require(total > 0.0, "block_class_member: weights sum to zero");

    // Position of qudit basis state `s` inside block tuple (m, ..., m).
    auto embed = [&](std::size_t s, std::size_t m) {
        std::size_t out = 0;
        std::size_t stride = 1;
        for (int p = 0; p < parties; ++p) {
            const std::size_t digit = s % n;
            s /= n;
            out += (n * m + digit) * stride;
            stride *= N;
        }
        return out;
    };
    std::vector<Complex> e(big * big);
    for (std::size_t m = 0; m < weights.size(); ++m) {
        const double w = weights[m] / total;
        require(w >= 0.0, "block_class_member: weights must be nonnegative");
        for (std::size_t r = 0; r < small; ++r) {
            for (std::size_t c = 0; c < small; ++c) {
                e[embed(r, m) * big + embed(c, m)] += w * rho(r, c);
            }
        }
    }
    return ComplexMatrix(big, std::move(e));
}

// ---------------------------------------------------------------------------
// Induced qudit states

InducedState induced_qudit_state(const FockKet &omega, int n) {
    const auto &psi = omega.amplitudes();
    const double norm2 = psi.norm() * psi.norm();
    return induce(omega.trunc(), n, omega.modes(), norm2, [&](const SparseMatrix &op) { return sandwich(psi, op); });
}

InducedState induced_qudit_state(const BlockMixture &omega, int n) {
    return induce(omega.trunc(), n, 2, 1.0, [&](const SparseMatrix &op) { return Complex(expectation(omega, op)); });
}

InducedState induced_qudit_state(const ComplexMatrix &omega, int N, int n, int parties) {
    require(parties >= 1, "induced_qudit_state: parties must be >= 1");
    require(omega.dim() == ipow(static_cast<std::size_t>(N), parties), "induced_qudit_state: omega must be N^L");
    require(omega.is_hermitian(), "induced_qudit_state: omega is not Hermitian");
    const double total = omega.trace().real();
    return induce(N, n, parties, total, [&](const SparseMatrix &op) { return trace_product(omega, op); });
}

}  // namespace cvmap
