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

#ifndef CVMAP_BLOCH_H
#define CVMAP_BLOCH_H

// Generalized Bloch tensors of L-party qudit operators and their
// correspondence with operators on L copies of an N-dimensional space.
//
// A BlochTensor holds real coefficients t[x1 .. xL], each x_i in 0 .. n^2 - 1,
// over the basis g_{x1} (x) ... (x) g_{xL} where g_0 is the identity and g_x
// (x >= 1) is generator x - 1 of the canonical su(n) set. Coefficients are
// stored flat with x1 most significant, which matches kron ordering.
//
// Normalization: the coefficient of a basis element with z identity slots and
// L - z generator slots is Tr(op g_{x1} (x) ... (x) g_{xL}) / (n^z 2^(L-z)).
// This gives t[0..0] = 1 / n^L for any unit-trace state and
// t = Tr(op s (x) ... (x) s) / 2^L on full-correlation slots.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvmap/cv_states.h"
#include "cvmap/embedding.h"
#include "cvmap/su_algebra.h"
#include "cvmap/tensor.h"

namespace cvmap {

enum class TensorKind { kState, kObservable };

class BlochTensor {
   public:
    BlochTensor(int n, int parties, TensorKind kind, std::vector<double> coeffs);
    static BlochTensor zeros(int n, int parties, TensorKind kind);

    int n() const {
        return n_;
    }
    int parties() const {
        return parties_;
    }
    TensorKind kind() const {
        return kind_;
    }
    std::span<const double> coeffs() const {
        return coeffs_;
    }
    std::size_t size() const {
        return coeffs_.size();
    }

    double at(std::span<const int> index) const;
    double at(std::initializer_list<int> index) const {
        return at(std::span<const int>(index.begin(), index.size()));
    }
    std::size_t flat_index(std::span<const int> index) const;
    std::vector<int> multi_index(std::size_t flat) const;

    /// True if some coefficient with an identity slot exceeds tol in magnitude.
    bool has_identity_components(double tol = kAlgebraTol) const;

    /// Copy with coefficient `index` replaced.
    BlochTensor with(std::span<const int> index, double value) const;
    BlochTensor with(std::initializer_list<int> index, double value) const {
        return with(std::span<const int>(index.begin(), index.size()), value);
    }

   private:
    int n_;
    int parties_;
    TensorKind kind_;
    std::vector<double> coeffs_;
};

/// Bloch tensor of a Hermitian operator on (C^n)^(x)L. For kind == kState the
/// operator must also have unit trace.
BlochTensor decompose(const ComplexMatrix &op, const GeneratorSet &gens, int parties, TensorKind kind);
BlochTensor decompose(const ComplexMatrix &op, int n, int parties, TensorKind kind);

/// sum_x t[x] g_{x1} (x) ... (x) g_{xL}.
ComplexMatrix reconstruct(const BlochTensor &t, const GeneratorSet &gens);
ComplexMatrix reconstruct(const BlochTensor &t);

/// 2^L sum over full-correlation slots of t[x] a[x]. Identity-slot
/// components of the observable are ignored.
double bloch_expectation(const BlochTensor &state, const BlochTensor &obs);

/// A = sum_x a[x] S_{x1} (x) ... (x) S_{xL} on (C^N)^(x)L. Rejects observables
/// carrying identity-slot components.
SparseMatrix lift_observable(const BlochTensor &obs, const EmbeddedGeneratorSet &embedded);

/// Coefficients T = t / floor(N/n)^L representing the class of N-dimensional
/// states associated with a qudit state. Identity slots are zero.
class ClassCoefficients {
   public:
    ClassCoefficients(int n, int parties, int ambient_dim, std::vector<double> values);

    int n() const {
        return n_;
    }
    int parties() const {
        return parties_;
    }
    int ambient_dim() const {
        return N_;
    }
    int blocks() const {
        return N_ / n_;
    }
    std::span<const double> values() const {
        return values_;
    }

   private:
    int n_;
    int parties_;
    int N_;
    std::vector<double> values_;
};

ClassCoefficients class_coefficients(const BlochTensor &state, int N);

/// (2 floor(N/n))^L sum_x T[x] a[x].
double class_expectation(const ClassCoefficients &T, const BlochTensor &obs);

/// sum_x T[x] S_{x1} (x) ... (x) S_{xL}: the operator standing for the class.
SparseMatrix class_operator(const ClassCoefficients &T, const EmbeddedGeneratorSet &embedded);

/// An explicit member of the class of rho: block copies of rho placed on the
/// diagonal block tuples (m, ..., m) with weight p(m). `weights` has one entry
/// per block (floor(N/n)) and is renormalized.
ComplexMatrix block_class_member(const ComplexMatrix &rho, int n, int parties, int N, std::span<const double> weights);

struct InducedState {
    /// Reconstructed n^L x n^L operator.
    ComplexMatrix rho;
    BlochTensor bloch;
    /// Smallest eigenvalue of rho; negative values are reported, not rejected.
    double min_eigenvalue;
    /// Weight of the source state outside the used subspace (and, for
    /// multi-party states, outside the product of used subspaces).
    double outside_weight;
    std::optional<std::string> warning;
};

/// Weight above which induced_qudit_state attaches a warning.
inline constexpr double kOutsideWeightWarning = 1e-6;

/// Qudit state whose Bloch components reproduce the lifted expectations of
/// omega: t[x] = <S_{x1} (x) ... (x) S_{xL}>_omega / 2^(L - z) / n^z with the
/// used-subspace projector standing in for S_0.
InducedState induced_qudit_state(const FockKet &omega, int n);
InducedState induced_qudit_state(const BlockMixture &omega, int n);
/// omega is a density matrix on (C^N)^(x)parties.
InducedState induced_qudit_state(const ComplexMatrix &omega, int N, int n, int parties);

}  // namespace cvmap

#endif
