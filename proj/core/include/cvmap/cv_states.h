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

#ifndef CVMAP_CV_STATES_H
#define CVMAP_CV_STATES_H

// Truncated continuous-variable states in the Fock basis.

#include <cstddef>
#include <span>
#include <vector>

#include "cvmap/tensor.h"

namespace cvmap {

inline constexpr int kDefaultTruncation = 64;

/// Amplitudes over the product Fock basis |k1> (x) |k2>, k_i < trunc,
/// row-major in k1.
class FockKet {
   public:
    /// tail_mass is the weight the untruncated state had outside the kept
    /// basis; it is recorded, not applied.
    FockKet(int modes, int trunc, std::vector<Complex> amplitudes, double tail_mass = 0.0);

    int modes() const {
        return modes_;
    }
    int trunc() const {
        return trunc_;
    }
    double tail_mass() const {
        return tail_mass_;
    }
    const ComplexVector &amplitudes() const {
        return amplitudes_;
    }
    /// Two-mode amplitude <k1, k2|psi>.
    Complex amplitude(int k1, int k2) const;

   private:
    int modes_;
    int trunc_;
    ComplexVector amplitudes_;
    double tail_mass_;
};

/// Two-mode squeezed vacuum sum_k tanh(r)^k / cosh(r) |k, k>, k < trunc.
/// tail_mass = tanh(r)^(2 trunc). Renormalized unless renormalize is false.
FockKet nopa(double r, int trunc = kDefaultTruncation, bool renormalize = true);

/// (1/sqrt(n)) sum_j |n m + j, n m + j>, j = 0 .. n - 1.
FockKet max_entangled_block(int n, int m, int trunc);

/// (1/sqrt(trunc)) sum_j |j, j>: the finite regularization of the EPR state.
FockKet uniform_entangled(int trunc);

/// |k1> (x) |k2>.
FockKet fock_product(int k1, int k2, int trunc);

/// Mixture sum_m p(m) |psi(m)><psi(m)| of block-maximally-entangled states.
/// Never densified; expectations are accumulated per block.
class BlockMixture {
   public:
    int n() const {
        return n_;
    }
    int trunc() const {
        return trunc_;
    }
    /// Renormalized weights, one per block.
    std::span<const double> weights() const {
        return weights_;
    }
    /// 1 - (sum of the weights as given).
    double deficit() const {
        return deficit_;
    }
    FockKet block_state(int m) const {
        return max_entangled_block(n_, m, trunc_);
    }

   private:
    friend BlockMixture block_mixture_w(int n, std::vector<double> p, int trunc);
    BlockMixture(int n, int trunc, std::vector<double> weights, double deficit)
        : n_(n), trunc_(trunc), weights_(std::move(weights)), deficit_(deficit) {}

    int n_;
    int trunc_;
    std::vector<double> weights_;
    double deficit_;
};

/// Requires nonnegative weights with a positive sum and p.size() <= trunc / n.
BlockMixture block_mixture_w(int n, std::vector<double> p, int trunc);

/// p(m) = (1 - lambda) lambda^m for m < count, unnormalized.
std::vector<double> geometric_weights(double lambda, int count);

/// Tr(w op) for a Hermitian op on the trunc^2 two-mode space.
double expectation(const BlockMixture &w, const SparseMatrix &op);

struct BlockProjection {
    /// Normalized n^2 ket, index j n + k for |n m1 + j>|n m2 + k>.
    ComplexVector ket;
    /// Weight of the source ket inside the block before renormalization.
    double weight;
};

/// Restriction of a two-mode ket to block pair (m1, m2). Throws NumericalError
/// if the block carries no weight.
BlockProjection project_block(const FockKet &ket, int n, int m1, int m2);

}  // namespace cvmap

#endif
