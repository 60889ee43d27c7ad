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

#ifndef CVMAP_EMBEDDING_H
#define CVMAP_EMBEDDING_H

// su(n) generators acting on an N-dimensional space.
//
// The ambient space is cut into floor(N/n) consecutive blocks
// {n m, ..., n m + n - 1}, m = 0 .. floor(N/n) - 1. Each block carries its own
// copy of the n-dimensional generators, and the embedded generator S_j is the
// direct sum of the per-block copies. When n does not divide N, the trailing
// N - n floor(N/n) dimensions (the unused tail) are annihilated by every S_j.

#include <cstddef>
#include <vector>

#include "cvmap/su_algebra.h"
#include "cvmap/tensor.h"

namespace cvmap {

/// |n m + j><n m + k| on the N-dimensional space. j, k are 1-based labels
/// within the block (1 .. n); the single nonzero sits at 0-based
/// (n m + j - 1, n m + k - 1). Diagonal j == k is allowed.
SparseMatrix block_projector(int N, int n, int m, int j, int k);

/// The n^2 - 1 generators restricted to block m, in canonical order.
std::vector<SparseMatrix> block_generators(int N, int n, int m);

class EmbeddedGeneratorSet {
   public:
    int ambient_dim() const {
        return N_;
    }
    int n() const {
        return qudit_.n();
    }
    int blocks() const {
        return N_ / qudit_.n();
    }
    /// Dimensions not covered by any block.
    int unused_tail() const {
        return N_ - qudit_.n() * blocks();
    }
    std::size_t size() const {
        return generators_.size();
    }
    const SparseMatrix &operator[](std::size_t g) const {
        return generators_[g];
    }
    const std::vector<SparseMatrix> &generators() const {
        return generators_;
    }
    /// Structure constants, shared with the n-dimensional generators.
    const StructureConstants &f() const {
        return qudit_.f();
    }
    const GeneratorSet &qudit() const {
        return qudit_;
    }

   private:
    friend EmbeddedGeneratorSet build_embedded(int N, int n);
    EmbeddedGeneratorSet(int N, GeneratorSet qudit, std::vector<SparseMatrix> generators)
        : N_(N), qudit_(std::move(qudit)), generators_(std::move(generators)) {}

    int N_;
    GeneratorSet qudit_;
    std::vector<SparseMatrix> generators_;
};

/// Requires 2 <= n <= N.
EmbeddedGeneratorSet build_embedded(int N, int n);

/// Max entrywise residual of [S_j, S_k] - 2i sum_l f_jkl S_l over all (j, k),
/// combined with the largest entry of any cross-block commutator
/// [s_j(m), s_k(r)], m != r.
double verify_embedded(const EmbeddedGeneratorSet &eg);

/// Max of |Tr S_j|, |Tr(S_i S_j) - 2 floor(N/n) delta_ij|, Hermiticity defects
/// and any nonzero entry on the unused tail.
double verify_embedded_trace_relations(const EmbeddedGeneratorSet &eg);

/// Diagonal projector onto the first n floor(N/n) dimensions.
SparseMatrix used_subspace_projector(int N, int n);

}  // namespace cvmap

#endif
