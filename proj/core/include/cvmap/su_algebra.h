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

#ifndef CVMAP_SU_ALGEBRA_H
#define CVMAP_SU_ALGEBRA_H

// Generators of su(n) in the transition-projector (u, v, w) form.
//
//   u_jk = P_jk + P_kj
//   v_jk = i (P_jk - P_kj)
//   w_l  = -sqrt(2 / (l (l + 1))) (P_11 + ... + P_ll - l P_{l+1,l+1})
//
// with P_jk = |j><k| and 1 <= j < k <= n, 1 <= l <= n - 1. Signs are kept
// exactly as written, so for n = 2 the triple is (sigma_x, -sigma_y, -sigma_z).
//
// Canonical order: every u_jk by lexicographic (j, k), then every v_jk in the
// same order, then w_1 .. w_{n-1}. Generator index g = 0 .. n^2 - 2 in code
// corresponds to the 1-based label g + 1 used in Bloch tensors, where slot 0
// is the identity.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cvmap/tensor.h"

namespace cvmap {

enum class GeneratorFamily { kU, kV, kW };

/// 1-based (j, k) for u/v, (l, 0) for w.
struct GeneratorLabel {
    GeneratorFamily family;
    int first;
    int second;

    std::string to_string() const;
};

std::vector<GeneratorLabel> canonical_labels(int n);

/// Real (count x count x count) table of f_jkl, 0-based generator indices.
class StructureConstants {
   public:
    StructureConstants(std::size_t count, std::vector<double> values);

    std::size_t count() const {
        return count_;
    }
    double operator()(std::size_t j, std::size_t k, std::size_t l) const {
        return values_[(j * count_ + k) * count_ + l];
    }
    /// Largest |f_jkl + f_kjl|, |f_jkl + f_jlk|, |f_jkl + f_lkj| over all triples.
    double antisymmetry_residual() const;

   private:
    std::size_t count_;
    std::vector<double> values_;
};

/// f_jkl = -(i/4) Tr([s_j, s_k] s_l). Throws NumericalError if any imaginary
/// residue reaches kAlgebraTol.
StructureConstants structure_constants(std::span<const ComplexMatrix> generators);

class GeneratorSet {
   public:
    /// Wraps an explicit generator list (n^2 - 1 matrices of dim n) and
    /// computes its structure constants. Algebraic validity is not asserted
    /// here; use verify_algebra and verify_trace_relations.
    GeneratorSet(int n, std::vector<ComplexMatrix> generators);

    int n() const {
        return n_;
    }
    std::size_t size() const {
        return generators_.size();
    }
    const ComplexMatrix &operator[](std::size_t g) const {
        return generators_[g];
    }
    std::span<const ComplexMatrix> generators() const {
        return generators_;
    }
    const StructureConstants &f() const {
        return f_;
    }
    std::vector<GeneratorLabel> labels() const {
        return canonical_labels(n_);
    }

   private:
    int n_;
    std::vector<ComplexMatrix> generators_;
    StructureConstants f_;
};

/// The n^2 - 1 generators in canonical order. Throws InvalidArgument if n < 2.
GeneratorSet build_generators(int n);

/// Max over (j, k) of the entrywise max |[s_j, s_k] - 2i sum_l f_jkl s_l|.
double verify_algebra(const GeneratorSet &gens);

/// Max of |Tr s_j|, |Tr(s_i s_j) - 2 delta_ij| and Hermiticity defects.
double verify_trace_relations(const GeneratorSet &gens);

}  // namespace cvmap

#endif
