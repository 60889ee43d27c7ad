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

#include "cvmap/embedding.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace cvmap {

namespace {

void require_dims(int N, int n, const char *op) {
    if (n < 2 || n > N) {
        throw InvalidArgument(std::string(op) + ": require 2 <= n <= N (got n=" + std::to_string(n) +
                              ", N=" + std::to_string(N) + ")");
    }
}

// sum_l coeffs[l] * ops[l], assembled in one pass.
SparseMatrix linear_combination(std::size_t dim, std::span<const double> coeffs, std::span<const SparseMatrix> ops) {
    std::vector<SparseEntry> e;
    for (std::size_t l = 0; l < ops.size(); ++l) {
        if (coeffs[l] == 0.0) {
            continue;
        }
        for (const auto &x : ops[l].entries()) {
            e.push_back({x.row, x.col, coeffs[l] * x.value});
        }
    }
    return accumulate(dim, std::move(e));
}

}  // namespace

SparseMatrix block_projector(int N, int n, int m, int j, int k) {
    require_dims(N, n, "block_projector");
    const int blocks = N / n;
    if (m < 0 || m >= blocks) {
        throw InvalidArgument("block_projector: block index m=" + std::to_string(m) + " outside 0.." +
                              std::to_string(blocks - 1));
    }
    require(j >= 1 && j <= n && k >= 1 && k <= n, "block_projector: j and k must lie in 1..n");
    const auto row = static_cast<std::size_t>(n * m + j - 1);
    const auto col = static_cast<std::size_t>(n * m + k - 1);
    return SparseMatrix(static_cast<std::size_t>(N), {{row, col, 1.0}});
}

std::vector<SparseMatrix> block_generators(int N, int n, int m) {
    require_dims(N, n, "block_generators");
    const auto dim = static_cast<std::size_t>(N);
    std::vector<SparseMatrix> out;
    out.reserve(static_cast<std::size_t>(n * n - 1));
    for (const auto &label : canonical_labels(n)) {
        const int j = label.first;
        const int k = label.second;
        switch (label.family) {
            case GeneratorFamily::kU:
                out.push_back(block_projector(N, n, m, j, k) + block_projector(N, n, m, k, j));
                break;
            case GeneratorFamily::kV:
                out.push_back(Complex(0, 1) * (block_projector(N, n, m, j, k) - block_projector(N, n, m, k, j)));
                break;
            case GeneratorFamily::kW: {
                const int l = j;
                SparseMatrix sum(dim);
                for (int d = 1; d <= l; ++d) {
                    sum = sum + block_projector(N, n, m, d, d);
                }
                sum = sum - Complex(l) * block_projector(N, n, m, l + 1, l + 1);
                out.push_back(Complex(-std::sqrt(2.0 / (l * (l + 1.0)))) * sum);
                break;
            }
        }
    }
    return out;
}

EmbeddedGeneratorSet build_embedded(int N, int n) {
    require_dims(N, n, "build_embedded");
    const auto dim = static_cast<std::size_t>(N);
    const auto count = static_cast<std::size_t>(n * n - 1);
    std::vector<std::vector<SparseEntry>> parts(count);
    for (int m = 0; m < N / n; ++m) {
        auto block = block_generators(N, n, m);
        for (std::size_t g = 0; g < count; ++g) {
            const auto cells = block[g].entries();
            parts[g].insert(parts[g].end(), cells.begin(), cells.end());
        }
    }
    std::vector<SparseMatrix> generators;
    generators.reserve(count);
    for (auto &p : parts) {
        generators.push_back(accumulate(dim, std::move(p)));
    }
    return EmbeddedGeneratorSet(N, build_generators(n), std::move(generators));
}

double verify_embedded(const EmbeddedGeneratorSet &eg) {
    const std::size_t count = eg.size();
    const auto dim = static_cast<std::size_t>(eg.ambient_dim());
    const auto &f = eg.f();
    double worst = 0;
    std::vector<double> coeffs(count);
    for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t k = 0; k < count; ++k) {
            for (std::size_t l = 0; l < count; ++l) {
                coeffs[l] = 2 * f(j, k, l);
            }
            const SparseMatrix rhs = Complex(0, 1) * linear_combination(dim, coeffs, eg.generators());
            worst = std::max(worst, (commutator(eg[j], eg[k]) - rhs).max_abs());
        }
    }

    // Generators living on different blocks commute.
    std::vector<std::vector<SparseMatrix>> per_block;
    for (int m = 0; m < eg.blocks(); ++m) {
        per_block.push_back(block_generators(eg.ambient_dim(), eg.n(), m));
    }
    for (std::size_t m = 0; m < per_block.size(); ++m) {
        for (std::size_t r = m + 1; r < per_block.size(); ++r) {
            for (const auto &a : per_block[m]) {
                for (const auto &b : per_block[r]) {
                    worst = std::max(worst, commutator(a, b).max_abs());
                }
            }
        }
    }
    return worst;
}

double verify_embedded_trace_relations(const EmbeddedGeneratorSet &eg) {
    const double scale = 2.0 * eg.blocks();
    const auto used = static_cast<std::size_t>(eg.n() * eg.blocks());
    double worst = 0;
    for (std::size_t i = 0; i < eg.size(); ++i) {
        worst = std::max(worst, std::abs(eg[i].trace()));
        if (!eg[i].is_hermitian(0.0)) {
            worst = std::max(worst, (eg[i] - eg[i].adjoint()).max_abs());
        }
        for (const auto &e : eg[i].entries()) {
            if (e.row >= used || e.col >= used) {
                worst = std::max(worst, std::abs(e.value));
            }
        }
        for (std::size_t j = 0; j < eg.size(); ++j) {
            const double expected = i == j ? scale : 0.0;
            worst = std::max(worst, std::abs(trace_product(eg[i], eg[j]) - expected));
        }
    }
    return worst;
}

SparseMatrix used_subspace_projector(int N, int n) {
    require_dims(N, n, "used_subspace_projector");
    std::vector<SparseEntry> e;
    for (int k = 0; k < n * (N / n); ++k) {
        e.push_back({static_cast<std::size_t>(k), static_cast<std::size_t>(k), 1.0});
    }
    return SparseMatrix(static_cast<std::size_t>(N), std::move(e));
}

}  // namespace cvmap
