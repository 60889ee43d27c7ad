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

#include "cvmap/su_algebra.h"

#include <algorithm>
#include <cmath>

namespace cvmap {

std::string GeneratorLabel::to_string() const {
    switch (family) {
        case GeneratorFamily::kU:
            return "u" + std::to_string(first) + "," + std::to_string(second);
        case GeneratorFamily::kV:
            return "v" + std::to_string(first) + "," + std::to_string(second);
        case GeneratorFamily::kW:
            return "w" + std::to_string(first);
    }
    return {};
}

std::vector<GeneratorLabel> canonical_labels(int n) {
    require(n >= 2, "canonical_labels: n must be >= 2");
    std::vector<GeneratorLabel> labels;
    for (auto family : {GeneratorFamily::kU, GeneratorFamily::kV}) {
        for (int j = 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) {
                labels.push_back({family, j, k});
            }
        }
    }
    for (int l = 1; l < n; ++l) {
        labels.push_back({GeneratorFamily::kW, l, 0});
    }
    return labels;
}

StructureConstants::StructureConstants(std::size_t count, std::vector<double> values)
    : count_(count), values_(std::move(values)) {
    require(values_.size() == count * count * count, "StructureConstants: table must be count^3");
}

double StructureConstants::antisymmetry_residual() const {
    double worst = 0;
    for (std::size_t j = 0; j < count_; ++j) {
        for (std::size_t k = 0; k < count_; ++k) {
            for (std::size_t l = 0; l < count_; ++l) {
                const double v = (*this)(j, k, l);
                worst = std::max({worst, std::abs(v + (*this)(k, j, l)), std::abs(v + (*this)(j, l, k)),
                                  std::abs(v + (*this)(l, k, j))});
            }
        }
    }
    return worst;
}

StructureConstants structure_constants(std::span<const ComplexMatrix> generators) {
    const std::size_t count = generators.size();
    require(count >= 1, "structure_constants: empty generator list");
    std::vector<double> f(count * count * count);
    for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t k = 0; k < count; ++k) {
            const ComplexMatrix bracket = commutator(generators[j], generators[k]);
            for (std::size_t l = 0; l < count; ++l) {
                const Complex value = Complex(0, -0.25) * trace_product(bracket, generators[l]);
                if (std::abs(value.imag()) >= kAlgebraTol) {
                    throw NumericalError("structure_constants: imaginary residue " + std::to_string(value.imag()));
                }
                f[(j * count + k) * count + l] = value.real();
            }
        }
    }
    return StructureConstants(count, std::move(f));
}

GeneratorSet::GeneratorSet(int n, std::vector<ComplexMatrix> generators)
    : n_(n), generators_(std::move(generators)), f_(structure_constants(generators_)) {
    require(n >= 2, "GeneratorSet: n must be >= 2");
    require(generators_.size() == static_cast<std::size_t>(n * n - 1), "GeneratorSet: expected n^2 - 1 generators");
    for (const auto &g : generators_) {
        require(g.dim() == static_cast<std::size_t>(n), "GeneratorSet: generator dimension must be n");
    }
}

GeneratorSet build_generators(int n) {
    require(n >= 2, "build_generators: n must be >= 2");
    const auto dim = static_cast<std::size_t>(n);
    std::vector<ComplexMatrix> gens;
    gens.reserve(dim * dim - 1);
    for (const auto &label : canonical_labels(n)) {
        std::vector<Complex> e(dim * dim);
        // Labels are 1-based basis indices.
        const auto j = static_cast<std::size_t>(label.first - 1);
        const auto k = static_cast<std::size_t>(label.second - 1);
        switch (label.family) {
            case GeneratorFamily::kU:
                e[j * dim + k] = 1.0;
                e[k * dim + j] = 1.0;
                break;
            case GeneratorFamily::kV:
                e[j * dim + k] = Complex(0, 1);
                e[k * dim + j] = Complex(0, -1);
                break;
            case GeneratorFamily::kW: {
                const int l = label.first;
                const double scale = -std::sqrt(2.0 / (l * (l + 1.0)));
                for (int d = 0; d < l; ++d) {
                    e[d * dim + d] = scale;
                }
                e[l * dim + l] = -l * scale;
                break;
            }
        }
        gens.emplace_back(dim, std::move(e));
    }
    return GeneratorSet(n, std::move(gens));
}

double verify_algebra(const GeneratorSet &gens) {
    const std::size_t count = gens.size();
    const auto &f = gens.f();
    double worst = 0;
    for (std::size_t j = 0; j < count; ++j) {
        for (std::size_t k = 0; k < count; ++k) {
            ComplexMatrix residual = commutator(gens[j], gens[k]);
            for (std::size_t l = 0; l < count; ++l) {
                if (f(j, k, l) != 0.0) {
                    residual = residual - Complex(0, 2 * f(j, k, l)) * gens[l];
                }
            }
            worst = std::max(worst, residual.max_abs());
        }
    }
    return worst;
}

double verify_trace_relations(const GeneratorSet &gens) {
    double worst = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        worst = std::max(worst, std::abs(gens[i].trace()));
        worst = std::max(worst, max_abs_diff(gens[i], gens[i].adjoint()));
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const double expected = i == j ? 2.0 : 0.0;
            worst = std::max(worst, std::abs(trace_product(gens[i], gens[j]) - expected));
        }
    }
    return worst;
}

}  // namespace cvmap
