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

#include "cvmap/cv_states.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace cvmap {

namespace {

std::size_t basis_size(int modes, int trunc) {
    return modes == 1 ? static_cast<std::size_t>(trunc) : static_cast<std::size_t>(trunc) * trunc;
}

}  // namespace

FockKet::FockKet(int modes, int trunc, std::vector<Complex> amplitudes, double tail_mass)
    : modes_(modes), trunc_(trunc), amplitudes_(std::move(amplitudes)), tail_mass_(tail_mass) {
    require(modes == 1 || modes == 2, "FockKet: modes must be 1 or 2");
    require(trunc >= 1, "FockKet: trunc must be >= 1");
    require(amplitudes_.dim() == basis_size(modes, trunc), "FockKet: amplitude count must be trunc^modes");
    require(tail_mass >= 0.0, "FockKet: tail_mass must be nonnegative");
}

Complex FockKet::amplitude(int k1, int k2) const {
    require(modes_ == 2, "FockKet::amplitude: two-mode ket required");
    require(k1 >= 0 && k1 < trunc_ && k2 >= 0 && k2 < trunc_, "FockKet::amplitude: index outside truncation");
    return amplitudes_[static_cast<std::size_t>(k1) * trunc_ + k2];
}

FockKet nopa(double r, int trunc, bool renormalize) {
    require(r >= 0.0, "nopa: squeezing parameter must be >= 0");
    require(trunc >= 1, "nopa: trunc must be >= 1");
    const double t = std::tanh(r);
    const double c = std::cosh(r);
    const auto N = static_cast<std::size_t>(trunc);
    std::vector<Complex> amps(N * N);
    double captured = 0;
    double power = 1.0;
    for (std::size_t k = 0; k < N; ++k) {
        const double lambda = power / c;
        amps[k * N + k] = lambda;
        captured += lambda * lambda;
        power *= t;
    }
    if (renormalize) {
        const double norm = std::sqrt(captured);
        for (auto &a : amps) {
            a /= norm;
        }
    }
    return FockKet(2, trunc, std::move(amps), std::pow(t, 2.0 * trunc));
}

FockKet max_entangled_block(int n, int m, int trunc) {
    require(n >= 1 && m >= 0, "max_entangled_block: require n >= 1, m >= 0");
    if (n * (m + 1) > trunc) {
        throw InvalidArgument("max_entangled_block: block " + std::to_string(m) + " exceeds truncation " +
                              std::to_string(trunc));
    }
    const auto N = static_cast<std::size_t>(trunc);
    std::vector<Complex> amps(N * N);
    const double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j) {
        const auto k = static_cast<std::size_t>(n * m + j);
        amps[k * N + k] = a;
    }
    return FockKet(2, trunc, std::move(amps));
}

FockKet uniform_entangled(int trunc) {
    return max_entangled_block(trunc, 0, trunc);
}

FockKet fock_product(int k1, int k2, int trunc) {
    require(k1 >= 0 && k1 < trunc && k2 >= 0 && k2 < trunc, "fock_product: index outside truncation");
    const auto N = static_cast<std::size_t>(trunc);
    std::vector<Complex> amps(N * N);
    amps[static_cast<std::size_t>(k1) * N + k2] = 1.0;
    return FockKet(2, trunc, std::move(amps));
}

BlockMixture block_mixture_w(int n, std::vector<double> p, int trunc) {
    require(n >= 1, "block_mixture_w: n must be >= 1");
    require(!p.empty(), "block_mixture_w: at least one weight required");
    for (double w : p) {
        require(w >= 0.0, "block_mixture_w: weights must be nonnegative");
    }
    if (static_cast<int>(p.size()) > trunc / n) {
        throw InvalidArgument("block_mixture_w: " + std::to_string(p.size()) + " blocks do not fit in truncation " +
                              std::to_string(trunc));
    }
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    require(total > 0.0, "block_mixture_w: weights sum to zero");
    for (double &w : p) {
        w /= total;
    }
    return BlockMixture(n, trunc, std::move(p), 1.0 - total);
}

std::vector<double> geometric_weights(double lambda, int count) {
    require(lambda >= 0.0 && lambda < 1.0, "geometric_weights: lambda must lie in [0, 1)");
    require(count >= 1, "geometric_weights: count must be >= 1");
    std::vector<double> p(static_cast<std::size_t>(count));
    double power = 1.0;
    for (auto &w : p) {
        w = (1.0 - lambda) * power;
        power *= lambda;
    }
    return p;
}

double expectation(const BlockMixture &w, const SparseMatrix &op) {
    const auto N = static_cast<std::size_t>(w.trunc());
    require(op.dim() == N * N, "expectation: operator must act on the trunc^2 two-mode space");
    require(op.is_hermitian(), "expectation: observable is not Hermitian");
    const auto n = static_cast<std::size_t>(w.n());
    const double amp2 = 1.0 / static_cast<double>(n);
    Complex total = 0;
    for (std::size_t m = 0; m < w.weights().size(); ++m) {
        if (w.weights()[m] == 0.0) {
            continue;
        }
        // <psi(m)| op |psi(m)> with psi(m) supported on |k, k>, k in block m.
        Complex block = 0;
        for (std::size_t a = 0; a < n; ++a) {
            const std::size_t ka = n * m + a;
            for (std::size_t b = 0; b < n; ++b) {
                const std::size_t kb = n * m + b;
                block += op.at(ka * N + ka, kb * N + kb);
            }
        }
        total += w.weights()[m] * amp2 * block;
    }
    if (std::abs(total.imag()) >= kExpectationTol) {
        throw NumericalError("expectation: imaginary residue " + std::to_string(total.imag()));
    }
    return total.real();
}

BlockProjection project_block(const FockKet &ket, int n, int m1, int m2) {
    require(ket.modes() == 2, "project_block: two-mode ket required");
    require(n >= 1 && m1 >= 0 && m2 >= 0, "project_block: require n >= 1, m1, m2 >= 0");
    if (n * (std::max(m1, m2) + 1) > ket.trunc()) {
        throw InvalidArgument("project_block: block exceeds truncation");
    }
    std::vector<Complex> amps;
    amps.reserve(static_cast<std::size_t>(n * n));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            amps.push_back(ket.amplitude(n * m1 + j, n * m2 + k));
        }
    }
    ComplexVector raw(std::move(amps));
    const double norm = raw.norm();
    if (norm == 0.0) {
        throw NumericalError("project_block: empty projection (no weight in block pair)");
    }
    return {raw.normalized(), norm * norm};
}

}  // namespace cvmap
