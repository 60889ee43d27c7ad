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

#include "cvmap/bell.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace cvmap {

namespace {

constexpr double kUnitTol = 1e-12;

double norm3(const std::array<double, 3> &v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

// Same two-mode ket on a different truncation; rejects dropped support.
FockKet retruncate(const FockKet &ket, int trunc) {
    require(ket.modes() == 2, "chsh: two-mode state required");
    require(trunc >= 2, "chsh: trunc must be >= 2");
    if (ket.trunc() == trunc) {
        return ket;
    }
    const auto N = static_cast<std::size_t>(trunc);
    std::vector<Complex> amps(N * N);
    for (int k1 = 0; k1 < ket.trunc(); ++k1) {
        for (int k2 = 0; k2 < ket.trunc(); ++k2) {
            const Complex a = ket.amplitude(k1, k2);
            if (a == Complex{}) {
                continue;
            }
            if (k1 >= trunc || k2 >= trunc) {
                throw InvalidArgument("chsh: truncation " + std::to_string(trunc) + " is too small for the state support");
            }
            amps[static_cast<std::size_t>(k1) * N + static_cast<std::size_t>(k2)] = a;
        }
    }
    return FockKet(2, trunc, std::move(amps), ket.tail_mass());
}

BlockMixture retruncate(const BlockMixture &w, int trunc) {
    require(w.n() == 2, "chsh: mixture must be built from n = 2 blocks");
    if (static_cast<int>(w.weights().size()) * 2 > trunc) {
        throw InvalidArgument("chsh: truncation " + std::to_string(trunc) + " is too small for the mixture blocks");
    }
    return block_mixture_w(2, std::vector<double>(w.weights().begin(), w.weights().end()), trunc);
}

template <class Expect>
Correlation correlation_of(int trunc, Expect expect) {
    const auto eg = build_embedded(trunc, 2);
    Correlation c{};
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 3; ++y) {
            c[x][y] = expect(kron(eg[x], eg[y]));
        }
    }
    return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Qutrit closed form

SchmidtTriple::SchmidtTriple(double a, double b, double c) : values_{std::abs(a), std::abs(b), std::abs(c)} {
    std::sort(values_.begin(), values_.end(), std::greater<>());
    require(std::abs(norm3(values_) - 1.0) < kUnitTol, "SchmidtTriple: coefficients must have unit 2-norm");
}

double fu_bell_max(const SchmidtTriple &a) {
    // The closed form also requires max a_k <= sqrt(6 + 3 sqrt 3) / 2 ~ 1.673,
    // which every unit-norm triple satisfies.
    return 4.0 * a[0] * a[1] + 4.0 / std::numbers::sqrt3 * (a[0] * a[2] + a[1] * a[2]);
}

SchmidtTriple nopa_qutrit_coeffs(double r) {
    require(r >= 0.0, "nopa_qutrit_coeffs: squeezing parameter must be >= 0");
    const double t = std::tanh(r);
    const double norm = std::sqrt(1.0 + t * t + t * t * t * t);
    return SchmidtTriple(1.0 / norm, t / norm, t * t / norm);
}

double nopa_bell_value(double r) {
    return fu_bell_max(nopa_qutrit_coeffs(r));
}

BellCurve bell_curve(double r_min, double r_max, int steps, int jobs) {
    require(r_min >= 0.0 && r_min < r_max, "bell_curve: require 0 <= r_min < r_max");
    require(steps >= 2, "bell_curve: steps must be >= 2");
    require(jobs >= 1, "bell_curve: jobs must be >= 1");
    std::vector<BellPoint> points(static_cast<std::size_t>(steps));
    const double h = (r_max - r_min) / (steps - 1);
    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double r = i + 1 == points.size() ? r_max : r_min + static_cast<double>(i) * h;
            points[i] = {r, nopa_bell_value(r)};
        }
    };
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), points.size());
    if (workers == 1) {
        fill(0, points.size());
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (points.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(points.size(), begin + chunk);
            if (begin < end) {
                pool.emplace_back(fill, begin, end);
            }
        }
    }
    return BellCurve{std::move(points), r_min, r_max, steps,
                     "B = 4 a1 a2 + 4/sqrt(3) (a1 a3 + a2 a3), a = (1, t, t^2)/sqrt(1 + t^2 + t^4), t = tanh r"};
}

MaxViolation find_max_violation(double r_lo, double r_hi) {
    require(r_lo >= 0.0 && r_lo < r_hi, "find_max_violation: require 0 <= r_lo < r_hi");
    constexpr int kScan = 200;
    const double h = (r_hi - r_lo) / (kScan - 1);
    int best = 0;
    double best_value = nopa_bell_value(r_lo);
    for (int i = 1; i < kScan; ++i) {
        const double v = nopa_bell_value(r_lo + i * h);
        if (v > best_value) {
            best = i;
            best_value = v;
        }
    }
    if (best == 0 || best == kScan - 1) {
        throw InvalidArgument("find_max_violation: no interior maximum in [" + std::to_string(r_lo) + ", " +
                              std::to_string(r_hi) + "]");
    }

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = r_lo + (best - 1) * h;
    double b = r_lo + (best + 1) * h;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = nopa_bell_value(c);
    double fd = nopa_bell_value(d);
    while (b - a > 1e-9) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = nopa_bell_value(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = nopa_bell_value(d);
        }
    }
    const double r = 0.5 * (a + b);
    return {r, nopa_bell_value(r)};
}

double violation_threshold() {
    double lo = 0.3;
    double hi = 0.7;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (nopa_bell_value(mid) < kLocalBound ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// CHSH

Direction planar_direction(double degrees) {
    const double rad = degrees * std::numbers::pi / 180.0;
    return {std::sin(rad), 0.0, std::cos(rad)};
}

ChshSettings::ChshSettings(Direction a_, Direction a_prime_, Direction b_, Direction b_prime_)
    : a(a_), a_prime(a_prime_), b(b_), b_prime(b_prime_) {
    for (const auto &v : {a, a_prime, b, b_prime}) {
        require(std::abs(norm3(v) - 1.0) < kUnitTol, "ChshSettings: measurement directions must be unit vectors");
    }
}

ChshSettings ChshSettings::textbook() {
    return planar(0.0, 90.0, 45.0, -45.0);
}

ChshSettings ChshSettings::planar(double a_deg, double a_prime_deg, double b_deg, double b_prime_deg) {
    return ChshSettings(planar_direction(a_deg), planar_direction(a_prime_deg), planar_direction(b_deg),
                        planar_direction(b_prime_deg));
}

BlochTensor chsh_operator(const ChshSettings &s, const GeneratorSet &gens) {
    require(gens.n() == 2, "chsh_operator: n = 2 generators required");
    BlochTensor t = BlochTensor::zeros(2, 2, TensorKind::kObservable);
    std::vector<double> coeffs(t.coeffs().begin(), t.coeffs().end());
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
            const double value = s.a[x] * s.b[y] + s.a[x] * s.b_prime[y] + s.a_prime[x] * s.b[y] -
                                 s.a_prime[x] * s.b_prime[y];
            const int index[] = {x + 1, y + 1};
            coeffs[t.flat_index(index)] = value;
        }
    }
    return BlochTensor(2, 2, TensorKind::kObservable, std::move(coeffs));
}

double chsh_cv_expectation(const FockKet &omega, const ChshSettings &settings, int trunc) {
    const FockKet ket = retruncate(omega, trunc);
    const SparseMatrix op = lift_observable(chsh_operator(settings, build_generators(2)), build_embedded(trunc, 2));
    return expectation(ket.amplitudes(), op);
}

double chsh_cv_expectation(const BlockMixture &omega, const ChshSettings &settings, int trunc) {
    const BlockMixture w = retruncate(omega, trunc);
    const SparseMatrix op = lift_observable(chsh_operator(settings, build_generators(2)), build_embedded(trunc, 2));
    return expectation(w, op);
}

Correlation pseudospin_correlation(const FockKet &omega, int trunc) {
    const FockKet ket = retruncate(omega, trunc);
    return correlation_of(trunc, [&](const SparseMatrix &op) { return expectation(ket.amplitudes(), op); });
}

Correlation pseudospin_correlation(const BlockMixture &omega, int trunc) {
    const BlockMixture w = retruncate(omega, trunc);
    return correlation_of(trunc, [&](const SparseMatrix &op) { return expectation(w, op); });
}

double chsh_value(const Correlation &c, const ChshSettings &s) {
    double total = 0;
    for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t y = 0; y < 3; ++y) {
            total += c[x][y] * (s.a[x] * (s.b[y] + s.b_prime[y]) + s.a_prime[x] * (s.b[y] - s.b_prime[y]));
        }
    }
    return total;
}

ChshOptimum refine_planar(const Correlation &c) {
    // Only the (u, w) block of the correlation matters for planar settings.
    const double cuu = c[0][0], cuw = c[0][2], cwu = c[2][0], cww = c[2][2];
    auto value = [&](const std::array<double, 4> &deg) {
        double sa[4], ca[4];
        for (int k = 0; k < 4; ++k) {
            const double rad = deg[k] * std::numbers::pi / 180.0;
            sa[k] = std::sin(rad);
            ca[k] = std::cos(rad);
        }
        // direction = (sin, 0, cos); corr(p, q) = p^T C q on the (u, w) block.
        auto corr = [&](int p, int q) {
            return sa[p] * (cuu * sa[q] + cuw * ca[q]) + ca[p] * (cwu * sa[q] + cww * ca[q]);
        };
        return corr(0, 2) + corr(0, 3) + corr(1, 2) - corr(1, 3);
    };
    auto search = [&](const std::array<double, 4> &center, double span, double step) {
        const int count = static_cast<int>(std::lround(2 * span / step)) + 1;
        std::array<double, 4> best = center;
        double best_value = value(center);
        std::array<double, 4> deg{};
        for (int i0 = 0; i0 < count; ++i0) {
            deg[0] = center[0] - span + i0 * step;
            for (int i1 = 0; i1 < count; ++i1) {
                deg[1] = center[1] - span + i1 * step;
                for (int i2 = 0; i2 < count; ++i2) {
                    deg[2] = center[2] - span + i2 * step;
                    for (int i3 = 0; i3 < count; ++i3) {
                        deg[3] = center[3] - span + i3 * step;
                        const double v = value(deg);
                        if (v > best_value) {
                            best_value = v;
                            best = deg;
                        }
                    }
                }
            }
        }
        return best;
    };
    // Coarse: 24 angles per setting covering the full circle.
    auto coarse = search({180.0, 180.0, 180.0, 180.0}, 180.0, 15.0);
    auto fine = search(coarse, 15.0, 1.0);
    // Never report less than the textbook settings.
    const ChshSettings textbook = ChshSettings::textbook();
    const double textbook_value = chsh_value(c, textbook);
    ChshSettings refined = ChshSettings::planar(fine[0], fine[1], fine[2], fine[3]);
    const double refined_value = chsh_value(c, refined);
    if (refined_value < textbook_value) {
        return {textbook, textbook_value};
    }
    return {refined, refined_value};
}

}  // namespace cvmap
