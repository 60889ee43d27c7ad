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

#ifndef CVMAP_BELL_H
#define CVMAP_BELL_H

// Bell-inequality evaluation for states mapped from the two-mode squeezed
// vacuum.
//
// Qutrit side: the closed-form maximum of the symmetric-beam-splitter qutrit
// Bell expression for a pure state sum_k a_k |k, k>,
//     B = 4 a1 a2 + (4 / sqrt 3) (a1 a3 + a2 a3),   a1 >= a2 >= a3 >= 0,
// evaluated on the Schmidt coefficients induced by the squeezed state. Local
// realism bounds B by 2.
//
// Qubit side: CHSH with the pseudospin operators of the n = 2 embedding.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cvmap/bloch.h"
#include "cvmap/cv_states.h"
#include "cvmap/su_algebra.h"

namespace cvmap {

inline constexpr double kLocalBound = 2.0;

/// Schmidt coefficients of a two-qutrit pure state: magnitudes, sorted
/// descending, unit 2-norm.
class SchmidtTriple {
   public:
    /// Takes any signs and order; rejects inputs whose 2-norm is not 1.
    SchmidtTriple(double a, double b, double c);

    const std::array<double, 3> &values() const {
        return values_;
    }
    double operator[](std::size_t k) const {
        return values_[k];
    }

   private:
    std::array<double, 3> values_;
};

double fu_bell_max(const SchmidtTriple &a);

/// (1, t, t^2) / sqrt(1 + t^2 + t^4), t = tanh r.
SchmidtTriple nopa_qutrit_coeffs(double r);

/// B(r) = fu_bell_max(nopa_qutrit_coeffs(r)).
double nopa_bell_value(double r);

struct BellPoint {
    double r;
    double B;
};

struct BellCurve {
    std::vector<BellPoint> points;
    double r_min;
    double r_max;
    int steps;
    std::string formula;
};

/// Uniform grid r_i = r_min + i (r_max - r_min) / (steps - 1). Evaluation is
/// split across `jobs` threads; the result does not depend on `jobs`.
BellCurve bell_curve(double r_min, double r_max, int steps, int jobs = 1);

struct MaxViolation {
    double r;
    double B;
};

inline constexpr double kDefaultBracketLo = 0.5;
inline constexpr double kDefaultBracketHi = 4.0;

/// 200-point pre-scan of [r_lo, r_hi] followed by golden-section refinement
/// around the best interior grid point. Rejects brackets whose best grid
/// point sits on an endpoint.
MaxViolation find_max_violation(double r_lo = kDefaultBracketLo, double r_hi = kDefaultBracketHi);

/// Squeezing at which B(r) crosses the local bound 2, by bisection on
/// [0.3, 0.7].
double violation_threshold();

// ---------------------------------------------------------------------------
// CHSH

/// Coordinates over the canonical n = 2 generator triple (u12, v12, w1).
using Direction = std::array<double, 3>;

/// Unit vector in the (u12, w1) plane at `degrees` from w1 toward u12.
Direction planar_direction(double degrees);

struct ChshSettings {
    Direction a;
    Direction a_prime;
    Direction b;
    Direction b_prime;

    /// Rejects any non-unit direction.
    ChshSettings(Direction a, Direction a_prime, Direction b, Direction b_prime);

    /// a = w, a' = u, b = (w + u)/sqrt 2, b' = (w - u)/sqrt 2.
    static ChshSettings textbook();
    static ChshSettings planar(double a_deg, double a_prime_deg, double b_deg, double b_prime_deg);
};

/// Two-party observable (a.s)(b.s) + (a.s)(b'.s) + (a'.s)(b.s) - (a'.s)(b'.s).
BlochTensor chsh_operator(const ChshSettings &settings, const GeneratorSet &gens);

/// Expectation of the lifted CHSH operator in a two-mode state, evaluated on
/// the n = 2 embedding over `trunc` Fock levels per mode. Rejects states
/// with support beyond `trunc`.
double chsh_cv_expectation(const FockKet &omega, const ChshSettings &settings, int trunc);
double chsh_cv_expectation(const BlockMixture &omega, const ChshSettings &settings, int trunc);

/// C[x][y] = <S_x (x) S_y> for the three n = 2 pseudospin operators.
using Correlation = std::array<std::array<double, 3>, 3>;
Correlation pseudospin_correlation(const FockKet &omega, int trunc);
Correlation pseudospin_correlation(const BlockMixture &omega, int trunc);

/// a.C(b + b') + a'.C(b - b').
double chsh_value(const Correlation &c, const ChshSettings &settings);

struct ChshOptimum {
    ChshSettings settings;
    double value;
};

/// Planar-angle grid search: 15 degree grid over all four angles, then a
/// 1 degree grid within +-15 degrees of the best coarse point.
ChshOptimum refine_planar(const Correlation &c);

}  // namespace cvmap

#endif
