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

#include "gtest/gtest.h"
#include "test_util.h"

using namespace cvmap;
using cvmap::testing::max_diff;

namespace {

const Complex I(0, 1);

}  // namespace

TEST(BuildGenerators, QubitMatricesAsWritten) {
    const GeneratorSet g = build_generators(2);
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(max_diff(g[0], ComplexMatrix::from_rows({{0, 1}, {1, 0}})), 0.0);
    EXPECT_EQ(max_diff(g[1], ComplexMatrix::from_rows({{0, I}, {-I, 0}})), 0.0);
    EXPECT_EQ(max_diff(g[2], ComplexMatrix::from_rows({{-1, 0}, {0, 1}})), 0.0);
}

TEST(BuildGenerators, QutritU13) {
    const GeneratorSet g = build_generators(3);
    ASSERT_EQ(g.size(), 8u);
    // u12, u13, u23, ...
    EXPECT_EQ(max_diff(g[1], ComplexMatrix::from_rows({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}})), 0.0);
    EXPECT_EQ(g.labels()[1].to_string(), "u1,3");
    EXPECT_EQ(g.labels()[3].to_string(), "v1,2");
    EXPECT_EQ(g.labels()[7].to_string(), "w2");
}

TEST(BuildGenerators, QutritW2) {
    const double c = -std::sqrt(2.0 / 6.0);
    const ComplexMatrix expected = ComplexMatrix::from_rows({{c, 0, 0}, {0, c, 0}, {0, 0, -2 * c}});
    EXPECT_LT(max_diff(build_generators(3)[7], expected), 1e-15);
}

TEST(BuildGenerators, Counts) {
    for (int n = 2; n <= 8; ++n) {
        const auto labels = canonical_labels(n);
        ASSERT_EQ(labels.size(), static_cast<std::size_t>(n * n - 1));
        const auto count = [&](GeneratorFamily f) {
            return std::count_if(labels.begin(), labels.end(), [&](const GeneratorLabel &l) { return l.family == f; });
        };
        EXPECT_EQ(count(GeneratorFamily::kU), n * (n - 1) / 2);
        EXPECT_EQ(count(GeneratorFamily::kV), n * (n - 1) / 2);
        EXPECT_EQ(count(GeneratorFamily::kW), n - 1);
    }
    EXPECT_EQ(build_generators(4).size(), 15u);
}

TEST(BuildGenerators, RejectsSmallN) {
    EXPECT_THROW(build_generators(1), InvalidArgument);
    EXPECT_THROW(build_generators(0), InvalidArgument);
    EXPECT_THROW(build_generators(-3), InvalidArgument);
}

TEST(BuildGenerators, HermitianTracelessOrthogonal) {
    for (int n = 2; n <= 8; ++n) {
        const GeneratorSet g = build_generators(n);
        for (std::size_t i = 0; i < g.size(); ++i) {
            EXPECT_TRUE(g[i].is_hermitian(1e-15));
            EXPECT_LT(std::abs(g[i].trace()), 1e-12);
            for (std::size_t j = 0; j < g.size(); ++j) {
                const Complex t = cvmap::testing::naive_trace_of_product(g[i], g[j]);
                EXPECT_LT(std::abs(t - Complex(i == j ? 2.0 : 0.0)), 1e-12) << n << ": " << i << "," << j;
            }
        }
        EXPECT_LT(verify_trace_relations(g), 1e-12);
    }
}

TEST(StructureConstants, QubitValues) {
    const GeneratorSet g = build_generators(2);
    EXPECT_NEAR(g.f()(0, 1, 2), 1.0, 1e-14);
    EXPECT_NEAR(g.f()(1, 0, 2), -1.0, 1e-14);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t l = 0; l < 3; ++l)
            EXPECT_EQ(g.f()(j, j, l), 0.0);
}

TEST(StructureConstants, MatchTraceFormulaOracle) {
    // f_jkl = -(i/4) Tr((s_j s_k - s_k s_j) s_l), evaluated by triple loops.
    const GeneratorSet g = build_generators(3);
    for (std::size_t j = 0; j < g.size(); ++j) {
        for (std::size_t k = 0; k < g.size(); ++k) {
            const auto jk = cvmap::testing::naive_product(g[j], g[k]);
            const auto kj = cvmap::testing::naive_product(g[k], g[j]);
            std::vector<Complex> c(jk.size());
            for (std::size_t e = 0; e < c.size(); ++e) c[e] = jk[e] - kj[e];
            const ComplexMatrix bracket(3, c);
            for (std::size_t l = 0; l < g.size(); ++l) {
                const Complex f = -I / 4.0 * cvmap::testing::naive_trace_of_product(bracket, g[l]);
                EXPECT_NEAR(f.imag(), 0.0, 1e-14);
                EXPECT_NEAR(g.f()(j, k, l), f.real(), 1e-13);
            }
        }
    }
}

TEST(StructureConstants, CompletelyAntisymmetric) {
    for (int n = 2; n <= 6; ++n) {
        EXPECT_LT(build_generators(n).f().antisymmetry_residual(), 1e-12);
    }
}

TEST(StructureConstants, QutritMagnitudesMatchGellMann) {
    const GeneratorSet g = build_generators(3);
    std::vector<double> mags;
    for (std::size_t j = 0; j < 8; ++j)
        for (std::size_t k = j + 1; k < 8; ++k)
            for (std::size_t l = k + 1; l < 8; ++l)
                if (std::abs(g.f()(j, k, l)) > 1e-12) mags.push_back(std::abs(g.f()(j, k, l)));
    std::sort(mags.begin(), mags.end());
    std::vector<double> expected(6, 0.5);
    expected.push_back(std::sqrt(3.0) / 2);
    expected.push_back(std::sqrt(3.0) / 2);
    expected.push_back(1.0);
    ASSERT_EQ(mags.size(), expected.size());
    for (std::size_t i = 0; i < mags.size(); ++i) {
        EXPECT_NEAR(mags[i], expected[i], 1e-12);
    }
}

TEST(StructureConstants, ImaginaryResidueRejected) {
    // Non-Hermitian inputs: [a, b] = diag(1, -1), so f_abc = -i/4.
    std::vector<ComplexMatrix> bad = {ComplexMatrix::from_rows({{0, 1}, {0, 0}}),
                                      ComplexMatrix::from_rows({{0, 0}, {1, 0}}),
                                      ComplexMatrix::from_rows({{1, 0}, {0, 0}})};
    EXPECT_THROW(structure_constants(bad), NumericalError);
}

TEST(VerifyAlgebra, ResidualsSmall) {
    EXPECT_LT(verify_algebra(build_generators(2)), 1e-14);
    for (int n = 3; n <= 8; ++n) {
        EXPECT_LT(verify_algebra(build_generators(n)), 1e-12) << n;
    }
}

TEST(VerifyAlgebra, DetectsBrokenGenerators) {
    const GeneratorSet good = build_generators(2);
    std::vector<ComplexMatrix> gens(good.generators().begin(), good.generators().end());
    gens[2] = Complex(2.0) * gens[2];
    EXPECT_GT(verify_algebra(GeneratorSet(2, gens)), 0.1);
    EXPECT_GT(verify_trace_relations(GeneratorSet(2, gens)), 0.1);
}
