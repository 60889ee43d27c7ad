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

#include <cmath>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace cvmap;

TEST(BlockProjector, Examples) {
    const SparseMatrix p = block_projector(6, 2, 1, 1, 2);
    ASSERT_EQ(p.nonzeros(), 1u);
    EXPECT_EQ(p.entries()[0].row, 2u);
    EXPECT_EQ(p.entries()[0].col, 3u);
    EXPECT_EQ(p.entries()[0].value, Complex(1.0));

    const SparseMatrix d = block_projector(6, 2, 0, 1, 1);
    ASSERT_EQ(d.nonzeros(), 1u);
    EXPECT_EQ(d.at(0, 0), Complex(1.0));
}

TEST(BlockProjector, RejectsOutOfRange) {
    EXPECT_THROW(block_projector(7, 3, 2, 1, 2), InvalidArgument);
    EXPECT_THROW(block_projector(7, 3, -1, 1, 2), InvalidArgument);
    EXPECT_THROW(block_projector(7, 3, 0, 0, 2), InvalidArgument);
    EXPECT_THROW(block_projector(7, 3, 0, 1, 4), InvalidArgument);
    EXPECT_NO_THROW(block_projector(7, 3, 1, 3, 3));
}

TEST(BuildEmbedded, QubitPairsN6) {
    const EmbeddedGeneratorSet eg = build_embedded(6, 2);
    EXPECT_EQ(eg.blocks(), 3);
    EXPECT_EQ(eg.unused_tail(), 0);
    const SparseMatrix &u = eg[0];
    ASSERT_EQ(u.nonzeros(), 6u);
    for (auto [r, c] : {std::pair{0, 1}, {1, 0}, {2, 3}, {3, 2}, {4, 5}, {5, 4}}) {
        EXPECT_EQ(u.at(r, c), Complex(1.0)) << r << "," << c;
    }
    for (std::size_t i = 0; i < eg.size(); ++i) {
        for (std::size_t j = 0; j < eg.size(); ++j) {
            EXPECT_EQ(trace_product(eg[i], eg[j]), Complex(i == j ? 6.0 : 0.0));
        }
    }
}

TEST(BuildEmbedded, UnusedTailIsZero) {
    const EmbeddedGeneratorSet eg = build_embedded(7, 3);
    EXPECT_EQ(eg.blocks(), 2);
    EXPECT_EQ(eg.unused_tail(), 1);
    for (const auto &s : eg.generators()) {
        for (const auto &e : s.entries()) {
            EXPECT_NE(e.row, 6u);
            EXPECT_NE(e.col, 6u);
        }
    }
}

TEST(BuildEmbedded, RejectsBadDimensions) {
    EXPECT_THROW(build_embedded(3, 4), InvalidArgument);
    EXPECT_THROW(build_embedded(5, 1), InvalidArgument);
    EXPECT_NO_THROW(build_embedded(2, 2));
}

TEST(BuildEmbedded, BlocksReplicateQuditGenerators) {
    for (int n = 2; n <= 4; ++n) {
        for (int N = n; N <= 13; ++N) {
            const EmbeddedGeneratorSet eg = build_embedded(N, n);
            const GeneratorSet g = build_generators(n);
            for (std::size_t j = 0; j < g.size(); ++j) {
                const ComplexMatrix dense = eg[j].to_dense();
                for (int r = 0; r < N; ++r) {
                    for (int c = 0; c < N; ++c) {
                        const bool in_block = r / n == c / n && r / n < eg.blocks();
                        const Complex expected = in_block ? g[j](r % n, c % n) : Complex{};
                        ASSERT_EQ(dense(r, c), expected) << N << "," << n << ": " << j << " at " << r << "," << c;
                    }
                }
            }
        }
    }
}

TEST(BuildEmbedded, SharesStructureConstants) {
    const EmbeddedGeneratorSet eg = build_embedded(10, 3);
    const GeneratorSet g = build_generators(3);
    for (std::size_t j = 0; j < 8; ++j)
        for (std::size_t k = 0; k < 8; ++k)
            for (std::size_t l = 0; l < 8; ++l)
                EXPECT_EQ(eg.f()(j, k, l), g.f()(j, k, l));
}

TEST(VerifyEmbedded, Examples) {
    EXPECT_LT(verify_embedded(build_embedded(4, 2)), 1e-14);
    EXPECT_LT(verify_embedded(build_embedded(9, 3)), 1e-12);
    const EmbeddedGeneratorSet eg = build_embedded(10, 3);
    EXPECT_LT(verify_embedded(eg), 1e-12);
    for (const auto &s : eg.generators()) {
        EXPECT_TRUE(s.row(9).empty());
    }
}

TEST(VerifyEmbedded, TraceRelationsOnGrid) {
    for (int n = 2; n <= 6; ++n) {
        for (int N = n; N <= 24; ++N) {
            const EmbeddedGeneratorSet eg = build_embedded(N, n);
            EXPECT_LT(verify_embedded_trace_relations(eg), 1e-12) << N << "," << n;
            EXPECT_LT(verify_embedded(eg), 1e-12) << N << "," << n;
        }
    }
}

TEST(UsedSubspaceProjector, Examples) {
    EXPECT_EQ(cvmap::testing::max_diff(used_subspace_projector(6, 2).to_dense(), ComplexMatrix::identity(6)), 0.0);
    const auto p7 = used_subspace_projector(7, 3);
    EXPECT_EQ(p7.nonzeros(), 6u);
    EXPECT_EQ(p7.at(6, 6), Complex(0.0));
    const auto p5 = used_subspace_projector(5, 4);
    EXPECT_EQ(p5.nonzeros(), 4u);
    EXPECT_EQ(p5.at(3, 3), Complex(1.0));
    EXPECT_EQ(p5.at(4, 4), Complex(0.0));
    EXPECT_THROW(used_subspace_projector(3, 4), InvalidArgument);
}
