// Copyright 2026 The vncert Authors
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

#include <array>
#include <limits>
#include <stdexcept>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vncert/linalg.hpp"

namespace vncert {
namespace {

using testing::matrices_near;
using testing::random_hermitian;
using testing::random_matrix;

TEST(Vec, RowMajorStacking) {
    CMatrix id = CMatrix::Identity(2, 2);
    CVector expected(4);
    expected << 1, 0, 0, 1;
    EXPECT_EQ(vec(id), expected);

    CMatrix e01 = CMatrix::Zero(2, 2);
    e01(0, 1) = 1.0;
    expected << 0, 1, 0, 0;
    EXPECT_EQ(vec(e01), expected);

    CMatrix abcd(2, 2);
    abcd << Complex(1, 1), Complex(2, 0), Complex(3, -1), Complex(4, 2);
    expected << Complex(1, 1), Complex(2, 0), Complex(3, -1), Complex(4, 2);
    EXPECT_EQ(vec(abcd), expected);
}

TEST(Vec, UnvecRoundTripIsExact) {
    RngStream rng(11, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index rows = 1 + trial % 4;
        const Eigen::Index cols = 1 + (trial * 3) % 5;
        const CMatrix x = random_matrix(rows, cols, rng);
        EXPECT_EQ(unvec(vec(x), rows, cols), x);
    }
    EXPECT_THROW(unvec(CVector::Zero(5), 2, 2), std::invalid_argument);
}

TEST(Kron, IdentityAndProjector) {
    EXPECT_EQ(kron(CMatrix::Identity(2, 2), CMatrix::Identity(2, 2)), CMatrix::Identity(4, 4));
    CMatrix p = CMatrix::Zero(2, 2);
    p(0, 0) = 1.0;
    CMatrix expected = CMatrix::Zero(4, 4);
    expected(0, 0) = expected(1, 1) = 1.0;
    EXPECT_EQ(kron(p, CMatrix::Identity(2, 2)), expected);
}

TEST(Kron, SwapOfSwapsMatchesIndexPermutation) {
    const CMatrix s2 = swap_operator(2);
    const CMatrix ss = kron(s2, s2);
    // |i j k l> -> |j i l k>, row-major with the first index most significant.
    CMatrix oracle = CMatrix::Zero(16, 16);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    const int from = ((i * 2 + j) * 2 + k) * 2 + l;
                    const int to = ((j * 2 + i) * 2 + l) * 2 + k;
                    oracle(to, from) = 1.0;
                }
            }
        }
    }
    EXPECT_EQ(ss, oracle);
    for (const int fixed : {0, 3, 12, 15}) {
        EXPECT_EQ(ss(fixed, fixed), Complex(1.0));
    }
}

TEST(PartialTrace, ProductFactorization) {
    RngStream rng(12, 0);
    const CMatrix a = random_matrix(3, 3, rng);
    const CMatrix b = random_matrix(3, 3, rng);
    const std::array<int, 2> dims{3, 3};
    const std::array<int, 1> keep_first{0};
    const std::array<int, 1> keep_second{1};
    EXPECT_TRUE(matrices_near(partial_trace(kron(a, b), dims, keep_first), a * b.trace(), 1e-12));
    EXPECT_TRUE(matrices_near(partial_trace(kron(a, b), dims, keep_second), b * a.trace(), 1e-12));
}

TEST(PartialTrace, EntangledMarginalAndSwap) {
    const std::array<int, 2> dims{2, 2};
    const std::array<int, 1> keep_first{0};
    const std::array<int, 1> keep_second{1};
    const CVector one = vec(CMatrix::Identity(2, 2));
    EXPECT_TRUE(matrices_near(partial_trace(one * one.adjoint(), dims, keep_second),
                              CMatrix::Identity(2, 2), 1e-15));
    EXPECT_TRUE(matrices_near(partial_trace(swap_operator(2), dims, keep_first),
                              CMatrix::Identity(2, 2), 1e-15));
}

TEST(PartialTrace, TracingEverythingGivesTrace) {
    RngStream rng(13, 0);
    const std::array<int, 3> dims{2, 3, 2};
    const std::array<int, 0> keep{};
    const CMatrix m = random_matrix(12, 12, rng);
    const CMatrix t = partial_trace(m, dims, keep);
    ASSERT_EQ(t.rows(), 1);
    EXPECT_NEAR(std::abs(t(0, 0) - m.trace()), 0.0, 1e-12);
}

TEST(PartialTrace, MiddleFactorAgainstIndexSum) {
    RngStream rng(14, 0);
    const std::array<int, 3> dims{2, 3, 2};
    const std::array<int, 2> keep{0, 2};
    const CMatrix m = random_matrix(12, 12, rng);
    CMatrix oracle = CMatrix::Zero(4, 4);
    for (int a = 0; a < 2; ++a) {
        for (int c = 0; c < 2; ++c) {
            for (int a2 = 0; a2 < 2; ++a2) {
                for (int c2 = 0; c2 < 2; ++c2) {
                    for (int b = 0; b < 3; ++b) {
                        oracle(a * 2 + c, a2 * 2 + c2) +=
                            m((a * 3 + b) * 2 + c, (a2 * 3 + b) * 2 + c2);
                    }
                }
            }
        }
    }
    EXPECT_TRUE(matrices_near(partial_trace(m, dims, keep), oracle, 1e-12));
}

TEST(PartialTrace, RejectsMismatchedDimensions) {
    const std::array<int, 2> dims{2, 3};
    const std::array<int, 1> keep{0};
    const std::array<int, 1> bad_keep{2};
    EXPECT_THROW(partial_trace(CMatrix::Identity(4, 4), dims, keep), std::invalid_argument);
    EXPECT_THROW(partial_trace(CMatrix::Identity(6, 6), dims, bad_keep), std::invalid_argument);
}

TEST(Swap, SmallCases) {
    EXPECT_EQ(swap_operator(1), CMatrix::Identity(1, 1));
    CMatrix s2(4, 4);
    s2 << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
    EXPECT_EQ(swap_operator(2), s2);
    EXPECT_EQ(swap_operator(5).trace(), Complex(5.0));
}

TEST(Dephase, Examples) {
    CMatrix t(4, 4);
    t.setZero();
    t(0, 0) = t(3, 3) = 1.0;
    EXPECT_EQ(dephase(swap_operator(2)), t);

    CVector v(3);
    v << 1.0, Complex(0, 2), -3.0;
    const CMatrix diag = v.asDiagonal();
    EXPECT_EQ(dephase(diag), diag);

    RngStream rng(15, 0);
    const CMatrix x = random_matrix(5, 5, rng);
    EXPECT_NEAR(std::abs(dephase(x).trace() - x.trace()), 0.0, 1e-12);
}

TEST(Depolarize, Examples) {
    RngStream rng(16, 0);
    CMatrix rho = random_hermitian(3, rng);
    rho = rho * rho;
    rho /= rho.trace().real();
    EXPECT_TRUE(matrices_near(depolarize(rho, 3), CMatrix::Identity(3, 3) / 3.0, 1e-14));
    EXPECT_EQ(depolarize(CMatrix::Zero(3, 3), 3), CMatrix::Zero(3, 3));
}

TEST(Norms, Examples) {
    EXPECT_NEAR(trace_norm(CMatrix::Identity(4, 4)), 4.0, 1e-12);
    EXPECT_NEAR(operator_norm(CMatrix::Identity(4, 4)), 1.0, 1e-12);

    for (int d = 2; d <= 6; ++d) {
        const double dd = d;
        RVector spectrum(d * d);
        for (int k = 0; k < d * d; ++k) {
            spectrum[k] = k < d ? 1.0 / dd - 1.0 / (dd * dd) : -1.0 / (dd * dd);
        }
        const CMatrix m = spectrum.cast<Complex>().asDiagonal();
        EXPECT_NEAR(trace_norm(m), 2.0 - 2.0 / dd, 1e-12) << "d=" << d;

        const CMatrix one = CMatrix::Identity(d * d, d * d);
        const CMatrix s = swap_operator(d);
        EXPECT_NEAR(operator_norm(one - s / dd), 1.0 + 1.0 / dd, 1e-12);
        EXPECT_NEAR(operator_norm((2.0 / (dd + 1.0)) * (one - s / dd)), 2.0 / dd, 1e-12);
    }
}

TEST(Norms, NonHermitianUsesSingularValues) {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 3.0;
    EXPECT_NEAR(trace_norm(m), 3.0, 1e-12);
    EXPECT_NEAR(operator_norm(m), 3.0, 1e-12);
}

TEST(Norms, PropertyTraceNormDominatesOperatorNorm) {
    RngStream rng(17, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const Eigen::Index n = 1 + trial % 6;
        const CMatrix m = trial % 2 ? random_hermitian(n, rng) : random_matrix(n, n, rng);
        EXPECT_GE(trace_norm(m) + 1e-12, operator_norm(m));
        if (trial % 2) {
            EXPECT_NEAR(trace_norm(m), abs_hermitian(m).trace().real(), 1e-10);
        }
    }
}

TEST(AbsHermitian, Examples) {
    CMatrix d(2, 2);
    d << 1, 0, 0, -1;
    EXPECT_TRUE(matrices_near(abs_hermitian(d), CMatrix::Identity(2, 2), 1e-14));

    RngStream rng(18, 0);
    const CMatrix g = random_matrix(4, 4, rng);
    const CMatrix psd = g * g.adjoint();
    EXPECT_TRUE(matrices_near(abs_hermitian(psd), psd, 1e-10));

    CMatrix skew = CMatrix::Zero(2, 2);
    skew(0, 1) = 1.0;
    EXPECT_THROW(abs_hermitian(skew), std::invalid_argument);
}

TEST(DiagonalBlocks, DetectsStructure) {
    RngStream rng(19, 0);
    CMatrix m = CMatrix::Zero(6, 6);
    const CMatrix b0 = random_matrix(3, 3, rng);
    const CMatrix b1 = random_matrix(3, 3, rng);
    m.block(0, 0, 3, 3) = b0;
    m.block(3, 3, 3, 3) = b1;
    const auto blocks = diagonal_blocks(m, 2, 3);
    ASSERT_TRUE(blocks.has_value());
    EXPECT_EQ((*blocks)[0], b0);
    EXPECT_EQ((*blocks)[1], b1);

    m(0, 5) = 1e-300;
    EXPECT_FALSE(diagonal_blocks(m, 2, 3).has_value());
}

TEST(Finite, RejectsNaN) {
    CMatrix m = CMatrix::Identity(2, 2);
    EXPECT_TRUE(is_finite(m));
    m(1, 0) = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
    EXPECT_FALSE(is_finite(m));
}

}  // namespace
}  // namespace vncert
