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

#ifndef VNCERT_HAAR_HPP
#define VNCERT_HAAR_HPP

#include <functional>
#include <string_view>

#include "vncert/quantum.hpp"
#include "vncert/rng.hpp"

namespace vncert {

/// Haar-distributed unitary: complex Ginibre matrix, QR, then each column of Q
/// multiplied by the phase of the matching diagonal entry of R.
Unitary sample_haar_unitary(int d, RngStream &rng);

/// Which two-copy Haar average a Choi matrix represents. All of them act on
/// two d-dimensional systems, so input and output dimensions are both d^2.
enum class AveragedKind {
    unitary_same,      ///< integral of Phi_U (x) Phi_U dU
    unitary_distinct,  ///< integral of Phi_U (x) Phi_V dU dV
    measurement_same,  ///< integral of P_U (x) P_U dU
    measurement_distinct,
    difference,        ///< measurement_same - measurement_distinct
};

std::string_view to_string(AveragedKind kind);

struct AveragedChoi {
    AveragedKind kind;
    int dim;  ///< single-system dimension d
    ChoiMatrix value;
};

/// (1/(d^2-1)) (1(x)1 + S(x)S) - (1/(d(d^2-1))) (S(x)1 + 1(x)S). Requires d >= 2.
AveragedChoi avg_choi_unitary_uu(int d);

/// 1/d^2 on all d^4 dimensions.
AveragedChoi avg_choi_unitary_uv(int d);

/// (1/(d^2-1)) [1 (x) (1 - S/d) + T (x) (S - 1/d)] with T = dephase(S). Requires d >= 2.
AveragedChoi avg_choi_meas_uu(int d);

/// 1/d^2 on all d^4 dimensions.
AveragedChoi avg_choi_meas_uv(int d);

/// (1/(d^2-1)) [1 (x) (1/d^2 - S/d) + T (x) (S - 1/d)]. Requires d >= 2.
AveragedChoi choi_difference_J(int d);

/// Same formula with a caller-supplied d^2 x d^2 matrix in place of T. Exists
/// so verification code can be exercised against a corrupted T.
AveragedChoi choi_difference_J(int d, const CMatrix &diagonal_swap);

/// Choi matrix of Phi_U (x) Phi_W on two d-dimensional systems.
ChoiMatrix choi_of_unitary_pair(const Unitary &u, const Unitary &w);

/// Choi matrix of P_U (x) P_W on two d-dimensional systems.
ChoiMatrix choi_of_measurement_pair(const Unitary &u, const Unitary &w);

/// Random mixed state G G^dagger / Tr(G G^dagger) with G a dim x dim Ginibre matrix.
QState sample_density_matrix(int dim, RngStream &rng);

/// Random effect 0 <= E <= 1: Haar eigenbasis, eigenvalues uniform in [0, 1].
CMatrix sample_effect(int dim, RngStream &rng);

using ChoiSampler = std::function<ChoiMatrix(RngStream &)>;

/// Arithmetic mean of n sampled Choi matrices drawn sequentially from `rng`.
ChoiMatrix mc_average_choi(const ChoiSampler &sampler, long n, RngStream &rng);

}  // namespace vncert

#endif  // VNCERT_HAAR_HPP
