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

#ifndef VNCERT_LINALG_HPP
#define VNCERT_LINALG_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace vncert {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Numerical tolerances shared by every validating constructor.
namespace tol {
inline constexpr double herm = 1e-10;
inline constexpr double unit = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-9;
inline constexpr double cptp = 1e-9;
}  // namespace tol

/// Row-major (lexicographical) vectorization: component i*cols + j is X(i, j).
/// With this convention vec(1) = sum_i |i>|i>.
CVector vec(const CMatrix &x);

/// Inverse of vec for a rows x cols matrix.
CMatrix unvec(const CVector &v, Eigen::Index rows, Eigen::Index cols);

/// Kronecker product; row index of the result is i_a * b.rows() + i_b.
CMatrix kron(const CMatrix &a, const CMatrix &b);

/// Partial trace of a square matrix over a tensor product of factors with
/// dimensions `dims` (factor 0 most significant). The kept factors appear in
/// the result in their original order. Throws std::invalid_argument if the
/// dimensions do not multiply to the matrix size or `keep` is not a strictly
/// increasing list of factor indices.
CMatrix partial_trace(const CMatrix &m, std::span<const int> dims, std::span<const int> keep);

/// Swap operator on two d-dimensional factors: S|i>|j> = |j>|i>.
CMatrix swap_operator(int d);

/// Zeroes all off-diagonal entries of a square matrix.
CMatrix dephase(const CMatrix &x);

/// Completely depolarizing channel: Tr(X) 1/d.
CMatrix depolarize(const CMatrix &x, int d);

bool is_finite(const CMatrix &m);

/// Largest entrywise deviation |M - M^dagger|.
double hermiticity_error(const CMatrix &m);
bool is_hermitian(const CMatrix &m, double tolerance = tol::herm);

/// Eigenvalues of a Hermitian matrix, ascending. Only the lower triangle is read.
RVector hermitian_eigenvalues(const CMatrix &m);

/// Sum of singular values. Hermitian inputs go through an eigendecomposition.
double trace_norm(const CMatrix &m);

/// Largest singular value.
double operator_norm(const CMatrix &m);

/// |M| for Hermitian M: same eigenvectors, absolute eigenvalues.
/// Throws std::invalid_argument for non-Hermitian input.
CMatrix abs_hermitian(const CMatrix &m);

double frobenius_norm(const CMatrix &m);

/// The `count` diagonal blocks of size `size` of an (count*size)-square matrix,
/// or nullopt if any entry outside those blocks is nonzero.
std::optional<std::vector<CMatrix>> diagonal_blocks(const CMatrix &m, int count, int size);

/// Max |a_ij - b_ij|; throws std::invalid_argument on shape mismatch.
double max_abs_diff(const CMatrix &a, const CMatrix &b);

}  // namespace vncert

#endif  // VNCERT_LINALG_HPP
