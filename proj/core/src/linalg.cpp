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

#include "vncert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace vncert {

CVector vec(const CMatrix &x) {
    CVector v(x.size());
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
        for (Eigen::Index j = 0; j < x.cols(); ++j) {
            v[i * x.cols() + j] = x(i, j);
        }
    }
    return v;
}

CMatrix unvec(const CVector &v, Eigen::Index rows, Eigen::Index cols) {
    if (rows * cols != v.size()) {
        throw std::invalid_argument("unvec: vector length " + std::to_string(v.size()) +
                                    " does not match " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
    CMatrix x(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index j = 0; j < cols; ++j) {
            x(i, j) = v[i * cols + j];
        }
    }
    return x;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

CMatrix partial_trace(const CMatrix &m, std::span<const int> dims, std::span<const int> keep) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("partial_trace: matrix is not square");
    }
    Eigen::Index total = 1;
    for (int d : dims) {
        if (d < 1) {
            throw std::invalid_argument("partial_trace: factor dimensions must be positive");
        }
        total *= d;
    }
    if (total != m.rows()) {
        throw std::invalid_argument("partial_trace: factor dimensions multiply to " +
                                    std::to_string(total) + " but matrix has size " +
                                    std::to_string(m.rows()));
    }
    const int n = static_cast<int>(dims.size());
    std::vector<bool> kept(n, false);
    int previous = -1;
    for (int k : keep) {
        if (k <= previous || k >= n) {
            throw std::invalid_argument("partial_trace: keep must list increasing factor indices");
        }
        kept[k] = true;
        previous = k;
    }

    // Split every full index into (kept part, traced part), both mixed-radix.
    Eigen::Index kept_dim = 1;
    Eigen::Index traced_dim = 1;
    for (int f = 0; f < n; ++f) {
        (kept[f] ? kept_dim : traced_dim) *= dims[f];
    }
    std::vector<Eigen::Index> kept_part(total), traced_part(total);
    std::vector<Eigen::Index> compose(kept_dim * traced_dim);
    for (Eigen::Index idx = 0; idx < total; ++idx) {
        Eigen::Index rest = idx;
        Eigen::Index kp = 0, tp = 0, kscale = 1, tscale = 1;
        for (int f = n - 1; f >= 0; --f) {
            Eigen::Index digit = rest % dims[f];
            rest /= dims[f];
            if (kept[f]) {
                kp += digit * kscale;
                kscale *= dims[f];
            } else {
                tp += digit * tscale;
                tscale *= dims[f];
            }
        }
        kept_part[idx] = kp;
        traced_part[idx] = tp;
        compose[kp * traced_dim + tp] = idx;
    }

    CMatrix out = CMatrix::Zero(kept_dim, kept_dim);
    for (Eigen::Index col = 0; col < total; ++col) {
        const Eigen::Index kc = kept_part[col];
        const Eigen::Index tc = traced_part[col];
        for (Eigen::Index kr = 0; kr < kept_dim; ++kr) {
            out(kr, kc) += m(compose[kr * traced_dim + tc], col);
        }
    }
    return out;
}

CMatrix swap_operator(int d) {
    if (d < 1) {
        throw std::invalid_argument("swap_operator: dimension must be positive");
    }
    CMatrix s = CMatrix::Zero(d * d, d * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            s(j * d + i, i * d + j) = 1.0;
        }
    }
    return s;
}

CMatrix dephase(const CMatrix &x) {
    if (x.rows() != x.cols()) {
        throw std::invalid_argument("dephase: matrix is not square");
    }
    CMatrix out = CMatrix::Zero(x.rows(), x.cols());
    out.diagonal() = x.diagonal();
    return out;
}

CMatrix depolarize(const CMatrix &x, int d) {
    if (d < 1 || x.rows() != d || x.cols() != d) {
        throw std::invalid_argument("depolarize: expected a " + std::to_string(d) + "x" +
                                    std::to_string(d) + " matrix");
    }
    return CMatrix::Identity(d, d) * (x.trace() / static_cast<double>(d));
}

bool is_finite(const CMatrix &m) {
    return m.allFinite();
}

double hermiticity_error(const CMatrix &m) {
    if (m.rows() != m.cols()) {
        return INFINITY;
    }
    double worst = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = j; i < m.rows(); ++i) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

bool is_hermitian(const CMatrix &m, double tolerance) {
    return hermiticity_error(m) <= tolerance;
}

RVector hermitian_eigenvalues(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigenvalues: eigensolver did not converge");
    }
    return solver.eigenvalues();
}

double trace_norm(const CMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    if (is_hermitian(m)) {
        return hermitian_eigenvalues(m).cwiseAbs().sum();
    }
    Eigen::BDCSVD<CMatrix> svd(m);
    return svd.singularValues().sum();
}

double operator_norm(const CMatrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    if (is_hermitian(m)) {
        return hermitian_eigenvalues(m).cwiseAbs().maxCoeff();
    }
    Eigen::BDCSVD<CMatrix> svd(m);
    return svd.singularValues().maxCoeff();
}

CMatrix abs_hermitian(const CMatrix &m) {
    if (!is_hermitian(m)) {
        throw std::invalid_argument("abs_hermitian: matrix is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("abs_hermitian: eigensolver did not converge");
    }
    const CMatrix &v = solver.eigenvectors();
    return v * solver.eigenvalues().cwiseAbs().cast<Complex>().asDiagonal() * v.adjoint();
}

double frobenius_norm(const CMatrix &m) {
    return m.norm();
}

std::optional<std::vector<CMatrix>> diagonal_blocks(const CMatrix &m, int count, int size) {
    const Eigen::Index n = size;
    if (count < 1 || size < 1 || m.rows() != count * n || m.cols() != count * n) {
        throw std::invalid_argument("diagonal_blocks: matrix shape does not match block layout");
    }
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            if (a != b && (m.block(a * n, b * n, n, n).array() != Complex(0.0)).any()) {
                return std::nullopt;
            }
        }
    }
    std::vector<CMatrix> blocks;
    blocks.reserve(count);
    for (int a = 0; a < count; ++a) {
        blocks.emplace_back(m.block(a * n, a * n, n, n));
    }
    return blocks;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace vncert
