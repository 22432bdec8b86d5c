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

#include "vncert/quantum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vncert {

namespace {

void require_square(const CMatrix &m, const char *what) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw std::invalid_argument(std::string(what) + ": matrix must be square and non-empty");
    }
}

}  // namespace

QState::QState(CMatrix rho) : rho_(std::move(rho)) {
    require_square(rho_, "QState");
    if (!is_finite(rho_)) {
        throw std::invalid_argument("QState: non-finite entries");
    }
    if (!is_hermitian(rho_, tol::herm)) {
        throw std::invalid_argument("QState: density matrix is not Hermitian");
    }
    if (std::abs(rho_.trace() - Complex(1.0)) > tol::trace) {
        throw std::invalid_argument("QState: trace differs from 1");
    }
    if (hermitian_eigenvalues(rho_).minCoeff() < -tol::psd) {
        throw std::invalid_argument("QState: density matrix has a negative eigenvalue");
    }
}

QState QState::from_pure(const PureState &psi) {
    return QState(psi.projector());
}

QState QState::maximally_mixed(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("QState: dimension must be positive");
    }
    return QState(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

PureState::PureState(CVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0 || !amplitudes_.allFinite()) {
        throw std::invalid_argument("PureState: amplitudes must be finite and non-empty");
    }
    if (std::abs(amplitudes_.norm() - 1.0) > tol::trace) {
        throw std::invalid_argument("PureState: vector is not normalized");
    }
}

Unitary::Unitary(CMatrix u) : u_(std::move(u)) {
    require_square(u_, "Unitary");
    if (!is_finite(u_)) {
        throw std::invalid_argument("Unitary: non-finite entries");
    }
    const CMatrix gram = u_.adjoint() * u_;
    if (max_abs_diff(gram, CMatrix::Identity(u_.rows(), u_.cols())) > tol::unit) {
        throw std::invalid_argument("Unitary: matrix is not unitary");
    }
}

Unitary Unitary::identity(int dim) {
    if (dim < 1) {
        throw std::invalid_argument("Unitary: dimension must be positive");
    }
    return Unitary(CMatrix::Identity(dim, dim));
}

CMatrix VonNeumannMeasurement::effect(int i) const {
    if (i < 0 || i >= dim()) {
        throw std::out_of_range("VonNeumannMeasurement: effect index out of range");
    }
    const CVector u = basis_.column(i);
    return u * u.adjoint();
}

ChoiMatrix::ChoiMatrix(int dim_in, int dim_out, CMatrix j)
    : dim_in_(dim_in), dim_out_(dim_out), j_(std::move(j)) {
    if (dim_in < 1 || dim_out < 1) {
        throw std::invalid_argument("ChoiMatrix: dimensions must be positive");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(dim_in) * dim_out;
    if (j_.rows() != n || j_.cols() != n) {
        throw std::invalid_argument("ChoiMatrix: expected a " + std::to_string(n) + "x" +
                                    std::to_string(n) + " matrix");
    }
    if (!is_finite(j_)) {
        throw std::invalid_argument("ChoiMatrix: non-finite entries");
    }
}

bool ChoiMatrix::is_hermitian(double tolerance) const {
    return vncert::is_hermitian(j_, tolerance);
}

bool ChoiMatrix::is_cptp(double tolerance) const {
    if (!is_hermitian(tolerance)) {
        return false;
    }
    if (hermitian_eigenvalues(j_).minCoeff() < -tolerance) {
        return false;
    }
    const int dims[] = {dim_out_, dim_in_};
    const int keep[] = {1};
    const CMatrix marginal = partial_trace(j_, dims, keep);
    return max_abs_diff(marginal, CMatrix::Identity(dim_in_, dim_in_)) <= tolerance;
}

std::optional<std::vector<CMatrix>> ChoiMatrix::output_blocks() const {
    return diagonal_blocks(j_, dim_out_, dim_in_);
}

ChoiMatrix operator-(const ChoiMatrix &a, const ChoiMatrix &b) {
    if (a.dim_in_ != b.dim_in_ || a.dim_out_ != b.dim_out_) {
        throw std::invalid_argument("ChoiMatrix: dimension mismatch in difference");
    }
    return ChoiMatrix(a.dim_in_, a.dim_out_, a.j_ - b.j_);
}

ChoiMatrix operator+(const ChoiMatrix &a, const ChoiMatrix &b) {
    if (a.dim_in_ != b.dim_in_ || a.dim_out_ != b.dim_out_) {
        throw std::invalid_argument("ChoiMatrix: dimension mismatch in sum");
    }
    return ChoiMatrix(a.dim_in_, a.dim_out_, a.j_ + b.j_);
}

CMatrix apply_measurement(const VonNeumannMeasurement &p, const CMatrix &x) {
    if (x.rows() != p.dim() || x.cols() != p.dim()) {
        throw std::invalid_argument("apply_measurement: operator dimension does not match measurement");
    }
    const CMatrix &u = p.basis().matrix();
    return dephase(u.adjoint() * x * u);
}

QState vn_measure_channel(const VonNeumannMeasurement &p, const QState &rho) {
    if (rho.dim() != p.dim()) {
        throw std::invalid_argument("vn_measure_channel: state dimension does not match measurement");
    }
    return QState(apply_measurement(p, rho.matrix()));
}

ChoiMatrix choi_of_map(const LinearMap &apply, int dim_in, int dim_out) {
    const Eigen::Index n = static_cast<Eigen::Index>(dim_in) * dim_out;
    CMatrix j = CMatrix::Zero(n, n);
    CMatrix unit = CMatrix::Zero(dim_in, dim_in);
    for (int i = 0; i < dim_in; ++i) {
        for (int k = 0; k < dim_in; ++k) {
            unit(i, k) = 1.0;
            const CMatrix image = apply(unit);
            unit(i, k) = 0.0;
            if (image.rows() != dim_out || image.cols() != dim_out) {
                throw std::invalid_argument("choi_of_map: map returned a matrix of the wrong size");
            }
            // (a, i), (b, k) entry of image (x) |i><k|.
            for (int a = 0; a < dim_out; ++a) {
                for (int b = 0; b < dim_out; ++b) {
                    j(static_cast<Eigen::Index>(a) * dim_in + i,
                      static_cast<Eigen::Index>(b) * dim_in + k) = image(a, b);
                }
            }
        }
    }
    return ChoiMatrix(dim_in, dim_out, std::move(j));
}

ChoiMatrix choi_of_measurement(const VonNeumannMeasurement &p) {
    const int d = p.dim();
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    CMatrix j = CMatrix::Zero(n, n);
    for (int i = 0; i < d; ++i) {
        const CVector u = p.basis().column(i).conjugate();
        j.block(static_cast<Eigen::Index>(i) * d, static_cast<Eigen::Index>(i) * d, d, d) =
            u * u.adjoint();
    }
    return ChoiMatrix(d, d, std::move(j));
}

ChoiMatrix choi_of_unitary_channel(const Unitary &u) {
    const CVector v = vec(u.matrix());
    return ChoiMatrix(u.dim(), u.dim(), v * v.adjoint());
}

CMatrix apply_from_choi(const ChoiMatrix &j, const CMatrix &rho) {
    const int din = j.dim_in();
    const int dout = j.dim_out();
    if (rho.rows() != din || rho.cols() != din) {
        throw std::invalid_argument("apply_from_choi: input has dimension " +
                                    std::to_string(rho.rows()) + ", expected " +
                                    std::to_string(din));
    }
    const CMatrix &m = j.matrix();
    CMatrix out(dout, dout);
    for (int a = 0; a < dout; ++a) {
        for (int b = 0; b < dout; ++b) {
            // sum_{i,k} J[(a,i),(b,k)] rho[i,k]
            out(a, b) = m.block(static_cast<Eigen::Index>(a) * din,
                                static_cast<Eigen::Index>(b) * din, din, din)
                            .cwiseProduct(rho)
                            .sum();
        }
    }
    return out;
}

CMatrix apply_on_first_factor(const LinearMap &apply, const CMatrix &m, int dim_first,
                              int dim_second) {
    const Eigen::Index n = static_cast<Eigen::Index>(dim_first) * dim_second;
    if (m.rows() != n || m.cols() != n) {
        throw std::invalid_argument("apply_on_first_factor: dimension mismatch");
    }
    CMatrix out;
    CMatrix unit = CMatrix::Zero(dim_first, dim_first);
    for (int a = 0; a < dim_first; ++a) {
        for (int b = 0; b < dim_first; ++b) {
            unit(a, b) = 1.0;
            const CMatrix image = apply(unit);
            unit(a, b) = 0.0;
            if (out.size() == 0) {
                const Eigen::Index k = image.rows() * dim_second;
                out = CMatrix::Zero(k, k);
            }
            out += kron(image, m.block(static_cast<Eigen::Index>(a) * dim_second,
                                       static_cast<Eigen::Index>(b) * dim_second, dim_second,
                                       dim_second));
        }
    }
    return out;
}

}  // namespace vncert
