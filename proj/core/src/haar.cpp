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

#include "vncert/haar.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vncert {

namespace {

void require_dim_at_least(int d, int minimum, const char *what) {
    if (d < minimum) {
        throw std::invalid_argument(std::string(what) + ": dimension must be >= " +
                                    std::to_string(minimum) + ", got " + std::to_string(d));
    }
}

// dst += c * (a (x) b), skipping zero entries of a. The left factors used here
// (1, S, T) are permutation-like, so this avoids d^4 x d^4 temporaries.
void add_kron(CMatrix &dst, double c, const CMatrix &a, const CMatrix &b) {
    const Eigen::Index nb = b.rows();
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            const Complex coeff = a(i, k);
            if (coeff != Complex(0.0)) {
                dst.block(i * nb, k * nb, nb, nb) += (c * coeff) * b;
            }
        }
    }
}

CMatrix identity(int n) {
    return CMatrix::Identity(n, n);
}

AveragedChoi make(AveragedKind kind, int d, CMatrix j) {
    const int n = d * d;
    return AveragedChoi{kind, d, ChoiMatrix(n, n, std::move(j))};
}

}  // namespace

Unitary sample_haar_unitary(int d, RngStream &rng) {
    require_dim_at_least(d, 1, "sample_haar_unitary");
    CMatrix z(d, d);
    const double scale = 1.0 / std::sqrt(2.0);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            z(i, j) = Complex(re, im) * scale;
        }
    }
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ();
    const CMatrix &r = qr.matrixQR();
    for (Eigen::Index j = 0; j < d; ++j) {
        const Complex diag = r(j, j);
        const double mag = std::abs(diag);
        if (mag > 0.0) {
            q.col(j) *= diag / mag;
        }
    }
    return Unitary(std::move(q));
}

std::string_view to_string(AveragedKind kind) {
    switch (kind) {
        case AveragedKind::unitary_same:
            return "unitary-UU";
        case AveragedKind::unitary_distinct:
            return "unitary-UV";
        case AveragedKind::measurement_same:
            return "measurement-UU";
        case AveragedKind::measurement_distinct:
            return "measurement-UV";
        case AveragedKind::difference:
            return "difference-J";
    }
    return "unknown";
}

AveragedChoi avg_choi_unitary_uu(int d) {
    require_dim_at_least(d, 2, "avg_choi_unitary_uu");
    const int n = d * d;
    const double dd = d;
    const CMatrix s = swap_operator(d);
    const CMatrix one = identity(n);
    CMatrix j = CMatrix::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
    const double a = 1.0 / (dd * dd - 1.0);
    const double b = 1.0 / (dd * (dd * dd - 1.0));
    add_kron(j, a, one, one);
    add_kron(j, a, s, s);
    add_kron(j, -b, s, one);
    add_kron(j, -b, one, s);
    return make(AveragedKind::unitary_same, d, std::move(j));
}

AveragedChoi avg_choi_unitary_uv(int d) {
    require_dim_at_least(d, 1, "avg_choi_unitary_uv");
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d * d * d;
    return make(AveragedKind::unitary_distinct, d,
                CMatrix::Identity(n, n) / static_cast<double>(d * d));
}

AveragedChoi avg_choi_meas_uu(int d) {
    require_dim_at_least(d, 2, "avg_choi_meas_uu");
    const int n = d * d;
    const double dd = d;
    const CMatrix s = swap_operator(d);
    const CMatrix t = dephase(s);
    const CMatrix one = identity(n);
    CMatrix j = CMatrix::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
    const double a = 1.0 / (dd * dd - 1.0);
    add_kron(j, a, one, one - s / dd);
    add_kron(j, a, t, s - one / dd);
    return make(AveragedKind::measurement_same, d, std::move(j));
}

AveragedChoi avg_choi_meas_uv(int d) {
    require_dim_at_least(d, 1, "avg_choi_meas_uv");
    AveragedChoi out = avg_choi_unitary_uv(d);
    out.kind = AveragedKind::measurement_distinct;
    return out;
}

AveragedChoi choi_difference_J(int d) {
    require_dim_at_least(d, 2, "choi_difference_J");
    return choi_difference_J(d, dephase(swap_operator(d)));
}

AveragedChoi choi_difference_J(int d, const CMatrix &diagonal_swap) {
    require_dim_at_least(d, 2, "choi_difference_J");
    const int n = d * d;
    if (diagonal_swap.rows() != n || diagonal_swap.cols() != n) {
        throw std::invalid_argument("choi_difference_J: T must be d^2 x d^2");
    }
    const double dd = d;
    const CMatrix s = swap_operator(d);
    const CMatrix one = identity(n);
    CMatrix j = CMatrix::Zero(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(n) * n);
    const double a = 1.0 / (dd * dd - 1.0);
    add_kron(j, a, one, one / (dd * dd) - s / dd);
    add_kron(j, a, diagonal_swap, s - one / dd);
    return make(AveragedKind::difference, d, std::move(j));
}

ChoiMatrix choi_of_unitary_pair(const Unitary &u, const Unitary &w) {
    return choi_of_unitary_channel(Unitary(kron(u.matrix(), w.matrix())));
}

ChoiMatrix choi_of_measurement_pair(const Unitary &u, const Unitary &w) {
    return choi_of_measurement(VonNeumannMeasurement(Unitary(kron(u.matrix(), w.matrix()))));
}

QState sample_density_matrix(int dim, RngStream &rng) {
    require_dim_at_least(dim, 1, "sample_density_matrix");
    CMatrix g(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = Complex(re, im);
        }
    }
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Exact Hermiticity; the product is only Hermitian up to rounding.
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return QState(std::move(rho));
}

CMatrix sample_effect(int dim, RngStream &rng) {
    const Unitary basis = sample_haar_unitary(dim, rng);
    RVector spectrum(dim);
    for (int k = 0; k < dim; ++k) {
        spectrum[k] = rng.uniform();
    }
    const CMatrix &v = basis.matrix();
    CMatrix e = v * spectrum.cast<Complex>().asDiagonal() * v.adjoint();
    return (0.5 * (e + e.adjoint())).eval();
}

ChoiMatrix mc_average_choi(const ChoiSampler &sampler, long n, RngStream &rng) {
    if (n < 1) {
        throw std::invalid_argument("mc_average_choi: sample count must be positive");
    }
    ChoiMatrix first = sampler(rng);
    const int din = first.dim_in();
    const int dout = first.dim_out();
    CMatrix sum = first.matrix();
    for (long k = 1; k < n; ++k) {
        const ChoiMatrix sample = sampler(rng);
        if (sample.dim_in() != din || sample.dim_out() != dout) {
            throw std::invalid_argument("mc_average_choi: sampler changed dimensions");
        }
        sum += sample.matrix();
    }
    return ChoiMatrix(din, dout, sum / static_cast<double>(n));
}

}  // namespace vncert
