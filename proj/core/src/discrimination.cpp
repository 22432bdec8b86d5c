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

#include "vncert/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vncert/haar.hpp"

namespace vncert {

namespace {

constexpr double kClampSlack = 1e-12;

double clamp_probability(double p, const char *what) {
    if (p < 0.0 && p >= -kClampSlack) {
        return 0.0;
    }
    if (p > 1.0 && p <= 1.0 + kClampSlack) {
        return 1.0;
    }
    if (p < 0.0 || p > 1.0 || std::isnan(p)) {
        throw std::domain_error(std::string(what) + ": probability " + std::to_string(p) +
                                " outside [0, 1]");
    }
    return p;
}

void require_same_dim(const QState &a, const QState &b, const BinaryPOVM &povm, const char *what) {
    if (a.dim() != b.dim() || a.dim() != povm.dim()) {
        throw std::invalid_argument(std::string(what) + ": states and effect have different dimensions");
    }
}

// Eigendecomposition of a Hermitian block; returns (|B|, sum |lambda|).
std::pair<CMatrix, double> abs_and_trace_norm(const CMatrix &block) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(block);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("diamond_bounds: eigensolver did not converge");
    }
    const RVector mags = solver.eigenvalues().cwiseAbs();
    const CMatrix &v = solver.eigenvectors();
    return {v * mags.cast<Complex>().asDiagonal() * v.adjoint(), mags.sum()};
}

DiamondBounds bounds_from_blocks(const std::vector<CMatrix> &blocks, int dim_in) {
    CMatrix marginal = CMatrix::Zero(dim_in, dim_in);
    double total = 0.0;
    for (const CMatrix &block : blocks) {
        auto [abs_block, norm] = abs_and_trace_norm(block);
        marginal += abs_block;
        total += norm;
    }
    return {total / dim_in, operator_norm(marginal)};
}

DiamondBounds bounds_dense(const ChoiMatrix &j) {
    const int dims[] = {j.dim_out(), j.dim_in()};
    const int keep[] = {1};
    const double lower = trace_norm(j.matrix()) / j.dim_in();
    const double upper = operator_norm(partial_trace(abs_hermitian(j.matrix()), dims, keep));
    return {lower, upper};
}

}  // namespace

std::string_view to_string(Mode mode) {
    return mode == Mode::both_unknown ? "both-unknown" : "one-fixed";
}

std::string_view to_string(Scheme scheme) {
    return scheme == Scheme::symmetric ? "symmetric" : "asymmetric";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "both-unknown") return Mode::both_unknown;
    if (text == "one-fixed") return Mode::one_fixed;
    return std::nullopt;
}

std::optional<Scheme> parse_scheme(std::string_view text) {
    if (text == "symmetric") return Scheme::symmetric;
    if (text == "asymmetric") return Scheme::asymmetric;
    return std::nullopt;
}

BinaryPOVM::BinaryPOVM(CMatrix omega) : omega_(std::move(omega)) {
    if (omega_.rows() != omega_.cols() || omega_.rows() == 0 || !is_finite(omega_)) {
        throw std::invalid_argument("BinaryPOVM: effect must be a finite square matrix");
    }
    if (!is_hermitian(omega_, tol::herm)) {
        throw std::invalid_argument("BinaryPOVM: effect is not Hermitian");
    }
    const RVector ev = hermitian_eigenvalues(omega_);
    if (ev.minCoeff() < -tol::psd || ev.maxCoeff() > 1.0 + tol::psd) {
        throw std::invalid_argument("BinaryPOVM: effect spectrum outside [0, 1]");
    }
}

DiamondBounds diamond_bounds(const ChoiMatrix &j, DiamondMethod method) {
    if (!j.is_hermitian()) {
        throw std::invalid_argument("diamond_bounds: Choi matrix is not Hermitian");
    }
    if (method == DiamondMethod::dense) {
        return bounds_dense(j);
    }
    auto blocks = j.output_blocks();
    if (blocks) {
        return bounds_from_blocks(*blocks, j.dim_in());
    }
    if (method == DiamondMethod::output_blocks) {
        throw std::invalid_argument("diamond_bounds: Choi matrix is not block diagonal in the output basis");
    }
    return bounds_dense(j);
}

double helstrom_success(double diamond_value) {
    if (!(diamond_value >= -kClampSlack && diamond_value <= 2.0 + kClampSlack)) {
        throw std::domain_error("helstrom_success: diamond distance must lie in [0, 2]");
    }
    return 0.5 + std::clamp(diamond_value, 0.0, 2.0) / 4.0;
}

double helstrom_error(const QState &rho0, const QState &rho1) {
    if (rho0.dim() != rho1.dim()) {
        throw std::invalid_argument("helstrom_error: states have different dimensions");
    }
    return 0.5 - trace_norm(rho0.matrix() - rho1.matrix()) / 4.0;
}

PureState antisymmetric_state(int d, int i, int j) {
    if (d < 2) {
        throw std::invalid_argument("antisymmetric_state: dimension must be >= 2");
    }
    if (i < 0 || j < 0 || i >= d || j >= d || i == j) {
        throw std::invalid_argument("antisymmetric_state: need distinct indices in [0, d)");
    }
    CVector a = CVector::Zero(static_cast<Eigen::Index>(d) * d);
    const double amp = 1.0 / std::sqrt(2.0);
    a[static_cast<Eigen::Index>(i) * d + j] = amp;
    a[static_cast<Eigen::Index>(j) * d + i] = -amp;
    return PureState(std::move(a));
}

QState max_entangled_input(int d) {
    if (d < 1) {
        throw std::invalid_argument("max_entangled_input: dimension must be positive");
    }
    const CVector v = vec(CMatrix::Identity(d, d));
    return QState(v * v.adjoint() / static_cast<double>(d));
}

BinaryPOVM omega_both_unknown(int d) {
    if (d < 2) {
        throw std::invalid_argument("omega_both_unknown: dimension must be >= 2");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    return BinaryPOVM(CMatrix::Identity(n, n) - dephase(swap_operator(d)));
}

BinaryPOVM omega_one_fixed(const Unitary &u) {
    return BinaryPOVM(choi_of_measurement(VonNeumannMeasurement(u)).matrix());
}

ErrorPair type_errors(const QState &rho0, const QState &rho1, const BinaryPOVM &povm) {
    require_same_dim(rho0, rho1, povm, "type_errors");
    const double accept0 = (povm.omega() * rho0.matrix()).trace().real();
    const double accept1 = (povm.omega() * rho1.matrix()).trace().real();
    return {clamp_probability(1.0 - accept0, "type_errors"),
            clamp_probability(accept1, "type_errors")};
}

double achieved_distance(const ChoiMatrix &j, const QState &rho) {
    if (rho.dim() != j.dim_in()) {
        throw std::invalid_argument("achieved_distance: state is not on the input space of J");
    }
    return trace_norm(apply_from_choi(j, rho.matrix()));
}

ChoiMatrix choi_fixed_minus_haar(const VonNeumannMeasurement &fixed) {
    const int d = fixed.dim();
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    const ChoiMatrix haar_average(d, d, CMatrix::Identity(n, n) / static_cast<double>(d));
    return choi_of_measurement(fixed) - haar_average;
}

std::pair<QState, QState> both_unknown_output_states(int d, const QState &input) {
    if (input.dim() != d * d) {
        throw std::invalid_argument("both_unknown_output_states: input must live on d^2 dimensions");
    }
    QState rho0(apply_from_choi(avg_choi_meas_uu(d).value, input.matrix()));
    QState rho1(apply_from_choi(avg_choi_meas_uv(d).value, input.matrix()));
    return {std::move(rho0), std::move(rho1)};
}

std::pair<QState, QState> one_fixed_output_states(const Unitary &u) {
    const int d = u.dim();
    const QState psi = max_entangled_input(d);
    const VonNeumannMeasurement p(u);
    const LinearMap fixed_box = [&p](const CMatrix &x) { return apply_measurement(p, x); };
    const LinearMap averaged_box = [d](const CMatrix &x) { return depolarize(x, d); };
    QState rho0(apply_on_first_factor(fixed_box, psi.matrix(), d, d));
    QState rho1(apply_on_first_factor(averaged_box, psi.matrix(), d, d));
    return {std::move(rho0), std::move(rho1)};
}

CMatrix lemma_w_operator(int d) {
    if (d < 2) {
        throw std::invalid_argument("lemma_w_operator: dimension must be >= 2");
    }
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    const CMatrix t = dephase(swap_operator(d));
    return kron(2.0 * t - CMatrix::Identity(n, n), swap_operator(d));
}

LemmaCheck lemma_wj_check(int d) {
    return lemma_wj_check(choi_difference_J(d).value, lemma_w_operator(d));
}

LemmaCheck lemma_wj_check(const ChoiMatrix &j, const CMatrix &w) {
    const CMatrix &jm = j.matrix();
    if (w.rows() != jm.rows() || w.cols() != jm.cols()) {
        throw std::invalid_argument("lemma_wj_check: W and J have different shapes");
    }
    LemmaCheck out{};
    out.w_hermiticity_error = hermiticity_error(w);

    auto j_blocks = j.output_blocks();
    auto w_blocks = diagonal_blocks(w, j.dim_out(), j.dim_in());
    if (j_blocks && w_blocks) {
        double residual_sq = 0.0;
        double j2_sq = 0.0;
        double unit_err = 0.0;
        const CMatrix one = CMatrix::Identity(j.dim_in(), j.dim_in());
        for (std::size_t k = 0; k < j_blocks->size(); ++k) {
            const CMatrix &jk = (*j_blocks)[k];
            const CMatrix &wk = (*w_blocks)[k];
            const CMatrix wj = wk * jk;
            const CMatrix j2 = jk * jk;
            residual_sq += (wj * wj - j2).squaredNorm();
            j2_sq += j2.squaredNorm();
            unit_err = std::max(unit_err, max_abs_diff(wk.adjoint() * wk, one));
        }
        out.residual = std::sqrt(residual_sq);
        out.relative_residual = out.residual / (1.0 + std::sqrt(j2_sq));
        out.w_unitarity_error = unit_err;
        return out;
    }

    const CMatrix wj = w * jm;
    const CMatrix j2 = jm * jm;
    out.residual = (wj * wj - j2).norm();
    out.relative_residual = out.residual / (1.0 + j2.norm());
    out.w_unitarity_error = max_abs_diff(w.adjoint() * w, CMatrix::Identity(w.rows(), w.cols()));
    return out;
}

double error_mean_inequality(const QState &rho0, const QState &rho1, const BinaryPOVM &povm) {
    require_same_dim(rho0, rho1, povm, "error_mean_inequality");
    const ErrorPair errors = type_errors(rho0, rho1, povm);
    return 0.5 * (errors.p1 + errors.p2) - helstrom_error(rho0, rho1);
}

AnalyticRow analytic_table(Mode mode, int d) {
    if (d < 2) {
        throw std::invalid_argument("dimension must be >= 2");
    }
    const double dd = d;
    if (mode == Mode::both_unknown) {
        const double p_succ = 0.5 + 1.0 / (2.0 * dd);
        return {mode, d, p_succ, 0.5 - 1.0 / (2.0 * dd), 0.0, 1.0 - 1.0 / dd, false, 2.0 / dd};
    }
    const double p_succ = 1.0 - 1.0 / (2.0 * dd);
    return {mode, d, p_succ, 1.0 / (2.0 * dd), 0.0, 1.0 / dd, true, 2.0 - 2.0 / dd};
}

}  // namespace vncert
