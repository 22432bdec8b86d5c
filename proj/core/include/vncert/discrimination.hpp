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

#ifndef VNCERT_DISCRIMINATION_HPP
#define VNCERT_DISCRIMINATION_HPP

#include <optional>
#include <string_view>
#include <utility>

#include "vncert/quantum.hpp"

namespace vncert {

/// both_unknown: reference box given without description (Haar-random).
/// one_fixed: reference box P_U with U known.
enum class Mode { both_unknown, one_fixed };
enum class Scheme { symmetric, asymmetric };

std::string_view to_string(Mode mode);
std::string_view to_string(Scheme scheme);
std::optional<Mode> parse_mode(std::string_view text);
std::optional<Scheme> parse_scheme(std::string_view text);

/// Two-outcome measurement {omega, 1 - omega}; omega accepts H0.
class BinaryPOVM {
   public:
    /// Throws std::invalid_argument unless omega is Hermitian with spectrum
    /// in [-tol::psd, 1 + tol::psd].
    explicit BinaryPOVM(CMatrix omega);

    int dim() const { return static_cast<int>(omega_.rows()); }
    const CMatrix &omega() const { return omega_; }

   private:
    CMatrix omega_;
};

/// Type I (reject a true H0) and type II (accept a false H0) probabilities.
struct ErrorPair {
    double p1;
    double p2;
};

struct AnalyticRow {
    Mode mode;
    int d;
    double p_succ;
    double p_err;
    double p1;
    double p2;
    bool ancilla_needed;
    /// Diamond distance between the two hypotheses' channels.
    double diamond;
};

struct DiamondBounds {
    double lower;
    double upper;
};

enum class DiamondMethod {
    automatic,      ///< output blocks when the Choi matrix has them, dense otherwise
    dense,          ///< full eigendecomposition of J
    output_blocks,  ///< requires block structure; throws otherwise
};

/// (1/dim_in) ||J||_1 <= ||Psi||_diamond <= || Tr_out |J| ||.
/// Throws std::invalid_argument if J is not Hermitian.
DiamondBounds diamond_bounds(const ChoiMatrix &j, DiamondMethod method = DiamondMethod::automatic);

/// Holevo-Helstrom optimum 1/2 + ||Psi_0 - Psi_1||_diamond / 4 for equal priors.
/// Throws std::domain_error outside [0, 2].
double helstrom_success(double diamond_value);

/// 1/2 - ||rho0 - rho1||_1 / 4.
double helstrom_error(const QState &rho0, const QState &rho1);

/// (|ij> - |ji>)/sqrt(2) on two d-dimensional systems.
PureState antisymmetric_state(int d, int i, int j);

/// (1/d) |1>><<1|.
QState max_entangled_input(int d);

/// 1 - T: projector onto |ij> with i != j.
BinaryPOVM omega_both_unknown(int d);

/// sum_i |i><i| (x) conj(|u_i><u_i|).
BinaryPOVM omega_one_fixed(const Unitary &u);

/// (1 - Tr(omega rho0), Tr(omega rho1)); values within 1e-12 of [0, 1] are
/// clamped, anything further out throws std::domain_error.
ErrorPair type_errors(const QState &rho0, const QState &rho1, const BinaryPOVM &povm);

/// ||Tr_in[J (1 (x) rho^T)]||_1: the output distance reached with input rho and
/// no ancilla.
double achieved_distance(const ChoiMatrix &j, const QState &rho);

/// J(P_U) - J(integral of P_V dV) on a single d-dimensional system.
ChoiMatrix choi_fixed_minus_haar(const VonNeumannMeasurement &fixed);

/// Output states (rho0, rho1) of the averaged two-box channels on `input`.
std::pair<QState, QState> both_unknown_output_states(int d, const QState &input);

/// Output states (P_U (x) 1)(psi) and averaged (P_V (x) 1)(psi) for
/// psi = (1/d)|1>><<1|.
std::pair<QState, QState> one_fixed_output_states(const Unitary &u);

/// W = (2T - 1) (x) S.
CMatrix lemma_w_operator(int d);

struct LemmaCheck {
    double residual;           ///< ||(WJ)^2 - J^2||_F
    double relative_residual;  ///< residual / (1 + ||J^2||_F)
    double w_unitarity_error;  ///< max |W^dagger W - 1|
    double w_hermiticity_error;
};

LemmaCheck lemma_wj_check(int d);

/// Same check for caller-supplied J and W (both on dim_out * dim_in).
LemmaCheck lemma_wj_check(const ChoiMatrix &j, const CMatrix &w);

/// (p1 + p2)/2 - p_e^H for the supplied state pair and effect. Nonnegative
/// up to rounding for every valid input.
double error_mean_inequality(const QState &rho0, const QState &rho1, const BinaryPOVM &povm);

/// Closed-form optimal values for the given mode. Throws std::invalid_argument for d < 2.
AnalyticRow analytic_table(Mode mode, int d);

}  // namespace vncert

#endif  // VNCERT_DISCRIMINATION_HPP
