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

#ifndef VNCERT_QUANTUM_HPP
#define VNCERT_QUANTUM_HPP

#include <functional>
#include <optional>
#include <vector>

#include "vncert/linalg.hpp"

namespace vncert {

class PureState;

/// Density matrix. Construction enforces Hermiticity, positivity and unit
/// trace; violations throw std::invalid_argument.
class QState {
   public:
    explicit QState(CMatrix rho);

    static QState from_pure(const PureState &psi);
    static QState maximally_mixed(int dim);

    int dim() const { return static_cast<int>(rho_.rows()); }
    const CMatrix &matrix() const { return rho_; }

   private:
    CMatrix rho_;
};

/// Unit vector |psi>.
class PureState {
   public:
    explicit PureState(CVector amplitudes);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const CVector &amplitudes() const { return amplitudes_; }
    CMatrix projector() const { return amplitudes_ * amplitudes_.adjoint(); }

   private:
    CVector amplitudes_;
};

class Unitary {
   public:
    /// Throws std::invalid_argument unless u^dagger u = 1 within tol::unit.
    explicit Unitary(CMatrix u);

    static Unitary identity(int dim);

    int dim() const { return static_cast<int>(u_.rows()); }
    const CMatrix &matrix() const { return u_; }
    CVector column(int i) const { return u_.col(i); }

   private:
    CMatrix u_;
};

/// Rank-one projective measurement onto the columns |u_i> = U|i> of a unitary.
class VonNeumannMeasurement {
   public:
    explicit VonNeumannMeasurement(Unitary basis) : basis_(std::move(basis)) {}

    int dim() const { return basis_.dim(); }
    const Unitary &basis() const { return basis_; }
    CMatrix effect(int i) const;

   private:
    Unitary basis_;
};

/// Choi matrix J = sum_ij Psi(|i><j|) (x) |i><j|. Output factor first, input
/// factor second, unnormalized (trace dim_in for trace-preserving maps).
class ChoiMatrix {
   public:
    ChoiMatrix(int dim_in, int dim_out, CMatrix j);

    int dim_in() const { return dim_in_; }
    int dim_out() const { return dim_out_; }
    const CMatrix &matrix() const { return j_; }

    bool is_hermitian(double tolerance = tol::herm) const;
    /// PSD and Tr_out J = 1_in within `tolerance`. Dense eigendecomposition.
    bool is_cptp(double tolerance = tol::cptp) const;

    /// The dim_in x dim_in diagonal blocks J_k = (<k| (x) 1) J (|k> (x) 1),
    /// or nullopt if any entry coupling different output basis states is
    /// nonzero. Output-dephased maps (measurements) always have this form.
    std::optional<std::vector<CMatrix>> output_blocks() const;

    friend ChoiMatrix operator-(const ChoiMatrix &a, const ChoiMatrix &b);
    friend ChoiMatrix operator+(const ChoiMatrix &a, const ChoiMatrix &b);

   private:
    int dim_in_;
    int dim_out_;
    CMatrix j_;
};

using LinearMap = std::function<CMatrix(const CMatrix &)>;

/// Classical output of the measurement: sum_i |i><i| <u_i|X|u_i>.
CMatrix apply_measurement(const VonNeumannMeasurement &p, const CMatrix &x);

/// Measurement channel on a state. Output is diagonal with entries <u_i|rho|u_i>.
QState vn_measure_channel(const VonNeumannMeasurement &p, const QState &rho);

ChoiMatrix choi_of_map(const LinearMap &apply, int dim_in, int dim_out);

/// Closed form sum_i |i><i| (x) conj(|u_i><u_i|).
ChoiMatrix choi_of_measurement(const VonNeumannMeasurement &p);

/// |U>><<U| for the unitary channel X -> U X U^dagger.
ChoiMatrix choi_of_unitary_channel(const Unitary &u);

/// Psi(rho) = Tr_in[J (1 (x) rho^T)], contracted directly in O(dim^2) memory.
CMatrix apply_from_choi(const ChoiMatrix &j, const CMatrix &rho);

/// (Psi (x) 1)(M) for M on a (dim_first * dim_second)-dimensional space.
CMatrix apply_on_first_factor(const LinearMap &apply, const CMatrix &m, int dim_first,
                              int dim_second);

}  // namespace vncert

#endif  // VNCERT_QUANTUM_HPP
