#pragma once

#include <Eigen/Dense>

#include "ctrlkit/dynamics.hpp"

namespace ctrlkit {

/// Discrete controllability Gramian G = Σ_j w_j·dt · Q(T−s_j)BB*Q*(T−s_j)
/// (trapezoid weights), acting on state value vectors. Symmetric PSD.
struct GramianOperator {
    Eigen::MatrixXd matrix;
    double T = 0.0;
    double cond_estimate = 0.0;
    double min_eig = 0.0;
    double max_eig = 0.0;
};

/// W(u) = L(T)Bu: the state reached at T from zero by the control u.
/// Bit-identical to mild_solve with f = 0, z0 = 0 evaluated at T.
GridFunction reachability_apply(const SemigroupHandle& s, const ControlOperator& b,
                                const ControlSignal& u, double T);

GramianOperator assemble_gramian(const SemigroupHandle& s, const ControlOperator& b,
                                 double T, const TimeGrid& grid, int n);

/// Minimum-norm steering control u(s) = B*Q*(T−s)·G⁻¹y. NotControllable if
/// the Gramian condition estimate exceeds 1e12.
ControlSignal min_norm_control(const SemigroupHandle& s, const ControlOperator& b,
                               double T, const GridFunction& y, const TimeGrid& grid);

/// Same as above against a pre-assembled Gramian.
ControlSignal min_norm_control(const SemigroupHandle& s, const ControlOperator& b,
                               const GramianOperator& gramian, const GridFunction& y,
                               const TimeGrid& grid);

/// Central finite differences of a control signal in s (one-sided at the ends).
ControlSignal differentiate_control(const ControlSignal& u);

/// Defect of the identity d/dt ∫₀ᵗ Q(t−s)BW⁻¹(x)(s) ds
///   = Q(t)BW⁻¹(x)(0) + L(t)B·u_x′
/// at a grid time, central differences on both sides. For the shift, t must
/// stay 2·dt clear of the control's kink locus {T−1+ξ : ξ in supp x};
/// otherwise KinkProximity.
double k_identity_check(const SemigroupHandle& s, const ControlOperator& b,
                        const GramianOperator& gramian, const GridFunction& x,
                        const TimeGrid& grid, double t, double hstep);

} // namespace ctrlkit
