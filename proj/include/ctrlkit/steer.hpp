#pragma once

#include "ctrlkit/control.hpp"

namespace ctrlkit {

struct SteeringOptions {
    int max_iter = 200;
    double relaxation = 1.0;          // ω in (0,1]
    double tol_fixed_point = 1e-8;    // sup-over-time state norm
    double divergence_factor = 1e6;

    void validate() const {
        if (relaxation <= 0.0 || relaxation > 1.0) throw ConfigInvalid("relaxation must be in (0,1]");
        if (max_iter < 1 || tol_fixed_point <= 0.0 || divergence_factor <= 0.0)
            throw ConfigInvalid("steering tolerances must be positive");
    }
};

struct SteeringResult {
    Trajectory trajectory;
    ControlSignal control;
    int iterations = 0;
    double terminal_residual = 0.0;  // ‖z(T) − x_T‖
    double fixed_point_gap = 0.0;    // sup_t ‖z_k(t) − z_{k−1}(t)‖
};

/// Picard iteration on the steering operator: from z⁰ ≡ 0, each sweep
/// recomputes the minimum-norm control for the nonlinearity-corrected
/// target x_T − L(T)fz and re-simulates the mild solution.
SteeringResult steer(const SemigroupHandle& s, const ControlOperator& b, const StateMap& f,
                     const GridFunction& x_target, const TimeGrid& grid,
                     const SteeringOptions& opts = {});

} // namespace ctrlkit
