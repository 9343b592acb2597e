#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ctrlkit/grid_function.hpp"
#include "ctrlkit/semigroup.hpp"

namespace ctrlkit {

/// Uniform time grid on [0,T] with nt steps.
struct TimeGrid {
    double T = 0.0;
    int nt = 0;

    TimeGrid() = default;
    TimeGrid(double horizon, int steps) : T(horizon), nt(steps) {
        if (horizon <= 0.0 || steps <= 0) throw ConfigInvalid("TimeGrid requires T > 0 and nt > 0");
    }

    double dt() const { return T / nt; }
    double time(int j) const { return j * dt(); }

    /// Grid index of t, or OffGridTime.
    int index_of(double t) const {
        const double ratio = t / dt();
        const double rounded = std::round(ratio);
        if (std::abs(ratio - rounded) > 1e-10 * (1.0 + std::abs(ratio)))
            throw OffGridTime("time " + std::to_string(t) + " is not on the grid");
        const int j = static_cast<int>(rounded);
        if (j < 0 || j > nt) throw OffGridTime("time " + std::to_string(t) + " outside [0,T]");
        return j;
    }

    /// dt must be an integer multiple of the spatial width h within 1e-12.
    bool aligned_with(double h) const {
        const double ratio = dt() / h;
        return std::abs(ratio - std::round(ratio)) <= 1e-12 * (1.0 + ratio);
    }
};

/// Time-indexed family of states; states[j] ≈ z(j·dt).
struct Trajectory {
    TimeGrid grid;
    std::vector<GridFunction> states;

    const GridFunction& at_time(double t) const { return states[grid.index_of(t)]; }
    const GridFunction& final() const { return states.back(); }

    double sup_norm_difference(const Trajectory& other) const;
};

/// Time-indexed control u(j·dt) in U.
struct ControlSignal {
    TimeGrid grid;
    std::vector<GridFunction> inputs;

    double energy() const; // L² in time: Σ dt·w_j·‖u_j‖² (trapezoid weights)
};

/// Bounded control operator B: multiplication by a nonnegative spatial
/// profile m(ξ). B* = B (diagonal, real).
class ControlOperator {
public:
    static ControlOperator identity() { return ControlOperator{}; }
    static ControlOperator multiplication(GridFunction profile) {
        ControlOperator b;
        b.profile_ = std::move(profile);
        return b;
    }

    GridFunction apply(const GridFunction& u) const {
        if (!profile_) return u;
        profile_->check_same_n(u);
        return GridFunction(profile_->values().cwiseProduct(u.values()));
    }
    GridFunction adjoint_apply(const GridFunction& x) const { return apply(x); }

    bool is_identity() const { return !profile_.has_value(); }
    const GridFunction& profile() const { return *profile_; }

private:
    std::optional<GridFunction> profile_;
};

using StateMap = std::function<GridFunction(const GridFunction&)>;
using TimeStateMap = std::function<GridFunction(double, const GridFunction&)>;

/// Composite-trapezoid evaluation of the Pickard convolution
/// (Lz)(t) = ∫₀ᵗ Q(t−s) z(s) ds at a grid time.
GridFunction pickard_apply(const SemigroupHandle& s, const Trajectory& z, double t);

/// Mild solution z(t) = Q(t)z₀ + ∫₀ᵗ Q(t−s)[f(z(s)) + Bu(s)] ds by stepwise
/// trapezoid accumulation; f is handled with a per-step fixed-point
/// correction (tol 1e-12, max 50 inner iterations).
Trajectory mild_solve(const SemigroupHandle& s, const ControlOperator& b,
                      const StateMap* f, const ControlSignal* u,
                      const TimeGrid& grid, const GridFunction& z0);

/// ‖central-difference d/dt ∫₀ᵗ Q(t−s)f(x) ds − Q(t)f(x)‖ at a grid time,
/// with hstep a grid-aligned offset. First-order decay for the shift,
/// second-order for the dense branch.
double g_identity_check(const SemigroupHandle& s, const StateMap& f,
                        const GridFunction& x, const TimeGrid& grid,
                        double t, double hstep);

/// Splitting solver for x′ = g(t,x) + k(t,x): implicit midpoint on the
/// dissipative part g, explicit midpoint on the condensing part k.
Trajectory schmidt_ivp_solve(const TimeStateMap& g, const TimeStateMap& k,
                             const TimeGrid& grid, const GridFunction& x0);

} // namespace ctrlkit
