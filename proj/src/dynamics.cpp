#include "ctrlkit/dynamics.hpp"

#include <cmath>
#include <string>

namespace ctrlkit {

double Trajectory::sup_norm_difference(const Trajectory& other) const {
    if (states.size() != other.states.size())
        throw DimensionMismatch("trajectories live on different time grids");
    double sup = 0.0;
    for (std::size_t j = 0; j < states.size(); ++j)
        sup = std::max(sup, (states[j] - other.states[j]).norm());
    return sup;
}

double ControlSignal::energy() const {
    const double dt = grid.dt();
    double e = 0.0;
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        const double w = (j == 0 || j + 1 == inputs.size()) ? 0.5 : 1.0;
        const double nrm = inputs[j].norm();
        e += w * dt * nrm * nrm;
    }
    return e;
}

GridFunction pickard_apply(const SemigroupHandle& s, const Trajectory& z, double t) {
    const int j = z.grid.index_of(t);
    const double dt = z.grid.dt();
    GridFunction acc = GridFunction::zero(z.states.front().n());
    if (j == 0) return acc;
    for (int i = 0; i <= j; ++i) {
        const double w = (i == 0 || i == j) ? 0.5 : 1.0;
        acc += (w * dt) * s.apply(t - z.grid.time(i), z.states[i]);
    }
    return acc;
}

Trajectory mild_solve(const SemigroupHandle& s, const ControlOperator& b,
                      const StateMap* f, const ControlSignal* u,
                      const TimeGrid& grid, const GridFunction& z0) {
    const int n = z0.n();
    if (s.is_shift() && !grid.aligned_with(z0.h()))
        throw MisalignedTime("shift runs require dt to be a multiple of h");
    if (u && u->inputs.size() != static_cast<std::size_t>(grid.nt) + 1)
        throw DimensionMismatch("control signal does not match the time grid");

    const double dt = grid.dt();
    const auto forcing = [&](int j, const GridFunction& state) {
        GridFunction w = GridFunction::zero(n);
        if (f) w += (*f)(state);
        if (u) w += b.apply(u->inputs[j]);
        return w;
    };

    Trajectory traj;
    traj.grid = grid;
    traj.states.reserve(grid.nt + 1);
    traj.states.push_back(z0);

    for (int j = 0; j < grid.nt; ++j) {
        const GridFunction& zj = traj.states.back();
        const GridFunction propagated = s.apply(dt, zj) + (0.5 * dt) * s.apply(dt, forcing(j, zj));
        // Trapezoid endpoint at j+1 involves f(z_{j+1}); resolve by fixed point.
        GridFunction znext = propagated + (0.5 * dt) * forcing(j + 1, zj);
        if (f) {
            bool converged = false;
            for (int it = 0; it < 50; ++it) {
                GridFunction update = propagated + (0.5 * dt) * forcing(j + 1, znext);
                const double gap = (update - znext).norm();
                znext = update;
                if (!std::isfinite(gap) || !std::isfinite(znext.norm())) break;
                if (gap <= 1e-12 * (1.0 + znext.norm())) {
                    converged = true;
                    break;
                }
            }
            if (!converged)
                throw InnerNonConvergent("per-step correction stalled at step " + std::to_string(j) +
                                         "; reduce dt");
        }
        traj.states.push_back(znext);
    }
    return traj;
}

double g_identity_check(const SemigroupHandle& s, const StateMap& f,
                        const GridFunction& x, const TimeGrid& grid,
                        double t, double hstep) {
    const GridFunction fx = f(x);
    // G(t) = ∫₀ᵗ Q(t−s) f(x) ds as the Pickard convolution of a constant.
    Trajectory constant;
    constant.grid = grid;
    constant.states.assign(grid.nt + 1, fx);
    grid.index_of(t + hstep); // both offsets must land on the grid
    grid.index_of(t - hstep);
    const GridFunction gp = pickard_apply(s, constant, t + hstep);
    const GridFunction gm = pickard_apply(s, constant, t - hstep);
    const GridFunction derivative = (1.0 / (2.0 * hstep)) * (gp - gm);
    return (derivative - s.apply(t, fx)).norm();
}

Trajectory schmidt_ivp_solve(const TimeStateMap& g, const TimeStateMap& k,
                             const TimeGrid& grid, const GridFunction& x0) {
    const double dt = grid.dt();
    Trajectory traj;
    traj.grid = grid;
    traj.states.reserve(grid.nt + 1);
    traj.states.push_back(x0);

    for (int j = 0; j < grid.nt; ++j) {
        const double tn = grid.time(j);
        const double tmid = tn + 0.5 * dt;
        const GridFunction& xn = traj.states.back();

        // Explicit midpoint stage for k, using an Euler predictor.
        const GridFunction predictor = xn + (0.5 * dt) * (g(tn, xn) + k(tn, xn));
        const GridFunction kmid = k(tmid, predictor);

        // Implicit midpoint stage for g: y = x_n + dt/2·(g(t_mid,y) + k_mid).
        GridFunction y = predictor;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            GridFunction update = xn + (0.5 * dt) * (g(tmid, y) + kmid);
            const double gap = (update - y).norm();
            y = update;
            if (!std::isfinite(gap) || !std::isfinite(y.norm())) break;
            if (gap <= 1e-12 * (1.0 + y.norm())) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw ImplicitStageNonConvergent(
                "implicit stage failed to converge at t=" + std::to_string(tn) +
                "; g may not be dissipative enough at this step size, reduce dt");
        traj.states.push_back(2.0 * y - xn);
    }
    return traj;
}

} // namespace ctrlkit
