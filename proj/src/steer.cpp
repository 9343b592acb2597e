#include "ctrlkit/steer.hpp"

#include <string>

namespace ctrlkit {

SteeringResult steer(const SemigroupHandle& s, const ControlOperator& b, const StateMap& f,
                     const GridFunction& x_target, const TimeGrid& grid,
                     const SteeringOptions& opts) {
    opts.validate();
    const int n = x_target.n();
    const GridFunction zero = GridFunction::zero(n);
    const GramianOperator gramian = assemble_gramian(s, b, grid.T, grid, n);

    Trajectory z;
    z.grid = grid;
    z.states.assign(grid.nt + 1, zero);

    SteeringResult result;
    const double omega = opts.relaxation;

    for (int iter = 1; iter <= opts.max_iter; ++iter) {
        // Nonlinearity-corrected target: x_T − L(T)fz.
        Trajectory fz;
        fz.grid = grid;
        fz.states.reserve(grid.nt + 1);
        for (const auto& state : z.states) fz.states.push_back(f(state));
        const GridFunction target = x_target - pickard_apply(s, fz, grid.T);

        const ControlSignal u = min_norm_control(s, b, gramian, target, grid);
        Trajectory znew = mild_solve(s, b, &f, &u, grid, zero);

        Trajectory zrelaxed;
        zrelaxed.grid = grid;
        zrelaxed.states.reserve(grid.nt + 1);
        for (int j = 0; j <= grid.nt; ++j)
            zrelaxed.states.push_back((1.0 - omega) * z.states[j] + omega * znew.states[j]);

        const double gap = zrelaxed.sup_norm_difference(z);
        z = std::move(zrelaxed);

        result.iterations = iter;
        result.fixed_point_gap = gap;
        result.control = u;

        if (gap > opts.divergence_factor * (1.0 + x_target.norm()))
            throw NonConvergent("fixed-point gap " + std::to_string(gap) +
                                " exceeded the divergence bound; try a smaller relaxation");
        if (gap <= opts.tol_fixed_point) {
            // Return the un-relaxed mild solution so re-simulation with the
            // returned control reproduces the trajectory bit for bit.
            result.trajectory = std::move(znew);
            break;
        }
        if (iter == opts.max_iter)
            throw NonConvergent("no convergence in " + std::to_string(opts.max_iter) +
                                " iterations (gap " + std::to_string(gap) +
                                "); try a smaller relaxation");
    }

    result.terminal_residual = (result.trajectory.final() - x_target).norm();
    return result;
}

} // namespace ctrlkit
