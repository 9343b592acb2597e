#include "ctrlkit/control.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace ctrlkit {

GridFunction reachability_apply(const SemigroupHandle& s, const ControlOperator& b,
                                const ControlSignal& u, double T) {
    if (std::abs(u.grid.T - T) > 1e-12 * (1.0 + T))
        throw MisalignedTime("control horizon does not match T");
    const GridFunction z0 = GridFunction::zero(u.inputs.front().n());
    return mild_solve(s, b, nullptr, &u, u.grid, z0).final();
}

GramianOperator assemble_gramian(const SemigroupHandle& s, const ControlOperator& b,
                                 double T, const TimeGrid& grid, int n) {
    if (std::abs(grid.T - T) > 1e-12 * (1.0 + T)) throw MisalignedTime("grid horizon does not match T");
    const double dt = grid.dt();

    GramianOperator g;
    g.T = T;
    g.matrix = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j <= grid.nt; ++j) {
        const double tau = T - grid.time(j);
        // Columns of M = Q(tau)∘B on value vectors, via the semigroup itself.
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i) {
            GridFunction e = GridFunction::zero(n);
            e[i] = 1.0;
            m.col(i) = s.apply(tau, b.apply(e)).values();
        }
        const double w = (j == 0 || j == grid.nt) ? 0.5 : 1.0;
        g.matrix.noalias() += (w * dt) * (m * m.transpose());
    }
    g.matrix = 0.5 * (g.matrix + g.matrix.transpose().eval());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigensolver(g.matrix);
    g.min_eig = eigensolver.eigenvalues().minCoeff();
    g.max_eig = eigensolver.eigenvalues().maxCoeff();
    g.cond_estimate = (g.min_eig > 0.0) ? g.max_eig / g.min_eig
                                        : std::numeric_limits<double>::infinity();
    return g;
}

ControlSignal min_norm_control(const SemigroupHandle& s, const ControlOperator& b,
                               const GramianOperator& gramian, const GridFunction& y,
                               const TimeGrid& grid) {
    if (gramian.cond_estimate > 1e12)
        throw NotControllable("Gramian condition estimate " + std::to_string(gramian.cond_estimate) +
                              " exceeds 1e12; reachable space deficient at this discretization");

    Eigen::LDLT<Eigen::MatrixXd> factorization(gramian.matrix);
    Vector c = factorization.solve(y.values());
    // Iterative refinement down to a 1e-12 relative residual.
    for (int it = 0; it < 20; ++it) {
        Vector residual = y.values() - gramian.matrix * c;
        if (residual.norm() <= 1e-12 * (1.0 + y.values().norm())) break;
        c += factorization.solve(residual);
    }

    const GridFunction cg(c);
    ControlSignal u;
    u.grid = grid;
    u.inputs.reserve(grid.nt + 1);
    for (int j = 0; j <= grid.nt; ++j)
        u.inputs.push_back(b.adjoint_apply(s.adjoint_apply(gramian.T - grid.time(j), cg)));
    return u;
}

ControlSignal min_norm_control(const SemigroupHandle& s, const ControlOperator& b,
                               double T, const GridFunction& y, const TimeGrid& grid) {
    return min_norm_control(s, b, assemble_gramian(s, b, T, grid, y.n()), y, grid);
}

ControlSignal differentiate_control(const ControlSignal& u) {
    const double dt = u.grid.dt();
    const int last = static_cast<int>(u.inputs.size()) - 1;
    ControlSignal d;
    d.grid = u.grid;
    d.inputs.reserve(u.inputs.size());
    for (int j = 0; j <= last; ++j) {
        if (j == 0)
            d.inputs.push_back((1.0 / dt) * (u.inputs[1] - u.inputs[0]));
        else if (j == last)
            d.inputs.push_back((1.0 / dt) * (u.inputs[last] - u.inputs[last - 1]));
        else
            d.inputs.push_back((0.5 / dt) * (u.inputs[j + 1] - u.inputs[j - 1]));
    }
    return d;
}

double k_identity_check(const SemigroupHandle& s, const ControlOperator& b,
                        const GramianOperator& gramian, const GridFunction& x,
                        const TimeGrid& grid, double t, double hstep) {
    grid.index_of(t + hstep);
    grid.index_of(t - hstep);

    if (s.is_shift()) {
        // Controls inherit kinks at s = T−1+ξ from the shift adjoint's
        // zero-extension front; exclude a 2·dt neighbourhood.
        const double sup = x.values().cwiseAbs().maxCoeff();
        for (int i = 0; i < x.n(); ++i) {
            if (std::abs(x[i]) <= 1e-12 * (1.0 + sup)) continue;
            const double kink = gramian.T - 1.0 + x.midpoint(i);
            if (std::abs(t - kink) <= 2.0 * grid.dt())
                throw KinkProximity("t=" + std::to_string(t) + " within 2*dt of kink at " +
                                    std::to_string(kink));
        }
    }

    const ControlSignal u = min_norm_control(s, b, gramian, x, grid);
    const ControlSignal du = differentiate_control(u);

    Trajectory bu, bdu;
    bu.grid = bdu.grid = grid;
    for (int j = 0; j <= grid.nt; ++j) {
        bu.states.push_back(b.apply(u.inputs[j]));
        bdu.states.push_back(b.apply(du.inputs[j]));
    }

    const GridFunction kplus = pickard_apply(s, bu, t + hstep);
    const GridFunction kminus = pickard_apply(s, bu, t - hstep);
    const GridFunction derivative = (1.0 / (2.0 * hstep)) * (kplus - kminus);
    const GridFunction rhs = s.apply(t, bu.states.front()) + pickard_apply(s, bdu, t);
    return (derivative - rhs).norm();
}

} // namespace ctrlkit
