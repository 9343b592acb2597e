#include <doctest.h>

#include <cmath>

#include "ctrlkit/dynamics.hpp"
#include "ctrlkit/random.hpp"
#include "ctrlkit/transport.hpp"

using namespace ctrlkit;

namespace {

const SemigroupHandle shift = SemigroupHandle::nilpotent_left_shift();

SemigroupHandle zero_generator(int n) {
    return SemigroupHandle::dense_matrix(Eigen::MatrixXd::Zero(n, n));
}

ControlSignal constant_control(const TimeGrid& grid, const GridFunction& level) {
    ControlSignal u;
    u.grid = grid;
    u.inputs.assign(grid.nt + 1, level);
    return u;
}

} // namespace

TEST_CASE("pickard of the zero trajectory is zero") {
    Trajectory z;
    z.grid = TimeGrid(1.0, 16);
    z.states.assign(17, GridFunction::zero(16));
    CHECK(pickard_apply(shift, z, 0.5).norm() == 0.0);
}

TEST_CASE("pickard with Q = I integrates constants exactly") {
    const int n = 4;
    GridFunction c(n);
    c.values().setConstant(3.0);
    Trajectory z;
    z.grid = TimeGrid(1.0, 10);
    z.states.assign(11, c);
    const GridFunction integral = pickard_apply(zero_generator(n), z, 0.6);
    CHECK((integral - 0.6 * c).norm() <= 1e-12);
}

TEST_CASE("pickard off-grid time is rejected") {
    Trajectory z;
    z.grid = TimeGrid(1.0, 10);
    z.states.assign(11, GridFunction::zero(4));
    CHECK_THROWS_AS(pickard_apply(shift, z, 0.55), OffGridTime);
}

TEST_CASE("shift convolution of the constant-one function: min(t, 1-xi)") {
    const int n = 64;
    const TimeGrid grid(1.0, n);
    GridFunction one(n);
    one.values().setOnes();
    Trajectory z;
    z.grid = grid;
    z.states.assign(n + 1, one);
    for (double t : {0.25, 0.5, 1.0}) {
        const GridFunction conv = pickard_apply(shift, z, t);
        for (int i = 0; i < n; ++i) {
            const double expected = std::min(t, 1.0 - one.midpoint(i));
            CHECK(std::abs(conv[i] - expected) <= 1.5 * grid.dt());
        }
    }
}

TEST_CASE("mild solve: homogeneous zero stays zero") {
    const TimeGrid grid(1.0, 16);
    const Trajectory z = mild_solve(shift, ControlOperator::identity(), nullptr, nullptr, grid,
                                    GridFunction::zero(16));
    for (const auto& s : z.states) CHECK(s.norm() == 0.0);
}

TEST_CASE("mild solve: shift with constant control matches closed form") {
    const int n = 64;
    const TimeGrid grid(1.0, n);
    GridFunction c(n);
    c.values().setConstant(2.0);
    const ControlSignal u = constant_control(grid, c);
    const Trajectory z =
        mild_solve(shift, ControlOperator::identity(), nullptr, &u, grid, GridFunction::zero(n));
    const GridFunction& zT = z.final();
    for (int i = 0; i < n; ++i)
        CHECK(std::abs(zT[i] - 2.0 * std::min(1.0, 1.0 - c.midpoint(i))) <= 3.0 * grid.dt());
}

TEST_CASE("mild solve: A=0, f constant integrates to c*t") {
    const int n = 4;
    GridFunction c(n);
    c.values().setConstant(-0.7);
    const StateMap f = [c](const GridFunction&) { return c; };
    const TimeGrid grid(1.0, 100);
    const Trajectory z =
        mild_solve(zero_generator(n), ControlOperator::identity(), &f, nullptr, grid,
                   GridFunction::zero(n));
    for (int j = 0; j <= grid.nt; ++j)
        CHECK((z.states[j] - grid.time(j) * c).norm() <= 1e-10);
}

TEST_CASE("mild solve grid refinement converges at order >= 1.7 on a smooth problem") {
    const int n = 4;
    Eigen::MatrixXd a(n, n);
    a << -1, 0.2, 0, 0, 0, -0.5, 0.1, 0, 0, 0, -2, 0.3, 0.1, 0, 0, -1;
    const auto dense = SemigroupHandle::dense_matrix(a);
    const StateMap f = [](const GridFunction& x) {
        GridFunction y = x;
        y.values() = (-x.values().array().tanh()).matrix();
        return y;
    };
    Rng rng(21);
    const GridFunction z0 = rng.grid_function(n);

    const auto solve_at = [&](int nt) {
        return mild_solve(dense, ControlOperator::identity(), &f, nullptr, TimeGrid(1.0, nt), z0);
    };
    const Trajectory coarse = solve_at(50), mid = solve_at(100), fine = solve_at(200);
    // Against the nt=200 reference, halving dt must shrink the defect by a
    // factor >= 1.7 (order ~2 gives ~5 here).
    const double e_coarse = (coarse.final() - fine.final()).norm();
    const double e_mid = (mid.final() - fine.final()).norm();
    CHECK(e_coarse >= 1.7 * e_mid);
}

TEST_CASE("g identity check: trivial and constant cases") {
    const int n = 8;
    const TimeGrid grid(1.0, 32);
    const StateMap zero_map = [n](const GridFunction&) { return GridFunction::zero(n); };
    Rng rng(5);
    const GridFunction x = rng.grid_function(n);
    CHECK(g_identity_check(zero_generator(n), zero_map, x, grid, 0.5, grid.dt()) == 0.0);

    GridFunction c(n);
    c.values().setConstant(1.3);
    const StateMap const_map = [c](const GridFunction&) { return c; };
    CHECK(g_identity_check(zero_generator(n), const_map, x, grid, 0.5, grid.dt()) <= 1e-10);
}

TEST_CASE("g identity defect decays linearly for the shift") {
    const int n = 64;
    const TimeGrid grid(1.0, n);
    const StateMap f = [](const GridFunction& x) { return apply_f(x); };
    Rng rng(5);
    const GridFunction x = rng.grid_function(n);
    const double h = x.h();
    const double d1 = g_identity_check(shift, f, x, grid, 0.5, 4 * h);
    const double d2 = g_identity_check(shift, f, x, grid, 0.5, 2 * h);
    CHECK(d1 <= 5.0 * 4 * h * apply_f(x).norm());
    CHECK(d2 <= d1); // first-order decay, non-increasing under halving
}

TEST_CASE("schmidt solver: zero data gives the zero solution") {
    const int n = 4;
    const auto zero_map = [n](double, const GridFunction&) { return GridFunction::zero(n); };
    const Trajectory x = schmidt_ivp_solve(zero_map, zero_map, TimeGrid(1.0, 50),
                                           GridFunction::zero(n));
    for (const auto& s : x.states) CHECK(s.norm() == 0.0);
}

TEST_CASE("schmidt solver: g=-x, k=1 reaches 1-1/e") {
    const int n = 1;
    const auto g = [](double, const GridFunction& x) { return -1.0 * x; };
    const auto k = [n](double, const GridFunction&) {
        GridFunction one(n);
        one.values().setOnes();
        return one;
    };
    const Trajectory x = schmidt_ivp_solve(g, k, TimeGrid(1.0, 1000), GridFunction::zero(n));
    CHECK(std::abs(x.final()[0] - (1.0 - std::exp(-1.0))) <= 1e-6);
}

TEST_CASE("schmidt solver: pure k(t,x)=t integrates to t^2/2") {
    const int n = 1;
    const auto g = [n](double, const GridFunction&) { return GridFunction::zero(n); };
    const auto k = [n](double t, const GridFunction&) {
        GridFunction v(n);
        v.values().setConstant(t);
        return v;
    };
    const TimeGrid grid(1.0, 200);
    const Trajectory x = schmidt_ivp_solve(g, k, grid, GridFunction::zero(n));
    for (int j = 0; j <= grid.nt; ++j) {
        const double t = grid.time(j);
        CHECK(std::abs(x.states[j][0] - 0.5 * t * t) <= 1e-10);
    }
}

TEST_CASE("dissipative contraction between trajectories") {
    const int n = 3;
    // g(x) = -x + sin-coupling, one-sided constant <= 0.
    const auto g = [](double, const GridFunction& x) {
        GridFunction y = x;
        y.values() = (-x.values().array() - 0.1 * x.values().array().sin()).matrix();
        return y;
    };
    const auto k = [n](double, const GridFunction&) { return GridFunction::zero(n); };
    Rng rng(22);
    const TimeGrid grid(1.0, 100);
    const GridFunction a = rng.grid_function(n), b = rng.grid_function(n);
    const Trajectory xa = schmidt_ivp_solve(g, k, grid, a);
    const Trajectory xb = schmidt_ivp_solve(g, k, grid, b);
    const double initial = (a - b).norm();
    for (int j = 0; j <= grid.nt; ++j)
        CHECK((xa.states[j] - xb.states[j]).norm() <= initial * (1.0 + 10.0 * grid.dt()));
}

TEST_CASE("implicit stage failure reports a step-size suggestion") {
    const int n = 1;
    // Violently expansive g breaks the fixed-point inner iteration.
    const auto g = [](double, const GridFunction& x) { return 1e6 * x; };
    const auto k = [n](double, const GridFunction&) { return GridFunction::zero(n); };
    GridFunction x0(n);
    x0[0] = 1.0;
    CHECK_THROWS_AS(schmidt_ivp_solve(g, k, TimeGrid(1.0, 10), x0), ImplicitStageNonConvergent);
}
