#include <doctest.h>

#include "ctrlkit/dynamics.hpp"
#include "ctrlkit/random.hpp"
#include "ctrlkit/semigroup.hpp"

using namespace ctrlkit;

namespace {
const SemigroupHandle shift = SemigroupHandle::nilpotent_left_shift();
}

TEST_CASE("Q(0) is the identity") {
    Rng rng(0);
    const GridFunction x = rng.grid_function(16);
    CHECK((shift.apply(0.0, x) - x).norm() == 0.0);
}

TEST_CASE("nilpotency: Q(t) = 0 for t >= 1") {
    Rng rng(2);
    for (double t : {1.0, 1.5, 2.0}) {
        const GridFunction x = rng.grid_function(8);
        CHECK(shift.apply(t, x).norm() == 0.0);
        CHECK(shift.adjoint_apply(t, x).norm() == 0.0);
    }
}

TEST_CASE("shift matches pointwise substitution x(xi+t)") {
    // x(xi) = xi sampled at midpoints; t = 0.5.
    const int n = 64;
    const GridFunction x = GridFunction::sample(n, [](double xi) { return xi; });
    const GridFunction shifted = shift.apply(0.5, x);
    for (int i = 0; i < n; ++i) {
        const double arg = x.midpoint(i) + 0.5;
        const double expected = (arg <= 1.0 - x.h() / 2 + 1e-15) ? arg : 0.0;
        CHECK(shifted[i] == doctest::Approx(expected).epsilon(1e-14));
    }
}

TEST_CASE("misaligned shift time is rejected") {
    const GridFunction x = GridFunction::zero(8);
    CHECK_THROWS_AS(shift.apply(0.3, x), MisalignedTime);
    CHECK_THROWS_AS(shift.apply(-0.125, x), MisalignedTime);
}

TEST_CASE("adjoint duality <Q(t)x,y> = <x,Q*(t)y>, seed 3") {
    Rng rng(3);
    const GridFunction x = rng.grid_function(16), y = rng.grid_function(16);
    const double t = 0.25;
    CHECK(std::abs(shift.apply(t, x).inner(y) - x.inner(shift.adjoint_apply(t, y))) <= 1e-12);
}

TEST_CASE("semigroup law exact for the shift, contraction holds") {
    Rng rng(4);
    const GridFunction x = rng.grid_function(32);
    const double s = 0.125, t = 0.25;
    CHECK((shift.apply(s + t, x) - shift.apply(t, shift.apply(s, x))).norm() == 0.0);
    for (double tau : {0.0, 0.25, 0.5, 1.0}) CHECK(shift.apply(tau, x).norm() <= x.norm());
}

TEST_CASE("dense branch reproduces exp(tA) and its semigroup law") {
    Eigen::Matrix2d a;
    a << 0.0, 1.0, -1.0, 0.0; // rotation generator
    Eigen::MatrixXd ad = a;
    const auto dense = SemigroupHandle::dense_matrix(ad);
    GridFunction x(2);
    x[0] = 1.0;
    const double t = 0.7;
    const GridFunction qx = dense.apply(t, x);
    CHECK(qx[0] == doctest::Approx(std::cos(t)).epsilon(1e-12));
    CHECK(qx[1] == doctest::Approx(-std::sin(t)).epsilon(1e-12));

    const GridFunction law = dense.apply(0.3, dense.apply(0.4, x)) - dense.apply(0.7, x);
    CHECK(law.norm() <= 1e-10);

    // Adjoint uses the transposed generator.
    Rng rng(5);
    const GridFunction u = rng.grid_function(2), v = rng.grid_function(2);
    CHECK(std::abs(dense.apply(t, u).inner(v) - u.inner(dense.adjoint_apply(t, v))) <= 1e-12);
}

TEST_CASE("generator identity A * int Q(s)x ds = Q(t)x - x (dense)") {
    Eigen::MatrixXd a(3, 3);
    a << -1.0, 0.5, 0.0, 0.0, -2.0, 0.3, 0.1, 0.0, -0.5;
    const auto dense = SemigroupHandle::dense_matrix(a);
    GridFunction x(3);
    x[0] = 1.0;
    x[1] = -0.5;
    x[2] = 2.0;

    const double t = 1.0;
    const auto defect_at = [&](int nt) {
        const double dt = t / nt;
        Vector integral = Vector::Zero(3);
        for (int j = 0; j <= nt; ++j) {
            const double w = (j == 0 || j == nt) ? 0.5 : 1.0;
            integral += w * dt * dense.apply(j * dt, x).values();
        }
        return (a * integral - (dense.apply(t, x).values() - x.values())).norm();
    };
    const double coarse = defect_at(50), fine = defect_at(100);
    CHECK(coarse <= 1e-3);
    CHECK(fine <= coarse / 3.5); // O(dt^2) decay
}

TEST_CASE("dimension mismatches are rejected") {
    const auto dense = SemigroupHandle::dense_matrix(Eigen::MatrixXd::Zero(3, 3));
    CHECK_THROWS_AS(dense.apply(1.0, GridFunction::zero(4)), DimensionMismatch);
    CHECK_THROWS_AS(SemigroupHandle::dense_matrix(Eigen::MatrixXd::Zero(2, 3)), DimensionMismatch);
}
