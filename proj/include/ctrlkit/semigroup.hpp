#pragma once

#include <Eigen/Dense>
#include <optional>

#include "ctrlkit/grid_function.hpp"

namespace ctrlkit {

/// Descriptor of a C₀-semigroup realization. Two kinds are supported:
///   - NilpotentLeftShift: (Q(t)x)(ξ) = x(ξ+t) extended by zero; Q(t) = 0
///     for t ≥ 1. Evaluation requires t to be a multiple of the operand's
///     cell width h, so the shift is an exact index shift.
///   - DenseMatrix: Q(t) = exp(tA) for a given generator matrix A, used as
///     a cross-check oracle on small dimensions.
class SemigroupHandle {
public:
    enum class Kind { NilpotentLeftShift, DenseMatrix };

    static SemigroupHandle nilpotent_left_shift() {
        return SemigroupHandle(Kind::NilpotentLeftShift, {});
    }

    static SemigroupHandle dense_matrix(Eigen::MatrixXd generator);

    Kind kind() const { return kind_; }
    bool is_shift() const { return kind_ == Kind::NilpotentLeftShift; }
    const Eigen::MatrixXd& generator() const { return *generator_; }

    /// Q(t)x. For the shift, t must be a nonnegative multiple of x.h()
    /// within 1e-12; otherwise MisalignedTime.
    GridFunction apply(double t, const GridFunction& x) const;

    /// Q*(t)x. The shift adjoint is the right shift extended by zero; the
    /// dense branch uses the transposed generator.
    GridFunction adjoint_apply(double t, const GridFunction& x) const;

private:
    SemigroupHandle(Kind kind, std::optional<Eigen::MatrixXd> generator)
        : kind_(kind), generator_(std::move(generator)) {}

    Eigen::MatrixXd propagator(double t, bool adjoint) const;

    Kind kind_;
    std::optional<Eigen::MatrixXd> generator_;
};

inline GridFunction sg_apply(const SemigroupHandle& s, double t, const GridFunction& x) {
    return s.apply(t, x);
}

inline GridFunction sg_adjoint_apply(const SemigroupHandle& s, double t, const GridFunction& x) {
    return s.adjoint_apply(t, x);
}

} // namespace ctrlkit
