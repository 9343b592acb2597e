#include "ctrlkit/semigroup.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <string>

namespace ctrlkit {

SemigroupHandle SemigroupHandle::dense_matrix(Eigen::MatrixXd generator) {
    if (generator.rows() != generator.cols())
        throw DimensionMismatch("DenseMatrix generator must be square");
    return SemigroupHandle(Kind::DenseMatrix, std::move(generator));
}

namespace {

// t/h as an exact integer shift count, or MisalignedTime.
int shift_count(double t, double h) {
    if (t < 0.0 && t >= -1e-12) t = 0.0; // absorb roundoff from time differencing
    if (t < 0.0) throw MisalignedTime("semigroup time must be nonnegative, got t=" + std::to_string(t));
    const double ratio = t / h;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-12 * (1.0 + ratio))
        throw MisalignedTime("shift semigroup requires t to be a multiple of h; t=" +
                             std::to_string(t) + ", h=" + std::to_string(h));
    return static_cast<int>(rounded);
}

} // namespace

Eigen::MatrixXd SemigroupHandle::propagator(double t, bool adjoint) const {
    if (t < 0.0 && t >= -1e-12) t = 0.0; // absorb roundoff from time differencing
    if (t < 0.0) throw MisalignedTime("semigroup time must be nonnegative");
    const Eigen::MatrixXd& a = *generator_;
    Eigen::MatrixXd ta = t * (adjoint ? a.transpose() : a);
    return ta.exp();
}

GridFunction SemigroupHandle::apply(double t, const GridFunction& x) const {
    if (kind_ == Kind::NilpotentLeftShift) {
        const int n = x.n();
        const int k = shift_count(t, x.h());
        Vector out = Vector::Zero(n);
        for (int i = 0; i + k < n; ++i) out[i] = x[i + k];
        return GridFunction(std::move(out));
    }
    if (generator_->rows() != x.n())
        throw DimensionMismatch("generator dimension does not match operand");
    return GridFunction(propagator(t, /*adjoint=*/false) * x.values());
}

GridFunction SemigroupHandle::adjoint_apply(double t, const GridFunction& x) const {
    if (kind_ == Kind::NilpotentLeftShift) {
        const int n = x.n();
        const int k = shift_count(t, x.h());
        Vector out = Vector::Zero(n);
        for (int i = k; i < n; ++i) out[i] = x[i - k];
        return GridFunction(std::move(out));
    }
    if (generator_->rows() != x.n())
        throw DimensionMismatch("generator dimension does not match operand");
    return GridFunction(propagator(t, /*adjoint=*/true) * x.values());
}

} // namespace ctrlkit
