#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstddef>

#include "ctrlkit/errors.hpp"

namespace ctrlkit {

using Vector = Eigen::VectorXd;

/// An element of discretized L²(0,1): cell-average values on a uniform
/// n-cell grid. The induced inner product is ⟨x,y⟩ = h·Σ xᵢyᵢ with h = 1/n.
class GridFunction {
public:
    GridFunction() = default;

    explicit GridFunction(int n) : values_(Vector::Zero(n)) {}

    explicit GridFunction(Vector values) : values_(std::move(values)) {}

    static GridFunction zero(int n) { return GridFunction(n); }

    /// Sample a function of ξ at midpoints ξᵢ = (i+0.5)·h.
    template <class F>
    static GridFunction sample(int n, F&& func) {
        Vector v(n);
        const double h = 1.0 / n;
        for (int i = 0; i < n; ++i) v[i] = func((i + 0.5) * h);
        return GridFunction(std::move(v));
    }

    int n() const { return static_cast<int>(values_.size()); }
    double h() const { return 1.0 / static_cast<double>(values_.size()); }
    double midpoint(int i) const { return (i + 0.5) * h(); }

    const Vector& values() const { return values_; }
    Vector& values() { return values_; }
    double operator[](int i) const { return values_[i]; }
    double& operator[](int i) { return values_[i]; }

    double inner(const GridFunction& other) const {
        check_same_n(other);
        return h() * values_.dot(other.values_);
    }

    double norm() const { return std::sqrt(h()) * values_.norm(); }

    GridFunction& operator+=(const GridFunction& o) {
        check_same_n(o);
        values_ += o.values_;
        return *this;
    }
    GridFunction& operator-=(const GridFunction& o) {
        check_same_n(o);
        values_ -= o.values_;
        return *this;
    }
    GridFunction& operator*=(double a) {
        values_ *= a;
        return *this;
    }

    friend GridFunction operator+(GridFunction a, const GridFunction& b) { return a += b; }
    friend GridFunction operator-(GridFunction a, const GridFunction& b) { return a -= b; }
    friend GridFunction operator*(double a, GridFunction x) { return x *= a; }

    void check_same_n(const GridFunction& other) const {
        if (other.n() != n())
            throw DimensionMismatch("GridFunction dimension mismatch: " +
                                    std::to_string(n()) + " vs " + std::to_string(other.n()));
    }

private:
    Vector values_;
};

/// Truncated ℓ² coordinates of a GridFunction under the normalized-indicator
/// isometry P. Norm² = Σ coeffsᵢ² (unweighted).
class SeqVector {
public:
    SeqVector() = default;
    explicit SeqVector(Vector coeffs) : coeffs_(std::move(coeffs)) {}

    int size() const { return static_cast<int>(coeffs_.size()); }
    const Vector& coeffs() const { return coeffs_; }
    Vector& coeffs() { return coeffs_; }
    double operator[](int i) const { return coeffs_[i]; }

    double norm() const { return coeffs_.norm(); }
    double inner(const SeqVector& other) const { return coeffs_.dot(other.coeffs_); }

private:
    Vector coeffs_;
};

/// Isometry P : L²(0,1) → ℓ² in the normalized-indicator basis, which is
/// coordinatewise multiplication by √h. Exactly norm-preserving.
inline SeqVector p_forward(const GridFunction& x) {
    return SeqVector(std::sqrt(x.h()) * x.values());
}

inline GridFunction p_inverse(const SeqVector& a) {
    const double n = static_cast<double>(a.size());
    return GridFunction(std::sqrt(n) * a.coeffs());
}

} // namespace ctrlkit
