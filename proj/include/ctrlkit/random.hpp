#pragma once

#include <random>

#include "ctrlkit/analysis.hpp"
#include "ctrlkit/grid_function.hpp"

namespace ctrlkit {

/// Deterministic sampling helper: one seeded engine, standard-normal draws.
class Rng {
public:
    explicit Rng(unsigned long seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform() { return uniform_(engine_); }

    Vec vec(int dim) {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = normal();
        return v;
    }

    GridFunction grid_function(int n) { return GridFunction(vec(n)); }

    FinitePointSet point_set(int dim, int count) {
        std::vector<Vec> pts;
        pts.reserve(count);
        for (int i = 0; i < count; ++i) pts.push_back(vec(dim));
        return FinitePointSet::of(std::move(pts));
    }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

} // namespace ctrlkit
