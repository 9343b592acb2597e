#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ctrlkit/analysis.hpp"
#include "ctrlkit/steer.hpp"

namespace ctrlkit {

/// φ: 0 for ξ<0, −√ξ on [0,1], −1 for ξ>1. Monotone non-increasing, |φ| ≤ 1.
inline double phi(double xi) {
    if (xi < 0.0) return 0.0;
    if (xi > 1.0) return -1.0;
    return -std::sqrt(xi);
}

/// ρ on truncated ℓ²: coordinate i ↦ φ(αⁱ)/i (1-based weights).
SeqVector rho(const SeqVector& alpha);

/// The transport nonlinearity f = P⁻¹ρP. Dissipative but not Lipschitz;
/// uniformly bounded by √(Σ 1/i²) < π/√6.
GridFunction apply_f(const GridFunction& x);

/// Uniform bound on ‖apply_f‖ at truncation order n: √(Σ_{i≤n} 1/i²).
double f_norm_bound(int n);

struct TransportConfig {
    int n = 64;
    double T = 1.25;

    // Control shape: constant level, or an explicit table of n values.
    std::variant<double, std::vector<double>> m_profile = 1.0;

    // Target: sine(k), gauss(center,width), or explicit cell values.
    struct SineTarget { int k = 1; };
    struct GaussTarget { double center = 0.5, width = 0.1; };
    std::variant<SineTarget, GaussTarget, std::vector<double>> target = SineTarget{};

    SteeringOptions steering;
    unsigned long seed = 0;
    std::string output_dir = ".";

    void validate() const;
};

struct TransportModel {
    SemigroupHandle semigroup;
    ControlOperator b;
    StateMap f;
    TimeGrid grid;
    GridFunction target;
};

/// Shift semigroup + multiplication control + f = P⁻¹ρP on the aligned
/// time grid with dt = h. ConfigInvalid on bad fields.
TransportModel build_transport_model(const TransportConfig& cfg);

/// The Lipschitz-failure witness pair: x_m with Px_m = (1/m, 0, ...), y = 0.
/// The ratio ‖f(x_m)−f(0)‖/‖x_m−0‖ equals √m.
std::pair<Vec, Vec> lipschitz_witness_pair(int n, double m);

/// ρ in ℓ² coordinates as a plain vector map; isometrically conjugate to
/// apply_f, so probe estimates transfer verbatim.
inline Vec rho_vec(const Vec& alpha) {
    Vec out(alpha.size());
    for (int i = 0; i < alpha.size(); ++i) out[i] = phi(alpha[i]) / (i + 1);
    return out;
}

} // namespace ctrlkit
