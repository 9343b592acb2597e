#include "ctrlkit/transport.hpp"

#include <numbers>

namespace ctrlkit {

SeqVector rho(const SeqVector& alpha) {
    Vector out(alpha.size());
    for (int i = 0; i < alpha.size(); ++i) out[i] = phi(alpha[i]) / (i + 1);
    return SeqVector(std::move(out));
}

GridFunction apply_f(const GridFunction& x) {
    return p_inverse(rho(p_forward(x)));
}

double f_norm_bound(int n) {
    double sum = 0.0;
    for (int i = 1; i <= n; ++i) sum += 1.0 / (static_cast<double>(i) * i);
    return std::sqrt(sum);
}

void TransportConfig::validate() const {
    if (n < 8) throw ConfigInvalid("n: need at least 8 spatial cells, got " + std::to_string(n));
    if (T <= 0.0) throw ConfigInvalid("T: horizon must be positive");
    const double steps = T * n;
    if (std::abs(steps - std::round(steps)) > 1e-9)
        throw ConfigInvalid("T: T*n must be integral so dt = h aligns the grids");
    if (const auto* table = std::get_if<std::vector<double>>(&m_profile)) {
        if (static_cast<int>(table->size()) != n)
            throw ConfigInvalid("m_profile: table must have exactly n entries");
        for (double v : *table)
            if (v < 0.0) throw ConfigInvalid("m_profile: entries must be nonnegative");
    } else if (std::get<double>(m_profile) < 0.0) {
        throw ConfigInvalid("m_profile: constant level must be nonnegative");
    }
    if (const auto* cells = std::get_if<std::vector<double>>(&target)) {
        if (static_cast<int>(cells->size()) != n)
            throw ConfigInvalid("target: cell table must have exactly n entries");
    } else if (const auto* gauss = std::get_if<GaussTarget>(&target)) {
        if (gauss->width <= 0.0) throw ConfigInvalid("target: gauss width must be positive");
    }
    steering.validate();
}

TransportModel build_transport_model(const TransportConfig& cfg) {
    cfg.validate();
    const int n = cfg.n;

    GridFunction m(n);
    if (const auto* table = std::get_if<std::vector<double>>(&cfg.m_profile))
        m = GridFunction(Eigen::Map<const Vector>(table->data(), n));
    else
        m = GridFunction(Vector::Constant(n, std::get<double>(cfg.m_profile)));

    GridFunction target(n);
    if (const auto* cells = std::get_if<std::vector<double>>(&cfg.target)) {
        target = GridFunction(Eigen::Map<const Vector>(cells->data(), n));
    } else if (const auto* sine = std::get_if<TransportConfig::SineTarget>(&cfg.target)) {
        const int k = sine->k;
        target = GridFunction::sample(n, [k](double xi) { return std::sin(k * std::numbers::pi * xi); });
    } else {
        const auto gauss = std::get<TransportConfig::GaussTarget>(cfg.target);
        target = GridFunction::sample(n, [gauss](double xi) {
            const double d = (xi - gauss.center) / gauss.width;
            return std::exp(-0.5 * d * d);
        });
    }

    TransportModel model{SemigroupHandle::nilpotent_left_shift(),
                         ControlOperator::multiplication(std::move(m)),
                         [](const GridFunction& x) { return apply_f(x); },
                         TimeGrid(cfg.T, static_cast<int>(std::round(cfg.T * n))),
                         std::move(target)};
    return model;
}

std::pair<Vec, Vec> lipschitz_witness_pair(int n, double m) {
    Vec alpha = Vec::Zero(n);
    alpha[0] = 1.0 / m;
    return {alpha, Vec::Zero(n)};
}

} // namespace ctrlkit
