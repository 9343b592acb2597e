#include <doctest.h>

#include <cmath>

#include "ctrlkit/config.hpp"
#include "ctrlkit/random.hpp"
#include "ctrlkit/transport.hpp"

using namespace ctrlkit;

TEST_CASE("phi is the paper's piecewise map") {
    CHECK(phi(-0.5) == 0.0);
    CHECK(phi(0.0) == 0.0);
    CHECK(phi(0.25) == -0.5);
    CHECK(phi(1.0) == -1.0);
    CHECK(phi(7.0) == -1.0);
}

TEST_CASE("apply_f at zero is zero") {
    CHECK(apply_f(GridFunction::zero(16)).norm() == 0.0);
}

TEST_CASE("apply_f hand case: first coefficient 0.25 maps to -0.5") {
    const int n = 16;
    Vector coeffs = Vector::Zero(n);
    coeffs[0] = 0.25;
    const GridFunction x = p_inverse(SeqVector(coeffs));
    const SeqVector fx = p_forward(apply_f(x));
    CHECK(fx[0] == doctest::Approx(-0.5).epsilon(1e-14));
    for (int i = 1; i < n; ++i) CHECK(fx[i] == 0.0);
}

TEST_CASE("apply_f uniform bound") {
    Rng rng(40);
    for (int trial = 0; trial < 1000; ++trial) {
        const GridFunction x = GridFunction(3.0 * rng.vec(64));
        CHECK(apply_f(x).norm() <= 1.2826);
    }
    CHECK(f_norm_bound(10000) < 1.2826);
}

TEST_CASE("dissipativity of rho over seeded pairs") {
    Rng rng(1);
    const auto report = estimate_one_sided_constant(
        rho_vec, [&rng] { return std::pair{rng.vec(32), rng.vec(32)}; }, 10000);
    CHECK(report.estimate <= 1e-12);
}

TEST_CASE("model construction: alignment arithmetic") {
    TransportConfig cfg;
    cfg.n = 64;
    cfg.T = 1.25;
    const auto model = build_transport_model(cfg);
    CHECK(model.grid.nt == 80);
    CHECK(model.grid.dt() == doctest::Approx(1.0 / 64).epsilon(1e-15));
    CHECK(model.semigroup.is_shift());
}

TEST_CASE("sine target samples sin(pi xi) at midpoints") {
    TransportConfig cfg;
    cfg.n = 64;
    const auto model = build_transport_model(cfg);
    for (int i = 0; i < 64; ++i)
        CHECK(model.target[i] ==
              doctest::Approx(std::sin(M_PI * model.target.midpoint(i))).epsilon(1e-14));
}

TEST_CASE("config validation failures") {
    TransportConfig cfg;
    cfg.n = 4;
    CHECK_THROWS_AS(build_transport_model(cfg), ConfigInvalid);

    cfg = {};
    cfg.T = 1.3; // 1.3 * 64 is not integral
    cfg.n = 64;
    CHECK_THROWS_AS(build_transport_model(cfg), ConfigInvalid);

    cfg = {};
    cfg.m_profile = std::vector<double>(64, 1.0);
    std::get<std::vector<double>>(cfg.m_profile)[3] = -0.5;
    CHECK_THROWS_AS(build_transport_model(cfg), ConfigInvalid);
}

TEST_CASE("JSON config parsing round trip") {
    const nlohmann::json j{{"n", 32},
                           {"T", 1.5},
                           {"m_profile", 0.75},
                           {"target", {{"sine", 2}}},
                           {"steering", {{"max_iter", 50}, {"relaxation", 0.5}}},
                           {"seed", 7}};
    const TransportConfig cfg = parse_transport_config(j);
    CHECK(cfg.n == 32);
    CHECK(cfg.T == 1.5);
    CHECK(std::get<double>(cfg.m_profile) == 0.75);
    CHECK(std::get<TransportConfig::SineTarget>(cfg.target).k == 2);
    CHECK(cfg.steering.max_iter == 50);
    CHECK(cfg.steering.relaxation == 0.5);
    CHECK(cfg.seed == 7);

    CHECK_THROWS_AS(parse_transport_config(nlohmann::json{{"bogus", 1}}), ConfigInvalid);
    CHECK_THROWS_AS(parse_transport_config(nlohmann::json{{"target", {{"polynomial", 3}}}}),
                    ConfigInvalid);
}

TEST_CASE("lipschitz witness ratios reproduce sqrt(m)") {
    for (double m : {4.0, 16.0, 64.0, 256.0, 1e4}) {
        const auto [x, y] = lipschitz_witness_pair(64, m);
        const auto report = lipschitz_ratio_probe(rho_vec, {{x, y}});
        CHECK(std::abs(report.estimate - std::sqrt(m)) <= 1e-9);
    }
}
