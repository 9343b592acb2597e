#include "ctrlkit/config.hpp"

#include <fstream>
#include <set>

#include "ctrlkit/io.hpp"

namespace ctrlkit {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
    for (const auto& [key, _] : j.items())
        if (!known.contains(key)) throw ConfigInvalid(where + ": unknown field '" + key + "'");
}

SteeringOptions parse_steering(const json& j) {
    reject_unknown(j, {"max_iter", "relaxation", "tol_fixed_point", "divergence_factor"}, "steering");
    SteeringOptions opts;
    opts.max_iter = j.value("max_iter", opts.max_iter);
    opts.relaxation = j.value("relaxation", opts.relaxation);
    opts.tol_fixed_point = j.value("tol_fixed_point", opts.tol_fixed_point);
    opts.divergence_factor = j.value("divergence_factor", opts.divergence_factor);
    return opts;
}

} // namespace

TransportConfig parse_transport_config(const json& j) {
    if (!j.is_object()) throw ConfigInvalid("config root must be a JSON object");
    reject_unknown(j, {"n", "T", "m_profile", "target", "steering", "seed", "output_dir"}, "config");

    TransportConfig cfg;
    try {
        cfg.n = j.value("n", cfg.n);
        cfg.T = j.value("T", cfg.T);
        cfg.seed = j.value("seed", cfg.seed);
        cfg.output_dir = j.value("output_dir", cfg.output_dir);

        if (j.contains("m_profile")) {
            const auto& m = j.at("m_profile");
            if (m.is_array())
                cfg.m_profile = m.get<std::vector<double>>();
            else
                cfg.m_profile = m.get<double>();
        }
        if (j.contains("target")) {
            const auto& t = j.at("target");
            if (t.is_array()) {
                cfg.target = t.get<std::vector<double>>();
            } else if (t.is_object() && t.contains("sine")) {
                cfg.target = TransportConfig::SineTarget{t.at("sine").get<int>()};
            } else if (t.is_object() && t.contains("gauss")) {
                const auto& g = t.at("gauss");
                cfg.target = TransportConfig::GaussTarget{g.at("center").get<double>(),
                                                          g.at("width").get<double>()};
            } else if (t.is_object() && t.contains("csv")) {
                const GridFunction loaded = io::read_grid_function_csv(t.at("csv").get<std::string>());
                cfg.target = std::vector<double>(loaded.values().data(),
                                                 loaded.values().data() + loaded.n());
            } else {
                throw ConfigInvalid("target: expected sine/gauss/csv object or value array");
            }
        }
        if (j.contains("steering")) cfg.steering = parse_steering(j.at("steering"));
    } catch (const json::exception& e) {
        throw ConfigInvalid(std::string("config type error: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

TransportConfig load_transport_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigInvalid("cannot open config: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigInvalid(std::string("config parse error: ") + e.what());
    }
    return parse_transport_config(j);
}

} // namespace ctrlkit
