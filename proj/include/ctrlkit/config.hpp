#pragma once

#include <nlohmann/json.hpp>

#include "ctrlkit/transport.hpp"

namespace ctrlkit {

/// Parse a TransportConfig from its JSON form:
/// {
///   "n": 64, "T": 1.25,
///   "m_profile": 1.0 | [..n values..],
///   "target": {"sine": 1} | {"gauss": {"center": 0.5, "width": 0.1}}
///           | {"csv": "path"} | [..n values..],
///   "steering": {"max_iter": 200, "relaxation": 1.0,
///                "tol_fixed_point": 1e-8, "divergence_factor": 1e6},
///   "seed": 0, "output_dir": "."
/// }
/// Unknown fields are rejected; errors carry the field name.
TransportConfig parse_transport_config(const nlohmann::json& j);

TransportConfig load_transport_config(const std::string& path);

} // namespace ctrlkit
