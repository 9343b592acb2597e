#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "ctrlkit/analysis.hpp"
#include "ctrlkit/control.hpp"
#include "ctrlkit/steer.hpp"

namespace ctrlkit::io {

using json = nlohmann::ordered_json;

/// All CSV floats carry 17 significant digits.
std::string format_double(double v);

void write_grid_function_csv(const std::string& path, const GridFunction& x);   // "xi,value"
GridFunction read_grid_function_csv(const std::string& path);

void write_trajectory_csv(const std::string& path, const Trajectory& z);        // "t,xi,z"
void write_control_csv(const std::string& path, const ControlSignal& u);        // "t,xi,u"
ControlSignal read_control_csv(const std::string& path, const TimeGrid& grid);

json trajectory_summary(const Trajectory& z);
json gramian_summary(const GramianOperator& g, int n);
json probe_report_json(const ProbeReport& report);

void write_json(const std::string& path, const json& j);

} // namespace ctrlkit::io
