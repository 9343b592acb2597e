#include "ctrlkit/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace ctrlkit::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigInvalid("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigInvalid("cannot open for reading: " + path);
    return in;
}

} // namespace

void write_grid_function_csv(const std::string& path, const GridFunction& x) {
    auto out = open_out(path);
    out << "xi,value\n";
    for (int i = 0; i < x.n(); ++i)
        out << format_double(x.midpoint(i)) << ',' << format_double(x[i]) << '\n';
}

GridFunction read_grid_function_csv(const std::string& path) {
    auto in = open_in(path);
    std::string line;
    std::getline(in, line); // header
    std::vector<double> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw ConfigInvalid("malformed CSV row in " + path);
        values.push_back(std::stod(line.substr(comma + 1)));
    }
    if (values.empty()) throw ConfigInvalid("no data rows in " + path);
    return GridFunction(Eigen::Map<const Vector>(values.data(), static_cast<int>(values.size())));
}

namespace {

void write_time_space_csv(const std::string& path, const char* value_name,
                          const TimeGrid& grid, const std::vector<GridFunction>& rows) {
    auto out = open_out(path);
    out << "t,xi," << value_name << '\n';
    for (int j = 0; j < static_cast<int>(rows.size()); ++j) {
        const std::string t = format_double(grid.time(j));
        for (int i = 0; i < rows[j].n(); ++i)
            out << t << ',' << format_double(rows[j].midpoint(i)) << ','
                << format_double(rows[j][i]) << '\n';
    }
}

} // namespace

void write_trajectory_csv(const std::string& path, const Trajectory& z) {
    write_time_space_csv(path, "z", z.grid, z.states);
}

void write_control_csv(const std::string& path, const ControlSignal& u) {
    write_time_space_csv(path, "u", u.grid, u.inputs);
}

ControlSignal read_control_csv(const std::string& path, const TimeGrid& grid) {
    auto in = open_in(path);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<double>> rows;
    std::string last_t;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string t, xi, v;
        if (!std::getline(ss, t, ',') || !std::getline(ss, xi, ',') || !std::getline(ss, v))
            throw ConfigInvalid("malformed CSV row in " + path);
        if (t != last_t) {
            rows.emplace_back();
            last_t = t;
        }
        rows.back().push_back(std::stod(v));
    }
    if (rows.size() != static_cast<std::size_t>(grid.nt) + 1)
        throw ConfigInvalid("control CSV has " + std::to_string(rows.size()) +
                            " time slices, grid expects " + std::to_string(grid.nt + 1));
    ControlSignal u;
    u.grid = grid;
    for (auto& r : rows)
        u.inputs.emplace_back(Eigen::Map<const Vector>(r.data(), static_cast<int>(r.size())));
    return u;
}

json trajectory_summary(const Trajectory& z) {
    return json{{"T", z.grid.T},
                {"nt", z.grid.nt},
                {"n", z.states.front().n()},
                {"final_norm", z.final().norm()}};
}

json gramian_summary(const GramianOperator& g, int n) {
    return json{{"T", g.T},
                {"n", n},
                {"cond_estimate", g.cond_estimate},
                {"min_eig", g.min_eig},
                {"max_eig", g.max_eig}};
}

json probe_report_json(const ProbeReport& report) {
    json j{{"estimate", report.estimate},
           {"witness", json::object()},
           {"samples", report.samples},
           {"seed", report.seed}};
    if (report.witness_x.size() > 0)
        j["witness"]["x"] = std::vector<double>(report.witness_x.data(),
                                                report.witness_x.data() + report.witness_x.size());
    if (report.witness_y.size() > 0)
        j["witness"]["y"] = std::vector<double>(report.witness_y.data(),
                                                report.witness_y.data() + report.witness_y.size());
    return j;
}

void write_json(const std::string& path, const json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

} // namespace ctrlkit::io
