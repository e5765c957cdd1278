#pragma once

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srnbench/config.hpp"
#include "srnbench/conflict.hpp"
#include "srnbench/trajectory.hpp"

namespace srnbench {

/// Canonical decimal formatting: 17 significant digits, enough to round-trip
/// any double bit-for-bit.
inline std::string format_double(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

inline double parse_double(std::string_view text, std::size_t line_no) {
    double value{};
    const char* begin = text.data();
    const char* end = begin + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw IoError("line " + std::to_string(line_no) + ": bad number '" + std::string(text) + "'");
    return value;
}

namespace detail {

inline std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

inline void check_agent_id(const std::string& id) {
    if (id.empty() || id.find(',') != std::string::npos || id.find('\n') != std::string::npos)
        throw ValidationError("agent id '" + id + "' is not representable in CSV");
}

}  // namespace detail

/// Writes a recording in the trajectory CSV interchange format:
/// header `t,agent_id,x,y,vx,vy`, one row per agent per step, steps outermost.
inline void write_recording_csv(const ScenarioRecording& recording, std::ostream& out) {
    for (const Trajectory& traj : recording.trajectories()) detail::check_agent_id(traj.agent_id());
    out << "t,agent_id,x,y,vx,vy\n";
    const std::size_t steps = recording.steps();
    for (std::size_t k = 0; k < steps; ++k) {
        for (const Trajectory& traj : recording.trajectories()) {
            const AgentSample& s = traj[k];
            out << format_double(s.t) << ',' << traj.agent_id() << ',' << format_double(s.position.x)
                << ',' << format_double(s.position.y) << ',' << format_double(s.velocity.x) << ','
                << format_double(s.velocity.y) << '\n';
        }
    }
}

inline void write_recording_csv(const ScenarioRecording& recording,
                                const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    write_recording_csv(recording, out);
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

/// Parses the trajectory CSV format. The vx,vy column pair is optional; when
/// absent, velocities are derived by forward differences of the positions.
/// Unknown columns are ignored (reported through `warnings`). Agent radii are
/// not part of the interchange format and come from the config.
inline ScenarioRecording load_recording(std::istream& in, const MetricsConfig& cfg,
                                        const std::string& name,
                                        std::vector<std::string>* warnings = nullptr) {
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    };

    if (!next_line()) throw IoError("empty trajectory file");
    const std::vector<std::string> header = detail::split_csv_line(line);
    std::optional<std::size_t> col_t, col_id, col_x, col_y, col_vx, col_vy;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string& h = header[i];
        if (h == "t") col_t = i;
        else if (h == "agent_id") col_id = i;
        else if (h == "x") col_x = i;
        else if (h == "y") col_y = i;
        else if (h == "vx") col_vx = i;
        else if (h == "vy") col_vy = i;
        else if (warnings)
            warnings->push_back("ignoring unknown column '" + h + "'");
    }
    if (!col_t || !col_id || !col_x || !col_y)
        throw IoError("header must contain t, agent_id, x, y (got '" + line + "')");
    if (col_vx.has_value() != col_vy.has_value())
        throw IoError("vx and vy must be present as a pair");
    const bool has_velocity = col_vx.has_value();

    struct Row {
        double t;
        Vec2 pos;
        Vec2 vel;
    };
    std::vector<std::string> agent_order;
    std::map<std::string, std::vector<Row>> rows;
    while (next_line()) {
        const std::vector<std::string> fields = detail::split_csv_line(line);
        if (fields.size() != header.size())
            throw IoError("line " + std::to_string(line_no) + ": expected " +
                          std::to_string(header.size()) + " fields, got " +
                          std::to_string(fields.size()));
        Row row{};
        row.t = parse_double(fields[*col_t], line_no);
        row.pos = {parse_double(fields[*col_x], line_no), parse_double(fields[*col_y], line_no)};
        if (has_velocity)
            row.vel = {parse_double(fields[*col_vx], line_no), parse_double(fields[*col_vy], line_no)};
        const std::string& id = fields[*col_id];
        if (id.empty()) throw IoError("line " + std::to_string(line_no) + ": empty agent_id");
        auto [it, inserted] = rows.try_emplace(id);
        if (inserted) agent_order.push_back(id);
        it->second.push_back(row);
    }
    if (agent_order.empty()) throw IoError("no data rows");

    std::vector<Trajectory> trajectories;
    trajectories.reserve(agent_order.size());
    for (const std::string& id : agent_order) {
        const std::vector<Row>& rs = rows[id];
        if (rs.size() < 2)
            throw IoError("agent '" + id + "': needs at least 2 samples, got " +
                          std::to_string(rs.size()));
        const double dt = rs[1].t - rs[0].t;
        if (has_velocity) {
            std::vector<AgentSample> samples(rs.size());
            for (std::size_t i = 0; i < rs.size(); ++i) samples[i] = {rs[i].t, rs[i].pos, rs[i].vel};
            trajectories.emplace_back(id, cfg.agent_radius_default, std::move(samples), dt);
        } else {
            std::vector<std::pair<double, Vec2>> positions(rs.size());
            for (std::size_t i = 0; i < rs.size(); ++i) positions[i] = {rs[i].t, rs[i].pos};
            trajectories.push_back(resample_velocities(id, cfg.agent_radius_default, positions, dt));
        }
    }
    return ScenarioRecording(name, std::move(trajectories));
}

inline ScenarioRecording load_recording(const std::filesystem::path& path, const MetricsConfig& cfg,
                                        std::vector<std::string>* warnings = nullptr) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return load_recording(in, cfg, path.stem().string(), warnings);
}

/// Writes the step-wise conflict quantities of one agent pair as a flat CSV,
/// ready for external plotting.
inline void export_series(const ScenarioRecording& recording, const std::string& id_a,
                          const std::string& id_b, const MetricsConfig& cfg, std::ostream& out) {
    const Trajectory& a = recording.require(id_a);
    const Trajectory& b = recording.require(id_b);
    const ConflictSeries series = conflict_series(a, b, cfg.conflict_start_threshold);
    out << "t,distance,pdce,conflict_potential,contribution_a,contribution_b\n";
    for (std::size_t k = 0; k < series.times.size(); ++k) {
        const Vec2 r = b[k].position - a[k].position;
        const Vec2 v = b[k].velocity - a[k].velocity;
        out << format_double(series.times[k]) << ',' << format_double(r.norm()) << ','
            << format_double(predict_closest_encounter(r, v).pdce) << ','
            << format_double(series.potential[k]) << ',' << format_double(series.contribution_a[k])
            << ',' << format_double(series.contribution_b[k]) << '\n';
    }
}

inline void export_series(const ScenarioRecording& recording, const std::string& id_a,
                          const std::string& id_b, const MetricsConfig& cfg,
                          const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    export_series(recording, id_a, id_b, cfg, out);
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace srnbench
