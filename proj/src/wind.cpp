#include "sdaas/wind.hpp"

#include "sdaas/csv.hpp"
#include "sdaas/errors.hpp"
#include "sdaas/network.hpp"
#include "sdaas/rng.hpp"

#include <cmath>
#include <sstream>

namespace sdaas {

std::string_view to_string(WindDirection dir) {
    switch (dir) {
        case WindDirection::Front: return "FRONT";
        case WindDirection::Right: return "RIGHT";
        case WindDirection::Left: return "LEFT";
    }
    throw ArgumentError("invalid WindDirection value");
}

WindDirection wind_direction_from_string(std::string_view token) {
    if (token == "FRONT") return WindDirection::Front;
    if (token == "RIGHT") return WindDirection::Right;
    if (token == "LEFT") return WindDirection::Left;
    throw ValidationError("unknown wind direction '" + std::string(token) +
                          "' (expected FRONT, RIGHT or LEFT)");
}

int beaufort_from_speed(double speed_mps) {
    if (!std::isfinite(speed_mps) || speed_mps < 0.0 || speed_mps > kMaxSafeWindMps) {
        throw ArgumentError("wind speed " + std::to_string(speed_mps) +
                            " m/s outside flyable range [0, 13.8]");
    }
    // Half-open [lower, upper) bins; the shared 5.5 boundary belongs to B4.
    static constexpr double kUpperEdges[] = {0.5, 1.6, 3.4, 5.5, 8.0, 10.8};
    for (int b = 0; b < 6; ++b) {
        if (speed_mps < kUpperEdges[b]) return b;
    }
    return 6;
}

WindCondition::WindCondition(double speed_mps, WindDirection direction)
    : speed_mps_(speed_mps), direction_(direction), beaufort_(beaufort_from_speed(speed_mps)) {}

WindAssignment synth_wind(const SkywayNetwork& network, std::uint64_t seed,
                          WindSpeedRange speeds) {
    if (network.segments().empty()) {
        throw ArgumentError("synth_wind: network has no segments");
    }
    if (!(speeds.min_mps >= 0.0) || !(speeds.max_mps <= kMaxSafeWindMps) ||
        !(speeds.min_mps <= speeds.max_mps)) {
        throw ArgumentError("synth_wind: speed range must satisfy 0 <= min <= max <= 13.8");
    }
    WindAssignment out;
    for (const auto& segment : network.segments()) {
        SplitMix64 stream = keyed_stream(seed, static_cast<std::uint64_t>(segment.id));
        double speed = stream.next_double(speeds.min_mps, speeds.max_mps);
        auto dir = kAllDirections[stream.next_index(3)];
        out.emplace(segment.id, WindCondition(speed, dir));
    }
    return out;
}

std::string wind_to_csv(const WindAssignment& assignment) {
    std::ostringstream out;
    out << "edge_id,wind_speed_mps,wind_dir\n";
    for (const auto& [id, wind] : assignment) {
        out << id << ',' << csv::format_fixed(wind.speed_mps()) << ',' << to_string(wind.direction())
            << '\n';
    }
    return out.str();
}

WindAssignment wind_from_csv(std::string_view text) {
    auto table = csv::parse_table(text, "wind CSV");
    auto id_col = table.column("edge_id", "wind CSV");
    auto speed_col = table.column("wind_speed_mps", "wind CSV");
    auto dir_col = table.column("wind_dir", "wind CSV");
    WindAssignment out;
    for (const auto& row : table.rows) {
        auto id = csv::parse_int(row[id_col], "wind CSV edge_id");
        double speed = csv::parse_double(row[speed_col], "wind CSV wind_speed_mps");
        auto dir = wind_direction_from_string(row[dir_col]);
        auto [it, inserted] = out.emplace(id, WindCondition(speed, dir));
        if (!inserted) {
            throw ValidationError("wind CSV: duplicate edge_id " + std::to_string(id));
        }
    }
    return out;
}

void save_wind(const WindAssignment& assignment, const std::string& path) {
    csv::write_file(path, wind_to_csv(assignment));
}

WindAssignment load_wind(const std::string& path) {
    return wind_from_csv(csv::read_file(path));
}

} // namespace sdaas
