#include "sdaas/aero.hpp"

#include "sdaas/csv.hpp"
#include "sdaas/errors.hpp"

#include <cmath>
#include <limits>

namespace sdaas {

namespace {

// Wind-tunnel CFD results for the DJI Phantom 3 five-drone swarm: per-drone
// drag (N) and swarm-average combined drag+upwash/downwash power (W), both at
// Beaufort 5 ambient wind and 15.6 m/s flight speed.
constexpr std::string_view kBuiltinCsv =
    "formation,direction,d1_n,d2_n,d3_n,d4_n,d5_n,avg_n,combined_w\n"
    "COLUMN,FRONT,134.40,93.88,90.39,81.40,79.29,95.87,1858.78\n"
    "COLUMN,RIGHT,187.38,171.58,167.57,184.36,209.68,184.11,3235.33\n"
    "COLUMN,LEFT,188.68,169.28,168.24,184.45,210.54,184.24,3237.27\n"
    "FRONT,FRONT,187.40,171.58,166.77,183.86,210.23,183.97,2869.90\n"
    "FRONT,RIGHT,79.93,82.22,90.55,93.83,133.78,96.06,1498.56\n"
    "FRONT,LEFT,134.22,94.26,92.45,80.83,79.21,96.19,1500.64\n"
    "ECHELON,FRONT,178.64,187.39,178.07,165.74,136.22,169.21,1576.44\n"
    "ECHELON,RIGHT,135.12,165.74,179.10,187.39,179.64,169.40,1579.35\n"
    "ECHELON,LEFT,179.64,187.45,178.07,165.74,135.94,169.37,1578.85\n"
    "VEE,FRONT,184.41,133.87,131.27,152.18,167.81,153.91,1337.69\n"
    "VEE,RIGHT,379.84,115.35,330.57,160.51,354.92,268.24,3121.24\n"
    "VEE,LEFT,378.40,332.57,114.45,354.83,164.19,268.89,3131.37\n"
    "DIAMOND,FRONT,180.90,196.50,91.67,182.85,68.98,144.18,1367.50\n"
    "DIAMOND,RIGHT,180.52,68.65,91.09,184.65,195.30,144.04,1365.35\n"
    "DIAMOND,LEFT,182.24,193.00,92.13,67.56,181.85,143.36,1354.63\n";

std::size_t profile_index(Formation formation, WindDirection direction) {
    return static_cast<std::size_t>(formation) * 3 + static_cast<std::size_t>(direction);
}

} // namespace

std::string_view to_string(Formation formation) {
    switch (formation) {
        case Formation::Column: return "COLUMN";
        case Formation::Front: return "FRONT";
        case Formation::Echelon: return "ECHELON";
        case Formation::Vee: return "VEE";
        case Formation::Diamond: return "DIAMOND";
    }
    throw ArgumentError("invalid Formation value");
}

Formation formation_from_string(std::string_view token) {
    for (auto f : kAllFormations) {
        if (token == to_string(f)) return f;
    }
    throw ValidationError("unknown formation '" + std::string(token) + "'");
}

std::string_view FormationTable::builtin_csv() {
    return kBuiltinCsv;
}

const FormationTable& FormationTable::builtin() {
    static const FormationTable table = from_csv(kBuiltinCsv);
    return table;
}

FormationTable FormationTable::from_csv_file(const std::filesystem::path& path) {
    return from_csv(csv::read_file(path));
}

FormationTable FormationTable::from_csv(std::string_view text) {
    auto table = csv::parse_table(text, "formation table");
    auto f_col = table.column("formation", "formation table");
    auto d_col = table.column("direction", "formation table");
    std::array<std::size_t, 5> drag_cols{};
    for (int i = 0; i < kSwarmSize; ++i) {
        drag_cols[static_cast<std::size_t>(i)] =
            table.column("d" + std::to_string(i + 1) + "_n", "formation table");
    }
    auto avg_col = table.column("avg_n", "formation table");
    auto comb_col = table.column("combined_w", "formation table");

    FormationTable out;
    std::array<bool, 15> seen{};
    for (const auto& row : table.rows) {
        FormationProfile p;
        p.formation = formation_from_string(row[f_col]);
        p.direction = wind_direction_from_string(row[d_col]);
        double sum = 0.0;
        for (int i = 0; i < kSwarmSize; ++i) {
            double drag = csv::parse_double(row[drag_cols[static_cast<std::size_t>(i)]],
                                            "formation table drag");
            if (!(drag > 0.0) || !std::isfinite(drag)) {
                throw ValidationError("formation table: non-positive drag for " +
                                      std::string(to_string(p.formation)) + "/" +
                                      std::string(to_string(p.direction)));
            }
            p.drone_drag_n[static_cast<std::size_t>(i)] = drag;
            sum += drag;
        }
        p.avg_drag_n = csv::parse_double(row[avg_col], "formation table avg_n");
        p.combined_power_w = csv::parse_double(row[comb_col], "formation table combined_w");
        if (std::abs(sum / kSwarmSize - p.avg_drag_n) > 0.05) {
            throw ValidationError("formation table: published average " +
                                  std::to_string(p.avg_drag_n) + " N deviates from per-drone mean " +
                                  std::to_string(sum / kSwarmSize) + " N beyond 0.05 for " +
                                  std::string(to_string(p.formation)) + "/" +
                                  std::string(to_string(p.direction)));
        }
        if (!std::isfinite(p.combined_power_w)) {
            throw ValidationError("formation table: non-finite combined power");
        }
        auto idx = profile_index(p.formation, p.direction);
        if (seen[idx]) {
            throw ValidationError("formation table: duplicate row for " +
                                  std::string(to_string(p.formation)) + "/" +
                                  std::string(to_string(p.direction)));
        }
        seen[idx] = true;
        out.profiles_[idx] = p;
    }
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!seen[i]) {
            throw ValidationError("formation table: expected 15 rows, one per "
                                  "(formation, direction) pair");
        }
    }
    return out;
}

const FormationProfile& FormationTable::profile(Formation formation,
                                                WindDirection direction) const {
    return profiles_[profile_index(formation, direction)];
}

double drag_power(double drag_n, double speed_mps) {
    if (!(drag_n >= 0.0) || !std::isfinite(drag_n)) {
        throw ArgumentError("drag_power: drag must be >= 0, got " + std::to_string(drag_n));
    }
    if (!(speed_mps >= 0.0) || !std::isfinite(speed_mps)) {
        throw ArgumentError("drag_power: speed must be >= 0, got " + std::to_string(speed_mps));
    }
    return drag_n * speed_mps;
}

double beaufort_factor(int beaufort) {
    if (beaufort < 0 || beaufort > 6) {
        throw ArgumentError("beaufort_factor: Beaufort number must be in [0, 6], got " +
                            std::to_string(beaufort));
    }
    return std::ldexp(1.0, beaufort - kRefBeaufort);
}

AeroModel::AeroModel(AeroModelConfig config, FormationTable table)
    : config_(config), table_(std::move(table)) {
    if (!(config_.drone_speed_mps > 0.0) || !std::isfinite(config_.drone_speed_mps)) {
        throw ArgumentError("AeroModel: drone speed must be > 0");
    }
    if (!(config_.power_floor_w >= 0.0) || !std::isfinite(config_.power_floor_w)) {
        throw ArgumentError("AeroModel: power floor must be >= 0");
    }
}

double AeroModel::updown_power(Formation formation, WindDirection direction) const {
    const auto& p = table_.profile(formation, direction);
    return p.combined_power_w - p.avg_drag_n * kRefSpeedMps;
}

Formation AeroModel::select_formation(double wind_speed_mps, WindDirection direction) const {
    if (!std::isfinite(wind_speed_mps) || wind_speed_mps < 0.0 ||
        wind_speed_mps > kMaxSafeWindMps) {
        throw ArgumentError("select_formation: wind speed " + std::to_string(wind_speed_mps) +
                            " m/s outside [0, 13.8]");
    }
    // Combined power scales by the same f(B) for every formation, so the
    // argmin is the same at any speed: pick it off the calibration column.
    Formation best = Formation::Column;
    double best_power = std::numeric_limits<double>::infinity();
    for (auto f : kAllFormations) {
        double power = table_.profile(f, direction).combined_power_w;
        if (power < best_power) {
            best_power = power;
            best = f;
        }
    }
    return best;
}

double AeroModel::drone_aero_power(Formation formation, WindDirection direction, int beaufort,
                                   int position) const {
    if (position < 1 || position > kSwarmSize) {
        throw ArgumentError("drone_aero_power: position must be in 1..5, got " +
                            std::to_string(position));
    }
    const auto& p = table_.profile(formation, direction);
    double drag = drag_power(p.drone_drag_n[static_cast<std::size_t>(position - 1)],
                             config_.drone_speed_mps);
    // Each drone carries an equal share of the swarm's upwash/downwash power,
    // which is the per-drone value updown_power already gives.
    double combined = beaufort_factor(beaufort) * (drag + updown_power(formation, direction));
    return std::max(config_.power_floor_w, combined);
}

double AeroModel::swarm_aero_power(Formation formation, WindDirection direction,
                                   int beaufort) const {
    double sum = 0.0;
    for (int position = 1; position <= kSwarmSize; ++position) {
        sum += drone_aero_power(formation, direction, beaufort, position);
    }
    return sum / kSwarmSize;
}

} // namespace sdaas
