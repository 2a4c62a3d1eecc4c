#pragma once

#include "sdaas/wind.hpp"

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

namespace sdaas {

// Five-drone flight formations; position slots 1..5 index the calibrated
// per-drone drag vectors.
enum class Formation { Column, Front, Echelon, Vee, Diamond };

inline constexpr Formation kAllFormations[] = {Formation::Column, Formation::Front,
                                               Formation::Echelon, Formation::Vee,
                                               Formation::Diamond};
inline constexpr int kSwarmSize = 5;

std::string_view to_string(Formation formation);
Formation formation_from_string(std::string_view token);

// CFD-calibrated data for one (formation, direction) pair at the reference
// conditions (Beaufort 5 ambient wind, 15.6 m/s flight speed).
struct FormationProfile {
    Formation formation;
    WindDirection direction;
    std::array<double, kSwarmSize> drone_drag_n; // per-drone drag, slots 1..5
    double avg_drag_n;                           // published swarm average
    double combined_power_w;                     // drag + upwash/downwash, swarm average
};

// All 15 calibration profiles. Validates on load: every (formation, direction)
// pair present exactly once, drag entries positive, published average within
// 0.05 N of the per-drone mean.
class FormationTable {
public:
    static const FormationTable& builtin();
    static FormationTable from_csv(std::string_view text);
    static FormationTable from_csv_file(const std::filesystem::path& path);

    // The embedded calibration CSV, byte-for-byte what builtin() parses.
    static std::string_view builtin_csv();

    const FormationProfile& profile(Formation formation, WindDirection direction) const;

private:
    FormationTable() = default;
    std::array<FormationProfile, 15> profiles_{};
};

// Calibration conditions of the embedded tables.
inline constexpr double kRefSpeedMps = 15.6;
inline constexpr int kRefBeaufort = 5;

struct AeroModelConfig {
    double drone_speed_mps = kRefSpeedMps;
    double power_floor_w = 0.0;
};

// P = F_D * v. Negative inputs throw ArgumentError.
double drag_power(double drag_n, double speed_mps);

// Drag roughly doubles per Beaufort step; tables are calibrated at B5, so
// f(B) = 2^(B-5). Valid for B in [0, 6].
double beaufort_factor(int beaufort);

// Formation-energy model over a calibration table. Pure and immutable; safe
// for unrestricted concurrent use.
class AeroModel {
public:
    explicit AeroModel(AeroModelConfig config = {},
                       FormationTable table = FormationTable::builtin());

    const AeroModelConfig& config() const { return config_; }
    const FormationTable& table() const { return table_; }

    // Upwash/downwash power for one drone: the combined calibration value
    // minus the drag power of the published average at reference speed.
    // Negative means net savings from upwash lift.
    double updown_power(Formation formation, WindDirection direction) const;

    // Argmin of combined power for the direction. Independent of wind speed
    // under the 2^(B-5) scaling; speed is validated against [0, 13.8].
    Formation select_formation(double wind_speed_mps, WindDirection direction) const;

    // f(B) * (D_i * v + U), floored at power_floor_w. position is 1..5.
    double drone_aero_power(Formation formation, WindDirection direction, int beaufort,
                            int position) const;

    // Mean of drone_aero_power over the five slots; reproduces the combined
    // calibration value at reference conditions.
    double swarm_aero_power(Formation formation, WindDirection direction, int beaufort) const;

private:
    AeroModelConfig config_;
    FormationTable table_;
};

} // namespace sdaas
