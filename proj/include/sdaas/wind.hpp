#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace sdaas {

class SkywayNetwork;

// Wind direction relative to the swarm's direction of travel. Tailwinds help
// the flight and are excluded from the model, so there is no Back value.
enum class WindDirection { Front, Right, Left };

inline constexpr WindDirection kAllDirections[] = {WindDirection::Front, WindDirection::Right,
                                                   WindDirection::Left};

std::string_view to_string(WindDirection dir);
WindDirection wind_direction_from_string(std::string_view token);

// Commercial quadcopters are unsafe above this wind speed; it is also the
// inclusive upper edge of Beaufort 6.
inline constexpr double kMaxSafeWindMps = 13.8;

// Beaufort number 0..6 from wind speed, half-open bins [lower, upper); the
// 13.8 ceiling itself is flyable and maps to 6. Out of range throws ArgumentError.
int beaufort_from_speed(double speed_mps);

// Speed, direction and the cached Beaufort number; immutable after construction
// so the beaufort field can never drift from the speed.
class WindCondition {
public:
    WindCondition(double speed_mps, WindDirection direction);

    double speed_mps() const { return speed_mps_; }
    WindDirection direction() const { return direction_; }
    int beaufort() const { return beaufort_; }

    bool operator==(const WindCondition& other) const = default;

private:
    double speed_mps_;
    WindDirection direction_;
    int beaufort_;
};

// Uniform speed distribution for synthesis; bounds must stay within [0, 13.8].
struct WindSpeedRange {
    double min_mps = 0.0;
    double max_mps = kMaxSafeWindMps;
};

using WindAssignment = std::map<std::int64_t, WindCondition>;

// One wind condition per segment. Each segment's draw is keyed by
// (seed, segment id), so the result is independent of iteration order and of
// which other segments exist. Direction is uniform over {Front, Right, Left}.
WindAssignment synth_wind(const SkywayNetwork& network, std::uint64_t seed,
                          WindSpeedRange speeds = {});

// wind CSV: header edge_id,wind_speed_mps,wind_dir; rows sorted by edge_id.
std::string wind_to_csv(const WindAssignment& assignment);
WindAssignment wind_from_csv(std::string_view text);

void save_wind(const WindAssignment& assignment, const std::string& path);
WindAssignment load_wind(const std::string& path);

} // namespace sdaas
