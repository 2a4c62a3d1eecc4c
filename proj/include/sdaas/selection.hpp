#pragma once

#include "sdaas/aero.hpp"
#include "sdaas/network.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sdaas {

struct Drone {
    std::int64_t id = 0;
    double battery_capacity_mah = 4480.0;
    double voltage_v = 15.2;
    double battery_level_pct = 100.0; // available fraction, in (0, 100]
    double payload_kg = 0.0;          // carried in the model, not in the energy math
    double base_power_w = 180.0;      // hover/cruise power absent wind effects

    double battery_wh() const { return battery_capacity_mah * voltage_v / 1000.0; }
};

// Exactly five drones; list order is the formation slot order 1..5.
struct Swarm {
    std::array<Drone, kSwarmSize> drones;
    std::int64_t current_node = 0;

    static Swarm with_defaults();
    void validate() const;
};

// Per-drone energy for one segment traversal, Watt-hours.
struct EnergyBreakdown {
    double e_fr_wh = 0.0;     // flight-range term (base power over travel time)
    double e_drag_wh = 0.0;   // ambient-wind drag term
    double e_updown_wh = 0.0; // upwash/downwash term, negative = savings
    double total_wh = 0.0;
    double pct_of_battery = 0.0;
};

enum class SelectionMode { Fixed, Adaptive };

std::string_view to_string(SelectionMode mode);

struct SegmentVerdict {
    std::int64_t segment_id = 0;
    Formation formation = Formation::Column;
    std::array<EnergyBreakdown, kSwarmSize> per_drone{};
    bool selected = false;
    bool at_battery_limit = false; // some drone landed exactly on its budget
    std::string reject_reason;     // empty when selected
    double travel_time_s = 0.0;

    // Swarm-total aero energy (drag + upwash/downwash over all five drones).
    double swarm_aero_wh() const;
    double max_drone_pct() const;
};

struct SelectionReport {
    SelectionMode mode = SelectionMode::Fixed;
    std::optional<Formation> fixed_formation; // Fixed mode only
    std::vector<SegmentVerdict> verdicts;     // sorted by segment id
    std::vector<std::int64_t> selected_ids;
};

// Energy of one traversal in the given formation, one breakdown per slot.
// The segment must carry a wind condition (StateError otherwise).
std::array<EnergyBreakdown, kSwarmSize> segment_energy(const SkywaySegment& segment,
                                                       const Swarm& swarm, Formation formation,
                                                       const AeroModel& model);

// One formation chosen from the averaged wind over all candidates (mean speed,
// most frequent direction with ties broken Front > Right > Left), then every
// segment is tested with it.
SelectionReport fixed_select(std::span<const SkywaySegment> segments, const Swarm& swarm,
                             const AeroModel& model, int threads = 1);

// Formation re-chosen per segment from that segment's own wind.
SelectionReport adaptive_select(std::span<const SkywaySegment> segments, const Swarm& swarm,
                                const AeroModel& model, int threads = 1);

// selection report CSV: edge_id,mode,formation,selected,travel_time_s,
// max_drone_pct,reject_reason; rows sorted by edge_id.
std::string report_to_csv(const SelectionReport& report);

// per-drone detail CSV: edge_id,slot,e_fr_wh,e_drag_wh,e_updown_wh,total_wh,pct.
std::string detail_to_csv(const SelectionReport& report);

} // namespace sdaas
