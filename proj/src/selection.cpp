#include "sdaas/selection.hpp"

#include "sdaas/csv.hpp"
#include "sdaas/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

namespace sdaas {

Swarm Swarm::with_defaults() {
    Swarm swarm;
    for (int i = 0; i < kSwarmSize; ++i) {
        swarm.drones[static_cast<std::size_t>(i)].id = i + 1;
    }
    return swarm;
}

void Swarm::validate() const {
    for (const auto& d : drones) {
        if (!(d.battery_wh() > 0.0) || !std::isfinite(d.battery_wh())) {
            throw ArgumentError("drone " + std::to_string(d.id) + ": battery energy must be > 0");
        }
        if (!(d.battery_level_pct > 0.0) || d.battery_level_pct > 100.0) {
            throw ArgumentError("drone " + std::to_string(d.id) +
                                ": battery level must be in (0, 100]");
        }
        if (!(d.payload_kg >= 0.0) || !(d.base_power_w >= 0.0)) {
            throw ArgumentError("drone " + std::to_string(d.id) +
                                ": payload and base power must be >= 0");
        }
    }
}

std::string_view to_string(SelectionMode mode) {
    return mode == SelectionMode::Fixed ? "fixed" : "adaptive";
}

double SegmentVerdict::swarm_aero_wh() const {
    double sum = 0.0;
    for (const auto& b : per_drone) sum += b.e_drag_wh + b.e_updown_wh;
    return sum;
}

double SegmentVerdict::max_drone_pct() const {
    double best = per_drone[0].pct_of_battery;
    for (const auto& b : per_drone) best = std::max(best, b.pct_of_battery);
    return best;
}

std::array<EnergyBreakdown, kSwarmSize> segment_energy(const SkywaySegment& segment,
                                                       const Swarm& swarm, Formation formation,
                                                       const AeroModel& model) {
    if (!segment.wind.has_value()) {
        throw StateError("segment " + std::to_string(segment.id) + " has no wind condition");
    }
    const auto& wind = *segment.wind;
    const double travel_time_s = segment.length_m / model.config().drone_speed_mps;
    const double hours = travel_time_s / 3600.0;
    const double factor = beaufort_factor(wind.beaufort());

    std::array<EnergyBreakdown, kSwarmSize> out;
    for (int slot = 1; slot <= kSwarmSize; ++slot) {
        const auto& drone = swarm.drones[static_cast<std::size_t>(slot - 1)];
        const auto& profile = model.table().profile(formation, wind.direction());
        double drag_w = factor * drag_power(profile.drone_drag_n[static_cast<std::size_t>(slot - 1)],
                                            model.config().drone_speed_mps);
        double aero_w = model.drone_aero_power(formation, wind.direction(), wind.beaufort(), slot);

        EnergyBreakdown b;
        b.e_fr_wh = drone.base_power_w * hours;
        b.e_drag_wh = drag_w * hours;
        // If the floor kicked in, the upwash term absorbs the adjustment.
        b.e_updown_wh = (aero_w - drag_w) * hours;
        b.total_wh = b.e_fr_wh + b.e_drag_wh + b.e_updown_wh;
        b.pct_of_battery = b.total_wh / drone.battery_wh() * 100.0;
        out[static_cast<std::size_t>(slot - 1)] = b;
    }
    return out;
}

namespace {

SegmentVerdict judge_segment(const SkywaySegment& segment, const Swarm& swarm,
                             Formation formation, const AeroModel& model) {
    SegmentVerdict v;
    v.segment_id = segment.id;
    v.formation = formation;
    v.travel_time_s = segment.length_m / model.config().drone_speed_mps;
    v.per_drone = segment_energy(segment, swarm, formation, model);

    v.selected = true;
    for (int slot = 1; slot <= kSwarmSize; ++slot) {
        const auto& drone = swarm.drones[static_cast<std::size_t>(slot - 1)];
        double pct = v.per_drone[static_cast<std::size_t>(slot - 1)].pct_of_battery;
        if (pct > drone.battery_level_pct) {
            v.selected = false;
            std::ostringstream reason;
            reason << "drone " << slot << " needs " << csv::format_fixed(pct)
                   << "% of battery (level " << csv::format_fixed(drone.battery_level_pct) << "%)";
            v.reject_reason = reason.str();
            break;
        }
        if (pct == drone.battery_level_pct) v.at_battery_limit = true;
    }
    return v;
}

// Evaluates one verdict per segment, optionally across threads. Each segment
// writes its own slot, so results are bitwise independent of scheduling.
std::vector<SegmentVerdict> judge_all(std::span<const SkywaySegment> segments, const Swarm& swarm,
                                      const AeroModel& model,
                                      const std::function<Formation(const SkywaySegment&)>& pick,
                                      int threads) {
    std::vector<SegmentVerdict> verdicts(segments.size());
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            verdicts[i] = judge_segment(segments[i], swarm, pick(segments[i]), model);
        }
    };
    if (threads <= 1 || segments.size() < 2) {
        work(0, segments.size());
    } else {
        std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(threads), segments.size());
        std::vector<std::thread> pool;
        pool.reserve(n);
        std::size_t chunk = (segments.size() + n - 1) / n;
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t begin = t * chunk;
            std::size_t end = std::min(segments.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    std::sort(verdicts.begin(), verdicts.end(),
              [](const SegmentVerdict& a, const SegmentVerdict& b) {
                  return a.segment_id < b.segment_id;
              });
    return verdicts;
}

SelectionReport finish_report(SelectionMode mode, std::optional<Formation> fixed_formation,
                              std::vector<SegmentVerdict> verdicts) {
    SelectionReport report;
    report.mode = mode;
    report.fixed_formation = fixed_formation;
    report.verdicts = std::move(verdicts);
    for (const auto& v : report.verdicts) {
        if (v.selected) report.selected_ids.push_back(v.segment_id);
    }
    return report;
}

void check_inputs(std::span<const SkywaySegment> segments, const Swarm& swarm) {
    if (segments.empty()) {
        throw ArgumentError("selection requires at least one candidate segment");
    }
    swarm.validate();
    for (const auto& s : segments) {
        if (!s.wind.has_value()) {
            throw StateError("segment " + std::to_string(s.id) + " has no wind condition");
        }
    }
}

} // namespace

SelectionReport fixed_select(std::span<const SkywaySegment> segments, const Swarm& swarm,
                             const AeroModel& model, int threads) {
    check_inputs(segments, swarm);

    double total_speed = 0.0;
    int counts[3] = {0, 0, 0}; // Front, Right, Left
    for (const auto& s : segments) {
        total_speed += s.wind->speed_mps();
        counts[static_cast<int>(s.wind->direction())] += 1;
    }
    double avg_speed = total_speed / static_cast<double>(segments.size());

    // Most frequent direction; ties resolve Front > Right > Left.
    WindDirection max_dir = WindDirection::Front;
    int best = counts[0];
    for (auto dir : {WindDirection::Right, WindDirection::Left}) {
        if (counts[static_cast<int>(dir)] > best) {
            best = counts[static_cast<int>(dir)];
            max_dir = dir;
        }
    }

    Formation formation = model.select_formation(avg_speed, max_dir);
    auto verdicts = judge_all(
        segments, swarm, model, [formation](const SkywaySegment&) { return formation; }, threads);
    return finish_report(SelectionMode::Fixed, formation, std::move(verdicts));
}

SelectionReport adaptive_select(std::span<const SkywaySegment> segments, const Swarm& swarm,
                                const AeroModel& model, int threads) {
    check_inputs(segments, swarm);
    auto verdicts = judge_all(
        segments, swarm, model,
        [&model](const SkywaySegment& s) {
            return model.select_formation(s.wind->speed_mps(), s.wind->direction());
        },
        threads);
    return finish_report(SelectionMode::Adaptive, std::nullopt, std::move(verdicts));
}

std::string report_to_csv(const SelectionReport& report) {
    std::ostringstream out;
    out << "edge_id,mode,formation,selected,travel_time_s,max_drone_pct,reject_reason\n";
    for (const auto& v : report.verdicts) {
        std::string_view tag = v.reject_reason;
        std::string boundary;
        if (v.selected && v.at_battery_limit) boundary = "battery_boundary";
        out << v.segment_id << ',' << to_string(report.mode) << ',' << to_string(v.formation) << ','
            << (v.selected ? "true" : "false") << ',' << csv::format_fixed(v.travel_time_s) << ','
            << csv::format_fixed(v.max_drone_pct()) << ',' << (v.selected ? boundary : std::string(tag))
            << '\n';
    }
    return out.str();
}

std::string detail_to_csv(const SelectionReport& report) {
    std::ostringstream out;
    out << "edge_id,slot,e_fr_wh,e_drag_wh,e_updown_wh,total_wh,pct\n";
    for (const auto& v : report.verdicts) {
        for (int slot = 1; slot <= kSwarmSize; ++slot) {
            const auto& b = v.per_drone[static_cast<std::size_t>(slot - 1)];
            out << v.segment_id << ',' << slot << ',' << csv::format_fixed(b.e_fr_wh) << ','
                << csv::format_fixed(b.e_drag_wh) << ',' << csv::format_fixed(b.e_updown_wh) << ','
                << csv::format_fixed(b.total_wh) << ',' << csv::format_fixed(b.pct_of_battery)
                << '\n';
        }
    }
    return out.str();
}

} // namespace sdaas
