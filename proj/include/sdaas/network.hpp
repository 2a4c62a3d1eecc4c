#pragma once

#include "sdaas/wind.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sdaas {

// Rooftop node of the skyway graph, planar coordinates in meters.
struct SkywayNode {
    std::int64_t id = 0;
    double x_m = 0.0;
    double y_m = 0.0;
};

// Directed edge of the skyway graph; one candidate service. Wind is assigned
// separately, per segment, so the two directions of a physical corridor may
// carry different relative wind.
struct SkywaySegment {
    std::int64_t id = 0;
    std::int64_t src = 0;
    std::int64_t dst = 0;
    double length_m = 0.0;
    std::optional<WindCondition> wind;
};

// Validated node/segment collections, immutable after construction and safe
// to share read-only across workers. Nodes and segments are kept sorted by id.
class SkywayNetwork {
public:
    SkywayNetwork(std::vector<SkywayNode> nodes, std::vector<SkywaySegment> segments);

    const std::vector<SkywayNode>& nodes() const { return nodes_; }
    const std::vector<SkywaySegment>& segments() const { return segments_; }

    const SkywayNode& node(std::int64_t id) const;
    const SkywaySegment* find_segment(std::int64_t id) const;

    // Copy of this network with the given wind conditions applied; every
    // segment must receive one.
    SkywayNetwork with_wind(const WindAssignment& assignment) const;

private:
    std::vector<SkywayNode> nodes_;
    std::vector<SkywaySegment> segments_;
    std::unordered_map<std::int64_t, std::size_t> node_index_;
};

// nodes CSV: node_id,x_m,y_m; edges CSV: edge_id,src,dst,length_m (length may
// be empty, then computed as the Euclidean distance between the endpoints).
SkywayNetwork load_network(const std::filesystem::path& nodes_path,
                           const std::filesystem::path& edges_path);

// Bit-stable serializers: rows sorted by id, 6-decimal formatting.
std::string nodes_to_csv(const SkywayNetwork& network);
std::string edges_to_csv(const SkywayNetwork& network);

void save_network(const SkywayNetwork& network, const std::filesystem::path& nodes_path,
                  const std::filesystem::path& edges_path);

// Synthetic road-like network: node_count points uniform in a square sized so
// the mean nearest-neighbor spacing is about 400 m, each node joined to its k
// nearest neighbors (deduplicated, symmetrized), components merged so the
// result is always connected. Pure function of (node_count, seed, k).
SkywayNetwork gen_network(std::size_t node_count, std::uint64_t seed, int k = 3);

} // namespace sdaas
