#include "sdaas/network.hpp"

#include "sdaas/csv.hpp"
#include "sdaas/errors.hpp"
#include "sdaas/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace sdaas {

namespace {

// Snap to the 1e-6 m resolution of the CSV contract so save/load round-trips
// are lossless.
double quantize(double v) {
    return std::round(v * 1e6) / 1e6;
}

struct UnionFind {
    std::vector<std::size_t> parent;

    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

SkywayNetwork::SkywayNetwork(std::vector<SkywayNode> nodes, std::vector<SkywaySegment> segments)
    : nodes_(std::move(nodes)), segments_(std::move(segments)) {
    std::sort(nodes_.begin(), nodes_.end(),
              [](const SkywayNode& a, const SkywayNode& b) { return a.id < b.id; });
    std::sort(segments_.begin(), segments_.end(),
              [](const SkywaySegment& a, const SkywaySegment& b) { return a.id < b.id; });

    node_index_.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const auto& n = nodes_[i];
        if (!std::isfinite(n.x_m) || !std::isfinite(n.y_m)) {
            throw ValidationError("node " + std::to_string(n.id) + " has non-finite coordinates");
        }
        if (!node_index_.emplace(n.id, i).second) {
            throw ValidationError("duplicate node id " + std::to_string(n.id));
        }
    }

    std::unordered_set<std::int64_t> segment_ids;
    segment_ids.reserve(segments_.size());
    for (const auto& s : segments_) {
        if (!segment_ids.insert(s.id).second) {
            throw ValidationError("duplicate segment id " + std::to_string(s.id));
        }
        if (s.src == s.dst) {
            throw ValidationError("segment " + std::to_string(s.id) + " is a self-loop at node " +
                                  std::to_string(s.src));
        }
        for (auto endpoint : {s.src, s.dst}) {
            if (!node_index_.contains(endpoint)) {
                throw ValidationError("segment " + std::to_string(s.id) +
                                      " references missing node " + std::to_string(endpoint));
            }
        }
        if (!std::isfinite(s.length_m) || s.length_m <= 0.0) {
            throw ValidationError("segment " + std::to_string(s.id) + " has non-positive length " +
                                  std::to_string(s.length_m));
        }
    }
}

const SkywayNode& SkywayNetwork::node(std::int64_t id) const {
    auto it = node_index_.find(id);
    if (it == node_index_.end()) {
        throw ArgumentError("unknown node id " + std::to_string(id));
    }
    return nodes_[it->second];
}

const SkywaySegment* SkywayNetwork::find_segment(std::int64_t id) const {
    auto it = std::lower_bound(segments_.begin(), segments_.end(), id,
                               [](const SkywaySegment& s, std::int64_t v) { return s.id < v; });
    if (it == segments_.end() || it->id != id) return nullptr;
    return &*it;
}

SkywayNetwork SkywayNetwork::with_wind(const WindAssignment& assignment) const {
    std::vector<SkywaySegment> segments = segments_;
    for (auto& s : segments) {
        auto it = assignment.find(s.id);
        if (it == assignment.end()) {
            throw ValidationError("wind assignment missing segment " + std::to_string(s.id));
        }
        s.wind = it->second;
    }
    return SkywayNetwork(nodes_, std::move(segments));
}

SkywayNetwork load_network(const std::filesystem::path& nodes_path,
                           const std::filesystem::path& edges_path) {
    auto nodes_table = csv::parse_table(csv::read_file(nodes_path), "nodes CSV");
    auto id_col = nodes_table.column("node_id", "nodes CSV");
    auto x_col = nodes_table.column("x_m", "nodes CSV");
    auto y_col = nodes_table.column("y_m", "nodes CSV");

    std::vector<SkywayNode> nodes;
    nodes.reserve(nodes_table.rows.size());
    for (const auto& row : nodes_table.rows) {
        nodes.push_back({csv::parse_int(row[id_col], "nodes CSV node_id"),
                         csv::parse_double(row[x_col], "nodes CSV x_m"),
                         csv::parse_double(row[y_col], "nodes CSV y_m")});
    }

    // Coordinates are needed ahead of segment construction to fill in omitted
    // lengths.
    std::unordered_map<std::int64_t, const SkywayNode*> by_id;
    for (const auto& n : nodes) by_id.emplace(n.id, &n);

    auto edges_table = csv::parse_table(csv::read_file(edges_path), "edges CSV");
    auto eid_col = edges_table.column("edge_id", "edges CSV");
    auto src_col = edges_table.column("src", "edges CSV");
    auto dst_col = edges_table.column("dst", "edges CSV");
    auto len_col = edges_table.column("length_m", "edges CSV");

    std::vector<SkywaySegment> segments;
    segments.reserve(edges_table.rows.size());
    for (const auto& row : edges_table.rows) {
        SkywaySegment s;
        s.id = csv::parse_int(row[eid_col], "edges CSV edge_id");
        s.src = csv::parse_int(row[src_col], "edges CSV src");
        s.dst = csv::parse_int(row[dst_col], "edges CSV dst");
        const std::string& len = row[len_col];
        if (len.empty()) {
            auto src_it = by_id.find(s.src);
            auto dst_it = by_id.find(s.dst);
            if (src_it == by_id.end() || dst_it == by_id.end()) {
                throw ValidationError("edge " + std::to_string(s.id) + " references missing node " +
                                      std::to_string(src_it == by_id.end() ? s.src : s.dst));
            }
            s.length_m = quantize(std::hypot(dst_it->second->x_m - src_it->second->x_m,
                                             dst_it->second->y_m - src_it->second->y_m));
        } else {
            s.length_m = csv::parse_double(len, "edges CSV length_m");
        }
        segments.push_back(s);
    }
    return SkywayNetwork(std::move(nodes), std::move(segments));
}

std::string nodes_to_csv(const SkywayNetwork& network) {
    std::ostringstream out;
    out << "node_id,x_m,y_m\n";
    for (const auto& n : network.nodes()) {
        out << n.id << ',' << csv::format_fixed(n.x_m) << ',' << csv::format_fixed(n.y_m) << '\n';
    }
    return out.str();
}

std::string edges_to_csv(const SkywayNetwork& network) {
    std::ostringstream out;
    out << "edge_id,src,dst,length_m\n";
    for (const auto& s : network.segments()) {
        out << s.id << ',' << s.src << ',' << s.dst << ',' << csv::format_fixed(s.length_m) << '\n';
    }
    return out.str();
}

void save_network(const SkywayNetwork& network, const std::filesystem::path& nodes_path,
                  const std::filesystem::path& edges_path) {
    csv::write_file(nodes_path, nodes_to_csv(network));
    csv::write_file(edges_path, edges_to_csv(network));
}

SkywayNetwork gen_network(std::size_t node_count, std::uint64_t seed, int k) {
    if (node_count < 2) {
        throw ArgumentError("gen_network: node_count must be >= 2, got " +
                            std::to_string(node_count));
    }
    if (k < 1) {
        throw ArgumentError("gen_network: k must be >= 1, got " + std::to_string(k));
    }

    // Square sized for ~400 m mean nearest-neighbor spacing:
    // E[d_nn] ~= 0.5 * side / sqrt(n).
    const double side = 800.0 * std::sqrt(static_cast<double>(node_count));
    SplitMix64 rng(seed);

    std::vector<SkywayNode> nodes(node_count);
    for (std::size_t i = 0; i < node_count; ++i) {
        nodes[i].id = static_cast<std::int64_t>(i + 1);
        nodes[i].x_m = quantize(rng.next_double(0.0, side));
        nodes[i].y_m = quantize(rng.next_double(0.0, side));
    }

    auto dist2 = [&](std::size_t a, std::size_t b) {
        double dx = nodes[a].x_m - nodes[b].x_m;
        double dy = nodes[a].y_m - nodes[b].y_m;
        return dx * dx + dy * dy;
    };

    // k nearest neighbors per node, brute force; ties broken by node index so
    // the topology is a pure function of the inputs.
    const std::size_t neighbors = std::min<std::size_t>(static_cast<std::size_t>(k), node_count - 1);
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::pair<double, std::size_t>> scratch;
    scratch.reserve(node_count - 1);
    for (std::size_t i = 0; i < node_count; ++i) {
        scratch.clear();
        for (std::size_t j = 0; j < node_count; ++j) {
            if (j != i) scratch.emplace_back(dist2(i, j), j);
        }
        std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(neighbors - 1),
                         scratch.end());
        for (std::size_t t = 0; t < neighbors; ++t) {
            auto j = scratch[t].second;
            pairs.emplace(std::min(i, j), std::max(i, j));
        }
    }

    // k-NN graphs can come out disconnected; merge components through their
    // closest node pair until one remains.
    UnionFind uf(node_count);
    std::size_t components = node_count;
    for (const auto& [a, b] : pairs) {
        if (uf.unite(a, b)) --components;
    }
    while (components > 1) {
        double best = std::numeric_limits<double>::infinity();
        std::pair<std::size_t, std::size_t> best_pair{0, 0};
        for (std::size_t i = 0; i < node_count; ++i) {
            for (std::size_t j = i + 1; j < node_count; ++j) {
                if (uf.find(i) != uf.find(j)) {
                    double d = dist2(i, j);
                    if (d < best) {
                        best = d;
                        best_pair = {i, j};
                    }
                }
            }
        }
        pairs.insert(best_pair);
        uf.unite(best_pair.first, best_pair.second);
        --components;
    }

    // Directed segments in symmetric pairs; ids are 1-based and contiguous.
    std::vector<SkywaySegment> segments;
    segments.reserve(pairs.size() * 2);
    std::int64_t next_id = 1;
    for (const auto& [a, b] : pairs) {
        double length = quantize(std::sqrt(dist2(a, b)));
        segments.push_back({next_id++, nodes[a].id, nodes[b].id, length, std::nullopt});
        segments.push_back({next_id++, nodes[b].id, nodes[a].id, length, std::nullopt});
    }
    return SkywayNetwork(std::move(nodes), std::move(segments));
}

} // namespace sdaas
