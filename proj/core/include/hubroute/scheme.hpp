#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hubroute/graph.hpp"

namespace hubroute {

struct SchemeConfig {
    uint32_t hub_count = 1;
};

// A node's routing name: the shortest path from the node to its closest hub,
// node itself first, hub last. A hub's own label is just <hub>.
struct Label {
    std::vector<NodeId> path;

    NodeId hub() const { return path.back(); }
    uint32_t entry_count() const { return static_cast<uint32_t>(path.size()); }
    uint32_t hop_count() const { return entry_count() - 1; }
    uint64_t bit_size(uint32_t bits_per_id) const {
        return static_cast<uint64_t>(entry_count()) * bits_per_id;
    }
};

uint32_t bits_per_id(NodeId node_count);

// Nodes sorted by degree descending, id ascending; first H returned.
std::vector<NodeId> select_hubs(const Graph& g, uint32_t hub_count);

// Preprocessing output: hubs, per-node labels, and per-node next-hop tables.
// The table maps each hub (by hub index) to the neighbor on a shortest path
// toward it; a hub's entry for itself is kNoNode. Together with the neighbor
// list this is the paper-sized H + degree entries per node.
class Scheme {
public:
    const Graph& graph() const { return graph_; }
    const std::vector<NodeId>& hubs() const { return hubs_; }
    uint32_t hub_count() const { return static_cast<uint32_t>(hubs_.size()); }
    const Label& label(NodeId u) const { return labels_[u]; }
    uint32_t closest_hub_index(NodeId u) const { return closest_hub_index_[u]; }
    NodeId closest_hub(NodeId u) const { return hubs_[closest_hub_index_[u]]; }
    uint32_t hub_distance(NodeId u) const { return labels_[u].hop_count(); }
    NodeId next_hop(NodeId u, uint32_t hub_index) const {
        return next_hop_[static_cast<size_t>(u) * hubs_.size() + hub_index];
    }
    uint32_t id_bits() const { return id_bits_; }
    size_t table_entry_count(NodeId u) const { return hubs_.size() + graph_.degree(u); }

    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    static Scheme load(std::istream& in);
    static Scheme load_file(const std::string& path);

private:
    friend Scheme build_scheme(const Graph&, const SchemeConfig&);

    Graph graph_;
    std::vector<NodeId> hubs_;
    std::vector<Label> labels_;
    std::vector<uint32_t> closest_hub_index_;
    std::vector<NodeId> next_hop_;  // N x H, row-major
    uint32_t id_bits_ = 1;
};

// One BFS per hub. Closest hub minimizes distance; ties prefer the higher
// degree hub, then the lower id. Requires a connected graph.
Scheme build_scheme(const Graph& g, const SchemeConfig& config);

struct LabelSizeDistribution {
    std::map<uint32_t, uint64_t> entry_count_hist;
    std::map<uint64_t, uint64_t> bit_size_hist;
    double mean_entry_count = 0;
    uint32_t max_entry_count = 0;
    double mean_bit_size = 0;
    uint64_t max_bit_size = 0;
};

LabelSizeDistribution label_size_distribution(const Scheme& scheme);

}  // namespace hubroute
