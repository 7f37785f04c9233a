#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hubroute {

using NodeId = uint32_t;
constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Immutable undirected simple graph in CSR form. Node ids are dense 0..N-1,
// adjacency lists are sorted ascending.
class Graph {
public:
    Graph() = default;

    struct BuildStats {
        size_t self_loops_dropped = 0;
        size_t duplicates_dropped = 0;
    };

    // Builds from an edge list; self-loops and duplicate edges are dropped
    // (counted in *stats when given).
    static Graph from_edges(NodeId node_count,
                            const std::vector<std::pair<NodeId, NodeId>>& edges,
                            BuildStats* stats = nullptr);

    NodeId node_count() const { return static_cast<NodeId>(offsets_.empty() ? 0 : offsets_.size() - 1); }
    size_t edge_count() const { return adjacency_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
    }
    NodeId degree(NodeId u) const { return static_cast<NodeId>(offsets_[u + 1] - offsets_[u]); }
    bool has_edge(NodeId u, NodeId v) const;

    // Unordered edges, u < v, lexicographic order.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    std::vector<size_t> offsets_;
    std::vector<NodeId> adjacency_;
};

struct BfsResult {
    NodeId source = kNoNode;
    std::vector<int32_t> distance;  // -1 = unreachable
    std::vector<NodeId> parent;     // next node toward the source; kNoNode at source/unreachable

    bool reachable(NodeId u) const { return distance[u] >= 0; }
};

// Exact hop distances from source. Parent is the lowest-id neighbor among
// predecessors at distance d-1, so shortest-path reconstruction is
// deterministic.
BfsResult bfs(const Graph& g, NodeId source);

struct GiantComponent {
    Graph graph;                     // induced subgraph, densely re-indexed
    std::vector<NodeId> old_of_new;  // size = component size
    std::vector<NodeId> new_of_old;  // kNoNode for nodes outside the component
};

// Largest connected component; ties broken toward the component containing
// the lowest original node id.
GiantComponent giant_component(const Graph& g);

bool is_connected(const Graph& g);

struct GraphStats {
    NodeId giant_component_size = 0;
    int32_t diameter = 0;
    double mean_distance = 0.0;
    bool estimated = false;  // true when sampled rather than all-pairs exact
};

// Diameter and mean pairwise distance of a connected graph. Exact (BFS from
// every node) when N <= exact_threshold, otherwise estimated from sample_size
// random BFS sources.
GraphStats graph_stats(const Graph& g, NodeId exact_threshold = 2000,
                       size_t sample_size = 200, uint64_t seed = 0);

struct EdgeListLoad {
    Graph graph;
    std::vector<uint64_t> original_ids;  // original id of each dense node
    size_t self_loops_dropped = 0;
    size_t duplicates_dropped = 0;
};

// Edge-list text format: one edge per line, two whitespace-separated
// non-negative integer ids; '#' lines are comments. Sparse ids are densified
// in sorted order.
EdgeListLoad load_edge_list(std::istream& in);
EdgeListLoad load_edge_list_file(const std::string& path);
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

}  // namespace hubroute
