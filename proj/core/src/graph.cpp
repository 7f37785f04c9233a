#include "hubroute/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "hubroute/rng.hpp"

namespace hubroute {

Graph Graph::from_edges(NodeId node_count,
                        const std::vector<std::pair<NodeId, NodeId>>& edges,
                        BuildStats* stats) {
    BuildStats local;
    std::vector<std::pair<NodeId, NodeId>> clean;
    clean.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= node_count || v >= node_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) {
            ++local.self_loops_dropped;
            continue;
        }
        if (u > v) std::swap(u, v);
        clean.emplace_back(u, v);
    }
    std::sort(clean.begin(), clean.end());
    auto last = std::unique(clean.begin(), clean.end());
    local.duplicates_dropped = static_cast<size_t>(clean.end() - last);
    clean.erase(last, clean.end());

    Graph g;
    g.offsets_.assign(node_count + 1, 0);
    for (auto [u, v] : clean) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (size_t i = 1; i <= node_count; ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.adjacency_.resize(clean.size() * 2);
    std::vector<size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : clean) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    for (NodeId u = 0; u < node_count; ++u) {
        auto* b = g.adjacency_.data() + g.offsets_[u];
        auto* e = g.adjacency_.data() + g.offsets_[u + 1];
        std::sort(b, e);
    }
    if (stats) *stats = local;
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto n = neighbors(u);
    return std::binary_search(n.begin(), n.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

BfsResult bfs(const Graph& g, NodeId source) {
    const NodeId n = g.node_count();
    if (source >= n) throw std::invalid_argument("bfs: source out of range");
    BfsResult r;
    r.source = source;
    r.distance.assign(n, -1);
    r.parent.assign(n, kNoNode);
    std::vector<NodeId> frontier{source}, next;
    r.distance[source] = 0;
    int32_t d = 0;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (NodeId u : frontier) {
            for (NodeId v : g.neighbors(u)) {
                if (r.distance[v] < 0) {
                    r.distance[v] = d;
                    next.push_back(v);
                }
            }
        }
        frontier.swap(next);
    }
    // Parent = lowest-id neighbor one step closer to the source.
    for (NodeId u = 0; u < n; ++u) {
        if (u == source || r.distance[u] < 0) continue;
        for (NodeId v : g.neighbors(u)) {  // sorted, first hit is lowest id
            if (r.distance[v] == r.distance[u] - 1) {
                r.parent[u] = v;
                break;
            }
        }
    }
    return r;
}

GiantComponent giant_component(const Graph& g) {
    const NodeId n = g.node_count();
    if (n == 0) throw std::invalid_argument("giant_component: empty graph");
    std::vector<NodeId> comp(n, kNoNode);
    std::vector<size_t> comp_size;
    std::vector<NodeId> stack;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] != kNoNode) continue;
        NodeId c = static_cast<NodeId>(comp_size.size());
        size_t size = 0;
        stack.push_back(s);
        comp[s] = c;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            ++size;
            for (NodeId v : g.neighbors(u)) {
                if (comp[v] == kNoNode) {
                    comp[v] = c;
                    stack.push_back(v);
                }
            }
        }
        comp_size.push_back(size);
    }
    // First maximal component wins; scan order means it contains the lowest id.
    NodeId best = 0;
    for (NodeId c = 1; c < comp_size.size(); ++c)
        if (comp_size[c] > comp_size[best]) best = c;

    GiantComponent out;
    out.new_of_old.assign(n, kNoNode);
    for (NodeId u = 0; u < n; ++u) {
        if (comp[u] == best) {
            out.new_of_old[u] = static_cast<NodeId>(out.old_of_new.size());
            out.old_of_new.push_back(u);
        }
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u) {
        if (comp[u] != best) continue;
        for (NodeId v : g.neighbors(u))
            if (u < v) edges.emplace_back(out.new_of_old[u], out.new_of_old[v]);
    }
    out.graph = Graph::from_edges(static_cast<NodeId>(out.old_of_new.size()), edges);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.node_count() == 0) return false;
    auto r = bfs(g, 0);
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (r.distance[u] < 0) return false;
    return true;
}

GraphStats graph_stats(const Graph& g, NodeId exact_threshold, size_t sample_size,
                       uint64_t seed) {
    const NodeId n = g.node_count();
    if (!is_connected(g)) throw std::invalid_argument("graph_stats: graph must be connected");
    GraphStats st;
    st.giant_component_size = n;
    if (n == 1) {
        st.diameter = 0;
        st.mean_distance = 0.0;
        return st;
    }
    std::vector<NodeId> sources;
    if (n <= exact_threshold) {
        sources.resize(n);
        for (NodeId u = 0; u < n; ++u) sources[u] = u;
    } else {
        st.estimated = true;
        auto rng = make_rng(seed);
        sources.reserve(sample_size);
        for (size_t i = 0; i < sample_size; ++i)
            sources.push_back(static_cast<NodeId>(uniform_below(rng, n)));
    }
    int32_t diam = 0;
    uint64_t sum = 0, count = 0;
    for (NodeId s : sources) {
        auto r = bfs(g, s);
        for (NodeId u = 0; u < n; ++u) {
            if (u == s) continue;
            diam = std::max(diam, r.distance[u]);
            sum += static_cast<uint64_t>(r.distance[u]);
            ++count;
        }
    }
    st.diameter = diam;
    st.mean_distance = static_cast<double>(sum) / static_cast<double>(count);
    return st;
}

EdgeListLoad load_edge_list(std::istream& in) {
    std::vector<std::pair<uint64_t, uint64_t>> raw;
    size_t self_loops = 0;
    std::string line;
    while (std::getline(in, line)) {
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        uint64_t a, b;
        if (!(ls >> a >> b)) throw std::runtime_error("bad edge-list line: " + line);
        if (a == b) {
            ++self_loops;
            continue;
        }
        raw.emplace_back(a, b);
    }
    // Densify in sorted original-id order.
    std::vector<uint64_t> ids;
    ids.reserve(raw.size() * 2);
    for (auto [a, b] : raw) {
        ids.push_back(a);
        ids.push_back(b);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto dense = [&](uint64_t id) {
        return static_cast<NodeId>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
    };
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw) edges.emplace_back(dense(a), dense(b));

    EdgeListLoad out;
    Graph::BuildStats stats;
    out.graph = Graph::from_edges(static_cast<NodeId>(ids.size()), edges, &stats);
    out.original_ids = std::move(ids);
    out.self_loops_dropped = self_loops;
    out.duplicates_dropped = stats.duplicates_dropped;
    return out;
}

EdgeListLoad load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    save_edge_list(g, out);
}

}  // namespace hubroute
