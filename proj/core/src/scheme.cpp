#include "hubroute/scheme.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace hubroute {

uint32_t bits_per_id(NodeId node_count) {
    uint32_t bits = 1;
    while ((1ull << bits) < node_count) ++bits;
    return bits;
}

std::vector<NodeId> select_hubs(const Graph& g, uint32_t hub_count) {
    const NodeId n = g.node_count();
    if (hub_count < 1 || hub_count > n)
        throw std::invalid_argument("select_hubs: hub count out of range");
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    order.resize(hub_count);
    return order;
}

namespace {

// BFS from one hub, writing distances and the next hop toward the hub into
// this hub's column of the scheme tables.
void hub_bfs(const Graph& g, NodeId hub, uint32_t hub_index, uint32_t hub_total,
             std::vector<uint32_t>& dist_matrix, std::vector<NodeId>& next_hop) {
    auto r = bfs(g, hub);
    const NodeId n = g.node_count();
    for (NodeId u = 0; u < n; ++u) {
        size_t slot = static_cast<size_t>(u) * hub_total + hub_index;
        dist_matrix[slot] = static_cast<uint32_t>(r.distance[u]);
        next_hop[slot] = r.parent[u];  // kNoNode at the hub itself
    }
}

}  // namespace

Scheme build_scheme(const Graph& g, const SchemeConfig& config) {
    const NodeId n = g.node_count();
    const uint32_t h = config.hub_count;
    if (!is_connected(g)) throw std::invalid_argument("build_scheme: graph must be connected");
    Scheme s;
    s.graph_ = g;
    s.hubs_ = select_hubs(g, h);
    s.id_bits_ = bits_per_id(n);
    s.next_hop_.assign(static_cast<size_t>(n) * h, kNoNode);

    std::vector<uint32_t> dist(static_cast<size_t>(n) * h, 0);

    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(), h);
    if (workers > 1) {
        std::vector<std::thread> pool;
        std::atomic<uint32_t> next{0};
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    uint32_t i = next.fetch_add(1);
                    if (i >= h) return;
                    hub_bfs(g, s.hubs_[i], i, h, dist, s.next_hop_);
                }
            });
        }
        for (auto& t : pool) t.join();
    } else {
        for (uint32_t i = 0; i < h; ++i) hub_bfs(g, s.hubs_[i], i, h, dist, s.next_hop_);
    }

    // Closest hub per node. Hubs are ordered by degree desc, id asc, so
    // keeping the first minimum implements the tie-break (higher degree,
    // then lower id).
    s.closest_hub_index_.assign(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        size_t row = static_cast<size_t>(u) * h;
        uint32_t best = 0;
        for (uint32_t i = 1; i < h; ++i)
            if (dist[row + i] < dist[row + best]) best = i;
        s.closest_hub_index_[u] = best;
    }

    // Labels: walk the next-hop chain from each node to its hub.
    s.labels_.resize(n);
    for (NodeId u = 0; u < n; ++u) {
        uint32_t hi = s.closest_hub_index_[u];
        auto& path = s.labels_[u].path;
        path.clear();
        NodeId x = u;
        path.push_back(x);
        while (x != s.hubs_[hi]) {
            x = s.next_hop(x, hi);
            path.push_back(x);
        }
    }
    return s;
}

LabelSizeDistribution label_size_distribution(const Scheme& scheme) {
    LabelSizeDistribution d;
    const NodeId n = scheme.graph().node_count();
    uint64_t entry_sum = 0, bit_sum = 0;
    for (NodeId u = 0; u < n; ++u) {
        const Label& l = scheme.label(u);
        uint32_t ec = l.entry_count();
        uint64_t bits = l.bit_size(scheme.id_bits());
        ++d.entry_count_hist[ec];
        ++d.bit_size_hist[bits];
        entry_sum += ec;
        bit_sum += bits;
        d.max_entry_count = std::max(d.max_entry_count, ec);
        d.max_bit_size = std::max(d.max_bit_size, bits);
    }
    d.mean_entry_count = static_cast<double>(entry_sum) / n;
    d.mean_bit_size = static_cast<double>(bit_sum) / n;
    return d;
}

// Serialization: line-oriented text, stable for identical inputs.
//   HUBROUTE-SCHEME 1
//   <N> <H> <id_bits>
//   hubs <h0> <h1> ...
//   adj <u> <k> <neighbors...>          (one line per node)
//   label <u> <len> <path...>
//   table <u> <H next-hops, kNoNode printed as ->

void Scheme::save(std::ostream& out) const {
    const NodeId n = graph_.node_count();
    out << "HUBROUTE-SCHEME 1\n";
    out << n << ' ' << hubs_.size() << ' ' << id_bits_ << '\n';
    out << "hubs";
    for (NodeId h : hubs_) out << ' ' << h;
    out << '\n';
    for (NodeId u = 0; u < n; ++u) {
        auto nb = graph_.neighbors(u);
        out << "adj " << u << ' ' << nb.size();
        for (NodeId v : nb) out << ' ' << v;
        out << '\n';
    }
    for (NodeId u = 0; u < n; ++u) {
        const auto& p = labels_[u].path;
        out << "label " << u << ' ' << p.size();
        for (NodeId v : p) out << ' ' << v;
        out << '\n';
    }
    for (NodeId u = 0; u < n; ++u) {
        out << "table " << u;
        for (uint32_t i = 0; i < hubs_.size(); ++i) {
            NodeId nh = next_hop(u, i);
            if (nh == kNoNode)
                out << " -";
            else
                out << ' ' << nh;
        }
        out << '\n';
    }
}

void Scheme::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write scheme file: " + path);
    save(out);
}

Scheme Scheme::load(std::istream& in) {
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "HUBROUTE-SCHEME" || version != 1)
        throw std::runtime_error("not a scheme file (bad header)");
    NodeId n;
    size_t h;
    uint32_t bits;
    if (!(in >> n >> h >> bits)) throw std::runtime_error("scheme file: bad size line");

    Scheme s;
    s.id_bits_ = bits;
    std::string tag;
    if (!(in >> tag) || tag != "hubs") throw std::runtime_error("scheme file: missing hubs");
    s.hubs_.resize(h);
    for (auto& x : s.hubs_) in >> x;

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId i = 0; i < n; ++i) {
        NodeId u;
        size_t k;
        if (!(in >> tag >> u >> k) || tag != "adj")
            throw std::runtime_error("scheme file: bad adj section");
        for (size_t j = 0; j < k; ++j) {
            NodeId v;
            in >> v;
            if (u < v) edges.emplace_back(u, v);
        }
    }
    s.graph_ = Graph::from_edges(n, edges);

    s.labels_.resize(n);
    for (NodeId i = 0; i < n; ++i) {
        NodeId u;
        size_t len;
        if (!(in >> tag >> u >> len) || tag != "label" || len == 0)
            throw std::runtime_error("scheme file: bad label section");
        s.labels_[u].path.resize(len);
        for (auto& v : s.labels_[u].path) in >> v;
    }
    s.next_hop_.assign(static_cast<size_t>(n) * h, kNoNode);
    for (NodeId i = 0; i < n; ++i) {
        NodeId u;
        if (!(in >> tag >> u) || tag != "table")
            throw std::runtime_error("scheme file: bad table section");
        for (size_t j = 0; j < h; ++j) {
            std::string cell;
            in >> cell;
            if (cell != "-")
                s.next_hop_[static_cast<size_t>(u) * h + j] =
                    static_cast<NodeId>(std::stoul(cell));
        }
    }
    // Closest-hub index recovered from the label's final entry.
    s.closest_hub_index_.assign(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        NodeId hub = s.labels_[u].hub();
        auto it = std::find(s.hubs_.begin(), s.hubs_.end(), hub);
        if (it == s.hubs_.end()) throw std::runtime_error("scheme file: label hub not in hub list");
        s.closest_hub_index_[u] = static_cast<uint32_t>(it - s.hubs_.begin());
    }
    return s;
}

Scheme Scheme::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scheme file: " + path);
    return load(in);
}

}  // namespace hubroute
