#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "burnkit/error.hpp"

namespace burnkit {

using VertexId = std::uint32_t;

/// Undirected edge as a pair of vertex ids with `first < second`.
using Edge = std::pair<VertexId, VertexId>;

/// Immutable, labeled, simple undirected graph.
///
/// Vertex ids are positions in the lexicographically sorted label list, so
/// iterating ids in increasing order is iterating labels in canonical order,
/// and every neighbor list is sorted by label as well. Adjacency is stored in
/// compressed (CSR) form.
class Graph {
public:
    Graph() : offsets_{0} {}

    std::size_t order() const noexcept { return labels_.size(); }
    std::size_t size() const noexcept { return targets_.size() / 2; }

    const std::string& label(VertexId v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    std::optional<VertexId> find(std::string_view label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label) return std::nullopt;
        return static_cast<VertexId>(it - labels_.begin());
    }

    bool contains(std::string_view label) const { return find(label).has_value(); }

    /// Id of `label`; throws UnknownVertex.
    VertexId id(std::string_view label) const {
        if (auto v = find(label)) return *v;
        throw Error("UnknownVertex", "no vertex labeled '" + std::string(label) + "'");
    }

    bool has_edge(VertexId u, VertexId v) const {
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// All edges, sorted, each with its smaller endpoint first.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(size());
        for (VertexId u = 0; u < order(); ++u)
            for (VertexId v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Subgraph induced by `keep` (ids of this graph), labels preserved.
    Graph induced(std::span<const VertexId> keep) const;

private:
    friend class GraphBuilder;

    std::vector<std::string> labels_;
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> targets_;
};

/// Accumulates labeled vertices and edges, then freezes them into a Graph.
///
/// Duplicate edges and self-loops are rejected at insertion time.
class GraphBuilder {
public:
    /// Adds an isolated vertex (no-op if present). Returns its builder-local id.
    std::uint32_t add_vertex(const std::string& label) {
        auto [it, inserted] = index_.try_emplace(label, static_cast<std::uint32_t>(labels_.size()));
        if (inserted) {
            labels_.push_back(label);
            adjacency_.emplace_back();
        }
        return it->second;
    }

    void add_edge(const std::string& a, const std::string& b) {
        if (a == b) throw Error("SelfLoop", "self-loop at '" + a + "'");
        auto u = add_vertex(a);
        auto v = add_vertex(b);
        auto& nu = adjacency_[u];
        if (std::find(nu.begin(), nu.end(), v) != nu.end())
            throw Error("DuplicateEdge", "duplicate edge '" + a + "' -- '" + b + "'");
        nu.push_back(v);
        adjacency_[v].push_back(u);
    }

    bool contains(const std::string& label) const { return index_.count(label) != 0; }

    std::size_t order() const noexcept { return labels_.size(); }

    std::size_t degree(const std::string& label) const {
        auto it = index_.find(label);
        return it == index_.end() ? 0 : adjacency_[it->second].size();
    }

    Graph build() const {
        const std::size_t n = labels_.size();
        std::vector<std::uint32_t> order(n);
        for (std::uint32_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](auto a, auto b) { return labels_[a] < labels_[b]; });
        std::vector<VertexId> rank(n);
        for (std::uint32_t i = 0; i < n; ++i) rank[order[i]] = i;

        Graph g;
        g.labels_.reserve(n);
        g.offsets_.assign(n + 1, 0);
        for (std::uint32_t i = 0; i < n; ++i) {
            g.labels_.push_back(labels_[order[i]]);
            g.offsets_[i + 1] = g.offsets_[i] + adjacency_[order[i]].size();
        }
        g.targets_.resize(g.offsets_[n]);
        for (std::uint32_t i = 0; i < n; ++i) {
            auto* out = g.targets_.data() + g.offsets_[i];
            std::size_t k = 0;
            for (auto w : adjacency_[order[i]]) out[k++] = rank[w];
            std::sort(out, out + k);
        }
        return g;
    }

private:
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
};

inline Graph Graph::induced(std::span<const VertexId> keep) const {
    std::vector<char> in(order(), 0);
    for (auto v : keep) in.at(v) = 1;
    GraphBuilder b;
    for (VertexId v = 0; v < order(); ++v)
        if (in[v]) b.add_vertex(labels_[v]);
    for (VertexId u = 0; u < order(); ++u) {
        if (!in[u]) continue;
        for (VertexId v : neighbors(u))
            if (u < v && in[v]) b.add_edge(labels_[u], labels_[v]);
    }
    return b.build();
}

constexpr int kUnreachable = -1;

/// Hop distances from one source; `dist[v] == kUnreachable` when v cannot be reached.
struct DistanceMap {
    VertexId source = 0;
    std::vector<int> dist;

    bool reachable(VertexId v) const { return dist[v] != kUnreachable; }
    int operator[](VertexId v) const { return dist[v]; }
};

inline DistanceMap bfs_distances(const Graph& g, VertexId src) {
    if (src >= g.order()) throw Error("UnknownVertex", "vertex id out of range");
    DistanceMap dm{src, std::vector<int>(g.order(), kUnreachable)};
    std::vector<VertexId> queue;
    queue.reserve(g.order());
    dm.dist[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (VertexId v : g.neighbors(u)) {
            if (dm.dist[v] == kUnreachable) {
                dm.dist[v] = dm.dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dm;
}

inline DistanceMap bfs_distances(const Graph& g, std::string_view src) {
    return bfs_distances(g, g.id(src));
}

/// Hop distance between two labeled vertices (kUnreachable if disconnected).
inline int distance(const Graph& g, std::string_view a, std::string_view b) {
    return bfs_distances(g, a)[g.id(b)];
}

/// Multi-source BFS: distance from the nearest vertex of `sources`.
inline std::vector<int> bfs_from_set(const Graph& g, std::span<const VertexId> sources) {
    std::vector<int> dist(g.order(), kUnreachable);
    std::vector<VertexId> queue;
    for (auto s : sources) {
        if (dist[s] == kUnreachable) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (VertexId v : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

/// All-pairs hop distances; intended for solver-sized graphs only.
inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(g.order());
    for (VertexId v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v).dist);
    return d;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto dm = bfs_distances(g, VertexId{0});
    return std::none_of(dm.dist.begin(), dm.dist.end(), [](int d) { return d == kUnreachable; });
}

/// degree -> number of vertices with that degree.
inline std::map<std::size_t, std::size_t> degree_histogram(const Graph& g) {
    std::map<std::size_t, std::size_t> h;
    for (VertexId v = 0; v < g.order(); ++v) ++h[g.degree(v)];
    return h;
}

inline bool is_regular(const Graph& g, std::size_t d) {
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.degree(v) != d) return false;
    return true;
}

/// Labels for a list of ids, in the given order.
inline std::vector<std::string> labels_of(const Graph& g, std::span<const VertexId> ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (auto v : ids) out.push_back(g.label(v));
    return out;
}

/// Ids for a list of labels; throws UnknownVertex.
inline std::vector<VertexId> ids_of(const Graph& g, std::span<const std::string> labels) {
    std::vector<VertexId> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(g.id(l));
    return out;
}

}  // namespace burnkit
