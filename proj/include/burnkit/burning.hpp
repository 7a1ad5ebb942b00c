#pragma once

#include <algorithm>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "burnkit/error.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/io.hpp"

namespace burnkit {

/// Outcome of running a burning sequence for exactly `length` steps.
///
/// Steps are 1-based. `burn_time[v] == 0` means v is still unburned after the
/// last step. `responsible[v]` lists the 1-based positions i of the sources
/// b_i with i + d(b_i, v) == burn_time[v] (the set S_v), ascending.
struct BurningSchedule {
    int length = 0;
    std::vector<int> burn_time;
    std::vector<std::vector<int>> responsible;

    bool complete() const {
        return std::none_of(burn_time.begin(), burn_time.end(), [](int t) { return t == 0; });
    }

    std::size_t unburned_count() const {
        return static_cast<std::size_t>(std::count(burn_time.begin(), burn_time.end(), 0));
    }

    /// Largest burn time among burned vertices.
    int last_burn_step() const {
        return burn_time.empty() ? 0 : *std::max_element(burn_time.begin(), burn_time.end());
    }
};

namespace detail {

inline void require_nonempty(std::span<const VertexId> seq) {
    if (seq.empty()) throw Error("InvalidSequence", "burning sequence is empty");
}

inline std::string position_message(const Graph& g, std::span<const VertexId> seq, std::size_t i) {
    return "source " + std::to_string(i + 1) + " ('" + g.label(seq[i]) +
           "') is already burned before its step";
}

}  // namespace detail

/// Closed-form engine: burn_time[v] = min_i (i + d(b_i, v)), clipped at |B|.
///
/// Throws InvalidSequence if some b_i was burned strictly before step i, i.e.
/// j + d(b_j, b_i) < i for an earlier j. A source reached by older fire at
/// exactly step i is valid.
inline BurningSchedule simulate(const Graph& g, std::span<const VertexId> seq) {
    detail::require_nonempty(seq);
    const int k = static_cast<int>(seq.size());
    const std::size_t n = g.order();
    constexpr int inf = std::numeric_limits<int>::max();

    std::vector<std::vector<int>> dists;
    dists.reserve(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] >= n) throw Error("UnknownVertex", "vertex id out of range");
        dists.push_back(bfs_distances(g, seq[i]).dist);
        for (std::size_t j = 0; j < i; ++j) {
            int d = dists[j][seq[i]];
            if (d != kUnreachable && static_cast<int>(j) + d < static_cast<int>(i))
                throw Error("InvalidSequence", detail::position_message(g, seq, i));
        }
    }

    BurningSchedule s;
    s.length = k;
    s.burn_time.assign(n, 0);
    s.responsible.assign(n, {});
    for (VertexId v = 0; v < n; ++v) {
        int best = inf;
        for (int i = 0; i < k; ++i) {
            int d = dists[i][v];
            if (d != kUnreachable) best = std::min(best, i + 1 + d);
        }
        if (best > k) continue;
        s.burn_time[v] = best;
        for (int i = 0; i < k; ++i) {
            int d = dists[i][v];
            if (d != kUnreachable && i + 1 + d == best) s.responsible[v].push_back(i + 1);
        }
    }
    return s;
}

/// Step-by-step engine: each step first spreads fire one hop from everything
/// burned so far, then ignites the new source. Independent of the distance
/// formula; used as the oracle for `simulate`.
inline BurningSchedule simulate_frontier(const Graph& g, std::span<const VertexId> seq) {
    detail::require_nonempty(seq);
    const std::size_t n = g.order();
    BurningSchedule s;
    s.length = static_cast<int>(seq.size());
    s.burn_time.assign(n, 0);
    s.responsible.assign(n, {});

    std::vector<VertexId> frontier;  // vertices burned in the previous step
    for (int step = 1; step <= s.length; ++step) {
        VertexId src = seq[step - 1];
        if (src >= n) throw Error("UnknownVertex", "vertex id out of range");
        if (s.burn_time[src] != 0)
            throw Error("InvalidSequence", detail::position_message(g, seq, step - 1));

        std::vector<VertexId> next;
        for (VertexId u : frontier) {
            for (VertexId v : g.neighbors(u)) {
                if (s.burn_time[v] == 0) {
                    s.burn_time[v] = step;
                    next.push_back(v);
                }
                if (s.burn_time[v] == step) {
                    auto& dst = s.responsible[v];
                    dst.insert(dst.end(), s.responsible[u].begin(), s.responsible[u].end());
                }
            }
        }
        if (s.burn_time[src] == 0) {
            s.burn_time[src] = step;
            next.push_back(src);
        }
        s.responsible[src].push_back(step);
        for (VertexId v : next) {
            auto& r = s.responsible[v];
            std::sort(r.begin(), r.end());
            r.erase(std::unique(r.begin(), r.end()), r.end());
        }
        frontier = std::move(next);
    }
    return s;
}

inline BurningSchedule simulate(const Graph& g, const BurningSequence& seq) {
    return simulate(g, ids_of(g, seq));
}

inline BurningSchedule simulate_frontier(const Graph& g, const BurningSequence& seq) {
    return simulate_frontier(g, ids_of(g, seq));
}

inline bool is_burning_sequence(const Graph& g, std::span<const VertexId> seq) {
    if (seq.empty()) return g.order() == 0;
    try {
        return simulate(g, seq).complete();
    } catch (const Error& e) {
        if (e.kind() == "InvalidSequence") return false;
        throw;
    }
}

inline bool is_burning_sequence(const Graph& g, const BurningSequence& seq) {
    return is_burning_sequence(g, ids_of(g, seq));
}

/// BL: vertices burned at the final step.
inline std::vector<VertexId> last_step_set(const BurningSchedule& s) {
    if (!s.complete()) throw Error("IncompleteSchedule", "schedule leaves vertices unburned");
    std::vector<VertexId> out;
    for (VertexId v = 0; v < s.burn_time.size(); ++v)
        if (s.burn_time[v] == s.length) out.push_back(v);
    return out;
}

/// UB: vertices whose responsible set has exactly one source.
inline std::vector<VertexId> uniquely_burned_set(const BurningSchedule& s) {
    if (!s.complete()) throw Error("IncompleteSchedule", "schedule leaves vertices unburned");
    std::vector<VertexId> out;
    for (VertexId v = 0; v < s.responsible.size(); ++v)
        if (s.responsible[v].size() == 1) out.push_back(v);
    return out;
}

/// BL ∩ UB.
inline std::vector<VertexId> last_step_unique_set(const BurningSchedule& s) {
    auto bl = last_step_set(s);
    std::vector<VertexId> out;
    for (auto v : bl)
        if (s.responsible[v].size() == 1) out.push_back(v);
    return out;
}

}  // namespace burnkit
