#pragma once

// d-regular lifting of a cubic graph: H_d takes d-2 copies of the base graph
// (labels copy<j>:<v>) and turns the d-2 twins of every base vertex into a
// clique. H_3 is the base graph itself.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "burnkit/burning.hpp"
#include "burnkit/error.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/io.hpp"

namespace burnkit {

struct LiftedGraph {
    Graph base;
    int d = 0;
    Graph graph;

    int copies() const noexcept { return d - 2; }

    static std::string label(int copy, const std::string& v) { return "copy" + std::to_string(copy) + ":" + v; }

    /// The d-2 twins of base vertex v, copy 1 first.
    std::vector<std::string> clique(const std::string& v) const {
        std::vector<std::string> out;
        for (int j = 1; j <= copies(); ++j) out.push_back(label(j, v));
        return out;
    }
};

inline LiftedGraph build_Hd(const Graph& base, int d) {
    if (d < 4) throw Error("BadDegree", "target degree must be >= 4 (H_3 is the base graph)");
    if (d > 64) throw Error("BadDegree", "target degree too large");
    if (!is_regular(base, 3) || base.order() == 0) throw Error("NotCubic", "base graph is not 3-regular");
    if (!is_connected(base)) throw Error("NotConnected", "base graph is not connected");
    LiftedGraph out{base, d, {}};
    GraphBuilder b;
    for (int j = 1; j <= d - 2; ++j)
        for (auto [u, v] : base.edges()) b.add_edge(LiftedGraph::label(j, base.label(u)), LiftedGraph::label(j, base.label(v)));
    for (const auto& v : base.labels())
        for (int j = 1; j <= d - 2; ++j)
            for (int k = j + 1; k <= d - 2; ++k) b.add_edge(LiftedGraph::label(j, v), LiftedGraph::label(k, v));
    out.graph = b.build();
    return out;
}

/// Splits "copy<j>:<v>" into (j, v).
inline std::pair<int, std::string> parse_lifted_label(const std::string& label) {
    auto fail = [&]() { return Error("UnknownVertex", "'" + label + "' is not a copy<j>:<v> label"); };
    if (label.rfind("copy", 0) != 0) throw fail();
    auto colon = label.find(':');
    if (colon == std::string::npos || colon == 4) throw fail();
    int j = 0;
    for (std::size_t i = 4; i < colon; ++i) {
        if (label[i] < '0' || label[i] > '9' || j > 1'000'000) throw fail();
        j = j * 10 + (label[i] - '0');
    }
    if (j < 1) throw fail();
    return {j, label.substr(colon + 1)};
}

/// Proj onto H_{d'}: twins already present in H_{d'} (copy <= d'-2) stay,
/// the rest go to their copy-1 twin. For d' = 3 the result is a base label.
inline std::string project_vertex(const std::string& label, int d_prime) {
    if (d_prime < 3) throw Error("BadDegree", "target degree must be >= 3");
    auto [j, v] = parse_lifted_label(label);
    if (d_prime == 3) return v;
    return LiftedGraph::label(j <= d_prime - 2 ? j : 1, v);
}

/// H_{d'} as a plain graph; the base graph when d' = 3.
inline Graph lifted_graph_for(const Graph& base, int d_prime) {
    return d_prime == 3 ? base : build_Hd(base, d_prime).graph;
}

struct ProjectionResult {
    BurningSequence sequence;
    /// True when the direct construction did not give a valid sequence (a
    /// repeat before the final slot, or a projected source that is already
    /// burned at its step) and the repair pass was used instead.
    bool used_fallback = false;
};

namespace detail {

/// Walks the projected sources step by step; a source that is already burned
/// is replaced by the lexicographically smallest vertex still unburned, and the
/// walk stops once everything is burned. Distances only shrink under
/// projection, so the result still burns the target within |seq| steps.
inline BurningSequence repair_sequence(const Graph& g, const BurningSequence& projected) {
    std::vector<int> t(g.order(), 0);
    std::vector<VertexId> frontier;
    std::size_t burned = 0;
    BurningSequence out;
    for (std::size_t i = 0; i < projected.size() && burned < g.order(); ++i) {
        const int step = static_cast<int>(i) + 1;
        std::vector<VertexId> next;
        for (auto u : frontier)
            for (auto v : g.neighbors(u))
                if (!t[v]) {
                    t[v] = step;
                    next.push_back(v);
                }
        VertexId src = g.id(projected[i]);
        if (t[src] && t[src] != step) {
            src = 0;
            while (src < g.order() && t[src] && t[src] != step) ++src;
        }
        out.push_back(g.label(src));
        if (!t[src]) {
            t[src] = step;
            next.push_back(src);
        }
        burned += next.size();
        frontier = std::move(next);
    }
    return out;
}

/// Lexicographically smallest vertex unburned after `steps` steps of `seq`.
inline std::optional<std::string> first_unburned_after(const Graph& g, const BurningSequence& seq) {
    auto s = simulate(g, seq);
    for (VertexId v = 0; v < g.order(); ++v)
        if (s.burn_time[v] == 0) return g.label(v);
    return std::nullopt;
}

}  // namespace detail

/// Burning sequence of H_{d'} from a valid sequence of H_d (d' < d).
///
/// Project every source. Without repeats the projection is returned as is.
/// Otherwise the final repeat is dropped; if the shorter sequence already
/// burns H_{d'} it is returned, else one vertex still unburned after the
/// shorter sequence is appended. Inputs whose repeats sit elsewhere (possible
/// only for non-optimal sequences) go through `detail::repair_sequence`.
inline ProjectionResult project_sequence(const LiftedGraph& hd, const BurningSequence& seq, int d_prime) {
    if (d_prime < 3 || d_prime >= hd.d) throw Error("BadDegree", "need 3 <= d' < d");
    for (const auto& l : seq)
        if (!hd.graph.contains(l)) throw Error("InputNotValid", "'" + l + "' is not a vertex of H_d");
    if (!is_burning_sequence(hd.graph, seq)) throw Error("InputNotValid", "sequence does not burn H_d");

    const Graph target = lifted_graph_for(hd.base, d_prime);
    BurningSequence proj;
    for (const auto& l : seq) proj.push_back(project_vertex(l, d_prime));

    std::vector<std::size_t> repeats;  // later positions of repeated vertices
    std::set<std::string> seen;
    for (std::size_t i = 0; i < proj.size(); ++i)
        if (!seen.insert(proj[i]).second) repeats.push_back(i);

    ProjectionResult r;
    const bool at_end = repeats.empty() || (repeats.size() == 1 && repeats[0] == proj.size() - 1);
    if (at_end) {
        BurningSequence cand = proj;
        if (!repeats.empty()) {
            cand.pop_back();
            if (!is_burning_sequence(target, cand)) {
                try {
                    if (auto extra = detail::first_unburned_after(target, cand)) cand.push_back(*extra);
                } catch (const Error& e) {
                    if (e.kind() != "InvalidSequence") throw;
                }
            }
        }
        if (is_burning_sequence(target, cand)) {
            r.sequence = std::move(cand);
            return r;
        }
    }
    r.used_fallback = true;
    r.sequence = detail::repair_sequence(target, proj);
    if (!is_burning_sequence(target, r.sequence))
        throw Error("InternalContradiction", "projected sequence does not burn H_d'");
    return r;
}

/// Burning sequence of H_d of length <= |B| + 1 from a valid sequence B of the
/// base: B goes into copy 1, and if anything is left after |B| steps the
/// lexicographically smallest unburned vertex is appended.
inline BurningSequence lift_sequence(const BurningSequence& seq, const LiftedGraph& hd) {
    for (const auto& l : seq)
        if (!hd.base.contains(l)) throw Error("InputNotValid", "'" + l + "' is not a vertex of the base graph");
    if (!is_burning_sequence(hd.base, seq)) throw Error("InputNotValid", "sequence does not burn the base graph");
    BurningSequence out;
    for (const auto& l : seq) out.push_back(LiftedGraph::label(1, l));
    if (auto extra = detail::first_unburned_after(hd.graph, out)) out.push_back(*extra);
    if (!is_burning_sequence(hd.graph, out)) throw Error("InternalError", "lifted sequence does not burn H_d");
    return out;
}

}  // namespace burnkit
