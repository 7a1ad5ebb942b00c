#pragma once

// Small graph families and seeded random generators used by tests, the
// acceptance suite and `gen-gadget`.

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "burnkit/error.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

inline std::string indexed_label(std::size_t i) { return "v" + std::to_string(i); }

/// "a", "b", ... for the first 26 indices (0-based), "v<i+1>" beyond.
inline std::string letter_label(std::size_t i) {
    return i < 26 ? std::string(1, static_cast<char>('a' + i)) : indexed_label(i + 1);
}

/// P_n on v1..vn.
inline Graph path_graph(std::size_t n) {
    if (n == 0) throw Error("InvalidParams", "path needs n >= 1");
    GraphBuilder b;
    b.add_vertex(indexed_label(1));
    for (std::size_t i = 1; i < n; ++i) b.add_edge(indexed_label(i), indexed_label(i + 1));
    return b.build();
}

/// C_n on v1..vn.
inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw Error("InvalidParams", "cycle needs n >= 3");
    GraphBuilder b;
    for (std::size_t i = 1; i < n; ++i) b.add_edge(indexed_label(i), indexed_label(i + 1));
    b.add_edge(indexed_label(n), indexed_label(1));
    return b.build();
}

/// K_n on a, b, c, ...
inline Graph complete_graph(std::size_t n) {
    if (n == 0) throw Error("InvalidParams", "complete graph needs n >= 1");
    GraphBuilder b;
    b.add_vertex(letter_label(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) b.add_edge(letter_label(i), letter_label(j));
    return b.build();
}

/// K_{1,leaves}: center "c", leaves l1.. .
inline Graph star_graph(std::size_t leaves) {
    GraphBuilder b;
    b.add_vertex("c");
    for (std::size_t i = 1; i <= leaves; ++i) b.add_edge("c", "l" + std::to_string(i));
    return b.build();
}

/// K_{3,3} with sides a,b,c and d,e,f.
inline Graph k33_graph() {
    GraphBuilder b;
    for (const char* u : {"a", "b", "c"})
        for (const char* v : {"d", "e", "f"}) b.add_edge(u, v);
    return b.build();
}

/// Triangular prism: triangles a,b,c and d,e,f joined by a-d, b-e, c-f.
inline Graph prism_graph() {
    GraphBuilder b;
    b.add_edge("a", "b");
    b.add_edge("b", "c");
    b.add_edge("a", "c");
    b.add_edge("d", "e");
    b.add_edge("e", "f");
    b.add_edge("d", "f");
    b.add_edge("a", "d");
    b.add_edge("b", "e");
    b.add_edge("c", "f");
    return b.build();
}

/// Random connected graph on v1..vn: a uniformly random recursive tree plus
/// each remaining pair independently with probability `extra_p`.
inline Graph random_connected_graph(std::size_t n, double extra_p, std::mt19937_64& rng) {
    if (n == 0) throw Error("InvalidParams", "need n >= 1");
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    GraphBuilder b;
    b.add_vertex(indexed_label(1));
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        std::size_t j = pick(rng);
        adj[i][j] = adj[j][i] = 1;
        b.add_edge(indexed_label(j + 1), indexed_label(i + 1));
    }
    std::bernoulli_distribution coin(extra_p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!adj[i][j] && coin(rng)) b.add_edge(indexed_label(i + 1), indexed_label(j + 1));
    return b.build();
}

/// Random connected simple cubic graph on v1..vn via the pairing model with
/// rejection. n must be even and >= 4.
inline Graph random_cubic_graph(std::size_t n, std::mt19937_64& rng) {
    if (n < 4 || n % 2) throw Error("InvalidParams", "cubic graph needs even n >= 4");
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<std::size_t> points(3 * n);
        for (std::size_t i = 0; i < points.size(); ++i) points[i] = i / 3;
        std::shuffle(points.begin(), points.end(), rng);
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        bool ok = true;
        for (std::size_t i = 0; i < points.size() && ok; i += 2) {
            auto u = points[i], v = points[i + 1];
            if (u == v || adj[u][v]) ok = false;
            else adj[u][v] = adj[v][u] = 1;
        }
        if (!ok) continue;
        GraphBuilder b;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if (adj[u][v]) b.add_edge(indexed_label(u + 1), indexed_label(v + 1));
        Graph g = b.build();
        if (is_connected(g)) return g;
    }
    throw Error("GenerationFailed", "no simple connected cubic graph sampled");
}

/// Calls `visit` once per labeled connected cubic graph on v1..vn.
inline void for_each_connected_cubic_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
    if (n < 4 || n % 2) throw Error("InvalidParams", "cubic graph needs even n >= 4");
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<int> deg(n, 0);

    std::function<void()> rec = [&]() {
        std::size_t v = 0;
        while (v < n && deg[v] == 3) ++v;
        if (v == n) {
            GraphBuilder b;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t c = a + 1; c < n; ++c)
                    if (adj[a][c]) b.add_edge(indexed_label(a + 1), indexed_label(c + 1));
            Graph g = b.build();
            if (is_connected(g)) visit(g);
            return;
        }
        // Every vertex below v is saturated, so v's missing neighbors are above it.
        std::vector<std::size_t> cand;
        for (std::size_t w = v + 1; w < n; ++w)
            if (deg[w] < 3 && !adj[v][w]) cand.push_back(w);
        const int need = 3 - deg[v];
        std::vector<std::size_t> pick;
        std::function<void(std::size_t)> choose = [&](std::size_t from) {
            if (static_cast<int>(pick.size()) == need) {
                for (auto w : pick) {
                    adj[v][w] = adj[w][v] = 1;
                    ++deg[w];
                }
                deg[v] = 3;
                rec();
                deg[v] = 3 - need;
                for (auto w : pick) {
                    adj[v][w] = adj[w][v] = 0;
                    --deg[w];
                }
                return;
            }
            for (std::size_t i = from; i < cand.size(); ++i) {
                pick.push_back(cand[i]);
                choose(i + 1);
                pick.pop_back();
            }
        };
        choose(0);
    };
    rec();
}

}  // namespace burnkit
