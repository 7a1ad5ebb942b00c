#pragma once

// Ground-truth solvers for desk-scale graphs:
//   * burning number by branch and bound over radius-ordered balls,
//   * burning number by brute-force enumeration (oracle),
//   * closed form and constructive witnesses for paths and cycles,
//   * minimum vertex cover by degree branching.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "burnkit/bitset.hpp"
#include "burnkit/burning.hpp"
#include "burnkit/error.hpp"
#include "burnkit/generators.hpp"
#include "burnkit/graph.hpp"

namespace burnkit {

struct SolveResult {
    int value = 0;
    /// Burning sequence (placement order) or vertex cover (sorted labels).
    std::vector<std::string> witness;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

struct SolverOptions {
    std::uint64_t node_budget = 10'000'000;
};

namespace detail {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Branch and bound for "is there a valid burning sequence of length k".
///
/// A length-k sequence is an assignment of centers to slots 0..k-1; slot s is
/// placed at step s+1 and spreads to radius k-1-s. The assignment is valid iff
/// centers in slots s < t satisfy d(c_s, c_t) >= t - s, and it burns the graph
/// iff the balls cover V. The search picks the uncovered vertex with the
/// fewest compatible (slot, center) options and branches on those options;
/// options already refuted at a node are forbidden in later siblings.
class BurnSearch {
public:
    BurnSearch(const Graph& g, std::uint64_t budget) : g_(g), n_(g.order()), budget_(budget) {
        dist_ = all_pairs_distances(g);
        int maxd = 0;
        for (const auto& row : dist_)
            for (int d : row) maxd = std::max(maxd, d);
        max_radius_ = std::max<int>(maxd, 0);
        // balls_[c][r] = closed ball of radius r around c, r in [0, max_radius_].
        balls_.assign(n_, std::vector<Bits>(max_radius_ + 1, Bits(n_)));
        for (std::size_t c = 0; c < n_; ++c)
            for (std::size_t v = 0; v < n_; ++v) {
                int d = dist_[c][v];
                if (d == kUnreachable) continue;
                for (int r = d; r <= max_radius_; ++r) balls_[c][r].set(v);
            }
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

    const Bits& ball(std::size_t c, int r) const { return balls_[c][std::min(r, max_radius_)]; }

    /// Vertices at distance >= delta from c (unreachable counts as far).
    Bits far(std::size_t c, int delta) const {
        Bits all(n_);
        all.fill();
        if (delta <= 0) return all;
        return all.subtract(ball(c, delta - 1));
    }

    /// Exhaustive search; returns centers per slot if feasible.
    std::optional<std::vector<std::size_t>> solve(int k) {
        k_ = k;
        centers_.assign(k, kNone);
        Bits uncovered(n_);
        uncovered.fill();
        std::vector<Bits> forbidden(k, Bits(n_));
        if (dfs(uncovered, forbidden)) return centers_;
        return std::nullopt;
    }

    /// Greedy: fill slots in order with the compatible center covering the
    /// most uncovered vertices.
    std::optional<std::vector<std::size_t>> greedy(int k) {
        k_ = k;
        centers_.assign(k, kNone);
        Bits uncovered(n_);
        uncovered.fill();
        for (int s = 0; s < k; ++s) {
            Bits allowed = allowed_for(s, Bits(n_));
            std::size_t best = kNone, best_gain = 0;
            allowed.for_each([&](std::size_t c) {
                std::size_t gain = ball(c, k - 1 - s).count_and(uncovered);
                if (best == kNone || gain > best_gain) {
                    best = c;
                    best_gain = gain;
                }
            });
            if (best == kNone) return std::nullopt;
            centers_[s] = best;
            uncovered.subtract(ball(best, k - 1 - s));
        }
        if (!uncovered.none()) return std::nullopt;
        return centers_;
    }

private:
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    Bits allowed_for(int s, const Bits& forbidden) const {
        Bits a(n_);
        a.fill();
        a.subtract(forbidden);
        for (int t = 0; t < k_; ++t) {
            if (centers_[t] == kNone) continue;
            if (t == s) return Bits(n_);
            a &= far(centers_[t], std::abs(s - t));
        }
        return a;
    }

    void tick() {
        if (++nodes_ > budget_) throw BudgetExceeded(0, 0, "burning search node budget exhausted");
    }

    /// Assigns every still-empty slot some compatible center.
    bool fill_remaining(int from) {
        int s = from;
        while (s < k_ && centers_[s] != kNone) ++s;
        if (s == k_) return true;
        tick();
        Bits allowed = allowed_for(s, Bits(n_));
        for (std::size_t c = allowed.first(); c < n_; c = allowed.next(c + 1)) {
            centers_[s] = c;
            if (fill_remaining(s + 1)) return true;
        }
        centers_[s] = kNone;
        return false;
    }

    bool dfs(const Bits& uncovered, std::vector<Bits>& forbidden) {
        if (uncovered.none()) return fill_remaining(0);
        tick();

        std::vector<int> free_slots;
        std::vector<Bits> allowed;
        for (int s = 0; s < k_; ++s) {
            if (centers_[s] != kNone) continue;
            free_slots.push_back(s);
            allowed.push_back(allowed_for(s, forbidden[s]));
        }
        if (free_slots.empty()) return false;

        // Capacity bound: each free slot covers at most its best ball.
        std::size_t capacity = 0, need = uncovered.count();
        for (std::size_t i = 0; i < free_slots.size(); ++i) {
            int r = k_ - 1 - free_slots[i];
            std::size_t best = 0;
            allowed[i].for_each([&](std::size_t c) { best = std::max(best, ball(c, r).count_and(uncovered)); });
            capacity += best;
        }
        if (capacity < need) return false;

        // Most constrained uncovered vertex.
        std::size_t pick = kNone, pick_options = 0;
        uncovered.for_each([&](std::size_t v) {
            if (pick != kNone && pick_options == 0) return;
            std::size_t options = 0;
            for (std::size_t i = 0; i < free_slots.size(); ++i)
                options += ball(v, k_ - 1 - free_slots[i]).count_and(allowed[i]);
            if (pick == kNone || options < pick_options) {
                pick = v;
                pick_options = options;
            }
        });
        if (pick_options == 0) return false;

        std::vector<Bits> saved = forbidden;
        bool found = false;
        for (std::size_t i = 0; i < free_slots.size() && !found; ++i) {
            int s = free_slots[i];
            int r = k_ - 1 - s;
            Bits cand = ball(pick, r);
            cand &= allowed[i];
            for (std::size_t c = cand.first(); c < n_; c = cand.next(c + 1)) {
                centers_[s] = c;
                Bits rest = uncovered;
                rest.subtract(ball(c, r));
                if (dfs(rest, forbidden)) {
                    found = true;
                    break;
                }
                centers_[s] = kNone;
                forbidden[s].set(c);
            }
        }
        if (!found) forbidden = std::move(saved);
        return found;
    }

    const Graph& g_;
    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    int k_ = 0;
    int max_radius_ = 0;
    std::vector<std::vector<int>> dist_;
    std::vector<std::vector<Bits>> balls_;
    std::vector<std::size_t> centers_;
};

/// Burn by always igniting the lowest-labeled vertex still unburned.
inline std::vector<VertexId> first_unburned_sequence(const Graph& g) {
    std::vector<VertexId> seq;
    std::vector<int> t(g.order(), 0);
    std::vector<VertexId> frontier;
    std::size_t burned = 0;
    for (int step = 1; burned < g.order(); ++step) {
        std::vector<VertexId> next;
        for (auto u : frontier)
            for (auto v : g.neighbors(u))
                if (!t[v]) {
                    t[v] = step;
                    next.push_back(v);
                }
        // Prefer a vertex untouched by fire; failing that, one reached only
        // now, which was still unburned at the end of the previous step.
        VertexId src = 0;
        while (src < g.order() && t[src]) ++src;
        if (src == g.order()) {
            src = 0;
            while (t[src] != step) ++src;
        }
        seq.push_back(src);
        if (!t[src]) {
            t[src] = step;
            next.push_back(src);
        }
        burned += next.size();
        frontier = std::move(next);
    }
    return seq;
}

}  // namespace detail

/// Exact burning number with witness.
///
/// Iterative deepening on k = 1, 2, ...; each k is decided by exhaustive
/// branch and bound, so the first feasible k is b(g). A greedy sequence seeds
/// the upper bound. The witness is re-validated before returning. Throws
/// BudgetExceeded (with the bounds established so far) when the node budget
/// runs out.
inline SolveResult burning_number_exact(const Graph& g, SolverOptions opts = {}) {
    if (g.order() == 0) throw Error("InvalidParams", "graph has no vertices");
    detail::Stopwatch clock;
    detail::BurnSearch search(g, opts.node_budget);

    std::vector<VertexId> upper_seq = detail::first_unburned_sequence(g);
    for (int k = 1; k < static_cast<int>(upper_seq.size()); ++k) {
        if (auto centers = search.greedy(k)) {
            upper_seq.assign(centers->begin(), centers->end());
            break;
        }
    }
    const int upper = static_cast<int>(upper_seq.size());

    std::vector<VertexId> best = upper_seq;
    for (int k = 1; k < upper; ++k) {
        std::optional<std::vector<std::size_t>> centers;
        try {
            centers = search.solve(k);
        } catch (const BudgetExceeded&) {
            throw BudgetExceeded(k, upper,
                                 "burning number in [" + std::to_string(k) + ", " + std::to_string(upper) + "]");
        }
        if (centers) {
            best.assign(centers->begin(), centers->end());
            break;
        }
    }

    if (!is_burning_sequence(g, best)) throw Error("InternalError", "burning witness failed validation");
    SolveResult r;
    r.value = static_cast<int>(best.size());
    r.witness = labels_of(g, best);
    r.nodes = search.nodes();
    r.seconds = clock.seconds();
    return r;
}

/// Brute-force oracle: enumerates every ordered sequence of distinct vertices
/// of length 1, 2, ... and runs the frontier engine on each.
inline SolveResult burning_number_naive(const Graph& g, std::size_t max_vertices = 12) {
    if (g.order() == 0) throw Error("InvalidParams", "graph has no vertices");
    if (g.order() > max_vertices)
        throw Error("TooLarge", "naive solver limited to " + std::to_string(max_vertices) + " vertices");
    detail::Stopwatch clock;
    const std::size_t n = g.order();
    SolveResult r;
    std::vector<VertexId> seq;
    std::vector<char> used(n, 0);

    std::function<bool(std::size_t)> enumerate = [&](std::size_t k) -> bool {
        if (seq.size() == k) {
            ++r.nodes;
            try {
                return simulate_frontier(g, seq).complete();
            } catch (const Error& e) {
                if (e.kind() == "InvalidSequence") return false;
                throw;
            }
        }
        for (VertexId v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            seq.push_back(v);
            if (enumerate(k)) return true;
            seq.pop_back();
            used[v] = 0;
        }
        return false;
    };

    for (std::size_t k = 1; k <= n; ++k) {
        if (enumerate(k)) {
            r.value = static_cast<int>(k);
            r.witness = labels_of(g, seq);
            r.seconds = clock.seconds();
            return r;
        }
    }
    throw Error("InternalError", "no burning sequence found");
}

enum class LineKind { Path, Cycle };

/// ceil(sqrt(n)) in exact integer arithmetic.
inline int path_cycle_burning_number(std::size_t n, LineKind = LineKind::Path) {
    if (n == 0) throw Error("InvalidParams", "n must be >= 1");
    std::size_t k = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (k * k < n) ++k;
    while (k > 0 && (k - 1) * (k - 1) >= n) --k;
    return static_cast<int>(k);
}

/// A burning sequence of length ceil(sqrt(n)) for P_n / C_n as built by
/// `path_graph` / `cycle_graph` (labels v1..vn).
///
/// Source i burns radius k-i; blocks of 2(k-i)+1 consecutive vertices are laid
/// left to right, the final block clipped to the end. Sources left over once
/// everything is covered go to the lowest-numbered vertex still unburned.
inline BurningSequence path_cycle_witness(std::size_t n, LineKind kind = LineKind::Path) {
    const int k = path_cycle_burning_number(n, kind);
    std::vector<std::size_t> centers;  // 1-based positions
    std::size_t start = 1;
    for (int i = 1; i <= k && start <= n; ++i) {
        std::size_t r = static_cast<std::size_t>(k - i);
        std::size_t c = std::min(start + r, n);
        centers.push_back(c);
        start = c + r + 1;
    }
    while (static_cast<int>(centers.size()) < k) {
        // Burned at the end of step |centers|: within radius |centers|-i of source i.
        const std::size_t step = centers.size();
        std::size_t pick = 0;
        for (std::size_t v = 1; v <= n && !pick; ++v) {
            bool burned = false;
            for (std::size_t i = 0; i < centers.size() && !burned; ++i) {
                std::size_t d = v > centers[i] ? v - centers[i] : centers[i] - v;
                if (kind == LineKind::Cycle) d = std::min(d, n - d);
                burned = d + i + 1 <= step;
            }
            if (!burned) pick = v;
        }
        if (!pick) break;
        centers.push_back(pick);
    }
    BurningSequence seq;
    for (auto c : centers) seq.push_back(indexed_label(c));
    return seq;
}

/// Minimum vertex cover by branch and bound.
///
/// Degree-0 vertices are dropped and degree-1 vertices force their neighbor;
/// otherwise branch on a maximum-degree vertex v: take v, or take all of N(v).
/// A greedy maximal matching on the remaining graph is the lower bound.
inline SolveResult vertex_cover_exact(const Graph& g, SolverOptions opts = {}) {
    using detail::Bits;
    detail::Stopwatch clock;
    const std::size_t n = g.order();
    std::vector<Bits> nb(n, Bits(n));
    for (VertexId v = 0; v < n; ++v)
        for (auto w : g.neighbors(v)) nb[v].set(w);

    SolveResult r;
    // Initial incumbent: every non-isolated vertex.
    std::vector<VertexId> best;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) > 0) best.push_back(v);

    std::vector<VertexId> chosen;
    std::function<void(Bits)> rec = [&](Bits alive) {
        if (++r.nodes > opts.node_budget)
            throw BudgetExceeded(0, static_cast<int>(best.size()), "vertex cover node budget exhausted");
        const std::size_t mark = chosen.size();
        auto deg = [&](std::size_t v) { return nb[v].count_and(alive); };

        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t v = alive.first(); v < n; v = alive.next(v + 1)) {
                std::size_t d = deg(v);
                if (d == 0) {
                    alive.reset(v);
                    changed = true;
                } else if (d == 1) {
                    Bits only = nb[v];
                    only &= alive;
                    std::size_t u = only.first();
                    chosen.push_back(static_cast<VertexId>(u));
                    alive.reset(u);
                    alive.reset(v);
                    changed = true;
                }
            }
        }

        if (alive.none()) {
            if (chosen.size() < best.size()) best = chosen;
            chosen.resize(mark);
            return;
        }

        // Greedy maximal matching lower bound.
        Bits free = alive;
        std::size_t matching = 0;
        for (std::size_t v = free.first(); v < n; v = free.next(v + 1)) {
            Bits cand = nb[v];
            cand &= free;
            std::size_t u = cand.first();
            if (u < n) {
                ++matching;
                free.reset(u);
                free.reset(v);
            }
        }
        if (chosen.size() + matching >= best.size()) {
            chosen.resize(mark);
            return;
        }

        std::size_t v = n, vd = 0;
        for (std::size_t u = alive.first(); u < n; u = alive.next(u + 1)) {
            std::size_t d = deg(u);
            if (d > vd) v = u, vd = d;
        }

        {
            Bits next = alive;
            next.reset(v);
            chosen.push_back(static_cast<VertexId>(v));
            rec(next);
            chosen.pop_back();
        }
        {
            Bits next = alive;
            Bits n_v = nb[v];
            n_v &= alive;
            const std::size_t before = chosen.size();
            n_v.for_each([&](std::size_t u) { chosen.push_back(static_cast<VertexId>(u)); });
            next.subtract(n_v);
            next.reset(v);
            if (chosen.size() < best.size()) rec(next);
            chosen.resize(before);
        }
        chosen.resize(mark);
    };

    Bits all(n);
    all.fill();
    rec(all);

    std::sort(best.begin(), best.end());
    for (auto [u, v] : g.edges())
        if (!std::binary_search(best.begin(), best.end(), u) && !std::binary_search(best.begin(), best.end(), v))
            throw Error("InternalError", "cover witness misses an edge");
    r.value = static_cast<int>(best.size());
    r.witness = labels_of(g, best);
    r.seconds = clock.seconds();
    return r;
}

/// True iff every edge of g has an endpoint in `cover`.
inline bool is_vertex_cover(const Graph& g, const std::vector<std::string>& cover) {
    std::vector<char> in(g.order(), 0);
    for (const auto& l : cover) in[g.id(l)] = 1;
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

}  // namespace burnkit
