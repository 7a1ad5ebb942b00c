#pragma once

// Vertex Cover on connected cubic graphs -> Graph Burning on cubic graphs.
//
//   G  --double_subdivide-->  G' (edge p-q becomes p-x-y-q)
//   G' --build_H-->           H: one BTP gadget per edge of G', a Y gadget
//                             hanging off x and y, and a C gadget behind it.
//
// A vertex cover Q' of G' containing x or y turns into a burning sequence of
// H of length |Q'| + CN + 3 (`vc_to_witness`); `audit_sequence` and
// `witness_to_vc` read a sequence of H back as a set of G' vertices.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "burnkit/burning.hpp"
#include "burnkit/error.hpp"
#include "burnkit/gadgets.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/io.hpp"

namespace burnkit {

struct Subdivision {
    Graph graph;
    std::string p, q;  // the subdivided edge of G
    std::string x, y;  // new vertices, path p-x-y-q
};

namespace detail {

inline std::string fresh_label(const Graph& g, std::string base) {
    while (g.contains(base)) base += "'";
    return base;
}

inline std::pair<std::string, std::string> edge_labels(const Graph& g, Edge e) {
    return {g.label(e.first), g.label(e.second)};
}

}  // namespace detail

/// Replaces edge p-q by the path p-x-y-q. Without an explicit edge the
/// lexicographically smallest edge is used.
inline Subdivision double_subdivide(const Graph& g,
                                    std::optional<std::pair<std::string, std::string>> edge = std::nullopt) {
    auto edges = g.edges();
    if (edges.empty()) throw Error("EdgeNotFound", "graph has no edges");
    std::string p, q;
    if (edge) {
        auto pi = g.find(edge->first), qi = g.find(edge->second);
        if (!pi || !qi || !g.has_edge(*pi, *qi))
            throw Error("EdgeNotFound", "no edge '" + edge->first + "' -- '" + edge->second + "'");
        std::tie(p, q) = *edge;
    } else {
        std::tie(p, q) = detail::edge_labels(g, edges.front());
    }
    Subdivision s;
    s.p = p;
    s.q = q;
    s.x = detail::fresh_label(g, "x");
    s.y = detail::fresh_label(g, "y");
    if (s.y == s.x) s.y += "'";
    GraphBuilder b;
    for (const auto& l : g.labels()) b.add_vertex(l);
    for (auto [u, v] : edges) {
        auto [a, c] = detail::edge_labels(g, {u, v});
        if ((a == p && c == q) || (a == q && c == p)) continue;
        b.add_edge(a, c);
    }
    b.add_edge(p, s.x);
    b.add_edge(s.x, s.y);
    b.add_edge(s.y, q);
    s.graph = b.build();
    return s;
}

/// A cover of G extended to a cover of G' with one extra vertex (x or y).
inline std::vector<std::string> extend_cover(const Subdivision& s, std::vector<std::string> cover) {
    bool has_p = std::find(cover.begin(), cover.end(), s.p) != cover.end();
    cover.push_back(has_p ? s.y : s.x);
    std::sort(cover.begin(), cover.end());
    return cover;
}

/// A cover of G' mapped to a cover of G with at least one vertex fewer.
inline std::vector<std::string> restrict_cover(const Subdivision& s, const std::vector<std::string>& cover) {
    std::vector<std::string> out;
    for (const auto& v : cover)
        if (v != s.x && v != s.y) out.push_back(v);
    bool has_p = std::find(out.begin(), out.end(), s.p) != out.end();
    bool has_q = std::find(out.begin(), out.end(), s.q) != out.end();
    if (!has_p && !has_q) out.push_back(s.p);
    std::sort(out.begin(), out.end());
    return out;
}

struct ReductionParams {
    int n_prime = 0;
    long long cn = 0;  // c * n', a power of two in [4n', 8n')
    long long c_num = 0, c_den = 1;  // c as a reduced fraction
    int h = 0, l1 = 0, l2 = 0, d1 = 0, d2 = 0, m = 0;
};

inline ReductionParams choose_params(int n_prime) {
    if (n_prime < 6 || n_prime % 2) throw Error("InvalidParams", "n' must be even and >= 6");
    ReductionParams r;
    r.n_prime = n_prime;
    long long cn = 1;
    int lg = 0;
    while (cn < 4LL * n_prime) cn <<= 1, ++lg;
    r.cn = cn;
    long long g = std::gcd(cn, static_cast<long long>(n_prime));
    r.c_num = cn / g;
    r.c_den = n_prime / g;
    r.h = lg + 2;
    r.l1 = static_cast<int>((cn - 2 * r.h) / 2);
    r.l2 = static_cast<int>(cn / 2 + 2);
    r.d1 = n_prime / 4 + static_cast<int>(cn / 2);
    r.d2 = (n_prime + 3) / 4 + static_cast<int>(cn / 2) + 1;
    r.m = static_cast<int>(cn + 3);
    detail::check_btp_params(r.h, r.l1, r.l2);
    return r;
}

struct ReductionInstance {
    Graph g;
    Subdivision sub;  // sub.graph is G'
    ReductionParams params;
    Graph h;
    /// Per vertex of H: the G' vertex whose domain contains it, or -1.
    std::vector<int> domain_of;
    /// Per vertex of H: "core", "btp:<u>:<v>", "y" or "c".
    std::vector<std::string> origin;
    Landmarks landmarks;

    const Graph& g_prime() const noexcept { return sub.graph; }
    static std::string core(const std::string& v) { return "g:" + v; }
};

inline bool is_cubic_connected(const Graph& g) { return g.order() >= 4 && is_regular(g, 3) && is_connected(g); }

/// Builds H from a connected cubic graph G.
inline ReductionInstance build_H(const Graph& g,
                                 std::optional<std::pair<std::string, std::string>> edge = std::nullopt) {
    if (!is_regular(g, 3) || g.order() < 4) throw Error("NotCubic", "input graph is not 3-regular");
    if (!is_connected(g)) throw Error("NotConnected", "input graph is not connected");

    ReductionInstance inst;
    inst.g = g;
    inst.sub = double_subdivide(g, edge);
    const Graph& gp = inst.sub.graph;
    inst.params = choose_params(static_cast<int>(gp.order()));
    const auto& P = inst.params;

    GraphBuilder b;
    std::map<std::string, std::vector<std::string>> dom;
    std::vector<std::pair<std::string, std::string>> tagged;  // label, origin tag
    for (const auto& v : gp.labels()) {
        b.add_vertex(ReductionInstance::core(v));
        dom[v].push_back(ReductionInstance::core(v));
    }
    for (auto e : gp.edges()) {
        auto [u, v] = detail::edge_labels(gp, e);
        const std::string pre = "btp:" + u + ":" + v + ":";
        auto btp = detail::add_btp(b, pre, P.h, P.l1, P.l2, u, v, false);
        const auto& ru = btp.landmarks["r_ab"].front();
        const auto& rv = btp.landmarks["r_ba"].front();
        b.add_edge(ReductionInstance::core(u), ru);
        b.add_edge(ReductionInstance::core(v), rv);
        auto& du = dom[u];
        du.insert(du.end(), btp.half_a.begin(), btp.half_a.end());
        auto& dv = dom[v];
        dv.insert(dv.end(), btp.half_b.begin(), btp.half_b.end());
        for (const auto* half : {&btp.half_a, &btp.half_b})
            for (const auto& l : *half) tagged.emplace_back(l, "btp:" + u + ":" + v);
        inst.landmarks[pre + "r_" + u] = {ru};
        inst.landmarks[pre + "r_" + v] = {rv};
        inst.landmarks[pre + "tips_" + u] = btp.landmarks["tips_ab"];
        inst.landmarks[pre + "tips_" + v] = btp.landmarks["tips_ba"];
    }

    auto y = detail::add_y(b, "y:", P.d1, P.d2);
    b.add_edge(ReductionInstance::core(inst.sub.x), y.landmarks["x_a"].front());
    b.add_edge(ReductionInstance::core(inst.sub.y), y.landmarks["y_a"].front());
    auto px = y.px.all(), py = y.py.all();
    dom[inst.sub.x].insert(dom[inst.sub.x].end(), px.begin(), px.end());
    dom[inst.sub.y].insert(dom[inst.sub.y].end(), py.begin(), py.end());

    auto c = detail::add_c(b, "c:", P.m);
    b.add_edge(y.landmarks["z_b"].front(), c.landmarks["v_m2"].front());

    inst.h = b.build();
    const Graph& H = inst.h;

    inst.domain_of.assign(H.order(), -1);
    for (const auto& [u, members] : dom) {
        const int owner = static_cast<int>(gp.id(u));
        for (const auto& l : members) inst.domain_of[H.id(l)] = owner;
    }

    inst.origin.assign(H.order(), "");
    for (const auto& v : gp.labels()) inst.origin[H.id(ReductionInstance::core(v))] = "core";
    for (const auto& [l, tag] : tagged) inst.origin[H.id(l)] = tag;
    for (VertexId v = 0; v < H.order(); ++v)
        if (inst.origin[v].empty()) inst.origin[v] = H.label(v).substr(0, H.label(v).find(':'));

    auto& lm = inst.landmarks;
    lm["x"] = {ReductionInstance::core(inst.sub.x)};
    lm["y"] = {ReductionInstance::core(inst.sub.y)};
    for (const auto& name : {"x_a", "x_b", "y_a", "y_b", "z", "z_a", "z_b"}) lm[std::string("Y_") + name] = y.landmarks[name];
    lm["C_v_m2"] = c.landmarks["v_m2"];
    lm["C_v1"] = c.landmarks["v1"];
    lm["C_middles"] = c.landmarks["middles"];
    for (auto& [u, members] : dom) {
        std::sort(members.begin(), members.end());
        lm["dom:" + u] = members;
    }
    return inst;
}

/// Closed-form |V(H)|.
inline long long expected_h_order(const ReductionParams& p, long long edges_g_prime) {
    const long long btp = 2 * ((1LL << (p.h + 1)) - 1) + (1LL << p.h) * (4LL * p.l1 + 2LL * p.l2);
    return p.n_prime + edges_g_prime * btp + (4LL * p.d1 + 2LL * p.d2 - 5) +
           (2LL * p.m * p.m - 2LL * p.m - 1);
}

/// Burning sequence of H from a vertex cover of G' containing x or y: the x/y
/// source first, the rest of the cover in lexicographic order, then the
/// C-gadget sequence.
inline BurningSequence vc_to_witness(const ReductionInstance& inst, const std::vector<std::string>& cover) {
    const Graph& gp = inst.g_prime();
    std::set<std::string> q;
    for (const auto& v : cover) {
        if (!gp.contains(v)) throw Error("UnknownVertex", "'" + v + "' is not a vertex of G'");
        q.insert(v);
    }
    const bool has_x = q.count(inst.sub.x) != 0, has_y = q.count(inst.sub.y) != 0;
    if (!has_x && !has_y) throw Error("MissingXY", "cover contains neither '" + inst.sub.x + "' nor '" + inst.sub.y + "'");
    for (auto [u, v] : gp.edges())
        if (!q.count(gp.label(u)) && !q.count(gp.label(v)))
            throw Error("NotACover", "edge '" + gp.label(u) + "' -- '" + gp.label(v) + "' is uncovered");

    const std::string first = has_x ? inst.sub.x : inst.sub.y;
    BurningSequence seq{ReductionInstance::core(first)};
    for (const auto& v : q)
        if (v != first) seq.push_back(ReductionInstance::core(v));
    auto c = make_c_witness(inst.params.m);
    seq.insert(seq.end(), c.begin(), c.end());

    if (!simulate(inst.h, seq).complete())
        throw Error("InternalError", "constructed witness does not burn H");
    return seq;
}

struct AuditReport {
    std::size_t length = 0;
    std::size_t start_size = 0, middle_size = 0, end_size = 0;
    std::vector<std::string> owners;  // G' labels, sorted
    std::vector<std::pair<std::string, std::string>> represented, unrepresented;
    /// Per source: owning G' vertex, or "outside".
    std::vector<std::string> source_domain;
    std::size_t start_inside = 0, start_outside = 0;
    bool complete = false;
    std::size_t unburned = 0;
    std::vector<std::string> last_unique;  // BL ∩ UB, empty when incomplete

    Report to_report() const {
        Report r;
        r.add("length", length);
        r.add("start_block", start_size);
        r.add("middle_block", middle_size);
        r.add("end_block", end_size);
        r.add("start_inside_domains", start_inside);
        r.add("start_outside_domains", start_outside);
        std::string o;
        for (const auto& v : owners) o += (o.empty() ? "" : ",") + v;
        r.add("owners", o);
        r.add("represented_edges", represented.size());
        r.add("unrepresented_edges", unrepresented.size());
        for (const auto& [u, v] : unrepresented) r.add("unrepresented", u + " " + v);
        r.add("complete", complete);
        r.add("unburned", unburned);
        r.add("bl_cap_ub", last_unique.size());
        for (std::size_t i = 0; i < source_domain.size(); ++i)
            r.add("source_" + std::to_string(i + 1), source_domain[i]);
        return r;
    }
};

/// Splits a sequence of length s + CN + 3 into StartBlock (s), MiddleBlock
/// (h + 1) and EndBlock (CN - h + 2); Owners are the G' vertices whose domain
/// holds a StartBlock source.
inline AuditReport audit_sequence(const ReductionInstance& inst, const BurningSequence& seq) {
    const auto& P = inst.params;
    const long long tail = P.cn + 3;
    if (static_cast<long long>(seq.size()) < tail)
        throw Error("SequenceTooShort", "need at least " + std::to_string(tail) + " sources");
    const Graph& H = inst.h;
    const Graph& gp = inst.g_prime();
    auto ids = ids_of(H, seq);

    AuditReport a;
    a.length = seq.size();
    a.start_size = seq.size() - static_cast<std::size_t>(tail);
    a.middle_size = static_cast<std::size_t>(P.h + 1);
    a.end_size = static_cast<std::size_t>(P.cn - P.h + 2);

    std::set<std::string> owners;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        int d = inst.domain_of[ids[i]];
        a.source_domain.push_back(d < 0 ? "outside" : gp.label(static_cast<VertexId>(d)));
        if (i < a.start_size) {
            if (d < 0)
                ++a.start_outside;
            else {
                ++a.start_inside;
                owners.insert(gp.label(static_cast<VertexId>(d)));
            }
        }
    }
    a.owners.assign(owners.begin(), owners.end());
    for (auto [u, v] : gp.edges()) {
        auto e = detail::edge_labels(gp, {u, v});
        if (owners.count(e.first) || owners.count(e.second))
            a.represented.push_back(e);
        else
            a.unrepresented.push_back(e);
    }

    auto sched = simulate(H, ids);
    a.complete = sched.complete();
    a.unburned = sched.unburned_count();
    if (a.complete) a.last_unique = labels_of(H, last_step_unique_set(sched));
    return a;
}

/// Reads a valid burning sequence of H back as a vertex cover of G'. A valid
/// sequence whose Owners leave an edge uncovered is reported, never patched.
inline std::vector<std::string> witness_to_vc(const ReductionInstance& inst, const BurningSequence& seq) {
    for (const auto& l : seq)
        if (!inst.h.contains(l)) throw Error("NotABurningSequence", "'" + l + "' is not a vertex of H");
    if (!is_burning_sequence(inst.h, seq)) throw Error("NotABurningSequence", "sequence does not burn H");
    auto a = audit_sequence(inst, seq);
    if (!a.unrepresented.empty()) {
        std::string msg = "owners miss " + std::to_string(a.unrepresented.size()) + " edge(s):";
        for (const auto& [u, v] : a.unrepresented) msg += " " + u + "-" + v;
        throw Error("OwnersNotACover", msg);
    }
    return a.owners;
}

/// Key/value description of an instance: enough to rebuild it exactly.
inline Report instance_meta(const ReductionInstance& inst) {
    const auto& P = inst.params;
    Report r;
    r.add("n", inst.g.order());
    r.add("n_prime", P.n_prime);
    r.add("cn", static_cast<long long>(P.cn));
    r.add("c", std::to_string(P.c_num) + "/" + std::to_string(P.c_den));
    r.add("h", P.h);
    r.add("l1", P.l1);
    r.add("l2", P.l2);
    r.add("d1", P.d1);
    r.add("d2", P.d2);
    r.add("m", P.m);
    r.add("subdivided", inst.sub.p + " " + inst.sub.q);
    r.add("x", inst.sub.x);
    r.add("y", inst.sub.y);
    r.add("h_vertices", inst.h.order());
    r.add("h_edges", inst.h.size());
    for (auto [u, v] : inst.g.edges()) r.add("g_edge", inst.g.label(u) + " " + inst.g.label(v));
    return r;
}

inline ReductionInstance instance_from_meta(const Report& meta) {
    GraphBuilder b;
    bool any = false;
    for (const auto& [k, v] : meta.rows()) {
        if (k != "g_edge") continue;
        auto tok = detail::split_ws(v);
        if (tok.size() != 2) throw Error("MalformedLine", "bad g_edge entry '" + v + "'");
        b.add_edge(tok[0], tok[1]);
        any = true;
    }
    if (!any) throw Error("MalformedLine", "metadata lists no edges of G");
    auto sub = detail::split_ws(meta.get("subdivided"));
    if (sub.size() != 2) throw Error("MalformedLine", "metadata lacks the subdivided edge");
    auto inst = build_H(b.build(), std::make_pair(sub[0], sub[1]));
    if (meta.get("cn") != std::to_string(inst.params.cn) || meta.get("x") != inst.sub.x)
        throw Error("MalformedLine", "metadata does not match the rebuilt instance");
    return inst;
}

}  // namespace burnkit
