#pragma once

// Gadget constructors. Each gadget exists in two forms: a standalone graph
// with named landmarks (`make_*`), and a `detail::add_*` routine that writes
// the same vertices, under a label prefix, into a larger GraphBuilder. The
// reduction builds H entirely from the `add_*` routines.
//
// Label scheme (standalone prefixes in parentheses):
//   T    (t:)   <col>:<pos>, col in {L, R, Fp, Fq}; hooks p, q
//   BT   (bt:)  <level>:<index>, level 0 is the root, index 1-based
//   BTP         bt:a:<level>:<index>, bt:b:..., t:<i>:<col>:<pos>
//   P    (p:)   a<i>, b<i>
//   Y           y:px:..., y:py:..., y:pz:..., y:z
//   Tail (tail:) v1..v9, p, q, r
//   C           c:p<i>:a<j>, c:p<i>:b<j>, c:tail:..., c:vm2

#include <string>
#include <vector>

#include "burnkit/error.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/io.hpp"

namespace burnkit {

/// Vertex overlap constant used by the lower-bound argument on C(m): the
/// trunk (length m^2) and the shortcut trunk' (length m^2 - 5) differ by this.
inline constexpr int kFixedOverlap = 5;

struct GadgetHandle {
    Graph graph;
    Landmarks landmarks;

    const std::vector<std::string>& vertex_set(const std::string& name) const {
        auto it = landmarks.find(name);
        if (it == landmarks.end()) throw Error("UnknownLandmark", "no landmark '" + name + "'");
        return it->second;
    }

    const std::string& vertex(const std::string& name) const {
        const auto& s = vertex_set(name);
        if (s.size() != 1) throw Error("UnknownLandmark", "landmark '" + name + "' is not a single vertex");
        return s.front();
    }

    VertexId id(const std::string& name) const { return graph.id(vertex(name)); }
};

namespace detail {

inline std::string num(long long v) { return std::to_string(v); }

inline void require(bool ok, const std::string& what) {
    if (!ok) throw Error("InvalidParams", what);
}

struct TParts {
    Landmarks landmarks;
    std::vector<std::string> half_pq;  // p-side half (includes tip_pq)
    std::vector<std::string> half_qp;
};

/// T_pq(l1, l2) between existing hooks p and q.
///
/// Fixed arm: 2*l1 ladder levels L_i / R_i from p (level 1) to q (level 2*l1),
/// every level carrying a rung. The L column runs the full length; the R
/// column is cut between levels l1 and l1+1. Floating arm: l2 levels Fp_i /
/// Fq_i hanging off R_l1 and R_{l1+1}; rungs on levels 1..l2-2, and the last
/// two levels are cross-braced (Fp_{l2-1}, Fq_{l2-1} both adjacent to both
/// tips Fp_l2, Fq_l2, which are adjacent to each other).
inline TParts add_t(GraphBuilder& b, const std::string& pre, int l1, int l2, const std::string& p,
                    const std::string& q) {
    require(l1 >= 1, "T-gadget needs l1 >= 1");
    require(l2 >= 2, "T-gadget needs l2 >= 2");
    auto L = [&](int i) { return pre + "L:" + num(i); };
    auto R = [&](int i) { return pre + "R:" + num(i); };
    auto Fp = [&](int i) { return pre + "Fp:" + num(i); };
    auto Fq = [&](int i) { return pre + "Fq:" + num(i); };
    const int top = 2 * l1;

    for (int i = 1; i <= top; ++i) b.add_edge(L(i), R(i));
    for (int i = 1; i < top; ++i) b.add_edge(L(i), L(i + 1));
    for (int i = 1; i < top; ++i)
        if (i != l1) b.add_edge(R(i), R(i + 1));
    b.add_edge(p, L(1));
    b.add_edge(p, R(1));
    b.add_edge(q, L(top));
    b.add_edge(q, R(top));

    b.add_edge(R(l1), Fp(1));
    b.add_edge(R(l1 + 1), Fq(1));
    for (int i = 1; i < l2 - 1; ++i) {
        b.add_edge(Fp(i), Fp(i + 1));
        b.add_edge(Fq(i), Fq(i + 1));
    }
    for (int i = 1; i <= l2 - 2; ++i) b.add_edge(Fp(i), Fq(i));
    b.add_edge(Fp(l2 - 1), Fp(l2));
    b.add_edge(Fp(l2 - 1), Fq(l2));
    b.add_edge(Fq(l2 - 1), Fp(l2));
    b.add_edge(Fq(l2 - 1), Fq(l2));
    b.add_edge(Fp(l2), Fq(l2));

    TParts t;
    auto& lm = t.landmarks;
    lm["f1_pq"] = {L(1)};
    lm["f2_pq"] = {R(1)};
    lm["f1_qp"] = {L(top)};
    lm["f2_qp"] = {R(top)};
    lm["j_pq"] = {L(l1)};
    lm["jn_pq"] = {R(l1)};
    lm["j_qp"] = {L(l1 + 1)};
    lm["jn_qp"] = {R(l1 + 1)};
    lm["w_pq"] = {Fp(1)};
    lm["w_qp"] = {Fq(1)};
    lm["tip_pq"] = {Fp(l2)};
    lm["tip_qp"] = {Fq(l2)};
    for (int i = 1; i <= l1; ++i) {
        t.half_pq.push_back(L(i));
        t.half_pq.push_back(R(i));
        t.half_qp.push_back(L(top + 1 - i));
        t.half_qp.push_back(R(top + 1 - i));
    }
    for (int i = 1; i <= l2; ++i) {
        t.half_pq.push_back(Fp(i));
        t.half_qp.push_back(Fq(i));
    }
    return t;
}

struct BTParts {
    std::string root;
    std::vector<std::string> leaves;  // left to right
    std::vector<std::string> all;
};

inline BTParts add_bt(GraphBuilder& b, const std::string& pre, int h) {
    require(h >= 1, "BT-gadget needs h >= 1");
    require(h <= 24, "BT-gadget height too large");
    auto node = [&](int level, long long index) { return pre + num(level) + ":" + num(index); };
    BTParts t;
    t.root = node(0, 1);
    b.add_vertex(t.root);
    t.all.push_back(t.root);
    for (int level = 1; level <= h; ++level) {
        const long long width = 1LL << level;
        for (long long i = 1; i <= width; ++i) {
            b.add_edge(node(level - 1, (i + 1) / 2), node(level, i));
            t.all.push_back(node(level, i));
            if (level == h) t.leaves.push_back(node(level, i));
        }
    }
    return t;
}

inline void check_btp_params(int h, int l1, int l2) {
    require(h >= 1 && l1 >= 1 && l2 >= 2, "BTP-gadget needs h >= 1, l1 >= 1, l2 >= 2");
    std::vector<std::string> failed;
    // For h < 2 the bound 2^(h-2) is below 1 and cannot hold.
    if (h < 2 || l1 + l2 >= (1LL << (h - 2))) failed.push_back("tip-budget inequality l1 + l2 < 2^(h-2)");
    if (!(l2 > l1 + h + 1)) failed.push_back("arm inequality l2 > l1 + h + 1");
    if (!failed.empty()) {
        std::string msg = "violated: " + failed[0];
        if (failed.size() > 1) msg += "; " + failed[1];
        msg += " (h=" + num(h) + ", l1=" + num(l1) + ", l2=" + num(l2) + ")";
        throw Error("ParamInequalityViolated", msg);
    }
}

struct BTPParts {
    Landmarks landmarks;
    std::vector<std::string> half_a;  // BT_ab plus the a-side half of every T
    std::vector<std::string> half_b;
};

/// BTP_ab(h, l1, l2); `side_a` / `side_b` name the two trees in labels.
inline BTPParts add_btp(GraphBuilder& b, const std::string& pre, int h, int l1, int l2, const std::string& side_a,
                        const std::string& side_b, bool check_params = true) {
    if (check_params) check_btp_params(h, l1, l2);
    BTParts ta = add_bt(b, pre + "bt:" + side_a + ":", h);
    BTParts tb = add_bt(b, pre + "bt:" + side_b + ":", h);
    BTPParts out;
    out.half_a = ta.all;
    out.half_b = tb.all;
    std::vector<std::string> tips_ab, tips_ba;
    for (std::size_t i = 0; i < ta.leaves.size(); ++i) {
        TParts t = add_t(b, pre + "t:" + num(static_cast<long long>(i + 1)) + ":", l1, l2, ta.leaves[i], tb.leaves[i]);
        out.half_a.insert(out.half_a.end(), t.half_pq.begin(), t.half_pq.end());
        out.half_b.insert(out.half_b.end(), t.half_qp.begin(), t.half_qp.end());
        tips_ab.push_back(t.landmarks["tip_pq"][0]);
        tips_ba.push_back(t.landmarks["tip_qp"][0]);
    }
    auto& lm = out.landmarks;
    lm["r_ab"] = {ta.root};
    lm["r_ba"] = {tb.root};
    lm["leaves_ab"] = ta.leaves;
    lm["leaves_ba"] = tb.leaves;
    lm["tips_ab"] = tips_ab;
    lm["tips_ba"] = tips_ba;
    lm["a_half"] = out.half_a;
    lm["b_half"] = out.half_b;
    return out;
}

struct PParts {
    std::vector<std::string> major;  // a1..ad
    std::vector<std::string> minor;  // b2..b_{d-1}
    std::string middle;
    std::vector<std::string> all() const {
        auto v = major;
        v.insert(v.end(), minor.begin(), minor.end());
        return v;
    }
};

inline PParts add_p(GraphBuilder& b, const std::string& pre, int d) {
    require(d >= 3, "P-gadget needs d >= 3");
    auto a = [&](int i) { return pre + "a" + num(i); };
    auto m = [&](int i) { return pre + "b" + num(i); };
    PParts p;
    for (int i = 1; i < d; ++i) b.add_edge(a(i), a(i + 1));
    for (int i = 2; i < d - 1; ++i) b.add_edge(m(i), m(i + 1));
    for (int i = 2; i <= d - 1; ++i) b.add_edge(m(i), a(i));
    b.add_edge(m(2), a(1));
    b.add_edge(m(d - 1), a(d));
    for (int i = 1; i <= d; ++i) p.major.push_back(a(i));
    for (int i = 2; i <= d - 1; ++i) p.minor.push_back(m(i));
    p.middle = a((d + 1) / 2);
    return p;
}

struct YParts {
    Landmarks landmarks;
    PParts px, py, pz;
    std::string z;
};

inline YParts add_y(GraphBuilder& b, const std::string& pre, int d1, int d2) {
    require(d1 >= 3 && d2 >= 3, "Y-gadget needs d1, d2 >= 3");
    YParts y;
    y.px = add_p(b, pre + "px:", d1);
    y.py = add_p(b, pre + "py:", d1);
    y.pz = add_p(b, pre + "pz:", d2);
    y.z = pre + "z";
    b.add_edge(y.px.major.back(), y.z);
    b.add_edge(y.py.major.back(), y.z);
    b.add_edge(y.pz.major.front(), y.z);
    auto& lm = y.landmarks;
    lm["x_a"] = {y.px.major.front()};
    lm["x_b"] = {y.px.major.back()};
    lm["y_a"] = {y.py.major.front()};
    lm["y_b"] = {y.py.major.back()};
    lm["z"] = {y.z};
    lm["z_a"] = {y.pz.major.front()};
    lm["z_b"] = {y.pz.major.back()};
    lm["P_x"] = y.px.all();
    lm["P_y"] = y.py.all();
    lm["P_z"] = y.pz.all();
    return y;
}

struct TailParts {
    Landmarks landmarks;
    std::vector<std::string> all;
};

inline TailParts add_tail(GraphBuilder& b, const std::string& pre) {
    auto v = [&](int i) { return pre + "v" + num(i); };
    const std::string p = pre + "p", q = pre + "q", r = pre + "r";
    for (int i = 1; i < 9; ++i) b.add_edge(v(i), v(i + 1));
    for (int i : {2, 3, 4}) b.add_edge(p, v(i));
    for (int i : {5, 7, 9}) b.add_edge(q, v(i));
    for (int i : {1, 6, 8}) b.add_edge(r, v(i));
    TailParts t;
    for (int i = 1; i <= 9; ++i) {
        t.landmarks["v" + num(i)] = {v(i)};
        t.all.push_back(v(i));
    }
    t.landmarks["p"] = {p};
    t.landmarks["q"] = {q};
    t.landmarks["r"] = {r};
    t.landmarks["PT1"] = {v(1)};
    t.landmarks["PT2"] = {v(2), v(3), v(4)};
    t.landmarks["PT3"] = {v(5), v(6), v(7), v(8), v(9)};
    t.all.insert(t.all.end(), {p, q, r});
    return t;
}

struct CParts {
    Landmarks landmarks;
    std::vector<std::string> all;
    std::vector<std::string> witness;
};

/// C(m): v_{m^2} - P_m - P_{m-1} - ... - P_4 - Tail(v9 .. v1) - v_{m^2}.
/// P_m has parameter 2m-2, P_i (i < m) has 2i-1.
inline CParts add_c(GraphBuilder& b, const std::string& pre, int m) {
    require(m >= 4, "C-gadget needs m >= 4");
    require(m <= 2000, "C-gadget parameter too large");
    CParts c;
    const std::string vm2 = pre + "vm2";
    std::vector<std::string> trunk{vm2};
    std::string prev = vm2;
    for (int i = m; i >= 4; --i) {
        const int d = i == m ? 2 * m - 2 : 2 * i - 1;
        PParts p = add_p(b, pre + "p" + num(i) + ":", d);
        b.add_edge(prev, p.major.front());
        prev = p.major.back();
        trunk.insert(trunk.end(), p.major.begin(), p.major.end());
        auto all = p.all();
        c.all.insert(c.all.end(), all.begin(), all.end());
        // On the even-parameter P_m the vertex a_{m-1} is one step nearer to
        // v_{m^2} than the far end; its radius m-1 covers all of P_m.
        c.witness.push_back(i == m ? p.major[m - 2] : p.middle);
    }
    TailParts tail = add_tail(b, pre + "tail:");
    auto tv = [&](int i) { return tail.landmarks.at("v" + num(i)).front(); };
    b.add_edge(prev, tv(9));
    b.add_edge(tv(1), vm2);
    for (int i = 9; i >= 1; --i) trunk.push_back(tv(i));
    c.all.insert(c.all.end(), tail.all.begin(), tail.all.end());
    c.all.push_back(vm2);

    std::vector<std::string> trunk_prime(trunk.begin(), trunk.end() - 9);
    trunk_prime.insert(trunk_prime.end(), {tv(9), tv(8), tail.landmarks.at("r").front(), tv(1)});

    c.witness.push_back(tv(7));
    c.witness.push_back(tv(3));
    c.witness.push_back(tv(1));

    auto& lm = c.landmarks;
    lm["v_m2"] = {vm2};
    lm["v1"] = {tv(1)};
    lm["trunk"] = trunk;
    lm["trunk_prime"] = trunk_prime;
    lm["middles"] = c.witness;
    for (const auto& [k, v] : tail.landmarks) lm["tail_" + k] = v;
    return c;
}

}  // namespace detail

inline GadgetHandle make_t_gadget(int l1, int l2) {
    GraphBuilder b;
    auto t = detail::add_t(b, "t:", l1, l2, "p", "q");
    GadgetHandle g{b.build(), std::move(t.landmarks)};
    g.landmarks["p"] = {"p"};
    g.landmarks["q"] = {"q"};
    g.landmarks["half_pq"] = t.half_pq;
    g.landmarks["half_qp"] = t.half_qp;
    return g;
}

inline GadgetHandle make_bt_gadget(int h) {
    GraphBuilder b;
    auto t = detail::add_bt(b, "bt:", h);
    GadgetHandle g{b.build(), {}};
    g.landmarks["root"] = {t.root};
    g.landmarks["leaves"] = t.leaves;
    return g;
}

inline GadgetHandle make_btp_gadget(int h, int l1, int l2) {
    detail::check_btp_params(h, l1, l2);
    GraphBuilder b;
    auto t = detail::add_btp(b, "", h, l1, l2, "a", "b");
    return {b.build(), std::move(t.landmarks)};
}

inline GadgetHandle make_p_gadget(int d) {
    GraphBuilder b;
    auto p = detail::add_p(b, "p:", d);
    GadgetHandle g{b.build(), {}};
    g.landmarks["a1"] = {p.major.front()};
    g.landmarks["ad"] = {p.major.back()};
    g.landmarks["middle"] = {p.middle};
    g.landmarks["major"] = p.major;
    g.landmarks["minor"] = p.minor;
    return g;
}

inline GadgetHandle make_y_gadget(int d1, int d2) {
    GraphBuilder b;
    auto y = detail::add_y(b, "y:", d1, d2);
    return {b.build(), std::move(y.landmarks)};
}

inline GadgetHandle make_tail_gadget() {
    GraphBuilder b;
    auto t = detail::add_tail(b, "tail:");
    return {b.build(), std::move(t.landmarks)};
}

inline GadgetHandle make_c_gadget(int m) {
    GraphBuilder b;
    auto c = detail::add_c(b, "c:", m);
    return {b.build(), std::move(c.landmarks)};
}

/// (a_{m-1} of P_m, middles of P_{m-1} .. P_4, v7, v3, v1), labeled as in
/// `make_c_gadget(m)`.
inline BurningSequence make_c_witness(int m) {
    GraphBuilder b;
    return detail::add_c(b, "c:", m).witness;
}

}  // namespace burnkit
