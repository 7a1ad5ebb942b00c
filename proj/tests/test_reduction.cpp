#include <gtest/gtest.h>

#include <random>
#include <set>

#include "burnkit/generators.hpp"
#include "burnkit/reduction.hpp"
#include "burnkit/solvers.hpp"

using namespace burnkit;

namespace {

const ReductionInstance& k4_instance() {
    static const ReductionInstance inst = build_H(complete_graph(4));
    return inst;
}

bool is_power_of_two(long long v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

TEST(DoubleSubdivide, K4BecomesSixVerticesSevenEdges) {
    auto s = double_subdivide(complete_graph(4));
    EXPECT_EQ(s.graph.order(), 6u);
    EXPECT_EQ(s.graph.size(), 8u);
    EXPECT_EQ(s.p, "a");
    EXPECT_EQ(s.q, "b");
    EXPECT_FALSE(s.graph.has_edge(s.graph.id("a"), s.graph.id("b")));
    EXPECT_TRUE(s.graph.has_edge(s.graph.id("a"), s.graph.id("x")));
    EXPECT_TRUE(s.graph.has_edge(s.graph.id("x"), s.graph.id("y")));
    EXPECT_TRUE(s.graph.has_edge(s.graph.id("y"), s.graph.id("b")));
}

TEST(DoubleSubdivide, ExplicitEdgeAndMissingEdge) {
    auto s = double_subdivide(complete_graph(4), std::make_pair(std::string("c"), std::string("d")));
    EXPECT_FALSE(s.graph.has_edge(s.graph.id("c"), s.graph.id("d")));
    EXPECT_EQ(bfs_distances(s.graph, s.x)[s.graph.id("c")], 1);
    EXPECT_EQ(bfs_distances(s.graph, s.y)[s.graph.id("d")], 1);
    try {
        double_subdivide(path_graph(3), std::make_pair(std::string("v1"), std::string("v3")));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "EdgeNotFound");
    }
}

TEST(DoubleSubdivide, FreshLabelsAvoidCollisions) {
    GraphBuilder b;
    b.add_edge("x", "y");
    auto s = double_subdivide(b.build());
    EXPECT_EQ(s.x, "x'");
    EXPECT_EQ(s.y, "y'");
    EXPECT_EQ(s.graph.order(), 4u);
}

TEST(DoubleSubdivide, CoverGrowsByExactlyOne) {
    std::vector<Graph> graphs{complete_graph(4), k33_graph(), prism_graph(), path_graph(2)};
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10; ++i) graphs.push_back(random_cubic_graph(4 + 2 * (rng() % 5), rng));
    for (const auto& g : graphs) {
        auto s = double_subdivide(g);
        auto beta = vertex_cover_exact(g);
        auto beta_prime = vertex_cover_exact(s.graph);
        EXPECT_EQ(beta_prime.value, beta.value + 1);
        if (is_regular(g, 3)) {
            const int n = static_cast<int>(g.order());
            EXPECT_GE(2 * beta.value, n);
            EXPECT_LE(beta.value, (2 * n + 2) / 3);
        }
        auto up = extend_cover(s, beta.witness);
        EXPECT_EQ(up.size(), beta.witness.size() + 1);
        EXPECT_TRUE(is_vertex_cover(s.graph, up));
        auto down = restrict_cover(s, beta_prime.witness);
        EXPECT_LE(down.size(), beta_prime.witness.size() - 1);
        EXPECT_TRUE(is_vertex_cover(g, down));
    }
}

TEST(ChooseParams, SixAndEight) {
    auto p = choose_params(6);
    EXPECT_EQ(p.cn, 32);
    EXPECT_EQ(p.c_num, 16);
    EXPECT_EQ(p.c_den, 3);
    EXPECT_EQ(p.h, 7);
    EXPECT_EQ(p.l1, 9);
    EXPECT_EQ(p.l2, 18);
    EXPECT_EQ(p.d1, 17);
    EXPECT_EQ(p.d2, 19);
    EXPECT_EQ(p.m, 35);
    auto q = choose_params(8);
    EXPECT_EQ(q.cn, 32);
    EXPECT_EQ(q.c_num, 4);
    EXPECT_EQ(q.c_den, 1);
    EXPECT_EQ(q.h, 7);
    EXPECT_EQ(q.l1, 9);
    EXPECT_EQ(q.l2, 18);
}

TEST(ChooseParams, SweepSatisfiesInvariants) {
    for (int n = 6; n <= 400; n += 2) {
        auto p = choose_params(n);
        ASSERT_TRUE(is_power_of_two(p.cn));
        ASSERT_GE(p.cn, 4LL * n);
        ASSERT_LT(p.cn, 8LL * n);
        ASSERT_EQ(1LL << (p.h - 2), p.cn);
        ASSERT_EQ(2LL * p.l1 + 2 * p.h, p.cn);
        ASSERT_LT(p.l1 + p.l2, 1LL << (p.h - 2));
        ASSERT_GT(p.l2, p.l1 + p.h + 1);
        ASSERT_EQ(p.d1 + p.d2 + 1, n / 2 + p.cn + 2);
    }
}

TEST(ChooseParams, RejectsOddOrTiny) {
    EXPECT_THROW(choose_params(7), Error);
    EXPECT_THROW(choose_params(4), Error);
}

TEST(BuildH, RejectsNonCubicAndDisconnected) {
    try {
        build_H(cycle_graph(6));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "NotCubic");
    }
    GraphBuilder b;
    for (const char* pre : {"l", "r"})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                b.add_edge(pre + std::to_string(i), pre + std::to_string(j));
    try {
        build_H(b.build());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "NotConnected");
    }
}

TEST(BuildH, K4CountFromGadgetFormulas) {
    const auto& inst = k4_instance();
    // n' = 6 core vertices, 8 BTP gadgets of 2(2^8 - 1) + 2^7 (4*9 + 2*18),
    // Y(17, 19) and C(35).
    const long long btp = 2 * 255 + 128 * (36 + 36);
    const long long y = 4 * 17 + 2 * 19 - 5;
    const long long c = 2 * 35 * 35 - 2 * 35 - 1;
    EXPECT_EQ(btp, 9726);
    EXPECT_EQ(y, 101);
    EXPECT_EQ(c, 2379);
    EXPECT_EQ(static_cast<long long>(inst.h.order()), 6 + 8 * btp + y + c);
    EXPECT_EQ(inst.h.order(), 80294u);
    EXPECT_EQ(expected_h_order(inst.params, static_cast<long long>(inst.g_prime().size())), 80294);
}

TEST(BuildH, K4IsCubicAndConnected) {
    const auto& inst = k4_instance();
    EXPECT_TRUE(is_regular(inst.h, 3));
    EXPECT_TRUE(is_connected(inst.h));
}

TEST(BuildH, AnnexeDistances) {
    const auto& inst = k4_instance();
    auto from_x = bfs_distances(inst.h, "g:x");
    EXPECT_EQ(from_x[inst.h.id(inst.landmarks.at("Y_z_b").front())], 37);
    EXPECT_EQ(from_x[inst.h.id("c:vm2")], 38);
}

TEST(BuildH, DomainsPartitionWithOutside) {
    const auto& inst = k4_instance();
    const auto& P = inst.params;
    const std::size_t half = ((1u << (P.h + 1)) - 1) + (1u << P.h) * static_cast<std::size_t>(2 * P.l1 + P.l2);
    std::map<int, std::size_t> sizes;
    for (VertexId v = 0; v < inst.h.order(); ++v) {
        int d = inst.domain_of[v];
        ++sizes[d];
        if (d < 0) {
            const auto& l = inst.h.label(v);
            bool outside = l == "y:z" || l.rfind("y:pz:", 0) == 0 || l.rfind("c:", 0) == 0;
            EXPECT_TRUE(outside) << l;
        }
    }
    EXPECT_EQ(sizes[-1], 1u + (2u * P.d2 - 2u) + 2379u);
    const auto& gp = inst.g_prime();
    for (VertexId u = 0; u < gp.order(); ++u) {
        const std::string& lu = gp.label(u);
        std::size_t want = 1 + gp.degree(u) * half;
        if (lu == inst.sub.x || lu == inst.sub.y) want += 2 * P.d1 - 2;
        EXPECT_EQ(sizes[static_cast<int>(u)], want) << lu;
        EXPECT_EQ(inst.landmarks.at("dom:" + lu).size(), want);
    }
}

TEST(BuildH, FireFromOutsideADomainNeedsManySteps) {
    const auto& inst = k4_instance();
    const auto& gp = inst.g_prime();
    for (VertexId u = 0; u < gp.order(); ++u) {
        auto d = bfs_distances(inst.h, "g:" + gp.label(u));
        int nearest = std::numeric_limits<int>::max();
        for (VertexId v = 0; v < inst.h.order(); ++v)
            if (inst.domain_of[v] != static_cast<int>(u)) nearest = std::min(nearest, d[v]);
        EXPECT_EQ(nearest, inst.params.cn / 2 + 2) << gp.label(u);
    }
}

TEST(BuildH, TipsOfDifferentGadgetsAreFarApart) {
    const auto& inst = k4_instance();
    const auto& P = inst.params;
    std::map<std::string, std::vector<VertexId>> tips;  // gadget -> tips
    for (const auto& [name, labels] : inst.landmarks) {
        if (name.rfind("btp:", 0) != 0 || name.find(":tips_") == std::string::npos) continue;
        auto gadget = name.substr(0, name.find(":tips_"));
        for (const auto& l : labels) tips[gadget].push_back(inst.h.id(l));
    }
    ASSERT_EQ(tips.size(), inst.g_prime().size());
    for (const auto& [gadget, own] : tips) {
        auto d = bfs_from_set(inst.h, own);
        int nearest = std::numeric_limits<int>::max();
        for (const auto& [other, theirs] : tips)
            if (other != gadget)
                for (auto v : theirs) nearest = std::min(nearest, d[v]);
        EXPECT_GT(nearest, 2 * (P.l1 + P.l2)) << gadget;
    }
}

TEST(Witness, MinimumCoverGivesThresholdLength) {
    const auto& inst = k4_instance();
    auto cover = vertex_cover_exact(inst.g_prime());
    ASSERT_EQ(cover.value, 4);
    auto seq = vc_to_witness(inst, cover.witness);
    EXPECT_EQ(seq.size(), 39u);
    EXPECT_EQ(static_cast<long long>(seq.size()), cover.value + inst.params.cn + 3);
    auto s = simulate(inst.h, seq);
    EXPECT_TRUE(s.complete());
    EXPECT_EQ(s.last_burn_step(), 39);
    EXPECT_TRUE(seq.front() == "g:x" || seq.front() == "g:y");
}

TEST(Witness, TruncationLeavesPartOfTheCGadgetUnburned) {
    const auto& inst = k4_instance();
    auto seq = vc_to_witness(inst, vertex_cover_exact(inst.g_prime()).witness);
    seq.pop_back();
    auto s = simulate(inst.h, seq);
    ASSERT_FALSE(s.complete());
    bool tail_unburned = false;
    for (VertexId v = 0; v < inst.h.order(); ++v)
        if (s.burn_time[v] == 0 && inst.h.label(v).rfind("c:tail:", 0) == 0) tail_unburned = true;
    EXPECT_TRUE(tail_unburned);
}

TEST(Witness, NonMinimumCoverStillValidates) {
    const auto& inst = k4_instance();
    std::vector<std::string> cover{"a", "b", "c", "x", "y"};
    ASSERT_TRUE(is_vertex_cover(inst.g_prime(), cover));
    auto seq = vc_to_witness(inst, cover);
    EXPECT_EQ(seq.size(), 5u + 35u);
    EXPECT_TRUE(is_burning_sequence(inst.h, seq));
    auto back = witness_to_vc(inst, seq);
    EXPECT_TRUE(is_vertex_cover(inst.g_prime(), back));
    EXPECT_LE(back.size(), 5u);
}

TEST(Witness, InvalidCoversAreRejected) {
    const auto& inst = k4_instance();
    auto kind_of = [&](const std::vector<std::string>& cover) {
        try {
            vc_to_witness(inst, cover);
        } catch (const Error& e) {
            return e.kind();
        }
        return std::string("none");
    };
    EXPECT_EQ(kind_of({"a", "c", "x"}), "NotACover");
    EXPECT_EQ(kind_of({"a", "b", "c", "d"}), "MissingXY");
    EXPECT_EQ(kind_of({"nope", "x"}), "UnknownVertex");
}

TEST(Audit, WitnessOfMinimumCover) {
    const auto& inst = k4_instance();
    auto cover = vertex_cover_exact(inst.g_prime()).witness;
    auto seq = vc_to_witness(inst, cover);
    auto a = audit_sequence(inst, seq);
    EXPECT_EQ(a.start_size, 4u);
    EXPECT_EQ(a.middle_size, static_cast<std::size_t>(inst.params.h + 1));
    EXPECT_EQ(a.end_size, static_cast<std::size_t>(inst.params.cn - inst.params.h + 2));
    EXPECT_EQ(a.start_size + a.middle_size + a.end_size, seq.size());
    EXPECT_TRUE(a.unrepresented.empty());
    EXPECT_EQ(a.represented.size(), inst.g_prime().size());
    EXPECT_EQ(a.start_outside, 0u);
    EXPECT_EQ(a.start_inside, 4u);
    for (const auto& v : cover) EXPECT_TRUE(std::binary_search(a.owners.begin(), a.owners.end(), v));
    EXPECT_TRUE(a.complete);
    EXPECT_FALSE(a.last_unique.empty());
    for (std::size_t i = a.start_size; i < seq.size(); ++i) EXPECT_EQ(a.source_domain[i], "outside");
}

TEST(Audit, ShortSequenceIsRejected) {
    const auto& inst = k4_instance();
    try {
        audit_sequence(inst, BurningSequence(10, "g:a"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "SequenceTooShort");
    }
}

TEST(Audit, UnrepresentedEdgesAreListed) {
    const auto& inst = k4_instance();
    // Only x in StartBlock: edges away from x are unrepresented.
    BurningSequence seq{"g:x"};
    auto c = make_c_witness(inst.params.m);
    seq.insert(seq.end(), c.begin(), c.end());
    auto a = audit_sequence(inst, seq);
    EXPECT_EQ(a.owners, (std::vector<std::string>{"x"}));
    EXPECT_EQ(a.represented.size(), 2u);
    EXPECT_EQ(a.unrepresented.size(), inst.g_prime().size() - 2);
    EXPECT_FALSE(a.complete);
}

TEST(WitnessToCover, ExtractsACover) {
    const auto& inst = k4_instance();
    auto seq = vc_to_witness(inst, vertex_cover_exact(inst.g_prime()).witness);
    auto cover = witness_to_vc(inst, seq);
    EXPECT_TRUE(is_vertex_cover(inst.g_prime(), cover));
    EXPECT_LE(cover.size(), seq.size() - static_cast<std::size_t>(inst.params.cn + 3));
}

TEST(WitnessToCover, InvalidSequencesAreReported) {
    const auto& inst = k4_instance();
    auto seq = vc_to_witness(inst, vertex_cover_exact(inst.g_prime()).witness);
    seq.pop_back();
    try {
        witness_to_vc(inst, seq);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "NotABurningSequence");
    }
    try {
        witness_to_vc(inst, BurningSequence{"g:a", "g:a"});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "NotABurningSequence");
    }
}

TEST(Meta, RoundTripRebuildsTheSameInstance) {
    const auto& inst = k4_instance();
    auto meta = instance_meta(inst);
    auto again = instance_from_meta(read_report(meta.str()));
    EXPECT_EQ(again.h.labels(), inst.h.labels());
    EXPECT_EQ(again.h.edges(), inst.h.edges());
    EXPECT_EQ(again.domain_of, inst.domain_of);
    EXPECT_EQ(meta.get("cn"), "32");
    EXPECT_EQ(meta.get("c"), "16/3");
}

TEST(BuildH, OtherSmallCubicBases) {
    for (const Graph& g : {k33_graph(), prism_graph()}) {
        auto inst = build_H(g);
        EXPECT_EQ(inst.h.order(),
                  static_cast<std::size_t>(expected_h_order(inst.params, static_cast<long long>(inst.g_prime().size()))));
        EXPECT_TRUE(is_regular(inst.h, 3));
        EXPECT_TRUE(is_connected(inst.h));
        auto cover = vertex_cover_exact(inst.g_prime());
        auto seq = vc_to_witness(inst, cover.witness);
        EXPECT_EQ(static_cast<long long>(seq.size()), cover.value + inst.params.cn + 3);
        EXPECT_TRUE(is_burning_sequence(inst.h, seq));
        EXPECT_TRUE(audit_sequence(inst, seq).unrepresented.empty());
    }
}
