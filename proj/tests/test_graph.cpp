#include <gtest/gtest.h>

#include <random>

#include "burnkit/generators.hpp"
#include "burnkit/graph.hpp"
#include "burnkit/io.hpp"

using namespace burnkit;

namespace {

// Floyd-Warshall on an adjacency matrix: an independent distance oracle.
std::vector<std::vector<int>> floyd(const Graph& g) {
    const std::size_t n = g.order();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (VertexId v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (int& x : row)
            if (x == inf) x = kUnreachable;
    return d;
}

}  // namespace

TEST(GraphBuilder, LabelsAreSortedAndIdsArePositions) {
    GraphBuilder b;
    b.add_edge("zeta", "alpha");
    b.add_edge("mid", "alpha");
    Graph g = b.build();
    ASSERT_EQ(g.order(), 3u);
    EXPECT_EQ(g.label(0), "alpha");
    EXPECT_EQ(g.label(1), "mid");
    EXPECT_EQ(g.label(2), "zeta");
    EXPECT_EQ(g.id("zeta"), 2u);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_FALSE(g.has_edge(1, 2));
    EXPECT_EQ(g.degree(0), 2u);
}

TEST(GraphBuilder, RejectsSelfLoopsAndDuplicates) {
    GraphBuilder b;
    b.add_edge("a", "b");
    try {
        b.add_edge("b", "a");
        FAIL() << "duplicate accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "DuplicateEdge");
    }
    try {
        b.add_edge("c", "c");
        FAIL() << "self-loop accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "SelfLoop");
    }
}

TEST(Graph, UnknownVertexThrows) {
    Graph g = path_graph(3);
    EXPECT_FALSE(g.contains("v9"));
    try {
        g.id("v9");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "UnknownVertex");
    }
}

TEST(Graph, EdgesAreCanonical) {
    Graph g = cycle_graph(5);
    auto e = g.edges();
    ASSERT_EQ(e.size(), 5u);
    EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
    for (auto [u, v] : e) EXPECT_LT(u, v);
}

TEST(Graph, InducedSubgraphKeepsLabels) {
    Graph g = cycle_graph(6);
    std::vector<VertexId> keep{g.id("v1"), g.id("v2"), g.id("v3")};
    Graph s = g.induced(keep);
    EXPECT_EQ(s.order(), 3u);
    EXPECT_EQ(s.size(), 2u);
    EXPECT_TRUE(s.has_edge(s.id("v1"), s.id("v2")));
}

TEST(Distances, BfsMatchesFloydWarshallOnRandomGraphs) {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 40; ++round) {
        std::size_t n = 1 + rng() % 15;
        Graph g = random_connected_graph(n, 0.15, rng);
        EXPECT_EQ(all_pairs_distances(g), floyd(g));
    }
}

TEST(Distances, DisconnectedPairsAreUnreachable) {
    GraphBuilder b;
    b.add_edge("a", "b");
    b.add_vertex("c");
    Graph g = b.build();
    EXPECT_EQ(distance(g, "a", "c"), kUnreachable);
    EXPECT_FALSE(is_connected(g));
    EXPECT_EQ(floyd(g), all_pairs_distances(g));
}

TEST(Distances, MultiSourceBfsIsMinimumOverSources) {
    Graph g = path_graph(9);
    std::vector<VertexId> src{g.id("v1"), g.id("v9")};
    auto d = bfs_from_set(g, src);
    EXPECT_EQ(d[g.id("v5")], 4);
    EXPECT_EQ(d[g.id("v7")], 2);
}

TEST(Degrees, HistogramAndRegularity) {
    auto h = degree_histogram(path_graph(5));
    EXPECT_EQ(h.at(1), 2u);
    EXPECT_EQ(h.at(2), 3u);
    EXPECT_TRUE(is_regular(complete_graph(4), 3));
    EXPECT_TRUE(is_regular(k33_graph(), 3));
    EXPECT_TRUE(is_regular(prism_graph(), 3));
    EXPECT_FALSE(is_regular(path_graph(4), 2));
}

TEST(Generators, RandomCubicIsCubicConnectedAndSeeded) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        std::mt19937_64 a(seed), b(seed);
        Graph g = random_cubic_graph(12, a);
        EXPECT_TRUE(is_regular(g, 3));
        EXPECT_TRUE(is_connected(g));
        EXPECT_EQ(write_graph(g), write_graph(random_cubic_graph(12, b)));
    }
}

TEST(Generators, LabeledCubicEnumerationCounts) {
    // Labeled cubic graphs: 1 on 4 vertices, 70 on 6, 19355 on 8 of which 35
    // are two disjoint K4s.
    std::size_t c4 = 0, c6 = 0, c8 = 0;
    for_each_connected_cubic_graph(4, [&](const Graph&) { ++c4; });
    for_each_connected_cubic_graph(6, [&](const Graph& g) {
        EXPECT_TRUE(is_regular(g, 3));
        ++c6;
    });
    for_each_connected_cubic_graph(8, [&](const Graph&) { ++c8; });
    EXPECT_EQ(c4, 1u);
    EXPECT_EQ(c6, 70u);
    EXPECT_EQ(c8, 19355u - 35u);
}

TEST(EdgeListIo, RoundTripIsByteStable) {
    std::mt19937_64 rng(3);
    Graph g = random_connected_graph(12, 0.3, rng);
    std::string text = write_graph(g);
    Graph h = read_graph(text);
    EXPECT_EQ(write_graph(h), text);
    EXPECT_EQ(h.labels(), g.labels());
}

TEST(EdgeListIo, CommentsBlanksAndIsolatedVertices) {
    Graph g = read_graph("# header\n\na b\n  c\n\tb  d \n");
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(g.degree(g.id("c")), 0u);
    EXPECT_EQ(write_graph(g), "c\na b\nb d\n");
    EXPECT_EQ(path_graph(1).order(), 1u);
    EXPECT_EQ(read_graph(write_graph(path_graph(1))).order(), 1u);
}

TEST(EdgeListIo, MalformedAndDuplicateLinesCarryLineNumbers) {
    try {
        read_graph("a b\na b c\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "MalformedLine");
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    try {
        read_graph("a b\nb a\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "DuplicateEdge");
    }
}

TEST(SequenceIo, RoundTrip) {
    BurningSequence s{"v3", "v1", "x'"};
    EXPECT_EQ(read_sequence(write_sequence(s)), s);
    EXPECT_THROW(read_sequence("a b\n"), Error);
}

TEST(LandmarkIo, RoundTrip) {
    Landmarks lm{{"tip", {"t:Fp:3"}}, {"leaves", {"a", "b", "c"}}};
    EXPECT_EQ(read_landmarks(write_landmarks(lm)), lm);
}

TEST(ReportIo, OrderedRowsRoundTrip) {
    Report r;
    r.add("b", 2).add("a", true).add("b", std::string("again"));
    Report back = read_report(r.str());
    EXPECT_EQ(back.rows(), r.rows());
    EXPECT_EQ(back.get("b"), "2");
    EXPECT_EQ(back.get("missing"), "");
}

TEST(Dot, PathOfThree) {
    std::string dot = export_dot(path_graph(3));
    EXPECT_EQ(std::count(dot.begin(), dot.end(), ';'), 5);
    EXPECT_NE(dot.find("\"v1\" -- \"v2\""), std::string::npos);
    EXPECT_EQ(dot, export_dot(path_graph(3)));
}

TEST(Dot, LandmarksAreStyled) {
    Landmarks lm{{"tip_pq", {"v2"}}, {"p", {"v1"}}};
    std::string dot = export_dot(path_graph(3), &lm);
    EXPECT_NE(dot.find("\"v2\" [style=filled, fillcolor=red]"), std::string::npos);
    EXPECT_NE(dot.find("xlabel=\"p\""), std::string::npos);
}
