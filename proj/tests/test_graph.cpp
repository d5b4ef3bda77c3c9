#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "robustpd/robustpd.hpp"

using namespace robustpd;

namespace {

std::size_t degree_sum(const Graph& g) {
    std::size_t s = 0;
    for (Vertex v = 0; v < g.order(); ++v) s += g.degree(v);
    return s;
}

} // namespace

TEST(VertexSet, BasicOperations) {
    VertexSet s{3, 70, 200};
    EXPECT_EQ(s.size(), 3U);
    EXPECT_TRUE(s.contains(70));
    EXPECT_FALSE(s.contains(71));
    EXPECT_EQ(s.first(), 3U);
    s.erase(3);
    EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{70, 200}));
    EXPECT_TRUE((VertexSet{70} | VertexSet{1}).is_subset_of(VertexSet{1, 70, 5}));
    EXPECT_EQ(VertexSet::prefix(5).size(), 5U);
    EXPECT_TRUE(lex_compare(VertexSet{0, 5}, VertexSet{1, 2}) < 0);
    EXPECT_TRUE(lex_compare(VertexSet{0}, VertexSet{0, 1}) < 0);
}

TEST(Build, FamilySizes) {
    auto g44 = build(FamilySpec::grid(4, 4));
    EXPECT_EQ(g44.order(), 16U);
    EXPECT_EQ(g44.edge_count(), 24U);
    auto k34 = build(FamilySpec::complete_bipartite(3, 4));
    EXPECT_EQ(k34.order(), 7U);
    EXPECT_EQ(k34.edge_count(), 12U);
    auto k333 = build(FamilySpec::complete_multipartite({3, 3, 3}));
    EXPECT_EQ(k333.order(), 9U);
    EXPECT_EQ(k333.edge_count(), 27U);
}

TEST(Build, MultipartiteEdgesMatchDefinition) {
    std::vector<int> parts{3, 3, 3};
    auto g = build(FamilySpec::complete_multipartite(parts));
    for (Vertex u = 0; u < 9; ++u)
        for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(g.adjacent(u, v), u != v && u / 3 != v / 3);
}

TEST(Build, NumberingConventions) {
    auto grid = build(FamilySpec::grid(6, 6));
    EXPECT_EQ(grid.label(0), "(1,1)");
    EXPECT_EQ(grid.find_label("(2,4)"), 9U);
    EXPECT_TRUE(grid.adjacent(0, 1));
    EXPECT_TRUE(grid.adjacent(0, 6));
    auto kab = build(FamilySpec::complete_bipartite(3, 4));
    EXPECT_EQ(kab.label(0), "x1");
    EXPECT_EQ(kab.label(3), "y1");
    EXPECT_FALSE(kab.adjacent(0, 2));
    auto star = build(FamilySpec::star(15));
    EXPECT_EQ(star.degree(0), 15U);
}

TEST(Build, HandshakeOnEveryFamily) {
    for (const auto& spec :
         {FamilySpec::path(7), FamilySpec::cycle(5), FamilySpec::star(15), FamilySpec::complete(6),
          FamilySpec::complete_bipartite(3, 5), FamilySpec::complete_multipartite({3, 3, 3, 3}),
          FamilySpec::grid(6, 6)}) {
        auto g = build(spec);
        EXPECT_EQ(degree_sum(g), 2 * g.edge_count());
    }
}

TEST(Build, MultipartiteMinimumDegree) {
    for (int m = 2; m <= 5; ++m) {
        auto g = build(FamilySpec::complete_multipartite(std::vector<int>(static_cast<std::size_t>(m), 3)));
        EXPECT_EQ(g.min_degree(), static_cast<std::size_t>(3 * (m - 1)));
    }
}

TEST(Build, InvalidParametersNameTheField) {
    try {
        (void)build(FamilySpec::grid(0, 4));
        FAIL();
    } catch (const ParameterError& e) {
        EXPECT_EQ(e.field(), "rows");
    }
    EXPECT_THROW((void)build(FamilySpec::complete_bipartite(3, 0)), ParameterError);
    EXPECT_THROW((void)build(FamilySpec::cycle(2)), ParameterError);
    EXPECT_THROW((void)Graph::from_edges(3, {{0, 0}}), ParameterError);
    EXPECT_THROW((void)Graph::from_edges(3, {{0, 1}, {1, 0}}), ParameterError);
    EXPECT_THROW((void)Graph::from_edges(0, {}), ParameterError);
}

TEST(ParseFamily, Grammar) {
    EXPECT_EQ(build(parse_family("grid:4x4")).order(), 16U);
    EXPECT_EQ(build(parse_family("kab:3,4")).edge_count(), 12U);
    EXPECT_EQ(build(parse_family("kparts:3,3,3")).order(), 9U);
    EXPECT_EQ(build(parse_family("star:15")).order(), 16U);
    EXPECT_EQ(build(parse_family("path:5")).edge_count(), 4U);
    EXPECT_EQ(build(parse_family("cycle:6")).edge_count(), 6U);
    EXPECT_THROW((void)parse_family("grid:4"), ParameterError);
    EXPECT_THROW((void)parse_family("blob:3"), ParameterError);
    EXPECT_THROW((void)parse_family("kab:3,x"), ParameterError);
}

TEST(ParseEdgeList, Examples) {
    auto k2 = parse_edge_list("2 1\n0 1");
    EXPECT_EQ(k2, build(FamilySpec::complete(2)));
    auto tri = parse_edge_list("3 3\n0 1\n1 2\n0 2");
    EXPECT_EQ(tri, build(FamilySpec::complete(3)));
    EXPECT_THROW((void)parse_edge_list("3 2\n0 1\n0 1"), ParseError);
}

TEST(ParseEdgeList, Errors) {
    EXPECT_THROW((void)parse_edge_list(""), ParseError);
    EXPECT_THROW((void)parse_edge_list("3 1\n0 3"), ParseError);
    EXPECT_THROW((void)parse_edge_list("3 1\n1 1"), ParseError);
    EXPECT_THROW((void)parse_edge_list("3 2\n0 1"), ParseError);
    EXPECT_THROW((void)parse_edge_list("3 1\n0 x"), ParseError);
    EXPECT_THROW((void)parse_edge_list("3 1\n0 1\n1 2"), ParseError);
    try {
        (void)parse_edge_list("3 2\n0 1\n0 1");
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3U);
    }
}

TEST(ParseEdgeList, RoundTrip) {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto g = oracle::random_connected(rng, 2 + static_cast<std::size_t>(i % 12), 0.3);
        EXPECT_EQ(parse_edge_list(render_edge_list(g)), g);
    }
    auto grid = build(FamilySpec::grid(6, 6));
    EXPECT_EQ(parse_edge_list(render_edge_list(grid)), grid);
}

TEST(Graph, ConnectivityChecks) {
    auto g = Graph::from_edges(4, {{0, 1}, {2, 3}});
    EXPECT_FALSE(g.is_connected());
    EXPECT_THROW(require_connected(g, "test"), StructuralError);
    EXPECT_TRUE(build(FamilySpec::grid(3, 3)).is_connected());
}

TEST(TerminalStructures, Examples) {
    auto star = build(FamilySpec::star(15));
    auto t = terminal_structures(star, 0);
    EXPECT_EQ(t.paths, 15);
    EXPECT_EQ(t.cycles, 0);
    auto c5 = build(FamilySpec::cycle(5));
    for (Vertex v = 0; v < 5; ++v) {
        auto tc = terminal_structures(c5, v);
        EXPECT_EQ(tc.paths, 0);
        EXPECT_EQ(tc.cycles, 1);
    }
    auto p4 = build(FamilySpec::path(4));
    auto tp = terminal_structures(p4, 1);
    EXPECT_EQ(tp.paths, 2);
    EXPECT_EQ(tp.cycles, 0);
}

TEST(TerminalStructures, PendantCycleAndPathOnHub) {
    // hub 0 of degree 4: triangle 0-1-2-0 and a pendant path 0-3-4, plus a branch 0-5 with 5 of degree 3
    auto g = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {5, 7}});
    auto t = terminal_structures(g, 0);
    EXPECT_EQ(t.paths, 1);
    EXPECT_EQ(t.cycles, 1);
}
