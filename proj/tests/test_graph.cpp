#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "reslat/graph.hpp"

using namespace reslat;
using testutil::elem;
using testutil::load_fixture;
using testutil::mask;

namespace {

LabeledGraph make_graph(int n, std::initializer_list<std::pair<int, int>> edges)
{
    LabeledGraph g = LabeledGraph::empty(n);
    for (int v = 0; v < n; ++v)
        g.labels[v] = "v" + std::to_string(v);
    for (auto [u, v] : edges)
        g.add_edge(u, v);
    return g;
}

LabeledGraph complete(int n)
{
    LabeledGraph g = LabeledGraph::empty(n);
    for (int v = 0; v < n; ++v)
        g.labels[v] = "v" + std::to_string(v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

int vertex_of(const LabeledGraph &g, ElemSet members)
{
    for (int v = 0; v < g.n; ++v)
        if (g.vertex_filters[v].members == members)
            return v;
    return -1;
}

} // namespace

TEST_CASE("the eight-element example graph has the six published edges")
{
    auto a = load_fixture("ex31_corrected.lat");
    LabeledGraph g = comaximal_filter_graph(a);
    REQUIRE(g.n == 6);
    CHECK(g.edge_count() == 6);

    int f2 = vertex_of(g, mask(a, {"c", "1"}));
    int f3 = vertex_of(g, mask(a, {"e", "1"}));
    int f4 = vertex_of(g, mask(a, {"f", "1"}));
    int f5 = vertex_of(g, mask(a, {"a", "c", "e", "1"}));
    int f6 = vertex_of(g, mask(a, {"b", "c", "f", "1"}));
    int f7 = vertex_of(g, mask(a, {"d", "e", "f", "1"}));
    REQUIRE(f2 >= 0);
    REQUIRE(f7 >= 0);

    std::set<std::pair<int, int>> expect;
    auto edge = [&](int u, int v) { expect.insert(std::minmax(u, v)); };
    edge(f2, f7);
    edge(f5, f6);
    edge(f5, f7);
    edge(f6, f7);
    edge(f3, f6);
    edge(f4, f5);
    auto actual = g.edges();
    CHECK(std::set<std::pair<int, int>>(actual.begin(), actual.end()) == expect);

    GraphInvariants inv = invariants(g, a, all_filters(a));
    CHECK(inv.connected);
    CHECK(inv.diameter == 3);
    CHECK(inv.girth == 3);
    CHECK(inv.clique_number == 3);
    CHECK(inv.chromatic_number == 3);
    CHECK(inv.max_filter_count == 3);
    CHECK(inv.planar);
}

TEST_CASE("maximal partition of the example graph")
{
    auto a = load_fixture("ex31_corrected.lat");
    FilterLattice fl = all_filters(a);
    LabeledGraph g = comaximal_filter_graph(a, fl);
    auto classes = maximal_partition(fl, g);
    REQUIRE(classes.size() == 3);

    auto members = [&](const std::vector<int> &cls) {
        std::set<ElemSet> s;
        for (int v : cls)
            s.insert(g.vertex_filters[v].members);
        return s;
    };
    CHECK(members(classes[0]) == std::set<ElemSet>{mask(a, {"c", "1"}), mask(a, {"e", "1"}),
                                                   mask(a, {"a", "c", "e", "1"})});
    CHECK(members(classes[1]) ==
          std::set<ElemSet>{mask(a, {"f", "1"}), mask(a, {"b", "c", "f", "1"})});
    CHECK(members(classes[2]) == std::set<ElemSet>{mask(a, {"d", "e", "f", "1"})});
}

TEST_CASE("girth-four example is the complete bipartite four-cycle")
{
    auto a = load_fixture("ex313.lat");
    FilterLattice fl = all_filters(a);
    LabeledGraph g = comaximal_filter_graph(a, fl);
    REQUIRE(g.n == 4);
    CHECK(g.edge_count() == 4);
    GraphInvariants inv = invariants(g, a, fl);
    CHECK(inv.girth == 4);
    CHECK(inv.diameter == 2);
    CHECK(inv.clique_number == 2);
    CHECK(inv.chromatic_number == 2);
    CHECK(inv.max_filter_count == 2);
    CHECK(shape_name(g) == "C4");

    auto classes = maximal_partition(fl, g);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].size() == 2);
    CHECK(classes[1].size() == 2);
    for (const auto &cls : classes)
        for (int u : cls)
            for (int v : cls)
                CHECK(!g.adjacent(u, v));
}

TEST_CASE("ten-element example: single comaximal edge inside the zero-divisor graph")
{
    auto a = load_fixture("ex38.lat");
    LabeledGraph g = comaximal_filter_graph(a);
    REQUIRE(g.n == 2);
    CHECK(g.edge_count() == 1);

    LabeledGraph zd = zero_divisor_graph(a, false);
    CHECK(zd.n == 8); // a..h, everything except 0 and 1
    std::set<Elem> verts(zd.vertex_elements.begin(), zd.vertex_elements.end());
    for (const char *name : {"a", "b", "c", "d", "e", "f", "g", "h"})
        CHECK(verts.count(elem(a, name)) == 1);

    // edge scan of the multiplication table is the oracle for the edge set
    int expected_edges = 0;
    for (Elem x = 1; x < a.size(); ++x)
        for (Elem y = x + 1; y < a.size(); ++y)
            if (a.mult(x, y) == 0)
                ++expected_edges;
    CHECK(zd.edge_count() == expected_edges);
    CHECK(expected_edges == 12);

    auto embedding = embeds_as_subgraph(g, zd);
    REQUIRE(embedding);

    // the idempotent-generator images h and b are adjacent in the
    // zero-divisor graph (the highlighted edge)
    CHECK(a.mult(elem(a, "h"), elem(a, "b")) == 0);

    // with zero included, 0 is a vertex adjacent to every other vertex
    LabeledGraph zd0 = zero_divisor_graph(a, true);
    CHECK(zd0.n == 9);
    int zero_vertex = -1;
    for (int v = 0; v < zd0.n; ++v)
        if (zd0.vertex_elements[v] == 0)
            zero_vertex = v;
    REQUIRE(zero_vertex >= 0);
    CHECK(zd0.degree(zero_vertex) == 8);
}

TEST_CASE("zero-divisor graph of the two-element chain")
{
    auto a = load_fixture("size2.lat");
    LabeledGraph zd = zero_divisor_graph(a, true);
    REQUIRE(zd.n == 1);
    CHECK(zd.vertex_elements[0] == 0);
    CHECK(zd.edge_count() == 0);
    CHECK(zero_divisor_graph(a, false).n == 0);
}

TEST_CASE("zero-divisor edges of the eight-element example match the table scan")
{
    auto a = load_fixture("ex31_corrected.lat");
    LabeledGraph zd = zero_divisor_graph(a, false);
    std::set<std::pair<Elem, Elem>> expect;
    for (Elem x = 1; x < a.size(); ++x)
        for (Elem y = x + 1; y < a.size(); ++y)
            if (a.mult(x, y) == 0)
                expect.insert({x, y});
    std::set<std::pair<Elem, Elem>> actual;
    for (auto [u, v] : zd.edges())
        actual.insert(std::minmax(zd.vertex_elements[u], zd.vertex_elements[v]));
    CHECK(actual == expect);
    // pairs named with the example
    CHECK(expect.count({elem(a, "a"), elem(a, "b")}) == 1);
    CHECK(expect.count({elem(a, "a"), elem(a, "d")}) == 1);
    CHECK(expect.count({elem(a, "b"), elem(a, "d")}) == 1);
    CHECK(expect.count({elem(a, "a"), elem(a, "f")}) == 1);
    CHECK(expect.count({elem(a, "b"), elem(a, "e")}) == 1);
    CHECK(expect.count({elem(a, "c"), elem(a, "d")}) == 1);
    CHECK(expect.count({elem(a, "d"), elem(a, "e")}) == 1);
}

TEST_CASE("graph isomorphism on the published pair and simple negatives")
{
    auto g1 = comaximal_filter_graph(load_fixture("ex311_g1.lat"));
    auto g2 = comaximal_filter_graph(load_fixture("ex311_g2.lat"));
    auto map = graph_isomorphic(g1, g2);
    REQUIRE(map);
    for (int u = 0; u < g1.n; ++u)
        for (int v = 0; v < g1.n; ++v)
            CHECK(g1.adjacent(u, v) == g2.adjacent((*map)[u], (*map)[v]));

    auto ex31 = comaximal_filter_graph(load_fixture("ex31_corrected.lat"));
    auto rem = comaximal_filter_graph(load_fixture("rem312.lat"));
    CHECK(graph_isomorphic(ex31, rem));

    LabeledGraph k2 = complete(2);
    LabeledGraph p3 = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(!graph_isomorphic(k2, p3));
}

TEST_CASE("subgraph embedding: null graph, triangle into triangle-free")
{
    LabeledGraph null_graph = LabeledGraph::empty(0);
    LabeledGraph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(embeds_as_subgraph(null_graph, c4));
    CHECK(embeds_as_subgraph(null_graph, null_graph));
    CHECK(!embeds_as_subgraph(complete(3), c4));
    // P3 into C4 works
    CHECK(embeds_as_subgraph(make_graph(3, {{0, 1}, {1, 2}}), c4));
}

TEST_CASE("canonical graph forms collapse relabelings and separate shapes")
{
    LabeledGraph c4a = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    LabeledGraph c4b = make_graph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
    CHECK(canonical_graph_form(c4a) == canonical_graph_form(c4b));

    LabeledGraph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(canonical_graph_form(c4a) != canonical_graph_form(p4));

    auto g1 = comaximal_filter_graph(load_fixture("ex311_g1.lat"));
    auto g2 = comaximal_filter_graph(load_fixture("ex311_g2.lat"));
    CHECK(canonical_graph_form(g1) == canonical_graph_form(g2));

    auto round = graph_from_canonical_key(canonical_graph_form(c4a));
    REQUIRE(round);
    CHECK(graph_isomorphic(*round, c4a));
}

TEST_CASE("shape names")
{
    CHECK(shape_name(complete(2)) == "K2");
    CHECK(shape_name(complete(5)) == "K5");
    CHECK(shape_name(make_graph(3, {{0, 1}, {1, 2}})) == "P3");
    CHECK(shape_name(make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})) == "C4");
    CHECK(shape_name(make_graph(4, {{0, 1}, {0, 2}, {0, 3}})) == "K1,3");
    LabeledGraph k23 = make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(shape_name(k23) == "K2,3");
}

TEST_CASE("planarity on the classical witnesses")
{
    CHECK(invariants(complete(4)).planar);
    CHECK(!invariants(complete(5)).planar);

    LabeledGraph k33 = make_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                                      {2, 3}, {2, 4}, {2, 5}});
    CHECK(!invariants(k33).planar);

    // K5 minus one edge is planar
    LabeledGraph k5e = complete(5);
    k5e.adj[3] &= ~(std::uint64_t{1} << 4);
    k5e.adj[4] &= ~(std::uint64_t{1} << 3);
    CHECK(invariants(k5e).planar);

    // Petersen graph: cubic, so only the K3,3 subdivision route finds it
    LabeledGraph petersen = make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                            {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                                            {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
    CHECK(!invariants(petersen).planar);

    // planar but dense-ish: the octahedron K2,2,2
    LabeledGraph octa = complete(6);
    for (int v = 0; v < 6; v += 2) {
        octa.adj[v] &= ~(std::uint64_t{1} << (v + 1));
        octa.adj[v + 1] &= ~(std::uint64_t{1} << v);
    }
    CHECK(invariants(octa).planar);
}

TEST_CASE("invariant edge cases: null, singleton, disconnected")
{
    LabeledGraph null_graph = LabeledGraph::empty(0);
    GraphInvariants inv0 = invariants(null_graph);
    CHECK(inv0.vertex_count == 0);
    CHECK(inv0.connected);
    CHECK(!inv0.girth);
    CHECK(inv0.clique_number == 0);
    CHECK(inv0.chromatic_number == 0);

    LabeledGraph one = LabeledGraph::empty(1);
    one.labels[0] = "v";
    GraphInvariants inv1 = invariants(one);
    CHECK(inv1.connected);
    CHECK(inv1.diameter == 0);
    CHECK(!inv1.girth);
    CHECK(inv1.clique_number == 1);
    CHECK(inv1.chromatic_number == 1);

    LabeledGraph two = LabeledGraph::empty(2);
    two.labels = {"u", "v"};
    GraphInvariants inv2 = invariants(two);
    CHECK(!inv2.connected);
    CHECK(!inv2.diameter);

    // single edge: K2 invariants
    LabeledGraph k2 = complete(2);
    GraphInvariants invk2 = invariants(k2);
    CHECK(invk2.diameter == 1);
    CHECK(!invk2.girth);
    CHECK(invk2.clique_number == 2);
    CHECK(invk2.chromatic_number == 2);
}
