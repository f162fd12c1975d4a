#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "pebbling/error.hpp"
#include "pebbling/families.hpp"

using namespace pebbling;

namespace {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

EdgeSet edge_set(const Graph& g) {
    EdgeSet out;
    for (auto [a, b] : g.edges()) {
        std::string x = g.label(a), y = g.label(b);
        if (y < x) std::swap(x, y);
        out.insert({x, y});
    }
    return out;
}

std::set<std::string> labels(const Graph& g, const std::vector<VertexId>& vs) {
    std::set<std::string> out;
    for (VertexId v : vs) out.insert(g.label(v));
    return out;
}

} // namespace

TEST_CASE("petersen") {
    Graph g = petersen().graph;
    CHECK(g.vertex_count() == 10);
    for (VertexId v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
    auto fw = oracle::floyd_warshall(g);
    int diam = 0;
    for (auto& row : fw)
        for (int d : row) diam = std::max(diam, d);
    CHECK(diam == 2);
    CHECK(diameter(g) == 2);
}

TEST_CASE("flower(3) edge set") {
    // written out by hand: spokes, the v triangle, and the x/y 6-cycle
    EdgeSet want;
    auto add = [&](std::string a, std::string b) {
        if (b < a) std::swap(a, b);
        want.insert({a, b});
    };
    for (const char* i : {"-1", "0", "1"}) {
        for (const char* a : {"v_", "x_", "y_"}) add(std::string(a) + i, std::string("z_") + i);
    }
    add("v_-1", "v_0");
    add("v_0", "v_1");
    add("v_1", "v_-1");
    add("x_-1", "x_0");
    add("x_0", "x_1");
    add("x_1", "y_-1");
    add("y_-1", "y_0");
    add("y_0", "y_1");
    add("y_1", "x_-1");
    Graph g = flower(3).graph;
    CHECK(g.vertex_count() == 12);
    CHECK(edge_set(g) == want);
}

TEST_CASE("flower sizes") {
    for (int m = 3; m <= 15; m += 2) {
        Graph g = flower(m).graph;
        CHECK(g.vertex_count() == static_cast<std::size_t>(4 * m));
        CHECK(diameter(g) == (m - 1) / 2 + 2);
        CHECK(is_cubic(g));
    }
    Graph j5 = flower(5).graph;
    CHECK(j5.vertex_count() == 20);
    CHECK(diameter(j5) == 4);
    for (int bad : {4, 1, 2, -3}) {
        CAPTURE(bad);
        try {
            flower(bad);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::InvalidParameter);
        }
    }
}

TEST_CASE("snarks are cubic and bridgeless") {
    for (const FamilyGraph& fg : {petersen(), flower(3), flower(5), blanusa1(), blanusa2()}) {
        CAPTURE(fg.graph.name());
        CHECK(is_cubic(fg.graph));
        CHECK(is_bridgeless(fg.graph));
        CHECK_FALSE(fg.target_classes.empty());
        for (const auto& t : fg.target_classes) CHECK(fg.graph.find(t).has_value());
    }
    CHECK_FALSE(is_bridgeless(oracle::path_graph(3)));
}

TEST_CASE("blanusa graphs") {
    Graph b2 = blanusa2().graph;
    Graph b1 = blanusa1().graph;
    CHECK(b2.vertex_count() == 18);
    CHECK(b1.vertex_count() == 18);
    CHECK(b2.edge_count() == 27);
    CHECK(b1.edge_count() == 27);
    CHECK(diameter(b2) == 4);
    CHECK(labels(b2, b2.neighbors(b2.id("x_3"))) == std::set<std::string>{"z_3", "x_1", "x_5"});
    CHECK(labels(b1, peripheral(b1, b1.id("a_1"))) == std::set<std::string>{"e_1", "e_2", "e_1'", "e_2'"});
}

TEST_CASE("cubes") {
    Graph q1 = cube(1).graph;
    CHECK(q1.vertex_count() == 2);
    CHECK(q1.edge_count() == 1);

    Graph q3 = cube(3).graph;
    CHECK(q3.vertex_count() == 8);
    CHECK(diameter(q3) == 3);
    auto fw = oracle::floyd_warshall(q3);
    const VertexId origin = q3.id("000");
    std::vector<std::size_t> rings(4, 0);
    for (VertexId v = 0; v < 8; ++v) ++rings[fw[origin][v]];
    CHECK(rings == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(ring_sizes(q3, origin) == rings);

    Graph q4 = cube(4).graph;
    CHECK(labels(q4, peripheral(q4, q4.id("0000"))) == std::set<std::string>{"1111"});
    for (int d = 1; d <= 6; ++d) {
        Graph q = cube(d).graph;
        auto sizes = ring_sizes(q, 0);
        for (int j = 0; j <= d; ++j) CHECK(sizes[j] == static_cast<std::size_t>(oracle::binomial(d, j)));
    }
}

TEST_CASE("family names") {
    CHECK(family_by_name("Petersen").graph.name() == "petersen");
    CHECK(family_by_name("b2").graph == blanusa2().graph);
    CHECK(family_by_name("blanusa-1").graph == blanusa1().graph);
    CHECK(family_by_name("J7").graph == flower(7).graph);
    CHECK(family_by_name("flower-9").graph == flower(9).graph);
    CHECK(family_by_name("Q3").graph == cube(3).graph);
    CHECK(family_by_name("cube-5").graph.vertex_count() == 32);
    CHECK(is_family_name("flower-4"));
    CHECK_FALSE(is_family_name("graph.txt"));
    try {
        family_by_name("dodecahedron");
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownLabel);
    }
}
