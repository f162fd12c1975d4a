#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pebbling/bounds.hpp"
#include "pebbling/families.hpp"

using namespace pebbling;

namespace {

// sum over rings j >= 1 of max{|N_j|, 2^(e-j)}, with rings from Floyd-Warshall
Rational ring_max_sum(const Graph& g, VertexId r) {
    auto fw = oracle::floyd_warshall(g);
    int e = 0;
    for (int d : fw[r]) e = std::max(e, d);
    std::vector<long long> ring(e + 1, 0);
    for (int d : fw[r]) ++ring[d];
    long long sum = 0;
    for (int j = 1; j <= e; ++j) sum += std::max(ring[j], 1LL << (e - j));
    return Rational(sum);
}

} // namespace

TEST_CASE("basic bounds") {
    auto p = basic_bounds(petersen().graph);
    CHECK(p.lower == 10);
    CHECK(p.upper == 25);
    auto k2 = basic_bounds(oracle::path_graph(2));
    CHECK(k2.lower == 2);
    CHECK(k2.upper == 2);
    auto j5 = basic_bounds(flower(5).graph);
    CHECK(j5.lower == 20);
    CHECK(j5.upper == 241);
    Graph p3 = oracle::path_graph(3);
    CHECK(target_basic_lower(p3, 0) == 4);
    CHECK(target_basic_lower(p3, 1) == 3);
}

TEST_CASE("index sets") {
    Graph b2 = blanusa2().graph;
    for (VertexId r = 0; r < b2.vertex_count(); ++r) CHECK(surplus_index_set(b2, r) == std::vector<int>{1});
    for (int m = 7; m <= 15; m += 2) {
        const int k = (m - 1) / 2;
        Graph j = flower(m).graph;
        for (VertexId r = 0; r < j.vertex_count(); ++r)
            CHECK(no_surplus_index_set(j, r) == std::vector<int>{k, k + 1, k + 2});
    }
    Graph p = petersen().graph;
    for (VertexId r = 0; r < 10; ++r) CHECK(surplus_index_set(p, r).empty());
}

TEST_CASE("ring bound on the snarks") {
    Graph b2 = blanusa2().graph;
    for (VertexId r = 0; r < b2.vertex_count(); ++r) CHECK(theorem1_lower_bound(b2, r) == Rational(22));
    Graph j3 = flower(3).graph;
    for (VertexId r = 0; r < j3.vertex_count(); ++r) CHECK(theorem1_lower_bound(j3, r) == Rational(12));
    Graph j5 = flower(5).graph;
    for (VertexId r = 0; r < j5.vertex_count(); ++r) CHECK(theorem1_lower_bound(j5, r) == Rational(24));
    for (int m = 7; m <= 15; m += 2) {
        const int k = (m - 1) / 2;
        Graph j = flower(m).graph;
        for (VertexId r = 0; r < j.vertex_count(); ++r)
            CHECK(theorem1_lower_bound(j, r) == pow2(k + 2) + Rational(10));
    }
}

TEST_CASE("ring graph bound") {
    CHECK(theorem1_graph_bound(blanusa2().graph) == Rational(22));
    CHECK(theorem1_graph_bound(petersen().graph) == Rational(9));
    Graph q3 = cube(3).graph;
    CHECK(theorem1_graph_bound(q3, std::vector<VertexId>{q3.id("000")}) == Rational(8));
}

TEST_CASE("cube lower bound") {
    CHECK(cube_lower_bound(1) == Rational(1));
    CHECK(cube_lower_bound(3) == Rational(8));
    CHECK(cube_lower_bound(4) == Rational(19));
    for (int d = 1; d <= 8; ++d) {
        long long sum = 0;
        for (int j = 1; j <= d; ++j) sum += std::max(oracle::binomial(d, j), 1LL << (d - j));
        CHECK(cube_lower_bound(d) == Rational(sum));
        if (d <= 6) CHECK(theorem1_lower_bound(cube(d).graph, 0) == Rational(sum));
    }
}

TEST_CASE("surplus and deficit forms of the ring bound agree with the ring oracle") {
    std::vector<Graph> graphs{petersen().graph, blanusa1().graph, blanusa2().graph, cube(5).graph};
    for (int m = 3; m <= 11; m += 2) graphs.push_back(flower(m).graph);
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        const int n = std::uniform_int_distribution<int>(2, 12)(rng);
        graphs.push_back(oracle::random_connected(rng, n, std::uniform_real_distribution<double>(0.0, 0.5)(rng)));
    }
    for (const Graph& g : graphs) {
        for (VertexId r = 0; r < g.vertex_count(); ++r) {
            BoundReport b = bound_report(g, r);
            const Rational want = ring_max_sum(g, r);
            CHECK(b.lambda_lower_eq2 == want);
            CHECK(b.lambda_lower_eq3 == want);
            CHECK(b.basic_pi_lower <= b.basic_pi_upper);
        }
    }
}
