#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pebbling/graph.hpp"
#include "pebbling/rational.hpp"

namespace pebbling {

struct BasicBounds {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
};

// max{n, 2^D} <= pi(G) <= (n - D)(2^D - 1) + 1
BasicBounds basic_bounds(const Graph& g);
// max{n, 2^e(r)} <= pi(G, r)
std::int64_t target_basic_lower(const Graph& g, VertexId r);

std::vector<int> surplus_index_set(const Graph& g, VertexId r);
std::vector<int> no_surplus_index_set(const Graph& g, VertexId r);

struct BoundReport {
    VertexId target = 0;
    int eccentricity = 0;
    std::vector<std::size_t> ring_sizes;
    std::int64_t basic_pi_lower = 0;
    std::int64_t basic_pi_upper = 0;
    std::vector<int> i_sur;
    std::vector<int> i_no;
    Rational lambda_lower_eq2;
    Rational lambda_lower_eq3;
};

// Both forms are computed; InternalInconsistency if they differ.
BoundReport bound_report(const Graph& g, VertexId r);
Rational theorem1_lower_bound(const Graph& g, VertexId r);
Rational theorem1_graph_bound(const Graph& g, const std::optional<std::vector<VertexId>>& targets = std::nullopt);

Rational cube_lower_bound(int d);
std::int64_t binomial(int n, int k);

} // namespace pebbling
