#include "pebbling/bounds.hpp"

#include <algorithm>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

std::int64_t pow2_int(int e) { return std::int64_t{1} << e; }

} // namespace

BasicBounds basic_bounds(const Graph& g) {
    const auto n = static_cast<std::int64_t>(g.vertex_count());
    const int d = diameter(g);
    return {std::max(n, pow2_int(d)), (n - d) * (pow2_int(d) - 1) + 1};
}

std::int64_t target_basic_lower(const Graph& g, VertexId r) {
    return std::max(static_cast<std::int64_t>(g.vertex_count()), pow2_int(eccentricity(g, r)));
}

std::vector<int> surplus_index_set(const Graph& g, VertexId r) {
    auto rings = ring_sizes(g, r);
    const int e = static_cast<int>(rings.size()) - 1;
    std::vector<int> out;
    for (int j = 1; j <= e - 1; ++j)
        if (pow2_int(e - j) > static_cast<std::int64_t>(rings[static_cast<std::size_t>(j)])) out.push_back(j);
    return out;
}

std::vector<int> no_surplus_index_set(const Graph& g, VertexId r) {
    auto rings = ring_sizes(g, r);
    const int e = static_cast<int>(rings.size()) - 1;
    std::vector<int> out;
    for (int j = 1; j <= e; ++j)
        if (static_cast<std::int64_t>(rings[static_cast<std::size_t>(j)]) > pow2_int(e - j)) out.push_back(j);
    return out;
}

BoundReport bound_report(const Graph& g, VertexId r) {
    BoundReport rep;
    rep.target = r;
    rep.ring_sizes = ring_sizes(g, r);
    rep.eccentricity = static_cast<int>(rep.ring_sizes.size()) - 1;
    auto basic = basic_bounds(g);
    rep.basic_pi_lower = basic.lower;
    rep.basic_pi_upper = basic.upper;
    rep.i_sur = surplus_index_set(g, r);
    rep.i_no = no_surplus_index_set(g, r);

    const int e = rep.eccentricity;
    auto ring = [&](int j) { return static_cast<std::int64_t>(rep.ring_sizes[static_cast<std::size_t>(j)]); };
    std::int64_t eq2 = static_cast<std::int64_t>(g.vertex_count()) - 1;
    for (int j : rep.i_sur) eq2 += pow2_int(e - j) - ring(j);
    std::int64_t eq3 = pow2_int(e) - 1;
    for (int j : rep.i_no) eq3 += ring(j) - pow2_int(e - j);
    rep.lambda_lower_eq2 = Rational(eq2);
    rep.lambda_lower_eq3 = Rational(eq3);
    if (eq2 != eq3)
        throw Error(ErrorKind::InternalInconsistency, "lower bound forms disagree at " + g.label(r) + ": " +
                                                          std::to_string(eq2) + " vs " + std::to_string(eq3));
    return rep;
}

Rational theorem1_lower_bound(const Graph& g, VertexId r) { return bound_report(g, r).lambda_lower_eq2; }

Rational theorem1_graph_bound(const Graph& g, const std::optional<std::vector<VertexId>>& targets) {
    std::vector<VertexId> all;
    if (!targets)
        for (VertexId v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    const auto& list = targets ? *targets : all;
    if (list.empty()) throw Error(ErrorKind::InvalidParameter, "no targets");
    Rational best = theorem1_lower_bound(g, list.front());
    for (VertexId r : list) best = std::max(best, theorem1_lower_bound(g, r));
    return best;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

Rational cube_lower_bound(int d) {
    if (d < 1) throw Error(ErrorKind::InvalidParameter, "cube dimension must be >= 1");
    std::int64_t sum = 0;
    for (int j = 1; j <= d; ++j) sum += std::max(binomial(d, j), pow2_int(d - j));
    return Rational(sum);
}

} // namespace pebbling
