#include <algorithm>
#include <bit>
#include <numeric>

#include "pebbling/bounds.hpp"
#include "pebbling/error.hpp"
#include "pebbling/families.hpp"
#include "pebbling/heuristic.hpp"

namespace pebbling {

namespace {

// Vertex sets below are masks over label positions: bit i set means character i is '1'.
VertexId vertex_of(unsigned mask, int d) {
    VertexId v = 0;
    for (int i = 0; i < d; ++i)
        if (mask >> i & 1) v |= VertexId{1} << (d - 1 - i);
    return v;
}

struct Node {
    unsigned mask;
    unsigned parent; // mask of the parent; 0 is the root
    Rational weight;
};

// One strategy reaching every ring with total weight max{2^(d-j), C(d,j)}.
std::vector<Node> base_strategy(int d) {
    std::vector<Node> nodes;
    int j = 1;
    unsigned chain = 0;
    // ring 1 always gets a single vertex of weight 2^(d-1); the chain continues while rings are small
    while (j <= d && (j == 1 || pow2(d - j) > Rational(binomial(d, j)))) {
        unsigned next = chain | 1u << (j - 1);
        nodes.push_back({next, chain, pow2(d - j)});
        chain = next;
        ++j;
    }
    for (; j <= d; ++j) {
        const std::int64_t ring = binomial(d, j);
        const std::int64_t unit = std::int64_t{1} << (d - j);
        if (ring < unit) throw Error(ErrorKind::InternalInconsistency, "cube ring shrinks below 2^(d-j)");
        const std::int64_t full = ring / unit;
        const std::int64_t rest = ring % unit;

        std::vector<unsigned> parents;
        for (const Node& n : nodes)
            if (std::popcount(n.mask) == j - 1 && n.weight == Rational(2 * unit)) parents.push_back(n.mask);
        std::sort(parents.begin(), parents.end());

        std::vector<std::pair<unsigned, unsigned>> slots; // (child, parent)
        for (unsigned m = 0; m < (1u << d); ++m) {
            if (std::popcount(m) != j) continue;
            for (unsigned p : parents)
                if ((m & p) == p) {
                    slots.emplace_back(m, p);
                    break;
                }
        }
        const std::size_t need = static_cast<std::size_t>(full + (rest > 0 ? 1 : 0));
        if (slots.size() < need)
            throw Error(ErrorKind::InternalInconsistency, "cube ring " + std::to_string(j) + " has too few reachable vertices");
        for (std::int64_t i = 0; i < full; ++i)
            nodes.push_back({slots[static_cast<std::size_t>(i)].first, slots[static_cast<std::size_t>(i)].second, Rational(unit)});
        if (rest > 0)
            nodes.push_back({slots[static_cast<std::size_t>(full)].first, slots[static_cast<std::size_t>(full)].second, Rational(rest)});
    }
    return nodes;
}

unsigned permute(unsigned mask, const std::vector<int>& perm) {
    unsigned out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (mask >> i & 1) out |= 1u << perm[i];
    return out;
}

} // namespace

Certificate cube_certificate(int d, const CubeOptions& opts) {
    if (d < 2) throw Error(ErrorKind::InvalidParameter, "cube certificate needs d >= 2");
    if (d > 12) throw Error(ErrorKind::ResourceLimit, "cube dimension " + std::to_string(d) + " too large");
    std::size_t factorial = 1;
    for (int i = 2; i <= d; ++i) factorial *= static_cast<std::size_t>(i);
    if (factorial * (std::size_t{1} << d) > opts.budget)
        throw Error(ErrorKind::ResourceLimit, "d! * 2^d = " + std::to_string(factorial * (std::size_t{1} << d)) +
                                                  " exceeds budget " + std::to_string(opts.budget));

    auto g = std::make_shared<const Graph>(cube(d).graph);
    const auto nodes = base_strategy(d);
    Certificate cert(g, 0);
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Strategy s(g, 0);
        for (const Node& n : nodes) {
            VertexId child = vertex_of(permute(n.mask, perm), d);
            s.add_edge(vertex_of(permute(n.parent, perm), d), child);
            s.set_weight(child, n.weight);
        }
        cert.add(std::move(s));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cert;
}

} // namespace pebbling
