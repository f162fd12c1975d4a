#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pebbling/certificate.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/rational.hpp"

namespace pebbling {

struct HeuristicOptions {
    std::size_t path_combination_cap = 100000; // exhaustive trunk search up to this many combinations
    int extra_path_length = 2;                 // path replacement radius L
    bool enable_weight_reduction = true;
    bool enable_path_replacement = true;
    int refine_passes = 10;
};

using DecisionLog = std::vector<std::string>;

struct MinWeightFormula {
    Rational omega_min;
    std::vector<VertexId> p_min;
};

// min over peripheral u of sum_j 2^(e-1-d_{G-r}(v_j, u))
MinWeightFormula min_weight_formula(const Graph& g, VertexId r);

// Chosen shortest paths, one list per neighbour of r (neighbours ascending).
struct TrunkSelection {
    std::vector<VertexId> neighbors;
    std::vector<std::vector<Path>> paths;
    bool exhaustive = true;
    std::size_t combinations = 0;
};

// Tree spanned by paths starting at the neighbour; each vertex keeps its shallowest
// position and gets weight 2^(e-1-position).
Strategy trunk_strategy(GraphPtr g, VertexId r, const std::vector<Path>& paths);

TrunkSelection select_trunks(GraphPtr g, VertexId r, const Rational& omega_min, const HeuristicOptions& opts,
                             DecisionLog* log = nullptr);
std::vector<Strategy> build_trunks(GraphPtr g, VertexId r, const HeuristicOptions& opts, DecisionLog* log = nullptr);

// Throws CannotCover when some vertex cannot be brought to omega_min.
Certificate fill_branches(GraphPtr g, VertexId r, const std::vector<Strategy>& trunks, const Rational& omega_min,
                          DecisionLog* log = nullptr);

// Lowers u to new_weight in s, then each of up to `ancestors` ancestors to twice its heaviest child.
Strategy reduce_weight(const Strategy& s, VertexId u, const Rational& new_weight, int ancestors);

// The state refine works on: trunk choice, trunk weights (possibly reduced) and the filled certificate.
struct Construction {
    TrunkSelection selection;
    std::vector<Strategy> trunks;
    Certificate certificate;
    Rational lambda;
};

Construction construct(GraphPtr g, VertexId r, const TrunkSelection& selection, const Rational& omega_min,
                       DecisionLog* log = nullptr);

// Weight-reduction and path-replacement passes; accepts only strict decreases of lambda.
Construction refine(GraphPtr g, VertexId r, Construction start, const Rational& omega_min,
                    const HeuristicOptions& opts, DecisionLog* log = nullptr);

struct HeuristicReport {
    Certificate certificate;
    Rational omega_min_formula;
    std::vector<VertexId> p_min;
    Rational lambda;
    SurplusReport surplus;
    DecisionLog decisions;
    bool exhaustive_trunks = true;
};

HeuristicReport run_heuristic(GraphPtr g, VertexId r, const HeuristicOptions& opts = {});

// Certificates reference for the snark families.
enum class ReferenceFamily { Petersen, Flower, Blanusa1, Blanusa2 };

// parameter is m for Flower (odd, >= 3), ignored otherwise. Throws UnsupportedTarget.
Certificate reference_certificate(ReferenceFamily family, int parameter, const std::string& target);

struct CubeOptions {
    std::size_t budget = 645120; // d! * 2^d at d = 7
};

// d! strategies, one per coordinate permutation of a single tight strategy.
Certificate cube_certificate(int d, const CubeOptions& opts = {});

} // namespace pebbling
