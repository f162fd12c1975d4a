#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pebbling/certificate.hpp"
#include "pebbling/graph.hpp"

namespace pebbling {

struct SolveLimits {
    std::uint64_t max_states = 50'000'000; // searched states per computation
    int max_total_pebbles = 64;
    std::size_t max_vertices = 14;
    std::size_t antichain_cap = 1'000'000;
    std::size_t memo_cap = 8'000'000; // memo is flushed beyond this; answers are unaffected
};

// Depth-first move search with memo and a dominance antichain of failed states.
// Reusable across configurations of the same graph and target.
class Solver {
public:
    Solver(const Graph& g, VertexId r, SolveLimits limits = {});

    // Throws BudgetExceeded when the state budget runs out.
    bool solvable(const Configuration& config);

    std::uint64_t states_visited() const { return states_; }

private:
    using State = std::string; // one byte per vertex

    bool search(State& s);
    bool dominated(const State& s) const;
    void record_failure(const State& s);

    const Graph& g_;
    VertexId r_;
    SolveLimits limits_;
    int e_ = 0;
    std::vector<int> dist_;
    std::vector<std::vector<VertexId>> moves_; // neighbours, closest to r first
    std::unordered_map<State, bool> memo_;
    std::vector<State> antichain_;
    std::uint64_t states_ = 0;
};

bool is_solvable(const Graph& g, const Configuration& config, VertexId r, const SolveLimits& limits = {});

struct ExactResult {
    int pi = 0;
    Configuration witness_unsolvable; // colex-first unsolvable configuration of size pi - 1
    bool exhaustive = true;
    std::uint64_t configurations = 0;
};

// Ascends from max{n, 2^e(r)}; jobs > 1 splits each size by the count on the last vertex.
ExactResult pebbling_number_target(const Graph& g, VertexId r, const SolveLimits& limits = {}, unsigned jobs = 1);
int pebbling_number(const Graph& g, const SolveLimits& limits = {},
                    const std::optional<std::vector<VertexId>>& targets = std::nullopt, unsigned jobs = 1);

// Colex successor over compositions; returns false after the last one.
bool next_composition_colex(std::vector<int>& counts);

struct Lemma1Options {
    bool exhaustive = true;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    std::uint64_t max_configurations = 5'000'000; // exhaustive beyond this downgrades to sampling
};

struct Lemma1Report {
    int pi = 0;
    bool exhaustive = true;
    bool downgraded = false;
    std::uint64_t configurations_checked = 0;
    std::uint64_t unsolvable_checked = 0;
    std::uint64_t violations = 0;
    Rational tightest_ratio;                  // max of config_weight / total_weight over unsolvable configurations
    std::optional<Configuration> first_violation;
    std::size_t violating_strategy = 0;
};

// Refuses invalid certificates (InvalidCertificate).
Lemma1Report lemma1_check(const Certificate& cert, const SolveLimits& limits = {}, const Lemma1Options& opts = {});

std::string format_configuration(const Graph& g, const Configuration& c);

} // namespace pebbling
