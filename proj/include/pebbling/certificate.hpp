#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pebbling/graph.hpp"
#include "pebbling/rational.hpp"

namespace pebbling {

using GraphPtr = std::shared_ptr<const Graph>;

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);

// Rooted subtree with weights. Construction does not enforce the strategy
// laws; validate_strategy reports every breach.
class Strategy {
public:
    Strategy(GraphPtr graph, VertexId root);

    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    VertexId root() const { return root_; }

    // Adds child under parent. Throws InvalidCertificate if child already has a parent or is the root.
    void add_edge(VertexId parent, VertexId child);
    void set_weight(VertexId v, Rational w);

    bool contains(VertexId v) const; // root or has a parent
    VertexId parent(VertexId v) const { return parent_.at(v); } // kNoVertex for root / outside
    Rational weight(VertexId v) const { return weight_.at(v); }
    bool has_weight_entry(VertexId v) const { return weighted_.at(v) != 0; }

    // tree vertices including root, ascending id
    std::vector<VertexId> vertices() const;
    std::vector<VertexId> children(VertexId v) const;
    std::size_t size() const;

    bool operator==(const Strategy& other) const;

private:
    GraphPtr graph_;
    VertexId root_;
    std::vector<VertexId> parent_;
    std::vector<Rational> weight_;
    std::vector<char> weighted_;
};

class Certificate {
public:
    Certificate(GraphPtr graph, VertexId root, std::vector<Strategy> strategies = {});

    const Graph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    VertexId root() const { return root_; }
    const std::vector<Strategy>& strategies() const { return strategies_; }
    std::vector<Strategy>& strategies() { return strategies_; }
    void add(Strategy s) { strategies_.push_back(std::move(s)); }

    // name written on the "graph" line; defaults to the graph's own name
    const std::string& graph_reference() const { return graph_reference_; }
    void set_graph_reference(std::string ref) { graph_reference_ = std::move(ref); }

    bool operator==(const Certificate& other) const;

private:
    GraphPtr graph_;
    VertexId root_;
    std::vector<Strategy> strategies_;
    std::string graph_reference_;
};

// Pebble counts per vertex.
struct Configuration {
    std::vector<int> counts;

    explicit Configuration(std::size_t n = 0) : counts(n, 0) {}
    int total() const;
    bool operator==(const Configuration&) const = default;
};

enum class Rule {
    TooSmall,        // fewer than two tree vertices
    RootWeight,      // non-zero weight on the root
    WeightOffTree,   // non-zero weight on a vertex outside the tree
    NegativeWeight,
    NonGraphEdge,    // tree edge that is not a graph edge
    NotATree,        // parent chain does not reach the root
    HalvingLaw,      // parent weight < 2 x child weight
    RootMismatch,    // strategy root differs from certificate root
    GraphMismatch,   // strategy built on another graph
    Empty,           // certificate with no strategies
};

std::string_view to_string(Rule rule);

struct Violation {
    Rule rule;
    std::size_t strategy = 0;
    VertexId vertex = kNoVertex;
    VertexId parent = kNoVertex;
    std::string message;
};

std::vector<Violation> validate_strategy(const Strategy& s);
std::vector<Violation> validate_certificate(const Certificate& c);

Rational total_weight(const Strategy& s);
Rational total_weight(const Certificate& c);
Rational combined_weight(const Certificate& c, VertexId v); // throws RootHasNoWeight
// indexed by vertex; root entry is 0
std::vector<Rational> combined_weights(const Certificate& c);
Rational min_weight(const Certificate& c);
Rational wfl_ratio(const Certificate& c); // throws ZeroMinWeight
std::int64_t pebbling_upper_bound(const Certificate& c);

struct SurplusReport {
    std::int64_t n_minus_1 = 0;
    Rational omega_min;
    std::vector<Rational> per_vertex_surplus; // (ω_Τ(v) - ω_min) / ω_min, root entry 0
    Rational lambda;
};
SurplusReport surplus_decomposition(const Certificate& c);

Rational config_weight(const Strategy& s, const Configuration& config);

Certificate scale(const Certificate& c, const Rational& factor);

// Resolves the name on a certificate's "graph" line.
using GraphResolver = std::function<GraphPtr(std::string_view)>;
// family names first, then a graph file relative to base_dir
GraphResolver default_graph_resolver(std::string base_dir = ".");

Certificate parse_certificate(std::string_view text, const GraphResolver& resolve);
// Parse against a known graph; GraphMismatch if the header names a different graph.
Certificate parse_certificate(std::string_view text, GraphPtr graph);
std::string serialize_certificate(const Certificate& c);
Certificate load_certificate_file(const std::string& path, GraphPtr graph = nullptr);

// Builds a strategy from a listing of tree vertices with weights, attaching each
// vertex to the earliest listed (or root) neighbour whose weight is at least twice its own.
Strategy strategy_from_listing(GraphPtr graph, VertexId root, const std::vector<VertexId>& vertices,
                               const std::vector<Rational>& weights);

} // namespace pebbling
