#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pebbling {

using VertexId = std::size_t;
using Path = std::vector<VertexId>;

// Immutable simple connected graph with labelled vertices.
class Graph {
public:
    static Graph from_edge_list(std::string name, std::vector<std::string> labels,
                                const std::vector<std::pair<std::string, std::string>>& edges);

    const std::string& name() const { return name_; }
    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& label(VertexId v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<VertexId> find(std::string_view label) const;
    VertexId id(std::string_view label) const; // throws UnknownLabel

    // sorted ascending
    const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
    bool adjacent(VertexId u, VertexId v) const;

    // in the order they were given
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    bool operator==(const Graph& other) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

inline constexpr int kUnreachable = -1;

// BFS distances from source in G - removed; kUnreachable where no path exists.
std::vector<int> distances_from(const Graph& g, VertexId source, const std::vector<VertexId>& removed = {});

int distance(const Graph& g, VertexId u, VertexId v);
int eccentricity(const Graph& g, VertexId v);
int diameter(const Graph& g);

std::vector<VertexId> neighborhood_ring(const Graph& g, VertexId r, int j);
// |N_0(r)|, |N_1(r)|, ..., |N_e(r)|
std::vector<std::size_t> ring_sizes(const Graph& g, VertexId r);
std::vector<VertexId> peripheral(const Graph& g, VertexId r);

std::optional<int> distance_avoiding(const Graph& g, VertexId u, VertexId v, const std::vector<VertexId>& removed);

inline constexpr std::size_t kDefaultPathLimit = 100000;

// Every shortest u-v path in G - removed, lexicographic by vertex id sequence.
std::vector<Path> all_shortest_paths_avoiding(const Graph& g, VertexId u, VertexId v,
                                              const std::vector<VertexId>& removed,
                                              std::size_t limit = kDefaultPathLimit);

// Every simple u-v path of at most max_length edges in G - removed, lexicographic.
std::vector<Path> simple_paths_avoiding(const Graph& g, VertexId u, VertexId v,
                                        const std::vector<VertexId>& removed, int max_length,
                                        std::size_t limit = kDefaultPathLimit);

bool is_connected(const Graph& g);

// Graph text format.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
Graph load_graph_file(const std::string& path);

} // namespace pebbling
