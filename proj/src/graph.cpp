#include "pebbling/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "pebbling/error.hpp"

namespace pebbling {

Graph Graph::from_edge_list(std::string name, std::vector<std::string> labels,
                            const std::vector<std::pair<std::string, std::string>>& edges) {
    Graph g;
    g.name_ = std::move(name);
    if (labels.empty()) throw Error(ErrorKind::InvalidParameter, "graph has no vertices");
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) throw Error(ErrorKind::InvalidParameter, "empty vertex label");
        if (!g.index_.emplace(labels[i], i).second)
            throw Error(ErrorKind::DuplicateLabel, labels[i]);
    }
    g.labels_ = std::move(labels);
    g.adjacency_.resize(g.labels_.size());

    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [a, b] : edges) {
        VertexId u = g.id(a);
        VertexId v = g.id(b);
        if (u == v) throw Error(ErrorKind::SelfLoop, a);
        if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
            throw Error(ErrorKind::DuplicateEdge, a + " " + b);
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
        g.edges_.emplace_back(u, v);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    if (!is_connected(g)) throw Error(ErrorKind::Disconnected, g.name_);
    return g;
}

std::optional<VertexId> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId Graph::id(std::string_view label) const {
    auto v = find(label);
    if (!v) throw Error(ErrorKind::UnknownLabel, std::string(label));
    return *v;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::operator==(const Graph& other) const {
    return name_ == other.name_ && labels_ == other.labels_ && edges_ == other.edges_;
}

std::vector<int> distances_from(const Graph& g, VertexId source, const std::vector<VertexId>& removed) {
    std::vector<int> dist(g.vertex_count(), kUnreachable);
    std::vector<char> blocked(g.vertex_count(), 0);
    for (VertexId v : removed) blocked[v] = 1;
    if (blocked[source]) return dist;
    dist[source] = 0;
    std::deque<VertexId> queue{source};
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (blocked[w] || dist[w] != kUnreachable) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    auto dist = distances_from(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

int distance(const Graph& g, VertexId u, VertexId v) { return distances_from(g, u)[v]; }

int eccentricity(const Graph& g, VertexId v) {
    auto dist = distances_from(g, v);
    return *std::max_element(dist.begin(), dist.end());
}

int diameter(const Graph& g) {
    int best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, eccentricity(g, v));
    return best;
}

std::vector<VertexId> neighborhood_ring(const Graph& g, VertexId r, int j) {
    auto dist = distances_from(g, r);
    int e = *std::max_element(dist.begin(), dist.end());
    if (j < 0 || j > e)
        throw Error(ErrorKind::RingIndexOutOfRange,
                    "ring " + std::to_string(j) + " of " + g.label(r) + " (eccentricity " + std::to_string(e) + ")");
    std::vector<VertexId> ring;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (dist[v] == j) ring.push_back(v);
    return ring;
}

std::vector<std::size_t> ring_sizes(const Graph& g, VertexId r) {
    auto dist = distances_from(g, r);
    int e = *std::max_element(dist.begin(), dist.end());
    std::vector<std::size_t> sizes(static_cast<std::size_t>(e) + 1, 0);
    for (int d : dist) ++sizes[static_cast<std::size_t>(d)];
    return sizes;
}

std::vector<VertexId> peripheral(const Graph& g, VertexId r) {
    return neighborhood_ring(g, r, eccentricity(g, r));
}

std::optional<int> distance_avoiding(const Graph& g, VertexId u, VertexId v, const std::vector<VertexId>& removed) {
    int d = distances_from(g, u, removed)[v];
    if (d == kUnreachable) return std::nullopt;
    return d;
}

namespace {

void check_not_removed(const Graph& g, VertexId v, const std::vector<VertexId>& removed) {
    if (std::find(removed.begin(), removed.end(), v) != removed.end())
        throw Error(ErrorKind::InvalidParameter, "endpoint " + g.label(v) + " is in the removed set");
}

} // namespace

std::vector<Path> all_shortest_paths_avoiding(const Graph& g, VertexId u, VertexId v,
                                              const std::vector<VertexId>& removed, std::size_t limit) {
    check_not_removed(g, u, removed);
    check_not_removed(g, v, removed);
    auto to_v = distances_from(g, v, removed);
    if (to_v[u] == kUnreachable)
        throw Error(ErrorKind::NoPath, g.label(u) + " to " + g.label(v));

    // walk forward along vertices one step closer to v; neighbours are sorted so output is lexicographic
    std::vector<Path> out;
    Path path{u};
    auto extend = [&](auto&& self) -> void {
        VertexId x = path.back();
        if (x == v) {
            if (out.size() >= limit)
                throw Error(ErrorKind::PathLimitExceeded, "more than " + std::to_string(limit) + " shortest paths");
            out.push_back(path);
            return;
        }
        for (VertexId w : g.neighbors(x)) {
            if (to_v[w] != kUnreachable && to_v[w] == to_v[x] - 1) {
                path.push_back(w);
                self(self);
                path.pop_back();
            }
        }
    };
    extend(extend);
    return out;
}

std::vector<Path> simple_paths_avoiding(const Graph& g, VertexId u, VertexId v,
                                        const std::vector<VertexId>& removed, int max_length, std::size_t limit) {
    check_not_removed(g, u, removed);
    check_not_removed(g, v, removed);
    auto to_v = distances_from(g, v, removed);
    std::vector<char> used(g.vertex_count(), 0);
    for (VertexId x : removed) used[x] = 1;
    std::vector<Path> out;
    if (to_v[u] == kUnreachable) return out;
    Path path{u};
    used[u] = 1;
    auto extend = [&](auto&& self) -> void {
        VertexId x = path.back();
        if (x == v) {
            if (out.size() >= limit)
                throw Error(ErrorKind::PathLimitExceeded, "more than " + std::to_string(limit) + " paths");
            out.push_back(path);
            return;
        }
        int steps = static_cast<int>(path.size()) - 1;
        for (VertexId w : g.neighbors(x)) {
            if (used[w] || to_v[w] == kUnreachable || steps + 1 + to_v[w] > max_length) continue;
            used[w] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[w] = 0;
        }
    };
    extend(extend);
    return out;
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> edges;
    bool have_name = false, have_vertices = false;
    int line_no = 0;
    auto fail = [&](const std::string& what) {
        throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string keyword;
        if (!(words >> keyword)) continue;
        std::vector<std::string> args;
        for (std::string w; words >> w;) args.push_back(w);
        if (keyword == "graph") {
            if (have_name || args.size() != 1) fail("expected a single 'graph <name>' line");
            name = args[0];
            have_name = true;
        } else if (keyword == "vertices") {
            if (!have_name || have_vertices || args.empty()) fail("expected 'vertices' after 'graph'");
            labels = args;
            have_vertices = true;
        } else if (keyword == "edge") {
            if (!have_vertices || args.size() != 2) fail("expected 'edge <a> <b>' after 'vertices'");
            edges.emplace_back(args[0], args[1]);
        } else {
            fail("unknown keyword '" + keyword + "'");
        }
    }
    if (!have_vertices) throw Error(ErrorKind::SyntaxError, "missing 'graph' or 'vertices' line");
    return Graph::from_edge_list(name, labels, edges);
}

std::string serialize_graph(const Graph& g) {
    std::string out = "graph " + g.name() + "\nvertices";
    for (const auto& label : g.labels()) out += " " + label;
    out += "\n";
    for (const auto& [u, v] : g.edges()) out += "edge " + g.label(u) + " " + g.label(v) + "\n";
    return out;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

} // namespace pebbling
