#include "pebbling/certificate.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "pebbling/error.hpp"
#include "pebbling/families.hpp"

namespace pebbling {

Strategy::Strategy(GraphPtr graph, VertexId root)
    : graph_(std::move(graph)), root_(root) {
    if (!graph_) throw Error(ErrorKind::InvalidParameter, "strategy without a graph");
    if (root >= graph_->vertex_count()) throw Error(ErrorKind::UnknownVertex, "root id out of range");
    const std::size_t n = graph_->vertex_count();
    parent_.assign(n, kNoVertex);
    weight_.assign(n, Rational(0));
    weighted_.assign(n, 0);
}

void Strategy::add_edge(VertexId parent, VertexId child) {
    const std::size_t n = graph_->vertex_count();
    if (parent >= n || child >= n) throw Error(ErrorKind::UnknownVertex, "vertex id out of range");
    if (child == root_) throw Error(ErrorKind::InvalidCertificate, "root " + graph_->label(child) + " given a parent");
    if (parent_[child] != kNoVertex)
        throw Error(ErrorKind::InvalidCertificate, graph_->label(child) + " has two parents");
    parent_[child] = parent;
}

void Strategy::set_weight(VertexId v, Rational w) {
    weight_.at(v) = w;
    weighted_.at(v) = 1;
}

bool Strategy::contains(VertexId v) const { return v == root_ || parent_.at(v) != kNoVertex; }

std::vector<VertexId> Strategy::vertices() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < parent_.size(); ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

std::vector<VertexId> Strategy::children(VertexId v) const {
    std::vector<VertexId> out;
    for (VertexId c = 0; c < parent_.size(); ++c)
        if (parent_[c] == v) out.push_back(c);
    return out;
}

std::size_t Strategy::size() const { return vertices().size(); }

bool Strategy::operator==(const Strategy& other) const {
    return (graph_ == other.graph_ || *graph_ == *other.graph_) && root_ == other.root_ &&
           parent_ == other.parent_ && weight_ == other.weight_;
}

Certificate::Certificate(GraphPtr graph, VertexId root, std::vector<Strategy> strategies)
    : graph_(std::move(graph)), root_(root), strategies_(std::move(strategies)) {
    if (!graph_) throw Error(ErrorKind::InvalidParameter, "certificate without a graph");
    if (root >= graph_->vertex_count()) throw Error(ErrorKind::UnknownVertex, "root id out of range");
    graph_reference_ = graph_->name();
}

bool Certificate::operator==(const Certificate& other) const {
    return *graph_ == *other.graph_ && root_ == other.root_ && strategies_ == other.strategies_;
}

int Configuration::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

std::string_view to_string(Rule rule) {
    switch (rule) {
    case Rule::TooSmall: return "n(T) >= 2";
    case Rule::RootWeight: return "root weight must be 0";
    case Rule::WeightOffTree: return "weight outside the tree";
    case Rule::NegativeWeight: return "negative weight";
    case Rule::NonGraphEdge: return "tree edge not in graph";
    case Rule::NotATree: return "not a tree rooted at the root";
    case Rule::HalvingLaw: return "parent weight >= 2 x child weight";
    case Rule::RootMismatch: return "strategy root differs";
    case Rule::GraphMismatch: return "strategy on another graph";
    case Rule::Empty: return "no strategies";
    }
    return "unknown";
}

std::vector<Violation> validate_strategy(const Strategy& s) {
    const Graph& g = s.graph();
    const std::size_t n = g.vertex_count();
    std::vector<Violation> out;
    auto report = [&](Rule rule, VertexId v, VertexId p, std::string msg) {
        out.push_back({rule, 0, v, p, std::move(msg)});
    };

    if (s.size() < 2) report(Rule::TooSmall, s.root(), kNoVertex, "tree has only the root");
    if (s.weight(s.root()) != Rational(0))
        report(Rule::RootWeight, s.root(), kNoVertex, "root " + g.label(s.root()) + " has weight " + to_string(s.weight(s.root())));

    // 0 unknown, 1 in progress, 2 reaches root, 3 broken
    std::vector<int> state(n, 0);
    state[s.root()] = 2;
    for (VertexId v = 0; v < n; ++v) {
        if (!s.contains(v) || state[v] != 0) continue;
        std::vector<VertexId> chain;
        VertexId x = v;
        while (x != kNoVertex && state[x] == 0) {
            state[x] = 1;
            chain.push_back(x);
            x = s.parent(x);
        }
        bool ok = x != kNoVertex && state[x] == 2;
        for (VertexId c : chain) state[c] = ok ? 2 : 3;
        if (!ok)
            report(Rule::NotATree, v, s.parent(v), g.label(v) + " does not reach the root (cycle or detached parent)");
    }

    for (VertexId v = 0; v < n; ++v) {
        Rational w = s.weight(v);
        if (w < 0) report(Rule::NegativeWeight, v, kNoVertex, g.label(v) + " has weight " + to_string(w));
        if (!s.contains(v)) {
            if (w != Rational(0)) report(Rule::WeightOffTree, v, kNoVertex, g.label(v) + " is not in the tree but has weight " + to_string(w));
            continue;
        }
        if (v == s.root()) continue;
        VertexId p = s.parent(v);
        if (!g.adjacent(p, v))
            report(Rule::NonGraphEdge, v, p, g.label(p) + "-" + g.label(v) + " is not a graph edge");
        if (p != s.root() && s.weight(p) < 2 * w)
            report(Rule::HalvingLaw, v, p,
                   g.label(p) + "-" + g.label(v) + ": " + to_string(s.weight(p)) + " < 2*" + to_string(w));
    }
    return out;
}

std::vector<Violation> validate_certificate(const Certificate& c) {
    std::vector<Violation> out;
    if (c.strategies().empty()) out.push_back({Rule::Empty, 0, kNoVertex, kNoVertex, "certificate has no strategies"});
    for (std::size_t i = 0; i < c.strategies().size(); ++i) {
        const Strategy& s = c.strategies()[i];
        if (!(*s.graph_ptr() == c.graph())) {
            out.push_back({Rule::GraphMismatch, i, kNoVertex, kNoVertex, "strategy uses graph " + s.graph().name()});
            continue;
        }
        if (s.root() != c.root())
            out.push_back({Rule::RootMismatch, i, s.root(), kNoVertex, "strategy rooted at " + c.graph().label(s.root())});
        for (Violation v : validate_strategy(s)) {
            v.strategy = i;
            out.push_back(std::move(v));
        }
    }
    return out;
}

Rational total_weight(const Strategy& s) {
    Rational sum(0);
    for (VertexId v = 0; v < s.graph().vertex_count(); ++v)
        if (v != s.root()) sum += s.weight(v);
    return sum;
}

Rational total_weight(const Certificate& c) {
    Rational sum(0);
    for (const Strategy& s : c.strategies()) sum += total_weight(s);
    return sum;
}

std::vector<Rational> combined_weights(const Certificate& c) {
    std::vector<Rational> out(c.graph().vertex_count(), Rational(0));
    for (const Strategy& s : c.strategies())
        for (VertexId v = 0; v < out.size(); ++v)
            if (v != c.root()) out[v] += s.weight(v);
    return out;
}

Rational combined_weight(const Certificate& c, VertexId v) {
    if (v == c.root()) throw Error(ErrorKind::RootHasNoWeight, c.graph().label(v));
    Rational sum(0);
    for (const Strategy& s : c.strategies()) sum += s.weight(v);
    return sum;
}

Rational min_weight(const Certificate& c) {
    auto weights = combined_weights(c);
    std::optional<Rational> best;
    for (VertexId v = 0; v < weights.size(); ++v)
        if (v != c.root() && (!best || weights[v] < *best)) best = weights[v];
    return best.value_or(Rational(0));
}

Rational wfl_ratio(const Certificate& c) {
    Rational mn = min_weight(c);
    if (mn <= 0) {
        std::string uncovered;
        auto weights = combined_weights(c);
        for (VertexId v = 0; v < weights.size(); ++v)
            if (v != c.root() && weights[v] <= 0) uncovered += " " + c.graph().label(v);
        throw Error(ErrorKind::ZeroMinWeight, "uncovered:" + uncovered);
    }
    return total_weight(c) / mn;
}

std::int64_t pebbling_upper_bound(const Certificate& c) { return floor(wfl_ratio(c)) + 1; }

SurplusReport surplus_decomposition(const Certificate& c) {
    SurplusReport report;
    report.lambda = wfl_ratio(c);
    report.omega_min = min_weight(c);
    report.n_minus_1 = static_cast<std::int64_t>(c.graph().vertex_count()) - 1;
    auto weights = combined_weights(c);
    report.per_vertex_surplus.assign(weights.size(), Rational(0));
    Rational sum(0);
    for (VertexId v = 0; v < weights.size(); ++v) {
        if (v == c.root()) continue;
        report.per_vertex_surplus[v] = (weights[v] - report.omega_min) / report.omega_min;
        sum += report.per_vertex_surplus[v];
    }
    if (Rational(report.n_minus_1) + sum != report.lambda)
        throw Error(ErrorKind::InternalInconsistency, "surplus identity does not hold");
    return report;
}

Rational config_weight(const Strategy& s, const Configuration& config) {
    Rational sum(0);
    for (VertexId v = 0; v < config.counts.size(); ++v)
        if (v != s.root() && config.counts[v] != 0) sum += s.weight(v) * Rational(config.counts[v]);
    return sum;
}

Certificate scale(const Certificate& c, const Rational& factor) {
    if (factor <= 0) throw Error(ErrorKind::InvalidParameter, "scale factor must be positive");
    Certificate out = c;
    for (Strategy& s : out.strategies())
        for (VertexId v = 0; v < c.graph().vertex_count(); ++v)
            if (s.has_weight_entry(v)) s.set_weight(v, s.weight(v) * factor);
    return out;
}

GraphResolver default_graph_resolver(std::string base_dir) {
    return [base_dir](std::string_view name) -> GraphPtr {
        if (is_family_name(name)) return std::make_shared<const Graph>(family_by_name(name).graph);
        std::filesystem::path p(name);
        if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
        if (!std::filesystem::exists(p))
            throw Error(ErrorKind::GraphMismatch, "'" + std::string(name) + "' is neither a family nor a graph file");
        return std::make_shared<const Graph>(load_graph_file(p.string()));
    };
}

namespace {

struct RawStrategy {
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::pair<std::string, std::string>> weights;
    int line = 0;
};

struct RawCertificate {
    std::string graph;
    std::string root;
    std::vector<RawStrategy> strategies;
};

RawCertificate read_raw(std::string_view text) {
    std::istringstream in{std::string(text)};
    RawCertificate raw;
    std::string line;
    int line_no = 0;
    bool header = false;
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
        if (keyword == "certificate") {
            if (header || !args.empty()) fail("unexpected 'certificate'");
            header = true;
        } else if (!header) {
            fail("file must start with 'certificate'");
        } else if (keyword == "graph") {
            if (!raw.graph.empty() || args.size() != 1) fail("expected one 'graph <name>' line");
            raw.graph = args[0];
        } else if (keyword == "root") {
            if (!raw.root.empty() || args.size() != 1) fail("expected one 'root <label>' line");
            raw.root = args[0];
        } else if (keyword == "strategy") {
            if (!args.empty()) fail("'strategy' takes no arguments");
            raw.strategies.push_back({});
            raw.strategies.back().line = line_no;
        } else if (keyword == "edge" || keyword == "weight") {
            if (raw.strategies.empty()) fail("'" + keyword + "' outside a strategy block");
            if (args.size() != 2) fail("'" + keyword + "' takes two arguments");
            auto& target = keyword == "edge" ? raw.strategies.back().edges : raw.strategies.back().weights;
            target.emplace_back(args[0], args[1]);
        } else {
            fail("unknown keyword '" + keyword + "'");
        }
    }
    if (!header) throw Error(ErrorKind::SyntaxError, "missing 'certificate' line");
    if (raw.graph.empty()) throw Error(ErrorKind::SyntaxError, "missing 'graph' line");
    if (raw.root.empty()) throw Error(ErrorKind::SyntaxError, "missing 'root' line");
    return raw;
}

VertexId resolve_vertex(const Graph& g, const std::string& label) {
    auto v = g.find(label);
    if (!v) throw Error(ErrorKind::UnknownVertex, "'" + label + "' is not a vertex of " + g.name());
    return *v;
}

Certificate build(const RawCertificate& raw, GraphPtr graph) {
    const Graph& g = *graph;
    Certificate cert(graph, resolve_vertex(g, raw.root));
    cert.set_graph_reference(raw.graph);
    for (const RawStrategy& rs : raw.strategies) {
        Strategy s(graph, cert.root());
        for (const auto& [p, c] : rs.edges) s.add_edge(resolve_vertex(g, p), resolve_vertex(g, c));
        for (const auto& [v, w] : rs.weights) s.set_weight(resolve_vertex(g, v), parse_rational(w));
        cert.add(std::move(s));
    }
    return cert;
}

} // namespace

Certificate parse_certificate(std::string_view text, const GraphResolver& resolve) {
    RawCertificate raw = read_raw(text);
    return build(raw, resolve(raw.graph));
}

Certificate parse_certificate(std::string_view text, GraphPtr graph) {
    RawCertificate raw = read_raw(text);
    if (raw.graph != graph->name()) {
        // a family alias or a file naming the same graph is fine
        bool same = false;
        if (is_family_name(raw.graph)) same = family_by_name(raw.graph).graph == *graph;
        if (!same)
            throw Error(ErrorKind::GraphMismatch, "certificate is for '" + raw.graph + "', graph is '" + graph->name() + "'");
    }
    return build(raw, std::move(graph));
}

std::string serialize_certificate(const Certificate& c) {
    const Graph& g = c.graph();
    std::string out = "certificate\ngraph " + c.graph_reference() + "\nroot " + g.label(c.root()) + "\n";
    for (const Strategy& s : c.strategies()) {
        out += "strategy\n";
        std::deque<VertexId> queue{s.root()};
        std::vector<char> seen(g.vertex_count(), 0);
        seen[s.root()] = 1;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId child : s.children(u)) {
                if (seen[child]) continue;
                seen[child] = 1;
                out += "  edge " + g.label(u) + " " + g.label(child) + "\n";
                queue.push_back(child);
            }
        }
        // edges not reachable from the root still round-trip
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (!seen[v] && s.parent(v) != kNoVertex) out += "  edge " + g.label(s.parent(v)) + " " + g.label(v) + "\n";
        std::vector<VertexId> weighted;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (s.has_weight_entry(v) || s.weight(v) != Rational(0)) weighted.push_back(v);
        std::sort(weighted.begin(), weighted.end(),
                  [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
        for (VertexId v : weighted) out += "  weight " + g.label(v) + " " + to_string(s.weight(v)) + "\n";
    }
    return out;
}

Certificate load_certificate_file(const std::string& path, GraphPtr graph) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (graph) return parse_certificate(buffer.str(), std::move(graph));
    auto dir = std::filesystem::path(path).parent_path().string();
    return parse_certificate(buffer.str(), default_graph_resolver(dir.empty() ? "." : dir));
}

Strategy strategy_from_listing(GraphPtr graph, VertexId root, const std::vector<VertexId>& vertices,
                               const std::vector<Rational>& weights) {
    if (vertices.size() != weights.size())
        throw Error(ErrorKind::InvalidParameter, "listing has " + std::to_string(vertices.size()) + " vertices and " +
                                                     std::to_string(weights.size()) + " weights");
    const Graph& g = *graph;
    Strategy s(graph, root);
    std::vector<VertexId> placed{root};
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        VertexId v = vertices[i];
        if (s.contains(v)) throw Error(ErrorKind::InvalidCertificate, g.label(v) + " listed twice");
        auto it = std::find_if(placed.begin(), placed.end(), [&](VertexId p) {
            return g.adjacent(p, v) && (p == root || s.weight(p) >= 2 * weights[i]);
        });
        if (it == placed.end())
            throw Error(ErrorKind::InvalidCertificate, "no admissible parent for " + g.label(v));
        s.add_edge(*it, v);
        s.set_weight(v, weights[i]);
        placed.push_back(v);
    }
    return s;
}

} // namespace pebbling
