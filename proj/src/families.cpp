#include "pebbling/families.hpp"

#include <cctype>
#include <charconv>

#include "pebbling/error.hpp"

namespace pebbling {

namespace fixtures {
extern const char* const kBlanusa1;
extern const char* const kBlanusa2;
} // namespace fixtures

namespace {

using EdgeList = std::vector<std::pair<std::string, std::string>>;

std::string with_index(const char* prefix, int i) { return prefix + std::to_string(i); }

} // namespace

std::string flower_label(char letter, int index) {
    return std::string(1, letter) + "_" + std::to_string(index);
}

FamilyGraph petersen() {
    // outer 5-cycle u_i, spokes u_i w_i, inner pentagram w_i w_{i+2}
    std::vector<std::string> labels;
    for (int i = 0; i < 5; ++i) labels.push_back(with_index("u_", i));
    for (int i = 0; i < 5; ++i) labels.push_back(with_index("w_", i));
    EdgeList edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(with_index("u_", i), with_index("u_", (i + 1) % 5));
    for (int i = 0; i < 5; ++i) edges.emplace_back(with_index("u_", i), with_index("w_", i));
    for (int i = 0; i < 5; ++i) edges.emplace_back(with_index("w_", i), with_index("w_", (i + 2) % 5));
    return {Graph::from_edge_list("petersen", labels, edges), Family::Petersen, 0, {"u_0"}};
}

FamilyGraph flower(int m) {
    if (m < 3 || m % 2 == 0)
        throw Error(ErrorKind::InvalidParameter, "flower needs odd m >= 3, got " + std::to_string(m));
    const int k = (m - 1) / 2;
    std::vector<std::string> labels;
    for (char letter : {'v', 'x', 'y', 'z'})
        for (int i = -k; i <= k; ++i) labels.push_back(flower_label(letter, i));
    EdgeList edges;
    for (int i = -k; i <= k; ++i) {
        for (char letter : {'v', 'x', 'y'}) edges.emplace_back(flower_label(letter, i), flower_label('z', i));
        edges.emplace_back(flower_label('v', i), flower_label('v', i < k ? i + 1 : -k));
        if (i < k) {
            edges.emplace_back(flower_label('x', i), flower_label('x', i + 1));
            edges.emplace_back(flower_label('y', i), flower_label('y', i + 1));
        }
    }
    edges.emplace_back(flower_label('x', k), flower_label('y', -k));
    edges.emplace_back(flower_label('y', k), flower_label('x', -k));
    return {Graph::from_edge_list("flower-" + std::to_string(m), labels, edges), Family::Flower, m,
            {"x_0", "v_0", "z_0"}};
}

FamilyGraph blanusa1() {
    return {parse_graph(fixtures::kBlanusa1), Family::Blanusa1, 0, {"a_1", "b_1", "c_1", "d_1", "e_1"}};
}

FamilyGraph blanusa2() {
    return {parse_graph(fixtures::kBlanusa2), Family::Blanusa2, 0, {"x_1", "x_2", "x_3", "z_1", "z_2", "z_3"}};
}

FamilyGraph cube(int d) {
    if (d < 1 || d > 20) throw Error(ErrorKind::InvalidParameter, "cube needs 1 <= d <= 20, got " + std::to_string(d));
    const std::size_t n = std::size_t{1} << d;
    // label character i is bit (d-1-i) of the vertex id
    auto label = [d](std::size_t v) {
        std::string s(static_cast<std::size_t>(d), '0');
        for (int i = 0; i < d; ++i)
            if (v >> (d - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
        return s;
    };
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < n; ++v) labels.push_back(label(v));
    EdgeList edges;
    for (std::size_t v = 0; v < n; ++v)
        for (int b = d - 1; b >= 0; --b) {
            std::size_t w = v ^ (std::size_t{1} << b);
            if (v < w) edges.emplace_back(labels[v], labels[w]);
        }
    return {Graph::from_edge_list("cube-" + std::to_string(d), labels, edges), Family::Cube, d, {labels[0]}};
}

namespace {

bool parse_suffix(std::string_view text, int& out) {
    if (text.empty()) return false;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc{} && ptr == text.data() + text.size();
}

} // namespace

FamilyGraph family_by_name(std::string_view name) {
    std::string lower;
    for (char c : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    int p = 0;
    if (lower == "petersen" || lower == "p") return petersen();
    if (lower == "blanusa-1" || lower == "blanusa1" || lower == "b1") return blanusa1();
    if (lower == "blanusa-2" || lower == "blanusa2" || lower == "b2") return blanusa2();
    if (lower.rfind("flower-", 0) == 0 && parse_suffix(std::string_view(lower).substr(7), p)) return flower(p);
    if (lower.rfind("j", 0) == 0 && parse_suffix(std::string_view(lower).substr(1), p)) return flower(p);
    if (lower.rfind("cube-", 0) == 0 && parse_suffix(std::string_view(lower).substr(5), p)) return cube(p);
    if (lower.rfind("q", 0) == 0 && parse_suffix(std::string_view(lower).substr(1), p)) return cube(p);
    throw Error(ErrorKind::UnknownLabel, "no graph family named '" + std::string(name) + "'");
}

bool is_family_name(std::string_view name) {
    try {
        family_by_name(name);
        return true;
    } catch (const Error& e) {
        return e.kind() == ErrorKind::InvalidParameter;
    }
}

bool is_cubic(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

bool is_bridgeless(const Graph& g) {
    const auto& edges = g.edges();
    for (std::size_t skip = 0; skip < edges.size(); ++skip) {
        EdgeList rest;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (i != skip) rest.emplace_back(g.label(edges[i].first), g.label(edges[i].second));
        try {
            Graph::from_edge_list(g.name(), g.labels(), rest);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Disconnected) return false;
            throw;
        }
    }
    return true;
}

} // namespace pebbling
