#include <map>
#include <sstream>

#include "pebbling/error.hpp"
#include "pebbling/families.hpp"
#include "pebbling/heuristic.hpp"

namespace pebbling {

namespace {

// One strategy as listed in the tables: tree vertices in listing order and their weights.
struct Listing {
    const char* vertices;
    const char* weights;
};

using Table = std::map<std::string, std::vector<Listing>>;

// Petersen labels: outer cycle u_i, inner w_i; the drawing's A_{i+1} is u_i and B_{i+1} is w_i.
const Table kPetersen = {
    {"u_0", {{"u_1 u_2 w_1 u_3 w_2 w_3 w_4", "4 2 2 1 1 1 1"},
             {"w_0 w_2 w_3 w_4 u_2 w_1 u_3", "4 2 2 1 1 1 1"},
             {"u_4 u_3 w_4 u_2 w_3 w_2 w_1", "4 2 2 1 1 1 1"}}},
};

const Table kBlanusa2 = {
    {"x_1", {{"z_1 z_5 z_2 z_5' z_2' x_5' z_1' x_2'", "8 4 5/2 2 5/4 1 1 1/2"},
             {"x_3 z_3 x_5 x_3' x_1' x_5' x_2' z_1' z_2'", "8 4 2 2 1 1 1/2 1/2 1/4"},
             {"x_4 z_4 x_2 x_4' x_1' x_2' z_1' z_2'", "8 4 2 2 1 1 1/2 1/2"}}},
    {"x_2", {{"z_2 z_2' z_1 x_2' z_1' x_1' x_5' x_3' x_4' z_5'", "8 4 5/2 2 2 1 1 1/2 1/2 1/2"},
             {"x_5 x_3 z_5 z_3 z_5' x_3' x_5' x_1' x_2'", "8 4 4 2 2 1 1 1/2 1/2"},
             {"x_4 z_4 x_1 x_4' z_3 x_1' x_3' x_5' z_1'", "8 4 5/2 2 2 1 1 1/2 1/2"}}},
    {"x_3", {{"z_3 z_4 x_3' x_4' x_1' x_2' x_5' z_1' z_2'", "8 4 5/2 2 5/4 1 1 1/2 1/2"},
             {"x_1 z_1 x_4 z_2 z_2' x_2' z_1' x_1'", "8 4 2 2 1 1/2 1/2 1/4"},
             {"x_5 z_5 x_2 z_5' x_5' z_1' x_1' x_2' z_2'", "8 4 2 2 1 1 1/2 1/2 1/2"}}},
    {"z_1", {{"x_1 x_3 x_4 z_3 z_4 x_3' x_4' x_1' x_2' x_5'", "8 4 4 2 2 1 1 1/2 1/2 1/2"},
             {"z_2 z_2' x_2 x_2' z_1' x_1' x_4' x_3' z_4", "8 4 5/2 2 2 1 1 1/2 1/2"},
             {"z_5 z_5' x_5 x_5' z_1' x_1' x_3' x_4' z_3", "8 4 5/2 2 2 1 1 1/2 1/2"}}},
    {"z_2", {{"z_2' z_1' x_1' x_2' x_3' x_4' x_5' z_3", "8 4 2 2 1 1 1 1/2"},
             {"x_2 x_4 x_1 z_4 x_3 x_4' z_3 x_3'", "8 4 2 2 1 1 1 1/2"},
             {"z_1 z_5 x_5 z_5' x_3 x_5' x_3' z_3", "8 4 2 2 1 1 1/2 1/2"}}},
    {"z_3", {{"z_4 x_4 x_4' x_2 x_2' z_2 z_2' z_1 z_1'", "8 4 4 2 2 1 1 1/2 1/2"},
             {"x_3 x_1 x_5 z_1 z_5 z_2 x_2 z_2' z_5'", "8 4 4 2 2 1 1/2 1/2 1/2"},
             {"x_3' x_1' x_5' z_1' z_5' z_2' x_2' z_2 z_5", "8 4 4 2 2 1 1/2 1/2 1/2"}}},
};

const Table kFlower3 = {
    {"x_0", {{"z_0 v_0 y_0 v_1 v_-1 z_1 z_-1", "4 2 2 1 1 1/2 1/2"},
             {"x_1 y_-1 z_1 v_1 y_1 v_-1 y_0 v_0", "4 2 2 1 1/2 1/2 1/4 1/4"},
             {"x_-1 y_1 z_-1 v_-1 y_-1 v_1 y_0 v_0", "4 2 2 1 1/2 1/2 1/4 1/4"}}},
    {"v_0", {{"z_0 x_0 y_0 x_1 x_-1 y_1 y_-1 z_1 z_-1", "4 2 2 1 1 1 1 1/2 1/2"},
             {"v_1 z_1 x_1 y_1 x_0 x_-1 y_-1", "4 2 1 1 1/2 1/2 1/2"},
             {"v_-1 z_-1 x_-1 y_-1 x_1 y_0 y_1", "4 2 1 1 1/2 1/2 1/2"}}},
    {"z_0", {{"v_0 v_1 v_-1 z_1 z_-1 x_1 x_-1 y_1 y_-1", "4 2 2 1 1 1/2 1/2 1/2 1/2"},
             {"x_0 x_1 x_-1 z_1 z_-1 y_1 y_-1 v_1 v_-1", "4 2 2 1 1 1/2 1/2 1/2 1/2"},
             {"y_0 y_1 y_-1 z_1 z_-1 x_1 x_-1 v_1 v_-1", "4 2 2 1 1 1/2 1/2 1/2 1/2"}}},
};

const Table kBlanusa1 = {
    {"a_1", {{"a_1' b_2 b_2' c_2 c_2' d_1 d_1' e_1 e_2 e_1' e_2'", "8 4 4 2 2 1 1 1/2 1/2 1/2 1/2"},
             {"b_1 c_1 d_2 e_1 e_2 d_1 d_1' e_1' e_2'", "8 4 2 1 1 1/2 1/2 1/2 1/2"},
             {"b_1' c_1' d_2' e_1' e_2' d_1 d_1' e_1 e_2", "8 4 2 1 1 1/2 1/2 1/2 1/2"}}},
    {"b_1", {{"a_1 b_1' a_1' c_2 c_1' d_1 d_2' e_2'", "8 4 5/2 2 2 1 1 1/2"},
             {"c_1 d_2 b_2 e_1 e_2 d_1 e_2' c_2 d_2' e_1'", "8 4 5/2 2 2 1 1 1/2 1/2 1/2"},
             {"c_2' d_1' b_2' e_2 e_1' d_2' e_2' c_1' d_1 e_1", "8 4 5/2 2 2 1 1 1/2 1/2 1/2"}}},
    {"c_1", {{"b_1 c_2' a_1 b_2' d_1' c_1' d_2'", "8 4 2 2 2 1 1/2"},
             {"b_2 c_2 a_1' b_1' d_1 c_1' e_2' d_2'", "8 4 2 2 2 1 1 1/2"},
             {"d_2 e_1 e_2 e_1' d_2' e_2'", "8 4 2 2 1 1"}}},
    {"d_1", {{"c_2 b_2 b_1' a_1' c_1 a_1 b_1 b_2' c_1' c_2'", "8 4 7/2 2 2 7/4 1 1 1/2 1/2"},
             {"e_1 d_2 e_1' c_1 d_1' b_1 c_2' a_1 b_2'", "8 4 4 2 2 1 1 1/2 1/2"},
             {"e_2' d_2' e_2 c_1' d_1' b_2' c_2' a_1' b_1 a_1", "8 4 4 2 2 1 1 1/2 1/2 1/4"}}},
    {"e_1", {{"d_1 c_2 b_2 b_1' a_1 a_1' b_2'", "8 4 2 2 1 1 1/2"},
             {"d_2 c_1 b_1 e_2 a_1 c_2' a_1' b_2'", "8 4 2 2 1 1 1/2 1/2"},
             {"e_1' d_2' c_1' d_1' e_2' b_2' c_2' a_1'", "8 4 2 2 2 1 1 1/2"}}},
};

std::vector<std::string> words(const char* text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

// Listing with labels and weights already split.
struct Strat {
    std::vector<std::string> vertices;
    std::vector<Rational> weights;

    void add(std::string v, Rational w) {
        vertices.push_back(std::move(v));
        weights.push_back(w);
    }
};

Certificate assemble(const GraphPtr& g, const std::string& target, const std::vector<Strat>& listings) {
    VertexId r = g->id(target);
    Certificate cert(g, r);
    for (const Strat& s : listings) {
        std::vector<VertexId> ids;
        for (const auto& label : s.vertices) ids.push_back(g->id(label));
        cert.add(strategy_from_listing(g, r, ids, s.weights));
    }
    auto violations = validate_certificate(cert);
    if (!violations.empty())
        throw Error(ErrorKind::InternalInconsistency, "fixture for " + target + " invalid: " + violations.front().message);
    return cert;
}

Certificate from_table(const GraphPtr& g, const Table& table, const std::string& target) {
    auto it = table.find(target);
    if (it == table.end())
        throw Error(ErrorKind::UnsupportedTarget, "no reference certificate for " + target + " on " + g->name());
    std::vector<Strat> listings;
    for (const Listing& l : it->second) {
        Strat s;
        s.vertices = words(l.vertices);
        for (const auto& w : words(l.weights)) s.weights.push_back(parse_rational(w));
        listings.push_back(std::move(s));
    }
    return assemble(g, target, listings);
}

std::string fl(char letter, int i) { return flower_label(letter, i); }

Strat negated(const Strat& s) {
    Strat out;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        const std::string& v = s.vertices[i];
        out.add(fl(v[0], -std::stoi(v.substr(2))), s.weights[i]);
    }
    return out;
}

// General-m flower certificates, m = 2k+1 >= 5.
std::vector<Strat> flower_listings(int k, const std::string& target) {
    std::vector<Strat> out;
    if (target == "z_0") {
        const std::pair<char, const char*> parts[] = {{'v', "xy"}, {'x', "vy"}, {'y', "xv"}};
        for (auto [a, others] : parts) {
            Strat s;
            s.add(fl(a, 0), pow2(k + 1));
            for (int j = 1; j <= k; ++j)
                for (int sgn : {j, -j}) s.add(fl(a, sgn), pow2(k + 1 - j));
            for (int j = 1; j <= k; ++j)
                for (int sgn : {j, -j}) s.add(fl('z', sgn), Rational(1));
            for (const char* o = others; *o; ++o)
                for (int sgn : {k, -k}) s.add(fl(*o, sgn), Rational(1, 2));
            out.push_back(std::move(s));
        }
    } else if (target == "x_0") {
        Strat t1;
        t1.add("z_0", pow2(k + 1));
        t1.add("v_0", pow2(k));
        for (int j = 1; j <= k; ++j)
            for (int sgn : {j, -j}) t1.add(fl('v', sgn), pow2(k - j));
        t1.add("y_0", Rational(5, 2));
        t1.add(fl('z', k), Rational(1, 2));
        t1.add(fl('z', -k), Rational(1, 2));
        Strat t2;
        for (int j = 1; j < k; ++j) t2.add(fl('x', j), pow2(k + 2 - j));
        for (int j = 1; j < k - 1; ++j) t2.add(fl('z', j), Rational(5));
        t2.add(fl('x', k), Rational(4));
        t2.add(fl('z', k - 1), Rational(3));
        for (int j = 1; j < k - 1; ++j) t2.add(fl('y', j), Rational(5, 2));
        t2.add(fl('z', k), Rational(2));
        t2.add(fl('y', -k), Rational(2));
        t2.add(fl('y', k - 1), Rational(3, 2));
        t2.add(fl('v', k), Rational(1));
        t2.add(fl('y', 1 - k), Rational(1));
        t2.add(fl('v', -k), Rational(1, 2));
        t2.add(fl('v', k - 1), Rational(1, 2));
        t2.add(fl('y', k), Rational(1, 2));
        Strat t3 = negated(t2);
        out.push_back(std::move(t1));
        out.push_back(std::move(t2));
        out.push_back(std::move(t3));
    } else if (target == "v_0") {
        Strat t1;
        t1.add("z_0", pow2(k + 1));
        t1.add("x_0", pow2(k));
        t1.add("y_0", pow2(k));
        for (int j = 1; j <= k; ++j)
            for (char a : {'x', 'y'})
                for (int sgn : {j, -j}) t1.add(fl(a, sgn), pow2(k - j));
        t1.add(fl('z', k), Rational(1, 2));
        t1.add(fl('z', -k), Rational(1, 2));
        Strat t2;
        for (int j = 1; j <= k; ++j) t2.add(fl('v', j), pow2(k + 2 - j));
        for (int j = 1; j < k; ++j) t2.add(fl('z', j), Rational(5, 2));
        t2.add(fl('z', k), Rational(2));
        t2.add(fl('x', k), Rational(1));
        t2.add(fl('y', k), Rational(1));
        for (const std::string& v : {fl('x', -k), fl('y', -k), fl('x', k - 1), fl('y', k - 1)}) t2.add(v, Rational(1, 2));
        Strat t3 = negated(t2);
        out.push_back(std::move(t1));
        out.push_back(std::move(t2));
        out.push_back(std::move(t3));
    } else {
        throw Error(ErrorKind::UnsupportedTarget, "flower certificates exist for x_0, v_0, z_0, not " + target);
    }
    return out;
}

} // namespace

Certificate reference_certificate(ReferenceFamily family, int parameter, const std::string& target) {
    switch (family) {
    case ReferenceFamily::Petersen:
        return from_table(std::make_shared<const Graph>(petersen().graph), kPetersen, target);
    case ReferenceFamily::Blanusa1:
        return from_table(std::make_shared<const Graph>(blanusa1().graph), kBlanusa1, target);
    case ReferenceFamily::Blanusa2:
        return from_table(std::make_shared<const Graph>(blanusa2().graph), kBlanusa2, target);
    case ReferenceFamily::Flower: {
        auto g = std::make_shared<const Graph>(flower(parameter).graph);
        if (parameter == 3) return from_table(g, kFlower3, target);
        return assemble(g, target, flower_listings((parameter - 1) / 2, target));
    }
    }
    throw Error(ErrorKind::UnsupportedTarget, target);
}

} // namespace pebbling
