#include <algorithm>
#include <cctype>
#include <filesystem>
#include <map>
#include <ostream>

#include "pebbling/bounds.hpp"
#include "pebbling/cli.hpp"
#include "pebbling/error.hpp"
#include "pebbling/families.hpp"
#include "pebbling/heuristic.hpp"

namespace pebbling::cli {

namespace {

Rational r(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }

// Prior-work reference values (not computed here), per target.
std::optional<Rational> prior_value(const std::string& graph, int m, const std::string& target) {
    if (graph == "B2") {
        static const std::map<std::string, Rational> prior = {
            {"x_1", r(30)}, {"x_2", r(31)}, {"x_3", r(236, 7)}, {"z_1", r(133, 5)}, {"z_2", r(30)}, {"z_3", r(32)}};
        auto it = prior.find(target);
        return it == prior.end() ? std::nullopt : std::optional<Rational>(it->second);
    }
    if (graph == "Flower") {
        static const std::map<int, std::map<std::string, Rational>> small = {
            {3, {{"x_0", r(64, 5)}, {"v_0", r(64, 5)}, {"z_0", r(64, 5)}}},
            {5, {{"x_0", r(146, 5)}, {"v_0", r(146, 5)}, {"z_0", r(146, 5)}}},
            {7, {{"x_0", r(284, 5)}, {"v_0", r(278, 5)}, {"z_0", r(60)}}}};
        if (auto it = small.find(m); it != small.end()) return it->second.at(target);
        const int k = (m - 1) / 2;
        const Rational p = pow2(k + 2);
        if (target == "x_0") return p * r(17, 10) + r(2 * k) - r(18, 5);
        if (target == "v_0") return p * r(8, 5) + r(2 * k) - r(8, 5);
        if (target == "z_0") return p * r(9, 5) + r(2 * k) - r(18, 5);
    }
    return std::nullopt;
}

Certificate fixture(ReferenceFamily family, int m, const std::string& target, const Graph& graph,
                    const std::string& fixtures_dir) {
    if (fixtures_dir.empty()) return reference_certificate(family, m, target);
    const std::string path = fixtures_dir + "/" + graph.name() + "_" + target + ".cert";
    if (!std::filesystem::exists(path)) throw Error(ErrorKind::FixtureMissing, path);
    return load_certificate_file(path, std::make_shared<const Graph>(graph));
}

std::vector<TableRow> rows_for(const std::string& key, ReferenceFamily family, int m, const std::string& fixtures_dir) {
    FamilyGraph fg = family == ReferenceFamily::Flower     ? flower(m)
                     : family == ReferenceFamily::Blanusa1 ? blanusa1()
                     : family == ReferenceFamily::Blanusa2 ? blanusa2()
                                                       : petersen();
    std::vector<TableRow> rows;
    TableRow graph_row{fg.graph.name(), "graph", Rational(0), std::nullopt, Rational(0), 0};
    for (const std::string& target : fg.target_classes) {
        Certificate cert = fixture(family, m, target, fg.graph, fixtures_dir);
        TableRow row{fg.graph.name(), target, wfl_ratio(cert), prior_value(key, m, target),
                     theorem1_lower_bound(cert.graph(), cert.root()), pebbling_upper_bound(cert)};
        graph_row.our_lambda = std::max(graph_row.our_lambda, row.our_lambda);
        graph_row.thm1_lower = std::max(graph_row.thm1_lower, row.thm1_lower);
        if (row.prior_lambda)
            graph_row.prior_lambda = std::max(graph_row.prior_lambda.value_or(Rational(0)), *row.prior_lambda);
        rows.push_back(std::move(row));
    }
    graph_row.pi_upper = floor(graph_row.our_lambda) + 1;
    rows.push_back(std::move(graph_row));
    return rows;
}

void append(std::vector<TableRow>& to, std::vector<TableRow> from) {
    for (auto& row : from) to.push_back(std::move(row));
}

} // namespace

std::vector<TableRow> table_rows(const std::string& selector, std::optional<int> m, const std::string& fixtures_dir) {
    std::string key;
    for (char c : selector) key += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    std::vector<TableRow> rows;
    if (key == "B2" || key == "ALL") append(rows, rows_for("B2", ReferenceFamily::Blanusa2, 0, fixtures_dir));
    if (key == "FLOWER" || key == "ALL") {
        if (m) {
            append(rows, rows_for("Flower", ReferenceFamily::Flower, *m, fixtures_dir));
        } else {
            for (int mm = 3; mm <= 15; mm += 2) append(rows, rows_for("Flower", ReferenceFamily::Flower, mm, fixtures_dir));
        }
    }
    if (key == "B1" || key == "ALL") append(rows, rows_for("B1", ReferenceFamily::Blanusa1, 0, fixtures_dir));
    if (key == "PETERSEN") append(rows, rows_for("Petersen", ReferenceFamily::Petersen, 0, fixtures_dir));
    if (rows.empty()) throw Error(ErrorKind::InvalidParameter, "unknown table selector '" + selector + "'");
    return rows;
}

namespace {

struct Expected {
    Rational lambda;
    std::optional<Rational> thm1;
    std::optional<std::int64_t> pi_upper;
};

// Reference values, keyed by graph name and target.
std::map<std::pair<std::string, std::string>, Expected> expected_values() {
    std::map<std::pair<std::string, std::string>, Expected> out;
    const std::pair<const char*, Rational> b2[] = {{"x_1", r(117, 4)}, {"x_2", r(133, 5)}, {"x_3", r(117, 4)},
                                                   {"z_1", r(133, 5)}, {"z_2", r(29)},     {"z_3", r(136, 5)}};
    for (auto [t, v] : b2) out[{"blanusa-2", t}] = {v, r(22), std::nullopt};
    out[{"blanusa-2", "graph"}] = {r(117, 4), r(22), 30};

    const std::pair<const char*, Rational> b1[] = {
        {"a_1", r(30)}, {"b_1", r(26)}, {"c_1", r(29)}, {"d_1", r(141, 5)}, {"e_1", r(29)}};
    for (auto [t, v] : b1) out[{"blanusa-1", t}] = {v, std::nullopt, std::nullopt};
    out[{"blanusa-1", "graph"}] = {r(30), std::nullopt, 31};

    out[{"petersen", "u_0"}] = {r(9), r(9), 10};
    out[{"petersen", "graph"}] = {r(9), r(9), 10};

    out[{"flower-3", "x_0"}] = {r(64, 5), r(12), std::nullopt};
    out[{"flower-3", "v_0"}] = {r(64, 5), r(12), std::nullopt};
    out[{"flower-3", "z_0"}] = {r(12), r(12), std::nullopt};
    out[{"flower-3", "graph"}] = {r(64, 5), r(12), 13};
    for (int m = 5; m <= 15; m += 2) {
        const int k = (m - 1) / 2;
        const Rational p = pow2(k + 2);
        const std::string name = "flower-" + std::to_string(m);
        std::optional<Rational> thm1;
        if (m == 5) thm1 = r(24);
        if (m >= 7) thm1 = p + r(10);
        Rational v0 = p * r(8, 5) + r(2 * k) - r(8, 5);
        out[{name, "x_0"}] = {p * r(13, 10) + r(6 * k) - r(5), thm1, std::nullopt};
        out[{name, "v_0"}] = {v0, thm1, std::nullopt};
        out[{name, "z_0"}] = {p * r(3, 2) + r(2 * k) - r(2), thm1, std::nullopt};
        out[{name, "graph"}] = {v0, thm1, floor(v0) + 1};
    }
    return out;
}

} // namespace

std::vector<std::string> check_rows(const std::vector<TableRow>& rows) {
    static const auto expected = expected_values();
    std::vector<std::string> problems;
    for (const TableRow& row : rows) {
        auto it = expected.find({row.graph, row.target});
        if (it == expected.end()) {
            problems.push_back(row.graph + " " + row.target + ": no reference value");
            continue;
        }
        const Expected& want = it->second;
        auto differ = [&](const std::string& what, const std::string& got, const std::string& exp) {
            problems.push_back(row.graph + " " + row.target + " " + what + ": got " + got + ", expected " + exp);
        };
        if (row.our_lambda != want.lambda) differ("lambda", to_decimal_string(row.our_lambda), to_decimal_string(want.lambda));
        if (want.thm1 && row.thm1_lower != *want.thm1)
            differ("ring bound", to_string(row.thm1_lower), to_string(*want.thm1));
        if (want.pi_upper && row.pi_upper != *want.pi_upper)
            differ("pebbling bound", std::to_string(row.pi_upper), std::to_string(*want.pi_upper));
        if (row.pi_upper != floor(row.our_lambda) + 1) differ("pebbling bound", std::to_string(row.pi_upper), "floor(lambda)+1");
    }
    return problems;
}

void render(std::ostream& out, const Table& table, Format format) {
    switch (format) {
    case Format::Tsv: {
        out << "# " << table.title << "\n";
        for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "\t" : "") << table.columns[i];
        out << "\n";
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "\t" : "") << row[i];
            out << "\n";
        }
        break;
    }
    case Format::Records: {
        for (const auto& row : table.rows) {
            out << "record " << table.title << "\n";
            for (std::size_t i = 0; i < row.size(); ++i) out << table.columns[i] << "=" << row[i] << "\n";
            out << "\n";
        }
        break;
    }
    case Format::Human: {
        if (!table.title.empty()) out << table.title << "\n";
        if (table.vertical) {
            std::size_t width = 0;
            for (const auto& c : table.columns) width = std::max(width, c.size());
            for (const auto& row : table.rows)
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << "  " << table.columns[i] << std::string(width - table.columns[i].size(), ' ') << "  " << row[i] << "\n";
            break;
        }
        std::vector<std::size_t> width(table.columns.size(), 0);
        for (std::size_t i = 0; i < table.columns.size(); ++i) width[i] = table.columns[i].size();
        for (const auto& row : table.rows)
            for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        auto line = [&](const std::vector<std::string>& cells) {
            std::string text = " ";
            for (std::size_t i = 0; i < cells.size(); ++i)
                text += " " + cells[i] + std::string(width[i] - cells[i].size(), ' ') + (i + 1 < cells.size() ? " " : "");
            while (!text.empty() && text.back() == ' ') text.pop_back();
            out << text << "\n";
        };
        line(table.columns);
        std::vector<std::string> rule;
        for (std::size_t w : width) rule.emplace_back(w, '-');
        line(rule);
        for (const auto& row : table.rows) line(row);
        break;
    }
    }
}

} // namespace pebbling::cli
