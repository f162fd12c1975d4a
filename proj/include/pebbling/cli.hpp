#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pebbling/rational.hpp"

namespace pebbling::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kBudget = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

enum class Format { Human, Tsv, Records };

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    bool vertical = false; // human output as "column: value" lines
};

void render(std::ostream& out, const Table& table, Format format);

// One row of the reproduced comparison tables. target "graph" holds the per-graph maximum.
struct TableRow {
    std::string graph;
    std::string target;
    Rational our_lambda;
    std::optional<Rational> prior_lambda;
    Rational thm1_lower;
    std::int64_t pi_upper = 0;
};

// selector: "B2", "B1", "Flower" (all m in 3..15 unless m given), "Petersen", or "all".
// Certificates come from the built-in listings, or from <fixtures_dir>/<graph>_<target>.cert.
std::vector<TableRow> table_rows(const std::string& selector, std::optional<int> m = std::nullopt,
                                 const std::string& fixtures_dir = "");

// Differences between rows and the reference values; empty when everything agrees.
std::vector<std::string> check_rows(const std::vector<TableRow>& rows);

} // namespace pebbling::cli
