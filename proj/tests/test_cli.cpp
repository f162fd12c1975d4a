#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "pebbling/certificate.hpp"
#include "pebbling/cli.hpp"
#include "pebbling/families.hpp"
#include "pebbling/heuristic.hpp"

using namespace pebbling;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

using Record = std::map<std::string, std::string>;

// "record <title>" blocks of key=value lines
std::vector<std::pair<std::string, Record>> records(const std::string& text) {
    std::vector<std::pair<std::string, Record>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("record ", 0) == 0) {
            out.push_back({line.substr(7), {}});
        } else if (auto eq = line.find('='); eq != std::string::npos && !out.empty()) {
            out.back().second[line.substr(0, eq)] = line.substr(eq + 1);
        }
    }
    return out;
}

Record find(const std::vector<std::pair<std::string, Record>>& rs, const std::string& title, const std::string& key,
            const std::string& value) {
    for (const auto& [t, r] : rs)
        if (t == title && r.count(key) && r.at(key) == value) return r;
    FAIL("no record " << title << " with " << key << "=" << value);
    return {};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("pebbling-cli-" + std::to_string(std::rand()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

} // namespace

TEST_CASE("tables B2") {
    Result r = call({"tables", "B2", "--format", "records"});
    CHECK(r.code == 0);
    auto rs = records(r.out);
    CHECK(find(rs, "tables", "target", "x_3")["lambda"] == "29.25");
    Record g = find(rs, "tables", "target", "graph");
    CHECK(g["lambda"] == "29.25");
    CHECK(g["prior"] == "236/7");
    CHECK(g["pi_upper"] == "30");
    CHECK(call({"tables", "B2", "--check"}).code == 0);
}

TEST_CASE("tables Flower m=7 and B1") {
    auto rs = records(call({"tables", "Flower", "--m", "7", "--format", "records"}).out);
    CHECK(find(rs, "tables", "target", "x_0")["lambda"] == "54.6");
    CHECK(find(rs, "tables", "target", "v_0")["lambda"] == "55.6");
    CHECK(find(rs, "tables", "target", "z_0")["lambda"] == "52");
    CHECK(find(rs, "tables", "target", "graph")["lambda"] == "55.6");

    auto b1 = records(call({"tables", "B1", "--format", "records"}).out);
    const std::pair<const char*, const char*> want[] = {
        {"a_1", "30"}, {"b_1", "26"}, {"c_1", "29"}, {"d_1", "28.2"}, {"e_1", "29"}};
    for (auto [t, l] : want) CHECK(find(b1, "tables", "target", t)["lambda"] == l);

    Result all = call({"tables", "--check"});
    CHECK(all.code == 0);
    CHECK(all.err.find("41 rows agree") != std::string::npos);
}

TEST_CASE("tables from a fixture directory") {
    TempDir dir;
    CHECK(call({"tables", "B2", "--emit-dir", dir.path.string()}).code == 0);
    CHECK(fs::exists(dir.file("blanusa-2_x_3.cert")));
    CHECK(call({"tables", "B2", "--fixtures", dir.path.string(), "--check"}).code == 0);

    // a certificate that still validates but no longer matches the reference value
    std::ifstream in(dir.file("blanusa-2_z_3.cert"));
    std::string text((std::istreambuf_iterator<char>(in)), {});
    in.close();
    auto pos = text.find("weight x_2' 1/2");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 15, "weight x_2' 1/4");
    write(dir.file("blanusa-2_z_3.cert"), text);
    Result bad = call({"tables", "B2", "--fixtures", dir.path.string(), "--check"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("blanusa-2 z_3") != std::string::npos);

    fs::remove(dir.file("blanusa-2_z_1.cert"));
    Result missing = call({"tables", "B2", "--fixtures", dir.path.string()});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("FixtureMissing") != std::string::npos);
}

TEST_CASE("validate") {
    TempDir dir;
    const std::string good = dir.file("petersen.cert");
    write(good, serialize_certificate(reference_certificate(ReferenceFamily::Petersen, 0, "u_0")));
    Result ok = call({"validate", good, "--format", "records"});
    CHECK(ok.code == 0);
    auto rs = records(ok.out);
    Record cert = find(rs, "certificate", "graph", "petersen");
    CHECK(cert["lambda"] == "9");
    CHECK(cert["omega_min"] == "4");
    CHECK(cert["total"] == "36");
    CHECK(cert["thm1"] == "9");

    // one weight 4 -> 3
    Certificate c = reference_certificate(ReferenceFamily::Petersen, 0, "u_0");
    c.strategies()[0].set_weight(c.graph().id("u_1"), Rational(3));
    const std::string bad = dir.file("bad.cert");
    write(bad, serialize_certificate(c));
    Result broken = call({"validate", bad, "--format", "records"});
    CHECK(broken.code == 1);
    auto vs = records(broken.out);
    REQUIRE_FALSE(vs.empty());
    for (const auto& [title, r] : vs) {
        CHECK(title == "violations");
        CHECK(r.at("parent") == "u_1");
    }

    const std::string orphan = dir.file("orphan.cert");
    write(orphan, "certificate\ngraph missing.graph\nroot a\n");
    Result mismatch = call({"validate", orphan});
    CHECK(mismatch.code == 1);
    CHECK(mismatch.err.find("GraphMismatch") != std::string::npos);
}

TEST_CASE("pipeline") {
    auto p = records(call({"pipeline", "--graph", "petersen", "--format", "records"}).out);
    Record row = find(p, "pipeline", "target", "u_0");
    CHECK(row["sandwich"] == "10<=10<=10 ok");
    CHECK(find(p, "graph", "graph", "petersen")["exact_pi"] == "10");

    auto j5 = records(call({"pipeline", "--graph", "flower-5", "--format", "records"}).out);
    Record g = find(j5, "graph", "graph", "flower-5");
    CHECK(g["thm1_graph"] == "24");
    CHECK(g["lambda_graph"] == "28");
    CHECK(g["pi_upper"] == "29");
    CHECK(g["exact_pi"] == "skipped (size)");

    auto b2 = records(call({"pipeline", "--graph", "blanusa-2", "--format", "records"}).out);
    CHECK(find(b2, "graph", "graph", "blanusa-2")["pi_upper"] == "30");
}

TEST_CASE("exit codes") {
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"bounds"}).code == 2);
    CHECK(call({"bounds", "--graph", "flower-4"}).code == 2);
    CHECK(call({"bounds", "--graph", "petersen", "--target", "nope"}).code == 2);
    CHECK(call({"bounds", "--graph", "petersen", "--target", "u_0", "--all-targets"}).code == 2);
    CHECK(call({"exact", "--graph", "flower-3", "--target", "z_0", "--max-states", "10"}).code == 3);
    CHECK(call({"--help"}).code == 0);

    TempDir dir;
    const std::string cert = dir.file("p.cert");
    write(cert, serialize_certificate(reference_certificate(ReferenceFamily::Petersen, 0, "u_0")));
    CHECK(call({"lemma-check", "--certificate", cert, "--samples", "10"}).code == 2);
    CHECK(call({"lemma-check", "--certificate", cert}).code == 2);
    CHECK(call({"lemma-check", "--certificate", cert, "--samples", "50", "--rng-seed", "4"}).code == 0);
    CHECK(call({"lemma-check", "--certificate", cert, "--exhaustive"}).code == 0);
}

TEST_CASE("output formats") {
    Result tsv = call({"bounds", "--graph", "petersen", "--tsv"});
    CHECK(tsv.code == 0);
    CHECK(tsv.out.find("target\tecc\trings") != std::string::npos);
    CHECK(tsv.out.find("u_0\t2\t1,3,6") != std::string::npos);

    Result human = call({"bounds", "--graph", "blanusa-2"});
    CHECK(human.out.find("thm1_graph") != std::string::npos);

    auto rs = records(call({"bounds", "--graph", "cube-3", "--format", "records"}).out);
    Record b = find(rs, "bounds", "target", "000");
    CHECK(b["thm1_eq2"] == "8");
    CHECK(b["thm1_eq3"] == "8");
}

TEST_CASE("gen and heuristic round trip") {
    Result gen = call({"gen", "flower-3"});
    CHECK(gen.code == 0);
    CHECK(parse_graph(gen.out) == flower(3).graph);

    TempDir dir;
    const std::string cert = dir.file("x3.cert");
    Result h = call({"heuristic", "--graph", "blanusa-2", "--target", "x_3", "--emit", cert, "--log-decisions",
                     "--format", "records"});
    CHECK(h.code == 0);
    CHECK(h.err.find("omega_min from peripheral distances: 2") != std::string::npos);
    const std::string lambda = find(records(h.out), "heuristic", "target", "x_3")["lambda"];
    Result v = call({"validate", cert, "--format", "records"});
    CHECK(v.code == 0);
    CHECK(find(records(v.out), "certificate", "target", "x_3")["lambda"] == lambda);

    const std::string graph_file = dir.file("j3.graph");
    call({"gen", "flower-3", "--out", graph_file});
    Result fromfile = call({"exact", "--graph", graph_file, "--target", "z_0", "--format", "records"});
    CHECK(fromfile.code == 0);
    CHECK(find(records(fromfile.out), "exact", "target", "z_0")["pi"] == "12");
}

TEST_CASE("table rows keep the bound invariant") {
    for (const auto& row : cli::table_rows("all")) CHECK(row.pi_upper == floor(row.our_lambda) + 1);
    CHECK(cli::check_rows(cli::table_rows("Petersen")).empty());
}
