#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pebbling/bounds.hpp"
#include "pebbling/certificate.hpp"
#include "pebbling/cli.hpp"
#include "pebbling/error.hpp"
#include "pebbling/exact.hpp"
#include "pebbling/families.hpp"
#include "pebbling/heuristic.hpp"

namespace pebbling::cli {

namespace {

struct LoadedGraph {
    GraphPtr graph;
    std::vector<std::string> classes; // representative targets, empty for plain files
    std::optional<Family> family;
    int parameter = 0;
};

LoadedGraph load_graph_arg(const std::string& spec) {
    if (is_family_name(spec)) {
        FamilyGraph fg = family_by_name(spec);
        return {std::make_shared<const Graph>(std::move(fg.graph)), fg.target_classes, fg.family, fg.parameter};
    }
    if (!std::filesystem::exists(spec))
        throw Error(ErrorKind::UnknownLabel, "'" + spec + "' is neither a family name nor a graph file");
    return {std::make_shared<const Graph>(load_graph_file(spec)), {}, std::nullopt, 0};
}

struct TargetChoice {
    std::string target;
    bool all = false;
    bool classes = false;
};

void add_target_options(CLI::App* sub, TargetChoice& t) {
    auto* one = sub->add_option("--target", t.target, "target vertex label");
    auto* all = sub->add_flag("--all-targets", t.all, "every vertex as target");
    auto* cls = sub->add_flag("--class-targets", t.classes, "one target per vertex class of the family");
    one->excludes(all)->excludes(cls);
    all->excludes(cls);
}

// Without an explicit choice families use their class targets and files use every vertex.
std::vector<VertexId> pick_targets(const LoadedGraph& lg, const TargetChoice& t) {
    const Graph& g = *lg.graph;
    std::vector<VertexId> out;
    if (!t.target.empty()) return {g.id(t.target)};
    if (t.all || lg.classes.empty()) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) out.push_back(v);
        return out;
    }
    for (const auto& label : lg.classes) out.push_back(g.id(label));
    return out;
}

std::string dec(const Rational& x) { return to_decimal_string(x); }

template <typename T>
std::string join(const std::vector<T>& items, const std::string& sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < items.size(); ++i) os << (i ? sep : "") << items[i];
    return os.str();
}

std::string labels_of(const Graph& g, const std::vector<VertexId>& vs) {
    std::vector<std::string> names;
    for (VertexId v : vs) names.push_back(g.label(v));
    return join(names);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double x, int digits = 3) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << x;
    return os.str();
}

// Reference certificates exist for the snark families and for small cubes.
std::optional<Certificate> reference_certificate_for(const LoadedGraph& lg, VertexId r) {
    if (!lg.family) return std::nullopt;
    const std::string label = lg.graph->label(r);
    try {
        switch (*lg.family) {
        case Family::Petersen: return reference_certificate(ReferenceFamily::Petersen, 0, label);
        case Family::Flower: return reference_certificate(ReferenceFamily::Flower, lg.parameter, label);
        case Family::Blanusa1: return reference_certificate(ReferenceFamily::Blanusa1, 0, label);
        case Family::Blanusa2: return reference_certificate(ReferenceFamily::Blanusa2, 0, label);
        case Family::Cube:
            if (label != lg.graph->label(0) || lg.parameter < 2 || lg.parameter > 7) return std::nullopt;
            return cube_certificate(lg.parameter);
        }
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnsupportedTarget) throw;
    }
    return std::nullopt;
}

struct Session {
    std::ostream& out;
    std::ostream& err;
    Format format = Format::Human;

    void show(const Table& t) { render(out, t, format); }
    void gap() {
        if (format != Format::Records) out << "\n";
    }
};

// ---- gen ----

struct GenArgs {
    std::string family;
    std::string out_file;
};

int cmd_gen(Session& s, const GenArgs& a) {
    FamilyGraph fg = family_by_name(a.family);
    const std::string text = serialize_graph(fg.graph);
    if (a.out_file.empty()) {
        s.out << text;
    } else {
        std::ofstream f(a.out_file);
        if (!f) throw Error(ErrorKind::IoError, "cannot write " + a.out_file);
        f << text;
        s.err << "wrote " << a.out_file << " (" << fg.graph.vertex_count() << " vertices, " << fg.graph.edge_count()
              << " edges)\n";
    }
    return kOk;
}

// ---- bounds ----

struct GraphArgs {
    std::string graph;
    TargetChoice targets;
};

int cmd_bounds(Session& s, const GraphArgs& a) {
    LoadedGraph lg = load_graph_arg(a.graph);
    const Graph& g = *lg.graph;
    const auto targets = pick_targets(lg, a.targets);
    const BasicBounds basic = basic_bounds(g);

    Table per{"bounds", {"target", "ecc", "rings", "I_sur", "I_no", "pi_lower", "thm1_eq2", "thm1_eq3"}, {}};
    Rational best(0);
    for (VertexId r : targets) {
        BoundReport b = bound_report(g, r);
        per.rows.push_back({g.label(r), std::to_string(b.eccentricity), join(b.ring_sizes), join(b.i_sur),
                            join(b.i_no), std::to_string(b.basic_pi_lower), dec(b.lambda_lower_eq2),
                            dec(b.lambda_lower_eq3)});
        best = std::max(best, b.lambda_lower_eq2);
    }
    Table summary{"graph",
                  {"graph", "vertices", "edges", "diameter", "basic_lower", "basic_upper", "thm1_graph"},
                  {{g.name(), std::to_string(g.vertex_count()), std::to_string(g.edge_count()),
                    std::to_string(diameter(g)), std::to_string(basic.lower), std::to_string(basic.upper), dec(best)}},
                  true};
    s.show(summary);
    s.gap();
    s.show(per);
    return kOk;
}

// ---- heuristic ----

struct HeuristicArgs {
    GraphArgs graph;
    std::size_t cap = HeuristicOptions{}.path_combination_cap;
    int extra = HeuristicOptions{}.extra_path_length;
    bool no_refine = false;
    std::string emit;
    bool log_decisions = false;
};

int cmd_heuristic(Session& s, const HeuristicArgs& a) {
    LoadedGraph lg = load_graph_arg(a.graph.graph);
    const Graph& g = *lg.graph;
    const auto targets = pick_targets(lg, a.graph.targets);
    if (!a.emit.empty() && targets.size() != 1)
        throw Error(ErrorKind::InvalidParameter, "--emit needs a single --target");

    HeuristicOptions opts;
    opts.path_combination_cap = a.cap;
    opts.extra_path_length = a.extra;
    if (a.no_refine) opts.enable_weight_reduction = opts.enable_path_replacement = false;

    Table t{"heuristic", {"target", "omega_formula", "P_min", "trunks", "lambda", "omega_min", "total", "pi_upper", "thm1", "seconds"}, {}};
    Rational worst(0);
    for (VertexId r : targets) {
        auto start = std::chrono::steady_clock::now();
        HeuristicReport h = run_heuristic(lg.graph, r, opts);
        const double secs = seconds_since(start);
        worst = std::max(worst, h.lambda);
        t.rows.push_back({g.label(r), dec(h.omega_min_formula), labels_of(g, h.p_min),
                          h.exhaustive_trunks ? "exhaustive" : "greedy", dec(h.lambda), dec(min_weight(h.certificate)),
                          dec(total_weight(h.certificate)), std::to_string(pebbling_upper_bound(h.certificate)),
                          dec(theorem1_lower_bound(g, r)), fixed(secs)});
        if (a.log_decisions) {
            s.err << "decisions for target " << g.label(r) << ":\n";
            for (const auto& line : h.decisions) s.err << "  " << line << "\n";
        }
        if (!a.emit.empty()) {
            std::ofstream f(a.emit);
            if (!f) throw Error(ErrorKind::IoError, "cannot write " + a.emit);
            Certificate c = h.certificate;
            c.set_graph_reference(a.graph.graph);
            f << serialize_certificate(c);
        }
    }
    s.show(t);
    if (targets.size() > 1) {
        s.gap();
        s.show(Table{"graph", {"graph", "lambda", "pi_upper"}, {{g.name(), dec(worst), std::to_string(floor(worst) + 1)}}, true});
    }
    return kOk;
}

// ---- validate ----

struct ValidateArgs {
    std::string file;
    std::string graph;
};

int cmd_validate(Session& s, const ValidateArgs& a) {
    GraphPtr graph;
    if (!a.graph.empty()) graph = load_graph_arg(a.graph).graph;
    Certificate cert = load_certificate_file(a.file, graph);
    const Graph& g = cert.graph();

    auto violations = validate_certificate(cert);
    if (!violations.empty()) {
        Table t{"violations", {"rule", "strategy", "vertex", "parent", "message"}, {}};
        for (const auto& v : violations)
            t.rows.push_back({std::string(to_string(v.rule)), std::to_string(v.strategy),
                              v.vertex == kNoVertex ? "-" : g.label(v.vertex),
                              v.parent == kNoVertex ? "-" : g.label(v.parent), v.message});
        s.show(t);
        s.err << a.file << ": " << violations.size() << " violation(s)\n";
        return kFailure;
    }

    SurplusReport sur = surplus_decomposition(cert);
    const Rational thm1 = theorem1_lower_bound(g, cert.root());
    s.show(Table{"certificate",
                 {"graph", "target", "strategies", "total", "omega_min", "lambda", "pi_upper", "thm1", "gap"},
                 {{g.name(), g.label(cert.root()), std::to_string(cert.strategies().size()), dec(total_weight(cert)),
                   dec(sur.omega_min), dec(sur.lambda), std::to_string(pebbling_upper_bound(cert)), dec(thm1),
                   dec(sur.lambda - thm1)}},
                 true});
    s.gap();
    Table surplus{"surplus", {"vertex", "weight", "surplus"}, {}};
    const auto weights = combined_weights(cert);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v == cert.root() || sur.per_vertex_surplus[v] == Rational(0)) continue;
        surplus.rows.push_back({g.label(v), dec(weights[v]), dec(sur.per_vertex_surplus[v])});
    }
    s.show(surplus);
    if (sur.lambda < thm1) {
        s.err << "lambda below the ring lower bound\n";
        return kFailure;
    }
    return kOk;
}

// ---- exact ----

struct ExactArgs {
    GraphArgs graph;
    std::uint64_t max_states = SolveLimits{}.max_states;
    unsigned jobs = 1;
};

int cmd_exact(Session& s, const ExactArgs& a) {
    LoadedGraph lg = load_graph_arg(a.graph.graph);
    const Graph& g = *lg.graph;
    const auto targets = pick_targets(lg, a.graph.targets);
    SolveLimits limits;
    limits.max_states = a.max_states;

    Table t{"exact", {"target", "basic_lower", "pi", "configurations", "witness", "seconds"}, {}};
    int best = 0;
    for (VertexId r : targets) {
        auto start = std::chrono::steady_clock::now();
        ExactResult res = pebbling_number_target(g, r, limits, a.jobs);
        best = std::max(best, res.pi);
        t.rows.push_back({g.label(r), std::to_string(target_basic_lower(g, r)), std::to_string(res.pi),
                          std::to_string(res.configurations), format_configuration(g, res.witness_unsolvable),
                          fixed(seconds_since(start))});
    }
    s.show(t);
    if (targets.size() > 1) {
        s.gap();
        s.show(Table{"graph", {"graph", "pi_over_targets"}, {{g.name(), std::to_string(best)}}, true});
    }
    return kOk;
}

// ---- lemma-check ----

struct LemmaArgs {
    std::string graph;
    std::string certificate;
    bool exhaustive = false;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::uint64_t max_states = SolveLimits{}.max_states;
};

int cmd_lemma(Session& s, const LemmaArgs& a) {
    if (!a.exhaustive && !a.samples) throw Error(ErrorKind::InvalidParameter, "choose --exhaustive or --samples N");
    if (a.samples && !a.seed) throw Error(ErrorKind::InvalidParameter, "--samples needs an explicit --rng-seed");
    GraphPtr graph;
    if (!a.graph.empty()) graph = load_graph_arg(a.graph).graph;
    Certificate cert = load_certificate_file(a.certificate, graph);
    const Graph& g = cert.graph();

    SolveLimits limits;
    limits.max_states = a.max_states;
    Lemma1Options opts;
    opts.exhaustive = a.exhaustive;
    if (a.samples) opts.samples = *a.samples;
    if (a.seed) opts.seed = *a.seed;

    auto start = std::chrono::steady_clock::now();
    Lemma1Report rep = lemma1_check(cert, limits, opts);
    std::string mode = rep.exhaustive ? "exhaustive" : "sampled";
    if (rep.downgraded) mode += " (downgraded)";
    s.show(Table{"lemma-check",
                 {"graph", "target", "pi", "mode", "configurations", "unsolvable", "violations", "tightest_ratio",
                  "seconds"},
                 {{g.name(), g.label(cert.root()), std::to_string(rep.pi), mode,
                   std::to_string(rep.configurations_checked), std::to_string(rep.unsolvable_checked),
                   std::to_string(rep.violations), dec(rep.tightest_ratio), fixed(seconds_since(start))}},
                 true});
    if (rep.violations > 0) {
        s.err << "violation: strategy " << rep.violating_strategy << " at "
              << format_configuration(g, *rep.first_violation) << "\n";
        return kFailure;
    }
    return kOk;
}

// ---- tables ----

struct TablesArgs {
    std::string selector = "all";
    std::optional<int> m;
    bool check = false;
    std::string emit_dir;
    std::string fixtures;
};

void emit_fixtures(Session& s, const std::vector<TableRow>& rows, const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const TableRow& row : rows) {
        if (row.target == "graph") continue;
        FamilyGraph fg = family_by_name(row.graph);
        const ReferenceFamily pf = fg.family == Family::Flower     ? ReferenceFamily::Flower
                               : fg.family == Family::Blanusa1 ? ReferenceFamily::Blanusa1
                               : fg.family == Family::Blanusa2 ? ReferenceFamily::Blanusa2
                                                               : ReferenceFamily::Petersen;
        const std::string path = dir + "/" + row.graph + "_" + row.target + ".cert";
        std::ofstream f(path);
        if (!f) throw Error(ErrorKind::IoError, "cannot write " + path);
        f << serialize_certificate(reference_certificate(pf, fg.parameter, row.target));
    }
    s.err << "certificates written to " << dir << "\n";
}

int cmd_tables(Session& s, const TablesArgs& a) {
    auto rows = table_rows(a.selector, a.m, a.fixtures);
    Table t{"tables", {"graph", "target", "lambda", "prior", "thm1", "pi_upper"}, {}};
    for (const TableRow& row : rows)
        t.rows.push_back({row.graph, row.target, dec(row.our_lambda), row.prior_lambda ? dec(*row.prior_lambda) : "-",
                          dec(row.thm1_lower), std::to_string(row.pi_upper)});
    s.show(t);
    if (!a.emit_dir.empty()) emit_fixtures(s, rows, a.emit_dir);
    if (a.check) {
        auto problems = check_rows(rows);
        for (const auto& p : problems) s.err << "mismatch: " << p << "\n";
        if (!problems.empty()) return kFailure;
        s.err << "check: " << rows.size() << " rows agree with the reference values\n";
    }
    return kOk;
}

// ---- pipeline ----

struct PipelineArgs {
    GraphArgs graph;
    std::uint64_t max_states = SolveLimits{}.max_states;
    unsigned jobs = 1;
};

int cmd_pipeline(Session& s, const PipelineArgs& a) {
    LoadedGraph lg = load_graph_arg(a.graph.graph);
    const Graph& g = *lg.graph;
    const auto targets = pick_targets(lg, a.graph.targets);
    const BasicBounds basic = basic_bounds(g);
    SolveLimits limits;
    limits.max_states = a.max_states;
    const bool run_exact = g.vertex_count() <= limits.max_vertices;

    Table t{"pipeline",
            {"target", "pi_lower", "thm1", "heuristic", "reference", "best", "pi_upper", "exact", "sandwich"},
            {}};
    Rational thm1_graph(0), best_graph(0);
    std::int64_t lower_graph = 0;
    int exact_graph = 0;
    bool exact_complete = true;
    bool sandwich_ok = true;
    for (VertexId r : targets) {
        const std::int64_t lower = target_basic_lower(g, r);
        const Rational thm1 = theorem1_lower_bound(g, r);
        HeuristicReport h = run_heuristic(lg.graph, r);
        std::optional<Certificate> pub = reference_certificate_for(lg, r);
        std::optional<Rational> pub_lambda;
        if (pub) pub_lambda = wfl_ratio(*pub);
        const Rational best = pub_lambda ? std::min(h.lambda, *pub_lambda) : h.lambda;
        const std::int64_t upper = floor(best) + 1;

        std::string exact = "skipped", sandwich = "-";
        if (run_exact) {
            try {
                const int pi = pebbling_number_target(g, r, limits, a.jobs).pi;
                exact = std::to_string(pi);
                const bool ok = lower <= pi && pi <= upper && pi <= floor(h.lambda) + 1;
                sandwich = std::to_string(lower) + "<=" + exact + "<=" + std::to_string(upper) + (ok ? " ok" : " VIOLATED");
                sandwich_ok = sandwich_ok && ok;
                exact_graph = std::max(exact_graph, pi);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::BudgetExceeded) throw;
                exact = "budget";
                exact_complete = false;
            }
        } else {
            exact_complete = false;
        }
        thm1_graph = std::max(thm1_graph, thm1);
        best_graph = std::max(best_graph, best);
        lower_graph = std::max(lower_graph, lower);
        t.rows.push_back({g.label(r), std::to_string(lower), dec(thm1), dec(h.lambda), pub_lambda ? dec(*pub_lambda) : "-",
                          dec(best), std::to_string(upper), exact, sandwich});
    }

    Table summary{"graph",
                  {"graph", "vertices", "diameter", "basic_lower", "basic_upper", "thm1_graph", "lambda_graph",
                   "pi_upper", "exact_pi"},
                  {{g.name(), std::to_string(g.vertex_count()), std::to_string(diameter(g)), std::to_string(basic.lower),
                    std::to_string(basic.upper), dec(thm1_graph), dec(best_graph), std::to_string(floor(best_graph) + 1),
                    !run_exact ? "skipped (size)" : exact_complete ? std::to_string(exact_graph) : "incomplete"}},
                  true};
    s.show(summary);
    s.gap();
    s.show(t);
    if (!sandwich_ok) {
        s.err << "sandwich violated\n";
        return kFailure;
    }
    return kOk;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::UnknownLabel:
    case ErrorKind::InvalidParameter:
    case ErrorKind::UnsupportedTarget: return kUsage;
    case ErrorKind::BudgetExceeded:
    case ErrorKind::ResourceLimit: return kBudget;
    default: return kFailure;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph pebbling bounds: weight-function certificates, heuristic search and exact solving", "pebbling"};
    app.require_subcommand(1);
    app.fallthrough();
    bool tsv = false;
    std::string format_name = "human";
    app.add_flag("--tsv", tsv, "tab-separated output");
    app.add_option("--format", format_name, "human, tsv or records")
        ->check(CLI::IsMember({"human", "tsv", "records"}));

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "print a family graph");
    gen_cmd->add_option("family", gen.family, "petersen, blanusa-1, blanusa-2, flower-M, cube-D")->required();
    gen_cmd->add_option("--out", gen.out_file, "write to file");

    GraphArgs bounds;
    auto* bounds_cmd = app.add_subcommand("bounds", "basic and ring lower bounds");
    bounds_cmd->add_option("--graph", bounds.graph, "family name or graph file")->required();
    add_target_options(bounds_cmd, bounds.targets);

    HeuristicArgs heur;
    auto* heur_cmd = app.add_subcommand("heuristic", "build a certificate automatically");
    heur_cmd->add_option("--graph", heur.graph.graph, "family name or graph file")->required();
    add_target_options(heur_cmd, heur.graph.targets);
    heur_cmd->add_option("--cap", heur.cap, "exhaustive trunk combinations limit");
    heur_cmd->add_option("--extra-path-length", heur.extra, "path replacement radius");
    heur_cmd->add_flag("--no-refine", heur.no_refine, "skip weight reduction and path replacement");
    heur_cmd->add_option("--emit", heur.emit, "write the certificate to a file");
    heur_cmd->add_flag("--log-decisions", heur.log_decisions, "print construction decisions to stderr");

    ValidateArgs val;
    auto* val_cmd = app.add_subcommand("validate", "check a certificate file and report its bound");
    val_cmd->add_option("file", val.file, "certificate file")->required();
    val_cmd->add_option("--graph", val.graph, "graph to use instead of the file header");

    ExactArgs ex;
    auto* ex_cmd = app.add_subcommand("exact", "exact pebbling number by exhaustive search");
    ex_cmd->add_option("--graph", ex.graph.graph, "family name or graph file")->required();
    add_target_options(ex_cmd, ex.graph.targets);
    ex_cmd->add_option("--max-states", ex.max_states, "search state budget per target");
    ex_cmd->add_option("--jobs", ex.jobs, "worker threads")->check(CLI::PositiveNumber);

    LemmaArgs lem;
    auto* lem_cmd = app.add_subcommand("lemma-check", "test the weight inequality on unsolvable configurations");
    lem_cmd->add_option("--graph", lem.graph, "graph to use instead of the certificate header");
    lem_cmd->add_option("--certificate", lem.certificate, "certificate file")->required();
    auto* exh = lem_cmd->add_flag("--exhaustive", lem.exhaustive, "every unsolvable configuration");
    auto* samples = lem_cmd->add_option("--samples", lem.samples, "random configurations");
    lem_cmd->add_option("--rng-seed", lem.seed, "seed for --samples");
    lem_cmd->add_option("--max-states", lem.max_states, "search state budget");
    exh->excludes(samples);

    TablesArgs tab;
    auto* tab_cmd = app.add_subcommand("tables", "bound tables for the snark families");
    tab_cmd->add_option("selector", tab.selector, "B2, B1, Flower, Petersen or all");
    tab_cmd->add_option("--m", tab.m, "flower size")->check(CLI::PositiveNumber);
    tab_cmd->add_flag("--check", tab.check, "compare against the reference values");
    tab_cmd->add_option("--emit-dir", tab.emit_dir, "write the certificates as files");
    tab_cmd->add_option("--fixtures", tab.fixtures, "read certificates from this directory");

    PipelineArgs pipe;
    auto* pipe_cmd = app.add_subcommand("pipeline", "bounds, heuristic, certificate and exact value together");
    pipe_cmd->add_option("--graph", pipe.graph.graph, "family name or graph file")->required();
    add_target_options(pipe_cmd, pipe.graph.targets);
    pipe_cmd->add_option("--max-states", pipe.max_states, "search state budget per target");
    pipe_cmd->add_option("--jobs", pipe.jobs, "worker threads")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    Session s{out, err, Format::Human};
    if (tsv || format_name == "tsv") s.format = Format::Tsv;
    if (format_name == "records") s.format = Format::Records;
    try {
        if (*gen_cmd) return cmd_gen(s, gen);
        if (*bounds_cmd) return cmd_bounds(s, bounds);
        if (*heur_cmd) return cmd_heuristic(s, heur);
        if (*val_cmd) return cmd_validate(s, val);
        if (*ex_cmd) return cmd_exact(s, ex);
        if (*lem_cmd) return cmd_lemma(s, lem);
        if (*tab_cmd) return cmd_tables(s, tab);
        if (*pipe_cmd) return cmd_pipeline(s, pipe);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, out, err);
}

} // namespace pebbling::cli
