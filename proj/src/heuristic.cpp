#include "pebbling/heuristic.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "pebbling/error.hpp"

namespace pebbling {

namespace {

// Dense working copy of a strategy; `in` marks non-root tree vertices.
struct Tree {
    std::vector<VertexId> parent;
    std::vector<Rational> weight;
    std::vector<char> in;
};

struct Context {
    GraphPtr graph;
    VertexId root;
    int e = 0;
    std::vector<int> dist;
    std::vector<VertexId> neighbors;
    std::vector<VertexId> peripheral;
    std::vector<std::vector<int>> dist_avoiding; // per neighbour, distances in G - r

    Context(GraphPtr g, VertexId r) : graph(std::move(g)), root(r) {
        dist = distances_from(*graph, r);
        e = *std::max_element(dist.begin(), dist.end());
        neighbors = graph->neighbors(r);
        for (VertexId v = 0; v < graph->vertex_count(); ++v)
            if (dist[v] == e) peripheral.push_back(v);
        for (VertexId j : neighbors) dist_avoiding.push_back(distances_from(*graph, j, {r}));
    }

    std::size_t n() const { return graph->vertex_count(); }
    const std::string& label(VertexId v) const { return graph->label(v); }

    // A peripheral vertex must be reachable from every neighbour unless it is one itself.
    bool pair_usable(std::size_t ji, VertexId u) const {
        if (dist_avoiding[ji][u] != kUnreachable) return true;
        if (e == 1) return false;
        throw Error(ErrorKind::PeripheralUnreachable,
                    label(u) + " cannot be reached from " + label(neighbors[ji]) + " without " + label(root));
    }
};

Tree to_tree(const Strategy& s) {
    const std::size_t n = s.graph().vertex_count();
    Tree t{std::vector<VertexId>(n, kNoVertex), std::vector<Rational>(n, Rational(0)), std::vector<char>(n, 0)};
    for (VertexId v = 0; v < n; ++v) {
        if (v == s.root() || !s.contains(v)) continue;
        t.parent[v] = s.parent(v);
        t.weight[v] = s.weight(v);
        t.in[v] = 1;
    }
    return t;
}

Strategy to_strategy(const Context& ctx, const Tree& t) {
    Strategy s(ctx.graph, ctx.root);
    // parents before children keeps add_edge happy regardless of id order
    for (VertexId v = 0; v < ctx.n(); ++v)
        if (t.in[v]) s.add_edge(t.parent[v], v);
    for (VertexId v = 0; v < ctx.n(); ++v)
        if (t.in[v]) s.set_weight(v, t.weight[v]);
    return s;
}

Tree trunk_tree(const Context& ctx, const std::vector<Path>& paths) {
    const std::size_t n = ctx.n();
    Tree t{std::vector<VertexId>(n, kNoVertex), std::vector<Rational>(n, Rational(0)), std::vector<char>(n, 0)};
    std::vector<std::size_t> position(n, 0);
    for (const Path& p : paths)
        for (std::size_t i = 0; i < p.size(); ++i) {
            VertexId v = p[i];
            if (!t.in[v] || i < position[v]) {
                t.in[v] = 1;
                position[v] = i;
                t.parent[v] = i > 0 ? p[i - 1] : ctx.root;
            }
        }
    for (VertexId v = 0; v < n; ++v)
        if (t.in[v]) t.weight[v] = pow2(ctx.e - 1 - static_cast<int>(position[v]));
    return t;
}

std::vector<Rational> combined(const Context& ctx, const std::vector<Tree>& trees) {
    std::vector<Rational> c(ctx.n(), Rational(0));
    for (const Tree& t : trees)
        for (VertexId v = 0; v < ctx.n(); ++v)
            if (t.in[v]) c[v] += t.weight[v];
    return c;
}

Rational surplus(const Context& ctx, const std::vector<Rational>& c, const Rational& omega) {
    Rational sum(0);
    for (VertexId v = 0; v < ctx.n(); ++v)
        if (v != ctx.root && c[v] > omega) sum += c[v] - omega;
    return sum;
}

Rational lambda_of(const Context& ctx, const std::vector<Tree>& trees) {
    auto c = combined(ctx, trees);
    Rational total(0);
    std::optional<Rational> mn;
    for (VertexId v = 0; v < ctx.n(); ++v) {
        if (v == ctx.root) continue;
        total += c[v];
        if (!mn || c[v] < *mn) mn = c[v];
    }
    if (!mn || *mn <= 0) throw Error(ErrorKind::ZeroMinWeight, "uncovered vertex");
    return total / *mn;
}

std::vector<Tree> trees_for(const Context& ctx, const TrunkSelection& sel) {
    std::vector<Tree> out;
    for (const auto& paths : sel.paths) out.push_back(trunk_tree(ctx, paths));
    return out;
}

std::string describe_path(const Context& ctx, const Path& p) {
    std::string out;
    for (VertexId v : p) out += (out.empty() ? "" : ",") + ctx.label(v);
    return out;
}

void note(DecisionLog* log, std::string line) {
    if (log) log->push_back(std::move(line));
}

std::vector<Tree> fill(const Context& ctx, std::vector<Tree> trees, const Rational& omega, DecisionLog* log) {
    auto c = combined(ctx, trees);
    std::vector<VertexId> order;
    for (VertexId v = 0; v < ctx.n(); ++v)
        if (v != ctx.root) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return std::make_pair(-ctx.dist[a], a) < std::make_pair(-ctx.dist[b], b);
    });
    std::vector<VertexId> pending;
    for (VertexId v : order)
        if (c[v] < omega) pending.push_back(v);

    bool progress = true;
    while (!pending.empty() && progress) {
        progress = false;
        std::vector<VertexId> rest;
        for (VertexId s : pending) {
            Rational deficit = omega - c[s];
            // branches: hang s below a neighbour already in a strategy that lacks s
            while (deficit > 0) {
                std::optional<std::tuple<Rational, Rational, std::size_t, VertexId>> best;
                for (std::size_t ti = 0; ti < trees.size(); ++ti) {
                    const Tree& t = trees[ti];
                    if (t.in[s]) continue;
                    for (VertexId p : ctx.graph->neighbors(s)) {
                        if (p == ctx.root || !t.in[p]) continue;
                        Rational a = t.weight[p] / 2;
                        if (a <= 0) continue;
                        auto key = std::make_tuple(-std::min(a, deficit), -a, ti, p);
                        if (!best || key < *best) best = key;
                    }
                }
                if (!best) break;
                auto [neg_amount, neg_a, ti, p] = *best;
                Rational amount = -neg_amount;
                trees[ti].in[s] = 1;
                trees[ti].parent[s] = p;
                trees[ti].weight[s] = amount;
                c[s] += amount;
                deficit -= amount;
                progress = true;
                note(log, "branch T" + std::to_string(ti + 1) + " " + ctx.label(p) + "-" + ctx.label(s) + " weight " +
                              to_string(amount));
            }
            if (deficit <= 0) continue;

            // raise s where it already sits, lifting ancestors as the halving law demands
            std::optional<std::pair<Rational, std::size_t>> best_key;
            std::vector<Rational> best_weights;
            for (std::size_t ti = 0; ti < trees.size(); ++ti) {
                const Tree& t = trees[ti];
                if (!t.in[s]) continue;
                std::vector<Rational> w = t.weight;
                w[s] += deficit;
                for (VertexId v = s; t.parent[v] != ctx.root; v = t.parent[v]) {
                    VertexId p = t.parent[v];
                    if (w[p] < 2 * w[v]) w[p] = 2 * w[v];
                }
                Rational cost(0);
                for (VertexId v = 0; v < ctx.n(); ++v) {
                    if (w[v] == t.weight[v]) continue;
                    Rational before = c[v], after = c[v] - t.weight[v] + w[v];
                    cost += std::max(Rational(0), after - omega) - std::max(Rational(0), before - omega);
                }
                auto key = std::make_pair(cost, ti);
                if (!best_key || key < *best_key) {
                    best_key = key;
                    best_weights = std::move(w);
                }
            }
            if (!best_key) {
                rest.push_back(s);
                continue;
            }
            Tree& t = trees[best_key->second];
            for (VertexId v = 0; v < ctx.n(); ++v) {
                if (best_weights[v] == t.weight[v]) continue;
                c[v] += best_weights[v] - t.weight[v];
                note(log, "raise T" + std::to_string(best_key->second + 1) + " " + ctx.label(v) + " " +
                              to_string(t.weight[v]) + " -> " + to_string(best_weights[v]));
            }
            t.weight = std::move(best_weights);
            progress = true;
        }
        pending = std::move(rest);
    }
    if (!pending.empty()) {
        std::string names;
        for (VertexId v : pending) names += " " + ctx.label(v);
        throw Error(ErrorKind::CannotCover, "no strategy can reach" + names);
    }
    return trees;
}

struct State {
    TrunkSelection selection;
    std::vector<Tree> trunks;
    std::vector<Tree> filled;
    Rational lambda;
};

std::optional<State> evaluate(const Context& ctx, const TrunkSelection& sel, std::vector<Tree> trunks,
                              const Rational& omega) {
    try {
        auto filled = fill(ctx, trunks, omega, nullptr);
        Rational lam = lambda_of(ctx, filled);
        return State{sel, std::move(trunks), std::move(filled), lam};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::CannotCover) return std::nullopt;
        throw;
    }
}

Construction to_construction(const Context& ctx, const State& st) {
    std::vector<Strategy> trunks;
    for (const Tree& t : st.trunks) trunks.push_back(to_strategy(ctx, t));
    Certificate cert(ctx.graph, ctx.root);
    for (const Tree& t : st.filled) cert.add(to_strategy(ctx, t));
    return {st.selection, std::move(trunks), std::move(cert), st.lambda};
}

Tree reduce_tree(const Context& ctx, const Tree& t, VertexId u, const Rational& new_weight, int ancestors) {
    Tree out = t;
    out.weight[u] = new_weight;
    auto heaviest_child = [&](VertexId p) {
        Rational mc(0);
        for (VertexId ch = 0; ch < ctx.n(); ++ch)
            if (out.in[ch] && out.parent[ch] == p) mc = std::max(mc, out.weight[ch]);
        return mc;
    };
    VertexId v = u;
    for (int step = 0; step < ancestors && out.parent[v] != ctx.root; ++step) {
        VertexId p = out.parent[v];
        out.weight[p] = 2 * heaviest_child(p);
        v = p;
    }
    return out;
}

} // namespace

MinWeightFormula min_weight_formula(const Graph& g, VertexId r) {
    Context ctx(std::make_shared<const Graph>(g), r);
    MinWeightFormula out;
    std::optional<Rational> best;
    for (VertexId u : ctx.peripheral) {
        Rational sum(0);
        for (std::size_t ji = 0; ji < ctx.neighbors.size(); ++ji)
            if (ctx.pair_usable(ji, u)) sum += pow2(ctx.e - 1 - ctx.dist_avoiding[ji][u]);
        if (!best || sum < *best) {
            best = sum;
            out.p_min.clear();
        }
        if (sum == *best) out.p_min.push_back(u);
    }
    out.omega_min = *best;
    return out;
}

Strategy trunk_strategy(GraphPtr g, VertexId r, const std::vector<Path>& paths) {
    Context ctx(std::move(g), r);
    return to_strategy(ctx, trunk_tree(ctx, paths));
}

TrunkSelection select_trunks(GraphPtr g, VertexId r, const Rational& omega_min, const HeuristicOptions& opts,
                             DecisionLog* log) {
    if (opts.path_combination_cap < 1) throw Error(ErrorKind::InvalidParameter, "path combination cap must be >= 1");
    Context ctx(std::move(g), r);
    const Graph& graph = *ctx.graph;

    struct Pair {
        std::size_t ji;
        VertexId u;
        std::vector<Path> options;
    };
    std::vector<Pair> pairs;
    std::size_t product = 1;
    bool overflow = false;
    for (std::size_t ji = 0; ji < ctx.neighbors.size(); ++ji)
        for (VertexId u : ctx.peripheral) {
            if (!ctx.pair_usable(ji, u)) continue;
            auto options = all_shortest_paths_avoiding(graph, ctx.neighbors[ji], u, {r});
            if (!overflow) {
                if (product > opts.path_combination_cap / options.size()) overflow = true;
                else product *= options.size();
            }
            pairs.push_back({ji, u, std::move(options)});
        }

    TrunkSelection sel;
    sel.neighbors = ctx.neighbors;
    sel.paths.assign(ctx.neighbors.size(), {});
    // neighbours with no usable pair still form a one-vertex trunk
    auto with_singletons = [&](TrunkSelection s) {
        for (std::size_t ji = 0; ji < s.paths.size(); ++ji)
            if (s.paths[ji].empty()) s.paths[ji].push_back({ctx.neighbors[ji]});
        return s;
    };

    if (!overflow) {
        sel.exhaustive = true;
        sel.combinations = product;
        std::vector<std::size_t> index(pairs.size(), 0);
        std::optional<Rational> best;
        TrunkSelection best_sel;
        while (true) {
            TrunkSelection cand = sel;
            for (std::size_t i = 0; i < pairs.size(); ++i) cand.paths[pairs[i].ji].push_back(pairs[i].options[index[i]]);
            cand = with_singletons(std::move(cand));
            Rational s = surplus(ctx, combined(ctx, trees_for(ctx, cand)), omega_min);
            if (!best || s < *best) {
                best = s;
                best_sel = std::move(cand);
            }
            // odometer, last pair fastest
            std::size_t i = pairs.size();
            while (i > 0 && ++index[i - 1] == pairs[i - 1].options.size()) index[--i] = 0;
            if (i == 0) break;
        }
        note(log, "trunks: exhaustive over " + std::to_string(product) + " combinations, surplus " + to_string(*best));
        sel = std::move(best_sel);
    } else {
        sel.exhaustive = false;
        note(log, "trunks: greedy, path combinations exceed cap " + std::to_string(opts.path_combination_cap));
        // peripherals farthest first (all share e(r)), then by id; pairs are already in that order per neighbour
        std::vector<VertexId> order = ctx.peripheral;
        std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return ctx.dist[a] > ctx.dist[b]; });
        for (VertexId u : order)
            for (const Pair& pair : pairs) {
                if (pair.u != u) continue;
                std::optional<Rational> best;
                std::size_t pick = 0;
                for (std::size_t k = 0; k < pair.options.size(); ++k) {
                    TrunkSelection cand = sel;
                    cand.paths[pair.ji].push_back(pair.options[k]);
                    Rational s = surplus(ctx, combined(ctx, trees_for(ctx, with_singletons(cand))), omega_min);
                    if (!best || s < *best) {
                        best = s;
                        pick = k;
                    }
                }
                sel.paths[pair.ji].push_back(pair.options[pick]);
            }
        sel = with_singletons(std::move(sel));
    }
    for (std::size_t ji = 0; ji < sel.paths.size(); ++ji)
        for (const Path& p : sel.paths[ji])
            note(log, "trunk T" + std::to_string(ji + 1) + " path " + describe_path(ctx, p));
    return sel;
}

std::vector<Strategy> build_trunks(GraphPtr g, VertexId r, const HeuristicOptions& opts, DecisionLog* log) {
    auto formula = min_weight_formula(*g, r);
    auto sel = select_trunks(g, r, formula.omega_min, opts, log);
    Context ctx(std::move(g), r);
    std::vector<Strategy> out;
    for (const Tree& t : trees_for(ctx, sel)) out.push_back(to_strategy(ctx, t));
    return out;
}

Certificate fill_branches(GraphPtr g, VertexId r, const std::vector<Strategy>& trunks, const Rational& omega_min,
                          DecisionLog* log) {
    Context ctx(std::move(g), r);
    std::vector<Tree> trees;
    for (const Strategy& s : trunks) trees.push_back(to_tree(s));
    trees = fill(ctx, std::move(trees), omega_min, log);
    Certificate cert(ctx.graph, r);
    for (const Tree& t : trees) cert.add(to_strategy(ctx, t));
    return cert;
}

Strategy reduce_weight(const Strategy& s, VertexId u, const Rational& new_weight, int ancestors) {
    Context ctx(s.graph_ptr(), s.root());
    if (!s.contains(u) || u == s.root())
        throw Error(ErrorKind::InvalidParameter, ctx.label(u) + " is not a non-root tree vertex");
    return to_strategy(ctx, reduce_tree(ctx, to_tree(s), u, new_weight, ancestors));
}

Construction construct(GraphPtr g, VertexId r, const TrunkSelection& selection, const Rational& omega_min,
                       DecisionLog* log) {
    Context ctx(std::move(g), r);
    auto trunks = trees_for(ctx, selection);
    auto filled = fill(ctx, trunks, omega_min, log);
    Rational lam = lambda_of(ctx, filled);
    return to_construction(ctx, State{selection, std::move(trunks), std::move(filled), lam});
}

Construction refine(GraphPtr g, VertexId r, Construction start, const Rational& omega_min,
                    const HeuristicOptions& opts, DecisionLog* log) {
    Context ctx(std::move(g), r);
    State cur{start.selection, {}, {}, start.lambda};
    for (const Strategy& s : start.trunks) cur.trunks.push_back(to_tree(s));
    for (const Strategy& s : start.certificate.strategies()) cur.filled.push_back(to_tree(s));

    for (int pass = 0; pass < opts.refine_passes; ++pass) {
        bool improved = false;

        if (opts.enable_weight_reduction) {
            std::optional<State> best;
            std::string what;
            auto c = combined(ctx, cur.trunks);
            for (VertexId u : ctx.peripheral) {
                Rational extra = c[u] - omega_min;
                if (extra <= 0) continue;
                for (std::size_t ti = 0; ti < cur.trunks.size(); ++ti) {
                    const Tree& t = cur.trunks[ti];
                    if (!t.in[u]) continue;
                    Rational heaviest(0);
                    for (VertexId ch = 0; ch < ctx.n(); ++ch)
                        if (t.in[ch] && t.parent[ch] == u) heaviest = std::max(heaviest, t.weight[ch]);
                    Rational lowered = std::max(t.weight[u] - extra, 2 * heaviest);
                    if (lowered == t.weight[u]) continue;
                    for (int depth = 0; depth <= ctx.e; ++depth) {
                        auto trunks = cur.trunks;
                        trunks[ti] = reduce_tree(ctx, t, u, lowered, depth);
                        auto st = evaluate(ctx, cur.selection, std::move(trunks), omega_min);
                        if (st && st->lambda < cur.lambda && (!best || st->lambda < best->lambda)) {
                            best = std::move(st);
                            what = "reduce T" + std::to_string(ti + 1) + " " + ctx.label(u) + " to " + to_string(lowered) +
                                   " with " + std::to_string(depth) + " ancestors";
                        }
                    }
                }
            }
            if (best) {
                cur = std::move(*best);
                improved = true;
                note(log, what + ", lambda " + to_decimal_string(cur.lambda));
            }
        }

        if (opts.enable_path_replacement) {
            std::optional<State> best;
            std::string what;
            for (VertexId u : ctx.peripheral)
                for (std::size_t ji = 0; ji < ctx.neighbors.size(); ++ji) {
                    int d = ctx.dist_avoiding[ji][u];
                    if (d == kUnreachable) continue;
                    auto paths = simple_paths_avoiding(*ctx.graph, ctx.neighbors[ji], u, {r}, d + opts.extra_path_length);
                    const auto& mine = cur.selection.paths[ji];
                    for (const Path& p : paths) {
                        if (std::find(mine.begin(), mine.end(), p) != mine.end()) continue;
                        TrunkSelection sel = cur.selection;
                        auto& list = sel.paths[ji];
                        list.erase(std::remove_if(list.begin(), list.end(), [&](const Path& q) { return q.back() == u; }),
                                   list.end());
                        list.push_back(p);
                        auto st = evaluate(ctx, sel, trees_for(ctx, sel), omega_min);
                        if (st && st->lambda < cur.lambda && (!best || st->lambda < best->lambda)) {
                            best = std::move(st);
                            what = "replace T" + std::to_string(ji + 1) + " path to " + ctx.label(u) + " by " +
                                   describe_path(ctx, p);
                        }
                    }
                }
            if (best) {
                cur = std::move(*best);
                improved = true;
                note(log, what + ", lambda " + to_decimal_string(cur.lambda));
            }
        }

        if (!improved) break;
    }
    return to_construction(ctx, cur);
}

HeuristicReport run_heuristic(GraphPtr g, VertexId r, const HeuristicOptions& opts) {
    HeuristicReport report{Certificate(g, r), {}, {}, {}, {}, {}, true};
    auto formula = min_weight_formula(*g, r);
    report.omega_min_formula = formula.omega_min;
    report.p_min = formula.p_min;
    note(&report.decisions, "omega_min from peripheral distances: " + to_string(formula.omega_min));

    auto sel = select_trunks(g, r, formula.omega_min, opts, &report.decisions);
    report.exhaustive_trunks = sel.exhaustive;
    Construction built = construct(g, r, sel, formula.omega_min, &report.decisions);
    note(&report.decisions, "after branches: lambda " + to_decimal_string(built.lambda));
    if (opts.enable_weight_reduction || opts.enable_path_replacement)
        built = refine(g, r, std::move(built), formula.omega_min, opts, &report.decisions);

    auto violations = validate_certificate(built.certificate);
    if (!violations.empty())
        throw Error(ErrorKind::InternalInconsistency, "heuristic produced an invalid certificate: " + violations.front().message);
    report.certificate = std::move(built.certificate);
    report.lambda = wfl_ratio(report.certificate);
    if (report.lambda != built.lambda)
        throw Error(ErrorKind::InternalInconsistency, "lambda bookkeeping mismatch");
    report.surplus = surplus_decomposition(report.certificate);
    return report;
}

} // namespace pebbling
