#include "pebbling/exact.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

#include "pebbling/bounds.hpp"
#include "pebbling/error.hpp"

namespace pebbling {

Solver::Solver(const Graph& g, VertexId r, SolveLimits limits) : g_(g), r_(r), limits_(limits) {
    if (g.vertex_count() > limits.max_vertices)
        throw Error(ErrorKind::BudgetExceeded, g.name() + " has " + std::to_string(g.vertex_count()) +
                                                   " vertices, oracle limit is " + std::to_string(limits.max_vertices));
    dist_ = distances_from(g, r);
    e_ = *std::max_element(dist_.begin(), dist_.end());
    moves_.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        moves_[v] = g.neighbors(v);
        std::stable_sort(moves_[v].begin(), moves_[v].end(), [&](VertexId a, VertexId b) { return dist_[a] < dist_[b]; });
    }
}

bool Solver::solvable(const Configuration& config) {
    if (config.counts.size() != g_.vertex_count())
        throw Error(ErrorKind::InvalidParameter, "configuration size does not match graph");
    if (config.total() > limits_.max_total_pebbles)
        throw Error(ErrorKind::BudgetExceeded, std::to_string(config.total()) + " pebbles exceed limit " +
                                                   std::to_string(limits_.max_total_pebbles));
    State s(g_.vertex_count(), '\0');
    for (VertexId v = 0; v < s.size(); ++v) {
        if (config.counts[v] < 0) throw Error(ErrorKind::InvalidParameter, "negative pebble count");
        s[v] = static_cast<char>(config.counts[v]);
    }
    return search(s);
}

bool Solver::dominated(const State& s) const {
    for (const State& f : antichain_) {
        bool covers = true;
        for (std::size_t i = 0; i < s.size() && covers; ++i)
            covers = static_cast<unsigned char>(f[i]) >= static_cast<unsigned char>(s[i]);
        if (covers) return true;
    }
    return false;
}

void Solver::record_failure(const State& s) {
    if (antichain_.size() >= limits_.antichain_cap) return;
    // drop entries s dominates, keeping the set an antichain of maximal failures
    std::erase_if(antichain_, [&](const State& f) {
        for (std::size_t i = 0; i < s.size(); ++i)
            if (static_cast<unsigned char>(f[i]) > static_cast<unsigned char>(s[i])) return false;
        return true;
    });
    antichain_.push_back(s);
}

bool Solver::search(State& s) {
    if (s[r_] > 0) return true;

    // weight sum(C(v) 2^-d(v,r)) never grows under moves and must reach 1
    std::int64_t potential = 0;
    for (VertexId v = 0; v < s.size(); ++v) {
        int c = static_cast<unsigned char>(s[v]);
        if (c == 0) continue;
        if (c >= (1 << dist_[v])) return true;
        potential += static_cast<std::int64_t>(c) << (e_ - dist_[v]);
    }
    if (potential < (std::int64_t{1} << e_)) return false;

    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    if (dominated(s)) return false;
    if (++states_ > limits_.max_states)
        throw Error(ErrorKind::BudgetExceeded, "state budget " + std::to_string(limits_.max_states) + " exhausted");

    bool ok = false;
    for (VertexId v = 0; v < s.size() && !ok; ++v) {
        if (static_cast<unsigned char>(s[v]) < 2) continue;
        for (VertexId u : moves_[v]) {
            s[v] = static_cast<char>(s[v] - 2);
            s[u] = static_cast<char>(s[u] + 1);
            ok = search(s);
            s[u] = static_cast<char>(s[u] - 1);
            s[v] = static_cast<char>(s[v] + 2);
            if (ok) break;
        }
    }
    if (memo_.size() >= limits_.memo_cap) memo_.clear();
    memo_.emplace(s, ok);
    if (!ok) record_failure(s);
    return ok;
}

bool is_solvable(const Graph& g, const Configuration& config, VertexId r, const SolveLimits& limits) {
    Solver solver(g, r, limits);
    return solver.solvable(config);
}

bool next_composition_colex(std::vector<int>& counts) {
    std::size_t i = 0;
    while (i < counts.size() && counts[i] == 0) ++i;
    if (i + 1 >= counts.size()) return false;
    int v = counts[i];
    counts[i] = 0;
    counts[i + 1] += 1;
    counts[0] = v - 1;
    return true;
}

namespace {

struct Scan {
    std::optional<Configuration> first_unsolvable;
    std::uint64_t configurations = 0;
};

// Configurations of `total` pebbles off r whose last free vertex holds `last` pebbles, in colex order.
Scan scan_slice(Solver& solver, const Graph& g, VertexId r, const std::vector<VertexId>& free, int total, int last) {
    Scan out;
    Configuration config(g.vertex_count());
    const std::size_t m = free.size();
    std::vector<int> head(m - 1, 0);
    if (m == 1) {
        if (last != total) return out;
    } else {
        head[0] = total - last;
    }
    while (true) {
        for (std::size_t i = 0; i + 1 < m; ++i) config.counts[free[i]] = head[i];
        config.counts[free[m - 1]] = last;
        ++out.configurations;
        if (!solver.solvable(config)) {
            out.first_unsolvable = config;
            return out;
        }
        if (m == 1 || !next_composition_colex(head)) break;
    }
    (void)r;
    return out;
}

Scan scan_size(const Graph& g, VertexId r, const std::vector<VertexId>& free, int total, std::vector<Solver>& solvers,
               unsigned jobs) {
    if (jobs <= 1) {
        Scan out;
        for (int last = 0; last <= total; ++last) {
            Scan part = scan_slice(solvers[0], g, r, free, total, last);
            out.configurations += part.configurations;
            if (part.first_unsolvable) {
                out.first_unsolvable = part.first_unsolvable;
                return out;
            }
        }
        return out;
    }
    // slices ordered by the last count are contiguous in colex order; keep the smallest slice that fails
    std::atomic<int> best_slice{total + 1};
    std::vector<Scan> results(static_cast<std::size_t>(total) + 1);
    std::mutex error_mutex;
    std::exception_ptr error;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            try {
                for (int last = static_cast<int>(w); last <= total; last += static_cast<int>(jobs)) {
                    if (last > best_slice.load()) break;
                    results[static_cast<std::size_t>(last)] = scan_slice(solvers[w], g, r, free, total, last);
                    if (results[static_cast<std::size_t>(last)].first_unsolvable) {
                        int cur = best_slice.load();
                        while (last < cur && !best_slice.compare_exchange_weak(cur, last)) {
                        }
                        break;
                    }
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    for (auto& t : workers) t.join();
    if (error) std::rethrow_exception(error);
    Scan out;
    for (const Scan& s : results) out.configurations += s.configurations;
    if (best_slice.load() <= total) out.first_unsolvable = results[static_cast<std::size_t>(best_slice.load())].first_unsolvable;
    return out;
}

} // namespace

ExactResult pebbling_number_target(const Graph& g, VertexId r, const SolveLimits& limits, unsigned jobs) {
    if (jobs == 0) jobs = 1;
    std::vector<Solver> solvers;
    for (unsigned w = 0; w < jobs; ++w) solvers.emplace_back(g, r, limits);
    std::vector<VertexId> free;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (v != r) free.push_back(v);

    ExactResult result;
    if (free.empty()) {
        // single vertex: one pebble is needed
        result.pi = 1;
        result.witness_unsolvable = Configuration(g.vertex_count());
        return result;
    }
    const auto lower = static_cast<int>(target_basic_lower(g, r));
    const auto upper = static_cast<int>(basic_bounds(g).upper);

    // below the lower bound an unsolvable configuration must exist; take the colex-first one
    Scan below = scan_size(g, r, free, lower - 1, solvers, jobs);
    result.configurations += below.configurations;
    if (!below.first_unsolvable)
        throw Error(ErrorKind::InternalInconsistency, "no unsolvable configuration below the basic lower bound");
    result.witness_unsolvable = *below.first_unsolvable;

    // solvability is monotone in each count, so the first size with no failure is pi
    for (int t = lower;; ++t) {
        if (t > upper) throw Error(ErrorKind::InternalInconsistency, "search passed the basic upper bound");
        if (t > limits.max_total_pebbles)
            throw Error(ErrorKind::BudgetExceeded, "size " + std::to_string(t) + " exceeds pebble limit");
        Scan scan = scan_size(g, r, free, t, solvers, jobs);
        result.configurations += scan.configurations;
        if (!scan.first_unsolvable) {
            result.pi = t;
            return result;
        }
        result.witness_unsolvable = *scan.first_unsolvable;
    }
}

int pebbling_number(const Graph& g, const SolveLimits& limits, const std::optional<std::vector<VertexId>>& targets,
                    unsigned jobs) {
    std::vector<VertexId> all;
    if (!targets)
        for (VertexId v = 0; v < g.vertex_count(); ++v) all.push_back(v);
    int best = 0;
    for (VertexId r : targets ? *targets : all) best = std::max(best, pebbling_number_target(g, r, limits, jobs).pi);
    return best;
}

namespace {

void check_configuration(const Certificate& cert, const std::vector<Rational>& totals, const Configuration& config,
                         Lemma1Report& report) {
    ++report.unsolvable_checked;
    const auto& strategies = cert.strategies();
    for (std::size_t i = 0; i < strategies.size(); ++i) {
        Rational w = config_weight(strategies[i], config);
        if (totals[i] > 0) report.tightest_ratio = std::max(report.tightest_ratio, w / totals[i]);
        if (w > totals[i]) {
            if (report.violations == 0) {
                report.first_violation = config;
                report.violating_strategy = i;
            }
            ++report.violations;
        }
    }
}

std::uint64_t count_configurations(std::size_t vertices, int max_total, std::uint64_t stop) {
    // sum over t <= max_total of C(t + vertices - 1, vertices - 1) = C(max_total + vertices, vertices)
    long double c = 1;
    for (std::size_t i = 1; i <= vertices; ++i) {
        c = c * static_cast<long double>(max_total + static_cast<int>(i)) / static_cast<long double>(i);
        if (c > static_cast<long double>(stop)) return stop + 1;
    }
    return static_cast<std::uint64_t>(c + 0.5L);
}

} // namespace

Lemma1Report lemma1_check(const Certificate& cert, const SolveLimits& limits, const Lemma1Options& opts) {
    auto violations = validate_certificate(cert);
    if (!violations.empty())
        throw Error(ErrorKind::InvalidCertificate, "refusing to check an invalid certificate: " + violations.front().message);
    const Graph& g = cert.graph();
    const VertexId r = cert.root();
    std::vector<Rational> totals;
    for (const Strategy& s : cert.strategies()) totals.push_back(total_weight(s));

    Lemma1Report report;
    report.pi = pebbling_number_target(g, r, limits).pi;
    std::vector<VertexId> free;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (v != r) free.push_back(v);

    Solver solver(g, r, limits);
    bool exhaustive = opts.exhaustive;
    if (exhaustive && count_configurations(free.size(), report.pi - 1, opts.max_configurations) > opts.max_configurations) {
        exhaustive = false;
        report.downgraded = true;
    }
    if (exhaustive) {
        try {
            Configuration config(g.vertex_count());
            for (int t = 0; t < report.pi; ++t) {
                std::vector<int> counts(free.size(), 0);
                counts[0] = t;
                do {
                    for (std::size_t i = 0; i < free.size(); ++i) config.counts[free[i]] = counts[i];
                    ++report.configurations_checked;
                    if (!solver.solvable(config)) check_configuration(cert, totals, config, report);
                } while (next_composition_colex(counts));
            }
            report.exhaustive = true;
            return report;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BudgetExceeded) throw;
            report.downgraded = true;
        }
    }

    report.exhaustive = false;
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<int> size_dist(0, report.pi - 1);
    std::uniform_int_distribution<std::size_t> vertex_dist(0, free.size() - 1);
    Solver sampler(g, r, limits);
    for (std::uint64_t i = 0; i < opts.samples; ++i) {
        Configuration config(g.vertex_count());
        int t = size_dist(rng);
        for (int p = 0; p < t; ++p) ++config.counts[free[vertex_dist(rng)]];
        ++report.configurations_checked;
        if (!sampler.solvable(config)) check_configuration(cert, totals, config, report);
    }
    return report;
}

std::string format_configuration(const Graph& g, const Configuration& c) {
    std::string out;
    for (VertexId v = 0; v < c.counts.size(); ++v)
        if (c.counts[v] != 0) out += (out.empty() ? "" : " ") + g.label(v) + ":" + std::to_string(c.counts[v]);
    return out.empty() ? "(empty)" : out;
}

} // namespace pebbling
