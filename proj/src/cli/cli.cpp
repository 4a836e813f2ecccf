#include "lbw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "lbw/classes.hpp"
#include "lbw/driver.hpp"
#include "lbw/error.hpp"
#include "lbw/rng.hpp"
#include "lbw/sigma_rho_dp.hpp"

namespace lbw {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double x, int digits) {
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(digits);
    ss << x;
    return ss.str();
}

StartStrategy parse_starts(const std::string& s) {
    if (s == "dbfs") return StartStrategy::DoubleBFS;
    if (s == "2") return StartStrategy::SingleAndDoubleBFS;
    if (s == "all") return StartStrategy::AllVertices;
    throw Error("unknown --starts value '" + s + "' (expected dbfs, 2 or all)");
}

CandidateStrategy parse_candidates(const std::string& s) {
    if (s == "right") return CandidateStrategy::Right;
    if (s == "n2") return CandidateStrategy::TwoNeighborhood;
    throw Error("unknown --candidates value '" + s + "' (expected right or n2)");
}

Graph load_graph(const std::string& path) {
    std::ifstream probe(path);
    if (!probe) throw Error("cannot open graph file '" + path + "'");
    return read_graph_file(path);
}

std::string graph_name(const std::string& path) {
    const auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = base.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

std::vector<Vertex> load_ordering(const Graph& g, const std::string& path, std::optional<double>* declared = nullptr) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open decomposition file '" + path + "'");
    DecompositionFile file = parse_decomposition(in);
    if (declared) *declared = file.width;
    return ordering_from_labels(g, file.labels);
}

SigmaRhoSpec problem_spec(const std::string& problem, const std::string& sigma, const std::string& rho,
                          const std::string& objective) {
    if (problem != "custom") return SigmaRhoSpec::preset(problem);
    if (sigma.empty() || rho.empty()) throw Error("--problem custom needs --sigma and --rho");
    Objective obj;
    if (objective == "max")
        obj = Objective::Maximize;
    else if (objective == "min")
        obj = Objective::Minimize;
    else
        throw Error("unknown --objective '" + objective + "' (expected max or min)");
    return SigmaRhoSpec::make(MembershipSet::parse(sigma), MembershipSet::parse(rho), obj);
}

struct RunRecord {
    std::string graph;
    std::size_t n = 0;
    double density = 0.0;
    std::string strategy;
    double width = 0.0;
    std::optional<double> time_s;
    std::optional<std::size_t> nec;
    std::optional<NecBounds> bounds;
    std::string result;
};

constexpr const char* kCsvHeader = "graph,n,density,strategy,width,time_s,nec,ub1,ub2,ub3,result";

void write_record(std::ostream& out, const RunRecord& r) {
    out << r.graph << ',' << r.n << ',' << fixed(r.density, 4) << ',' << r.strategy << ',' << format_width(r.width)
        << ',' << (r.time_s ? fixed(*r.time_s, 6) : "") << ',' << (r.nec ? std::to_string(*r.nec) : "") << ',';
    if (r.bounds)
        out << fixed(r.bounds->ub1, 2) << ',' << fixed(r.bounds->ub2, 2) << ',' << fixed(r.bounds->ub3, 2);
    else
        out << ",,";
    out << ',' << r.result << '\n';
}

struct DecomposeArgs {
    std::string input, output, cuts_csv, strategy = "iun", starts = "dbfs", candidates = "n2";
    std::uint64_t seed = 0;
    double time_limit = 0.0;
    bool raw = false;
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& out) {
    const Graph g = load_graph(a.input);
    DecomposeOptions opts;
    opts.strategy = parse_strategy(a.strategy);
    opts.starts = parse_starts(a.starts);
    opts.candidates = parse_candidates(a.candidates);
    opts.seed = a.seed;
    if (a.time_limit > 0)
        opts.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(a.time_limit));
    const LinearDecomposition d = decompose(g, opts);
    if (a.output.empty()) {
        write_decomposition(out, g, d, a.raw);
    } else {
        std::ofstream f(a.output);
        if (!f) throw Error("cannot write '" + a.output + "'");
        write_decomposition(f, g, d, a.raw);
        out << "width " << format_width(d.width) << '\n';
    }
    if (!a.cuts_csv.empty()) {
        std::ofstream f(a.cuts_csv);
        if (!f) throw Error("cannot write '" + a.cuts_csv + "'");
        write_cuts_csv(f, d);
    }
    return 0;
}

struct SolveArgs {
    std::string input, decomposition = "auto", problem = "mim", sigma, rho, objective = "max";
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    const Graph g = load_graph(a.input);
    const SigmaRhoSpec spec = problem_spec(a.problem, a.sigma, a.rho, a.objective);
    std::vector<Vertex> order;
    std::string strategy = "file";
    if (a.decomposition == "auto") {
        DecomposeOptions opts;
        opts.strategy = Strategy::IUN;
        opts.starts = StartStrategy::AllVertices;
        order = decompose(g, opts).order;
        strategy = "n-iun";
    } else {
        order = load_ordering(g, a.decomposition);
    }
    const auto t0 = Clock::now();
    const ClassChain chain = build_class_chain(g, order, spec.d);
    const SigmaRhoSolution sol = solve_sigma_rho(chain, g, spec);
    const double elapsed = seconds_since(t0);

    RunRecord r;
    r.graph = graph_name(a.input);
    r.n = g.size();
    r.density = g.density();
    r.strategy = strategy;
    r.width = width_of_ordering(g, order).width;
    r.time_s = elapsed;
    r.nec = sol.nec;
    r.bounds = nec_bounds(g, order, spec.d);
    r.result = sol.size ? std::to_string(*sol.size) : "infeasible";
    out << kCsvHeader << '\n';
    write_record(out, r);
    out << "witness";
    for (Vertex v : sol.witness) out << ' ' << g.label(v);
    out << '\n';
    return sol.size ? 0 : 3;
}

struct BenchArgs {
    std::size_t n = 20;
    std::string p_grid = "0.05:0.95:0.05", strategies = "iun,rn1,rn2,rn3,random", problem;
    std::string starts = "all";
    std::size_t per_cell = 20;
    std::uint64_t seed = 1;
    bool exact = false, no_timing = false;
    std::size_t nec_d = 0;
    bool with_nec = false;
};

std::vector<double> parse_grid(const std::string& text) {
    double a, b, c;
    char s1, s2;
    std::istringstream ss(text);
    if (!(ss >> a >> s1 >> b >> s2 >> c) || s1 != ':' || s2 != ':' || c <= 0 || a > b || a < 0 || b > 1)
        throw Error("--p-grid expects start:stop:step with 0 <= start <= stop <= 1 and step > 0");
    std::vector<double> out;
    for (std::size_t k = 0;; ++k) {
        const double p = std::round((a + static_cast<double>(k) * c) * 1e9) / 1e9;
        if (p > b + 1e-9) break;
        out.push_back(p);
    }
    return out;
}

std::vector<Strategy> parse_strategy_list(const std::string& text, bool add_exact) {
    std::vector<Strategy> out;
    std::istringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(parse_strategy(item));
    if (add_exact && std::find(out.begin(), out.end(), Strategy::Exact) == out.end()) out.push_back(Strategy::Exact);
    return out;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
    const std::vector<double> grid = parse_grid(a.p_grid);
    const std::vector<Strategy> strategies = parse_strategy_list(a.strategies, a.exact);
    std::optional<SigmaRhoSpec> spec;
    if (!a.problem.empty()) spec = SigmaRhoSpec::preset(a.problem);
    out << kCsvHeader << '\n';
    for (std::size_t pi = 0; pi < grid.size(); ++pi) {
        for (std::size_t rep = 0; rep < a.per_cell; ++rep) {
            const std::uint64_t graph_seed = mix_seed(mix_seed(a.seed, pi), rep);
            const Graph g = erdos_renyi(a.n, grid[pi], graph_seed);
            const std::string name = "er-n" + std::to_string(a.n) + "-p" + fixed(grid[pi], 2) + "-r" + std::to_string(rep);
            for (Strategy s : strategies) {
                DecomposeOptions opts;
                opts.strategy = s;
                opts.starts = parse_starts(a.starts);
                opts.seed = mix_seed(graph_seed, 1);
                const auto t0 = Clock::now();
                const LinearDecomposition d = decompose(g, opts);
                const double elapsed = seconds_since(t0);
                RunRecord r;
                r.graph = name;
                r.n = g.size();
                r.density = g.density();
                r.strategy = std::string(to_string(s));
                if (s != Strategy::Exact && s != Strategy::Random && a.starts == "all") r.strategy = "n-" + r.strategy;
                r.width = d.width;
                if (!a.no_timing) r.time_s = elapsed;
                const std::size_t d_value = spec ? spec->d : a.nec_d;
                if (a.with_nec || spec) {
                    r.nec = nec_of_decomposition(g, d.order, d_value);
                    r.bounds = nec_bounds(g, d.order, d_value);
                }
                if (spec) {
                    const SigmaRhoSolution sol = solve_sigma_rho(g, d.order, *spec);
                    r.result = sol.size ? std::to_string(*sol.size) : "infeasible";
                }
                write_record(out, r);
            }
        }
    }
    return 0;
}

struct VerifyArgs {
    std::string input, decomposition;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(a.input);
    std::optional<double> declared;
    const std::vector<Vertex> order = load_ordering(g, a.decomposition, &declared);
    if (!declared) {
        err << "error: decomposition file has no width line\n";
        return 1;
    }
    const double actual = width_of_ordering(g, order).width;
    if (std::abs(actual - *declared) > 0.005 + 1e-9) {
        err << "error: declared width " << format_width(*declared) << " but the ordering measures "
            << format_width(actual) << '\n';
        return 1;
    }
    out << "ok width " << format_width(actual) << '\n';
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear boolean-width decompositions and (sigma,rho) vertex-subset solving"};
    app.require_subcommand(1);

    DecomposeArgs dec;
    auto* d = app.add_subcommand("decompose", "Compute a linear decomposition");
    d->add_option("--input", dec.input, "Graph file (.dgf or .col)")->required();
    d->add_option("--strategy", dec.strategy, "rn1|rn2|rn3|lcv|iun|exact|random");
    d->add_option("--starts", dec.starts, "dbfs|2|all");
    d->add_option("--candidates", dec.candidates, "right|n2");
    d->add_option("--output", dec.output, "Decomposition file (default: stdout)");
    d->add_option("--cuts-csv", dec.cuts_csv, "Per-cut CSV");
    d->add_option("--seed", dec.seed, "Seed for the random strategy");
    d->add_option("--time-limit", dec.time_limit, "Seconds");
    d->add_flag("--raw", dec.raw, "Also print the largest |UN|");

    SolveArgs sol;
    auto* s = app.add_subcommand("solve", "Solve a (sigma,rho) problem along a decomposition");
    s->add_option("--input", sol.input, "Graph file")->required();
    s->add_option("--decomposition", sol.decomposition, "Decomposition file or 'auto' (n-start IUN)");
    s->add_option("--problem", sol.problem, "mim|independent-set|dominating-set|custom");
    s->add_option("--sigma", sol.sigma, "e.g. {1}, N, N\\{0}");
    s->add_option("--rho", sol.rho, "e.g. N, N\\{0}");
    s->add_option("--objective", sol.objective, "max|min");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Random-graph sweep, CSV on stdout");
    b->add_option("--n", bench.n, "Vertices per graph");
    b->add_option("--p-grid", bench.p_grid, "start:stop:step");
    b->add_option("--per-cell", bench.per_cell, "Graphs per edge probability");
    b->add_option("--strategies", bench.strategies, "Comma-separated strategies");
    b->add_option("--seed", bench.seed, "Master seed");
    b->add_option("--starts", bench.starts, "Start vertices of the greedy strategies: dbfs|2|all");
    b->add_flag("--exact", bench.exact, "Add the exact solver");
    b->add_flag("--no-timing", bench.no_timing, "Leave time_s empty (byte-identical reruns)");
    b->add_option("--nec-d", bench.nec_d, "Report nec_d and bounds for this d")->each([&](const std::string&) {
        bench.with_nec = true;
    });
    b->add_option("--problem", bench.problem, "Also solve this preset per row");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Re-measure a decomposition file");
    v->add_option("--input", ver.input, "Graph file")->required();
    v->add_option("--decomposition", ver.decomposition, "Decomposition file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, e2;
        const int code = app.exit(e, o, e2);
        out << o.str();
        err << e2.str();
        return code == 0 ? 0 : 1;
    }

    try {
        if (d->parsed()) return cmd_decompose(dec, out);
        if (s->parsed()) return cmd_solve(sol, out);
        if (b->parsed()) return cmd_bench(bench, out);
        if (v->parsed()) return cmd_verify(ver, out, err);
    } catch (const TimeLimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace lbw
