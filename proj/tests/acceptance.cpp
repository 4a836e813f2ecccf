// Acceptance run: one PASS/FAIL/SKIP line per criterion, indented detail
// lines after it. Exit status is 1 when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "lbw/classes.hpp"
#include "lbw/cut.hpp"
#include "lbw/driver.hpp"
#include "lbw/exact.hpp"
#include "lbw/heuristics.hpp"
#include "lbw/path_decomposition.hpp"
#include "lbw/rng.hpp"
#include "lbw/sigma_rho_dp.hpp"
#include "oracles.hpp"

using namespace lbw;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Outcome {
    enum Kind { Pass, Fail, Skip } kind = Pass;
    std::string summary;
    std::vector<std::string> details;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

void report(int id, const char* title, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o = body();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const char* tag = o.kind == Outcome::Pass ? "PASS" : o.kind == Outcome::Fail ? "FAIL" : "SKIP";
    if (o.kind == Outcome::Fail) ++failures;
    std::printf("CRITERION %d %s: %s (%s) [%.1fs]\n", id, tag, title, o.summary.c_str(), secs);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
}

VertexSet from_mask(std::size_t n, std::uint32_t m) {
    VertexSet s(n);
    for (Vertex v = 0; v < n; ++v)
        if ((m >> v) & 1U) s.insert(v);
    return s;
}

Outcome criterion1() {
    const double ps[] = {0.2, 0.5, 0.8};
    std::size_t cuts = 0, mismatches = 0;
    Xoshiro256 pick(11);
    for (std::size_t i = 0; i < 200; ++i) {
        const bool exhaustive = i < 30;
        const std::size_t n = exhaustive ? 2 + i % 9 : 2 + i % 11;
        const Graph g = erdos_renyi(n, ps[i % 3], mix_seed(1, i));
        const auto adj = oracle::adjacency(g);
        std::vector<std::uint32_t> masks;
        if (exhaustive) {
            for (std::uint32_t m = 0; m < (1U << n); ++m) masks.push_back(m);
        } else {
            for (int k = 0; k < 40; ++k) masks.push_back(static_cast<std::uint32_t>(pick.below(std::uint64_t{1} << n)));
        }
        for (std::uint32_t m : masks) {
            const VertexSet a = from_mask(n, m);
            const std::uint64_t chain = un_incremental(g, a).size();
            const std::uint64_t brute = un_bruteforce(g, a).size();
            const std::uint64_t mis = count_mis_bipartite(g, a);
            const std::uint64_t other_side = un_bruteforce(g, a.complement()).size();
            const std::uint64_t independent = oracle::un_count(adj, m);
            ++cuts;
            if (chain != brute || brute != mis || brute != other_side || brute != independent) ++mismatches;
        }
    }
    Outcome o;
    o.kind = mismatches == 0 ? Outcome::Pass : Outcome::Fail;
    o.summary = std::to_string(cuts) + " cuts on 200 graphs, " + std::to_string(mismatches) + " mismatches";
    return o;
}

std::vector<Graph> small_graphs() {
    std::vector<Graph> out;
    for (std::size_t i = 0; i < 100; ++i) {
        const std::size_t n = 1 + i % 8;
        out.push_back(erdos_renyi(n, 0.1 + 0.1 * static_cast<double>(i % 9), mix_seed(2, i)));
    }
    return out;
}

Outcome criterion2(const std::vector<Graph>& graphs) {
    std::size_t bad = 0;
    for (const Graph& g : graphs) {
        const auto exact = lbw_exact(g);
        const auto dp = lbw_dp_bruteforce(g);
        const std::uint64_t perm = oracle::exhaustive_min_un(g);
        const bool ok = exact.un_value && dp.un_value && *exact.un_value == perm && *dp.un_value == perm &&
                        width_of_ordering(g, exact.ordering).max_un == perm &&
                        width_of_ordering(g, dp.ordering).max_un == perm;
        if (!ok) ++bad;
    }
    Outcome o;
    o.kind = bad == 0 ? Outcome::Pass : Outcome::Fail;
    o.summary = std::to_string(graphs.size() - bad) + "/" + std::to_string(graphs.size()) + " graphs agree";
    return o;
}

Outcome criterion3(const std::vector<Graph>& graphs) {
    std::size_t calls = 0, bad = 0;
    for (const Graph& g : graphs) {
        const std::uint64_t opt = *lbw_dp_bruteforce(g).un_value;
        const std::uint64_t top = std::uint64_t{1} << g.size();
        for (std::uint64_t k = 1; k <= top; k = k < 64 ? k + 1 : k * 2) {
            const auto r = incremental_un_exact(g, k);
            ++calls;
            if (r.finite() != (opt <= k)) ++bad;
            if (r.finite() && *r.un_value != opt) ++bad;
        }
    }
    Outcome o;
    o.kind = bad == 0 ? Outcome::Pass : Outcome::Fail;
    o.summary = std::to_string(calls) + " (graph, K) calls, " + std::to_string(bad) + " violations";
    return o;
}

Outcome criterion4() {
    std::size_t bad = 0, runs = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        const std::size_t n = 10 + i % 21;
        const Graph g = erdos_renyi(n, 0.08 + 0.04 * static_cast<double>(i % 10), mix_seed(4, i));
        for (const VertexSet& comp : connected_components(g)) {
            if (comp.size() < 2) continue;
            const Graph c = g.induced(comp);
            HeuristicConfig iun, lcv, lcv_mis;
            lcv.score = lcv_mis.score = ScoreKind::LeastCutValue;
            lcv_mis.lcv_count_mis = true;
            const Vertex start = bfs_start_vertex(c, 0, true);
            const auto a = generate_ordering(c, iun, start);
            const auto b = generate_ordering(c, lcv, start);
            const auto m = generate_ordering(c, lcv_mis, start);
            ++runs;
            if (a.order != b.order || a.order != m.order) ++bad;
        }
    }
    Outcome o;
    o.kind = bad == 0 ? Outcome::Pass : Outcome::Fail;
    o.summary = std::to_string(runs) + " component runs on 100 graphs (n 10..30), " + std::to_string(bad) +
                " differing orderings";
    o.details.push_back("LeastCutValue checked in both forms: Increment-UN scores and #MIS of the bipartite cut graph");
    return o;
}

struct TrivialStats {
    std::size_t fired = 0, equal = 0, not_larger = 0, same_family = 0;
};

Outcome criterion5(TrivialStats& trivial) {
    const std::vector<Strategy> strategies{Strategy::Exact, Strategy::IUN, Strategy::RN1,
                                           Strategy::RN2,   Strategy::RN3, Strategy::Random};
    const std::size_t n = 20, per_cell = 20;

    auto observe = [&](const Graph& g, const GreedyState& before, Vertex v) {
        ++trivial.fired;
        VertexSet after = before.left();
        after.insert(v);
        const NeighborhoodFamily un_before = un_incremental(g, before.left());
        const NeighborhoodFamily un_after = un_incremental(g, after);
        if (un_before.size() == un_after.size()) ++trivial.equal;
        if (un_after.size() <= un_before.size()) ++trivial.not_larger;
        VertexSet shrunk = before.right();
        shrunk.erase(v);
        NeighborhoodFamily restricted(shrunk);
        for (VertexSet m : un_before.members()) {
            m.erase(v);
            restricted.insert(m);
        }
        if (restricted == un_after) ++trivial.same_family;
    };

    Outcome o;
    bool order_ok = true;
    double gap_sum = 0.0;
    std::size_t cells = 0;
    o.details.push_back("p     exact  n-iun  n-rn1  n-rn2  n-rn3  random");
    for (std::size_t pi = 0; pi < 19; ++pi) {
        const double p = 0.05 * static_cast<double>(pi + 1);
        std::vector<double> mean(strategies.size(), 0.0);
        for (std::size_t rep = 0; rep < per_cell; ++rep) {
            const std::uint64_t seed = mix_seed(mix_seed(5, pi), rep);
            const Graph g = erdos_renyi(n, p, seed);
            for (std::size_t s = 0; s < strategies.size(); ++s) {
                DecomposeOptions opts;
                opts.strategy = strategies[s];
                opts.starts = StartStrategy::AllVertices;
                opts.seed = mix_seed(seed, 1);
                if (strategies[s] != Strategy::Exact && strategies[s] != Strategy::Random) opts.on_trivial_case = observe;
                mean[s] += decompose(g, opts).width / static_cast<double>(per_cell);
            }
        }
        const double eps = 1e-9;
        bool cell_ok = mean[0] <= mean[1] + eps;
        for (std::size_t rn = 2; rn <= 4; ++rn) cell_ok = cell_ok && mean[1] <= mean[rn] + eps && mean[rn] <= mean[5] + eps;
        order_ok = order_ok && cell_ok;
        gap_sum += mean[1] - mean[0];
        ++cells;
        std::string line = fmt("%.2f", p);
        for (double m : mean) line += fmt("  %5.2f", m);
        if (!cell_ok) line += "  <- order violated";
        o.details.push_back(line);
    }
    const double gap = gap_sum / static_cast<double>(cells);
    o.kind = order_ok && gap <= 0.5 ? Outcome::Pass : Outcome::Fail;
    o.summary = std::string(order_ok ? "cell means ordered" : "cell ordering violated") +
                ", mean(n-iun - exact) = " + fmt("%.3f", gap) + " bits";
    return o;
}

Outcome criterion6(const TrivialStats& t) {
    Outcome o;
    o.kind = t.fired > 0 && t.equal == t.fired ? Outcome::Pass : Outcome::Fail;
    o.summary = std::to_string(t.equal) + "/" + std::to_string(t.fired) + " fired trivial cases keep |UN| equal";
    o.details.push_back("|UN(Left+v)| <= |UN(Left)|: " + std::to_string(t.not_larger) + "/" + std::to_string(t.fired));
    o.details.push_back("UN(Left+v) equals UN(Left) restricted to Right-v: " + std::to_string(t.same_family) + "/" +
                        std::to_string(t.fired));
    if (o.kind == Outcome::Fail)
        o.details.push_back("equality fails whenever v has a neighbor in Left and members of UN(Left) differ only "
                            "in v; the width of the run is unaffected");
    return o;
}

struct SubsetInstance {
    Graph g;
    std::vector<Vertex> order;
};

std::vector<SubsetInstance> subset_instances() {
    std::vector<SubsetInstance> out;
    for (std::size_t i = 0; i < 100; ++i) {
        const std::size_t n = 4 + i % 11;
        const Graph g = erdos_renyi(n, 0.1 + 0.08 * static_cast<double>(i % 10), mix_seed(7, i));
        DecomposeOptions opts;
        opts.strategy = Strategy::IUN;
        opts.starts = StartStrategy::AllVertices;
        std::vector<Vertex> order = decompose(g, opts).order;
        out.push_back({g, std::move(order)});
    }
    return out;
}

Outcome criterion7(const std::vector<SubsetInstance>& instances) {
    const std::vector<std::pair<const char*, SigmaRhoSpec>> specs{{"mim", SigmaRhoSpec::induced_matching()},
                                                                  {"independent-set", SigmaRhoSpec::independent_set()},
                                                                  {"dominating-set", SigmaRhoSpec::dominating_set()}};
    std::size_t solves = 0, bad = 0;
    for (const auto& inst : instances) {
        for (const auto& [name, spec] : specs) {
            const auto fast = solve_sigma_rho(inst.g, inst.order, spec);
            const auto slow = brute_force_sigma_rho(inst.g, spec);
            ++solves;
            bool ok = fast.size == slow.size;
            if (ok && fast.size)
                ok = fast.witness.size() == *fast.size && is_sigma_rho_set(inst.g, spec, fast.witness) &&
                     is_sigma_rho_set(inst.g, spec, slow.witness);
            if (!ok) ++bad;
        }
    }
    Outcome o;
    o.kind = bad == 0 ? Outcome::Pass : Outcome::Fail;
    o.summary = std::to_string(solves) + " solves on 100 graphs (n 4..14), " + std::to_string(bad) + " disagreements";
    return o;
}

Outcome criterion8(const std::vector<SubsetInstance>& instances) {
    std::size_t checks = 0, bound_bad = 0, d1_bad = 0, per_cut_ub3_bad = 0;
    std::size_t by_bound[3] = {0, 0, 0};
    for (const auto& inst : instances) {
        const auto dec = width_of_ordering(inst.g, inst.order);
        for (std::size_t d : {1u, 2u}) {
            const ClassChain chain = build_class_chain(inst.g, inst.order, d);
            const NecProfile prof = nec_profile(chain);
            const NecBounds b = nec_bounds(inst.g, inst.order, d);
            const double lg = std::log2(static_cast<double>(prof.nec));
            const double ub[3] = {b.ub1, b.ub2, b.ub3};
            ++checks;
            bool ok = true;
            for (int k = 0; k < 3; ++k)
                if (lg > ub[k] + 1e-9) {
                    ++by_bound[k];
                    ok = false;
                }
            if (!ok) ++bound_bad;
            for (std::size_t i = 0; i + 1 < inst.order.size(); ++i) {
                const auto& cut = dec.cuts[i];
                if (d == 1 && (prof.inner[i] != cut.un_count || prof.outer[i] != cut.un_count)) ++d1_bad;
                // The third bound read cut by cut, with that cut's own ntc and booldim.
                const double own = std::max(prof.inner[i], prof.outer[i]);
                const double ntc = static_cast<double>(std::max(cut.ntc_left, cut.ntc_right));
                if (std::log2(own) > static_cast<double>(d) * cut.booldim * std::log2(ntc) + 1e-9) ++per_cut_ub3_bad;
            }
        }
    }
    Outcome o;
    o.kind = bound_bad == 0 && d1_bad == 0 ? Outcome::Pass : Outcome::Fail;
    o.summary = std::to_string(checks) + " (instance, d) pairs: " + std::to_string(bound_bad) +
                " bound violations, " + std::to_string(d1_bad) + " d=1 class/|UN| mismatches";
    o.details.push_back("violations by bound (UB1, UB2, UB3): " + std::to_string(by_bound[0]) + ", " +
                        std::to_string(by_bound[1]) + ", " + std::to_string(by_bound[2]));
    o.details.push_back("bounds use decomposition aggregates: k = width, ntc = max over cuts and sides, "
                        "min-ntc = max over cuts of the smaller side");
    o.details.push_back("informational, cut-local UB3 (own ntc and booldim) exceeded on " +
                        std::to_string(per_cut_ub3_bad) + " cuts");
    return o;
}

Outcome criterion9() {
    std::size_t bad = 0, max_bag = 0;
    for (std::size_t i = 0; i < 50; ++i) {
        const bool lobster = i % 2 == 0;
        auto t = oracle::random_lobster(2 + i % 9, 3, lobster, mix_seed(9, i));
        max_bag = std::max(max_bag, t.pd.max_bag_size());
        const auto d = order_from_path_decomposition(t.graph, t.pd);
        if (!is_permutation_of_vertices(t.graph, d.order) || d.width > static_cast<double>(t.pd.max_bag_size()) + 1e-9)
            ++bad;
    }
    Outcome o;
    o.kind = bad == 0 && max_bag <= 3 ? Outcome::Pass : Outcome::Fail;
    o.summary = "50 trees (caterpillars and lobsters, bags <= " + std::to_string(max_bag) + "), " +
                std::to_string(bad) + " over the bound";
    return o;
}

Outcome criterion10() {
    namespace fs = std::filesystem;
    const char* env = std::getenv("LBW_CORPUS_DIR");
    std::vector<fs::path> dirs;
    if (env) dirs.emplace_back(env);
    dirs.emplace_back(LBW_SOURCE_DIR "/corpus");
    dirs.emplace_back(LBW_SOURCE_DIR "/examples");
    fs::path found;
    for (const auto& dir : dirs)
        if (fs::exists(dir / "barley.dgf")) found = dir / "barley.dgf";
    Outcome o;
    if (found.empty()) {
        o.kind = Outcome::Skip;
        o.summary = "barley.dgf not found (set LBW_CORPUS_DIR)";
        return o;
    }
    const Graph g = read_graph_file(found.string());
    DecomposeOptions opts;
    opts.strategy = Strategy::IUN;
    opts.starts = StartStrategy::AllVertices;
    const auto d = decompose(g, opts);
    const double nec2 = std::log2(static_cast<double>(nec_of_decomposition(g, d.order, 2)));
    const auto mim = solve_sigma_rho(g, d.order, SigmaRhoSpec::induced_matching());
    const bool ok = std::abs(d.width - 4.58) <= 0.01 && std::abs(nec2 - 7.00) <= 0.01 && mim.size && *mim.size == 22;
    o.kind = ok ? Outcome::Pass : Outcome::Fail;
    o.summary = "width " + fmt("%.2f", d.width) + ", log2 nec_2 " + fmt("%.2f", nec2) + ", MIM " +
                (mim.size ? std::to_string(*mim.size) : std::string("infeasible"));
    return o;
}

}  // namespace

int main() {
    std::printf("simd kernels: %s\n", std::string(simd::active().name).c_str());
    std::printf("rng: %s\n", std::string(Xoshiro256::kName).c_str());
    report(1, "UN oracle triangle", criterion1);
    const auto graphs = small_graphs();
    report(2, "exact solver agreement", [&] { return criterion2(graphs); });
    report(3, "K-gate semantics", [&] { return criterion3(graphs); });
    report(4, "IUN and LeastCutValue coincide", criterion4);
    TrivialStats trivial;
    report(5, "random-graph width ordering at n=20", [&] { return criterion5(trivial); });
    report(6, "trivial-case soundness", [&] { return criterion6(trivial); });
    const auto instances = subset_instances();
    report(7, "(sigma,rho) oracle equivalence", [&] { return criterion7(instances); });
    report(8, "nec upper bounds and d=1 identity", [&] { return criterion8(instances); });
    report(9, "path decomposition construction", criterion9);
    report(10, "corpus spot-checks", criterion10);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
