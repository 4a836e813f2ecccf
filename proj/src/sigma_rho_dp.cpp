#include "lbw/sigma_rho_dp.hpp"

#include <algorithm>
#include <limits>

#include "lbw/error.hpp"

namespace lbw {

bool is_sigma_rho_set(const Graph& g, const SigmaRhoSpec& spec, const VertexSet& x) {
    for (Vertex v = 0; v < g.size(); ++v) {
        const std::size_t c = g.neighbors(v).intersection_size(x);
        if (!(x.contains(v) ? spec.sigma : spec.rho).contains(c)) return false;
    }
    return true;
}

namespace {

constexpr std::int32_t kAbsent = std::numeric_limits<std::int32_t>::min();

struct Cell {
    std::int32_t value = kAbsent;
    std::uint32_t prev_inner = 0, prev_outer = 0;
    std::uint8_t chosen = 0;
};

bool better(std::int32_t candidate, std::int32_t incumbent, Objective obj) {
    if (incumbent == kAbsent) return true;
    return obj == Objective::Maximize ? candidate > incumbent : candidate < incumbent;
}

}  // namespace

SigmaRhoSolution solve_sigma_rho(const ClassChain& chain, const Graph& g, const SigmaRhoSpec& spec,
                                 std::size_t max_layer_entries) {
    if (chain.d != spec.d) throw ContractViolation("solve_sigma_rho: class chain built for a different d");
    const std::size_t n = chain.order.size();
    SigmaRhoSolution sol;
    sol.witness = VertexSet(g.size());
    sol.nec = nec_profile(chain).nec;

    // layers[i] is indexed by inner * |outer[i]| + outer.
    std::vector<std::vector<Cell>> layers(n + 1);
    auto layer_size = [&](std::size_t i) {
        const std::size_t s = chain.inner[i].size() * chain.outer[i].size();
        if (s > max_layer_entries) throw ScaleGuardError("solve_sigma_rho: DP layer of " + std::to_string(s) + " entries");
        return s;
    };
    layers[0].resize(layer_size(0));
    layers[0][0].value = 0;

    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = chain.order[i];
        const ClassFamily& inner = chain.inner[i];
        const ClassFamily& outer_next = chain.outer[i + 1];
        const std::size_t outer_size = chain.outer[i].size();
        const std::size_t outer_next_size = outer_next.size();

        // For each outer class of Ā_i, the (o'', b) whose extension lands on it.
        std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> children(outer_size);
        for (std::size_t o2 = 0; o2 < outer_next_size; ++o2)
            for (std::uint8_t b = 0; b < 2; ++b)
                children[chain.outer_parent[i][2 * o2 + b]].emplace_back(static_cast<std::uint32_t>(o2), b);
        std::vector<std::size_t> out_count(outer_next_size);
        for (std::size_t o2 = 0; o2 < outer_next_size; ++o2) out_count[o2] = outer_next.key(o2).count(v);

        std::vector<Cell>& next = layers[i + 1];
        next.resize(layer_size(i + 1));
        const std::vector<Cell>& cur = layers[i];
        for (std::size_t c = 0; c < inner.size(); ++c) {
            const std::size_t in_count = inner.key(c).count(v);
            for (std::size_t o = 0; o < outer_size; ++o) {
                const Cell& cell = cur[c * outer_size + o];
                if (cell.value == kAbsent) continue;
                for (auto [o2, b] : children[o]) {
                    const std::size_t cnt = std::min(spec.d, in_count + out_count[o2]);
                    if (!(b ? spec.sigma : spec.rho).contains(cnt)) continue;
                    const std::size_t c2 = chain.inner_next[i][2 * c + b];
                    Cell& target = next[c2 * outer_next_size + o2];
                    const std::int32_t value = cell.value + b;
                    if (better(value, target.value, spec.objective)) {
                        target.value = value;
                        target.prev_inner = static_cast<std::uint32_t>(c);
                        target.prev_outer = static_cast<std::uint32_t>(o);
                        target.chosen = b;
                    }
                }
            }
        }
    }

    // inner[n] and outer[n] both have the single class of ∅ over an empty opposite side.
    const Cell& root = layers[n][0];
    if (root.value == kAbsent) return sol;
    sol.size = static_cast<std::size_t>(root.value);
    std::size_t c = 0, o = 0;
    for (std::size_t i = n; i-- > 0;) {
        const Cell& cell = layers[i + 1][c * chain.outer[i + 1].size() + o];
        if (cell.chosen) sol.witness.insert(chain.order[i]);
        c = cell.prev_inner;
        o = cell.prev_outer;
    }
    return sol;
}

SigmaRhoSolution solve_sigma_rho(const Graph& g, const std::vector<Vertex>& order, const SigmaRhoSpec& spec,
                                 std::size_t max_layer_entries) {
    return solve_sigma_rho(build_class_chain(g, order, spec.d), g, spec, max_layer_entries);
}

SigmaRhoSolution brute_force_sigma_rho(const Graph& g, const SigmaRhoSpec& spec) {
    const std::size_t n = g.size();
    if (n > kSigmaRhoBruteforceMaxVertices)
        throw ScaleGuardError("brute_force_sigma_rho: " + std::to_string(n) + " vertices exceed the oracle limit of " +
                              std::to_string(kSigmaRhoBruteforceMaxVertices));
    std::vector<std::uint32_t> adj(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) adj[v] |= 1U << u;
    SigmaRhoSolution sol;
    sol.witness = VertexSet(n);
    std::optional<std::uint32_t> best_mask;
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v) {
            const unsigned c = static_cast<unsigned>(__builtin_popcount(adj[v] & mask));
            ok = ((mask >> v) & 1U ? spec.sigma : spec.rho).contains(c);
        }
        if (!ok) continue;
        const int size = __builtin_popcount(mask);
        const bool wins = !best_mask || (spec.objective == Objective::Maximize ? size > best : size < best);
        if (wins) {
            best_mask = mask;
            best = size;
        }
    }
    if (!best_mask) return sol;
    sol.size = static_cast<std::size_t>(best);
    for (Vertex v = 0; v < n; ++v)
        if ((*best_mask >> v) & 1U) sol.witness.insert(v);
    return sol;
}

}  // namespace lbw
