#include "lbw/cut.hpp"

#include <cmath>
#include <unordered_set>

#include "lbw/error.hpp"

namespace lbw {

double log2_count(std::uint64_t count) { return count <= 1 ? 0.0 : std::log2(static_cast<double>(count)); }

namespace {

void enumerate_unions(const Graph& g, const std::vector<Vertex>& side, std::size_t next, const VertexSet& outside,
                      VertexSet& current, NeighborhoodFamily& out) {
    if (next == side.size()) {
        out.insert(current & outside);
        return;
    }
    enumerate_unions(g, side, next + 1, outside, current, out);
    VertexSet saved = current;
    current |= g.neighbors(side[next]);
    enumerate_unions(g, side, next + 1, outside, current, out);
    current = std::move(saved);
}

struct MisCounter {
    std::vector<VertexSet> adj;  // adjacency of the bipartite cut graph

    std::uint64_t count(const VertexSet& candidates, const VertexSet& undominated) const {
        if (candidates.empty()) return undominated.empty() ? 1 : 0;
        for (Vertex d : undominated)
            if (!adj[d].intersects(candidates)) return 0;
        const VertexSet live = candidates | undominated;
        Vertex pick = candidates.first();
        std::size_t best = 0;
        bool first = true;
        for (Vertex v : candidates) {
            std::size_t deg = adj[v].intersection_size(live);
            if (first || deg > best) {
                pick = v;
                best = deg;
                first = false;
            }
        }
        VertexSet include_p = candidates - adj[pick];
        include_p.erase(pick);
        std::uint64_t total = count(include_p, undominated - adj[pick]);
        VertexSet exclude_p = candidates;
        exclude_p.erase(pick);
        VertexSet exclude_d = undominated;
        exclude_d.insert(pick);
        return total + count(exclude_p, exclude_d);
    }
};

}  // namespace

NeighborhoodFamily un_bruteforce(const Graph& g, const VertexSet& a) {
    if (a.size() > kUnBruteforceMaxSide)
        throw ScaleGuardError("un_bruteforce: |A| = " + std::to_string(a.size()) + " exceeds the oracle guard of " +
                              std::to_string(kUnBruteforceMaxSide));
    const VertexSet outside = a.complement();
    NeighborhoodFamily out(outside);
    VertexSet current(g.size());
    enumerate_unions(g, a.to_vector(), 0, outside, current, out);
    return out;
}

NeighborhoodFamily increment_un(const Graph& g, const VertexSet& x, const NeighborhoodFamily& un_x, Vertex v) {
    if (v >= g.size()) throw ContractViolation("increment_un: vertex out of range");
    if (x.contains(v)) throw ContractViolation("increment_un: vertex " + std::to_string(v) + " already in X");
    if (un_x.universe() != x.complement()) throw ContractViolation("increment_un: family universe is not complement(X)");
    NeighborhoodFamily out;
    increment_un_into(g, un_x, v, out);
    return out;
}

NeighborhoodFamily un_incremental(const Graph& g, const VertexSet& a) {
    NeighborhoodFamily cur(g.all());
    NeighborhoodFamily next;
    for (Vertex v : a) {
        increment_un_into(g, cur, v, next);
        std::swap(cur, next);
    }
    return cur;
}

std::uint64_t count_mis_bipartite(const Graph& g, const VertexSet& a) {
    if (g.size() > kMisOracleMaxVertices)
        throw ScaleGuardError("count_mis_bipartite: n = " + std::to_string(g.size()) + " exceeds the oracle guard of " +
                              std::to_string(kMisOracleMaxVertices));
    const VertexSet outside = a.complement();
    MisCounter counter;
    counter.adj.reserve(g.size());
    for (Vertex v = 0; v < g.size(); ++v) counter.adj.push_back(g.neighbors(v) & (a.contains(v) ? outside : a));
    return counter.count(g.all(), g.empty_set());
}

std::size_t twin_class_count(const Graph& g, const VertexSet& a) {
    const VertexSet outside = a.complement();
    std::unordered_set<VertexSet> seen;
    for (Vertex x : a) seen.insert(g.neighbors(x) & outside);
    return seen.size();
}

bool is_permutation_of_vertices(const Graph& g, const std::vector<Vertex>& order) {
    if (order.size() != g.size()) return false;
    VertexSet seen(g.size());
    for (Vertex v : order) {
        if (v >= g.size() || seen.contains(v)) return false;
        seen.insert(v);
    }
    return true;
}

LinearDecomposition width_of_ordering(const Graph& g, const std::vector<Vertex>& order) {
    if (!is_permutation_of_vertices(g, order))
        throw ContractViolation("width_of_ordering: ordering is not a permutation of the vertices");
    LinearDecomposition out;
    out.order = order;
    NeighborhoodFamily cur(g.all());
    NeighborhoodFamily next;
    VertexSet prefix(g.size());
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        increment_un_into(g, cur, order[i], next);
        std::swap(cur, next);
        prefix.insert(order[i]);
        CutStats cut;
        cut.un_count = cur.size();
        cut.booldim = log2_count(cut.un_count);
        cut.ntc_left = twin_class_count(g, prefix);
        cut.ntc_right = twin_class_count(g, prefix.complement());
        out.max_un = std::max(out.max_un, cut.un_count);
        out.cuts.push_back(cut);
    }
    out.width = log2_count(out.max_un);
    return out;
}

}  // namespace lbw
