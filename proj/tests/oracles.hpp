#pragma once
// Independent reference computations for the tests. Everything here works on
// plain uint32 adjacency masks and shares no algorithm code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "lbw/graph.hpp"
#include "lbw/path_decomposition.hpp"
#include "lbw/rng.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency(const lbw::Graph& g) {
    std::vector<Mask> adj(g.size(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    return adj;
}

inline Mask full(std::size_t n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline Mask to_mask(const lbw::VertexSet& s) {
    Mask m = 0;
    for (auto v : s) m |= Mask{1} << v;
    return m;
}

// |{N(X) ∩ Ā : X ⊆ A}| by listing every X.
inline std::uint64_t un_count(const std::vector<Mask>& adj, Mask a) {
    const Mask out = full(adj.size()) & ~a;
    std::set<Mask> seen;
    for (Mask x = a;; x = (x - 1) & a) {
        Mask nx = 0;
        for (std::size_t v = 0; v < adj.size(); ++v)
            if ((x >> v) & 1U) nx |= adj[v];
        seen.insert(nx & out);
        if (x == 0) break;
    }
    return seen.size();
}

// Width of an ordering in |UN| units: max over proper prefixes.
inline std::uint64_t ordering_max_un(const std::vector<Mask>& adj, const std::vector<std::size_t>& order) {
    std::uint64_t best = 1;
    Mask a = 0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        a |= Mask{1} << order[i];
        best = std::max(best, un_count(adj, a));
    }
    return best;
}

// Minimum over all n! orderings (n <= 8).
inline std::uint64_t exhaustive_min_un(const lbw::Graph& g) {
    const auto adj = adjacency(g);
    std::vector<std::size_t> order(g.size());
    std::iota(order.begin(), order.end(), 0);
    std::map<Mask, std::uint64_t> cache;
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t w = 1;
        Mask a = 0;
        for (std::size_t i = 0; i + 1 < order.size(); ++i) {
            a |= Mask{1} << order[i];
            auto it = cache.find(a);
            if (it == cache.end()) it = cache.emplace(a, un_count(adj, a)).first;
            w = std::max(w, it->second);
        }
        best = std::min(best, w);
    } while (std::next_permutation(order.begin(), order.end()));
    return g.size() == 0 ? 1 : best;
}

// Number of maximal independent sets of the bipartite cut graph, by testing
// every vertex subset (n <= 16).
inline std::uint64_t mis_count_cut(const std::vector<Mask>& adj, Mask a) {
    const std::size_t n = adj.size();
    const Mask all = full(n);
    std::vector<Mask> cut(n);
    for (std::size_t v = 0; v < n; ++v) cut[v] = adj[v] & (((a >> v) & 1U) ? ~a : a) & all;
    std::uint64_t count = 0;
    for (Mask s = 0; s <= all; ++s) {
        bool independent = true, maximal = true;
        for (std::size_t v = 0; v < n; ++v) {
            if ((s >> v) & 1U) {
                if (cut[v] & s) independent = false;
            } else if (!(cut[v] & s)) {
                maximal = false;
            }
        }
        if (independent && maximal) ++count;
        if (s == all) break;
    }
    return count;
}

inline std::size_t twin_classes(const std::vector<Mask>& adj, Mask a) {
    const Mask out = full(adj.size()) & ~a;
    std::set<Mask> seen;
    for (std::size_t v = 0; v < adj.size(); ++v)
        if ((a >> v) & 1U) seen.insert(adj[v] & out);
    return seen.size();
}

// Classes of the capped-count equivalence on subsets of A, by full enumeration.
inline std::size_t class_count(const std::vector<Mask>& adj, Mask a, std::size_t d) {
    const Mask out = full(adj.size()) & ~a;
    std::set<std::vector<std::size_t>> seen;
    for (Mask x = a;; x = (x - 1) & a) {
        std::vector<std::size_t> key;
        for (std::size_t u = 0; u < adj.size(); ++u)
            if ((out >> u) & 1U)
                key.push_back(std::min<std::size_t>(d, static_cast<std::size_t>(__builtin_popcount(adj[u] & x))));
        seen.insert(key);
        if (x == 0) break;
    }
    return seen.size();
}

// Max over proper prefix cuts of both sides' class counts.
inline std::size_t nec_of_ordering(const std::vector<Mask>& adj, const std::vector<std::size_t>& order, std::size_t d) {
    std::size_t best = 1;
    Mask a = 0;
    const Mask all = full(adj.size());
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        a |= Mask{1} << order[i];
        best = std::max({best, class_count(adj, a, d), class_count(adj, all & ~a, d)});
    }
    return best;
}

// Caterpillar with optional length-2 legs (a lobster) together with a path
// decomposition whose bags have at most three vertices: for each spine vertex
// s, one bag {s, a, b} per leg s-a-b (or {s, a} for a leaf), then {s, s'}.
struct TreeWithPd {
    lbw::Graph graph;
    lbw::PathDecomposition pd;
};

inline TreeWithPd random_lobster(std::size_t spine, std::size_t max_legs, bool long_legs, std::uint64_t seed) {
    lbw::Xoshiro256 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<std::vector<std::size_t>> bags;
    std::size_t next = spine;
    for (std::size_t s = 0; s < spine; ++s) {
        const std::size_t legs = rng.below(max_legs + 1);
        for (std::size_t l = 0; l < legs; ++l) {
            const std::size_t a = next++;
            edges.emplace_back(s, a);
            if (long_legs && rng.below(2) == 1) {
                const std::size_t b = next++;
                edges.emplace_back(a, b);
                bags.push_back({s, a, b});
            } else {
                bags.push_back({s, a});
            }
        }
        if (s + 1 < spine) {
            edges.emplace_back(s, s + 1);
            bags.push_back({s, s + 1});
        } else if (legs == 0) {
            bags.push_back({s});
        }
    }
    TreeWithPd out{lbw::Graph(next, edges), {}};
    for (const auto& b : bags) out.pd.bags.push_back(lbw::VertexSet::from_range(next, b));
    return out;
}

}  // namespace oracle
