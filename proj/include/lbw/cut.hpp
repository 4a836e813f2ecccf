#pragma once

#include <cstdint>
#include <vector>

#include "lbw/graph.hpp"
#include "lbw/neighborhood_family.hpp"

namespace lbw {

struct CutStats {
    std::uint64_t un_count = 1;  // |UN(A)|
    double booldim = 0.0;        // log2 |UN(A)|
    std::size_t ntc_left = 0;    // twin classes of A
    std::size_t ntc_right = 0;   // twin classes of the complement
};

/// A vertex ordering together with the statistics of its n-1 proper prefix cuts.
struct LinearDecomposition {
    std::vector<Vertex> order;
    std::vector<CutStats> cuts;  // cuts[i] describes the prefix of length i+1
    double width = 0.0;          // max booldim over cuts, 0 when there are none
    std::uint64_t max_un = 1;    // max un_count over cuts
};

inline constexpr std::size_t kUnBruteforceMaxSide = 20;
inline constexpr std::size_t kMisOracleMaxVertices = 32;

// {N(X) ∩ Ā : X ⊆ A} by enumerating all 2^|A| subsets. Oracle; |A| <= 20.
NeighborhoodFamily un_bruteforce(const Graph& g, const VertexSet& a);

// UN(X ∪ {v}) from UN(X). Throws ContractViolation when v ∈ X or unX is not
// over the complement of X.
NeighborhoodFamily increment_un(const Graph& g, const VertexSet& x, const NeighborhoodFamily& un_x, Vertex v);

// UN(A) by folding increment_un over A in ascending order.
NeighborhoodFamily un_incremental(const Graph& g, const VertexSet& a);

// Number of maximal independent sets of the bipartite graph G[A, Ā] (only
// edges crossing the cut). Recursive include/exclude branching; n <= 32.
std::uint64_t count_mis_bipartite(const Graph& g, const VertexSet& a);

// Distinct values of N(x) ∩ Ā over x ∈ A; 0 when A is empty.
std::size_t twin_class_count(const Graph& g, const VertexSet& a);

bool is_permutation_of_vertices(const Graph& g, const std::vector<Vertex>& order);

// Folds increment_un along the ordering and records every proper prefix cut.
// Throws ContractViolation if `order` is not a permutation of V.
LinearDecomposition width_of_ordering(const Graph& g, const std::vector<Vertex>& order);

// Integer log2 helper shared by the width reporting code.
double log2_count(std::uint64_t count);

}  // namespace lbw
