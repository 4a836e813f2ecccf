#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "lbw/graph.hpp"

namespace lbw {

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// Outcome of an exact linear boolean-width computation. `un_value` is P(V),
/// the minimal over orderings of the largest |UN| of a prefix cut; `width`
/// is its log2. Both are empty when the search was gated out by K.
struct ExactResult {
    std::optional<double> width;
    std::optional<std::uint64_t> un_value;
    std::vector<Vertex> ordering;  // present iff width is
    std::uint64_t explored = 0;    // subsets whose |UN| was computed (last pass)
    std::uint64_t explored_total = 0;

    bool finite() const noexcept { return width.has_value(); }
};

inline constexpr std::size_t kDpBruteforceMaxVertices = 16;
inline constexpr std::size_t kExactMaxVertices = 30;
// Up to this many vertices the subset tables are flat 2^n arrays.
inline constexpr std::size_t kFlatTableMaxVertices = 24;

struct ExactOptions {
    // Entry budget for the hashed subset tables used above kFlatTableMaxVertices.
    std::size_t max_table_entries = std::size_t{1} << 26;
    Deadline deadline;
};

// Baseline: |UN(A)| for every A by un_bruteforce, then the subset recurrence
// bottom-up. n <= 16.
ExactResult lbw_dp_bruteforce(const Graph& g);

// Pruned search: |UN| is only computed for subsets reachable through chains of
// prefix cuts with |UN| <= K. Finite iff lbw(g) <= log2 K.
ExactResult incremental_un_exact(const Graph& g, std::uint64_t k, const ExactOptions& opts = {});

// Doubles K from 1 until incremental_un_exact succeeds (K capped at 2^n).
ExactResult lbw_exact(const Graph& g, const ExactOptions& opts = {});

}  // namespace lbw
