#pragma once

#include <optional>
#include <vector>

#include "lbw/classes.hpp"
#include "lbw/graph.hpp"
#include "lbw/sigma_rho.hpp"

namespace lbw {

struct SigmaRhoSolution {
    std::optional<std::size_t> size;  // empty when no (σ,ρ)-set exists
    VertexSet witness;
    std::size_t nec = 1;  // classes of the widest side seen by the DP
};

// Every v ∈ X has |N(v) ∩ X| ∈ σ and every v ∉ X has |N(v) ∩ X| ∈ ρ.
bool is_sigma_rho_set(const Graph& g, const SigmaRhoSpec& spec, const VertexSet& x);

// DP over the prefix cuts of `order`, indexed by (class of X ∩ A_i, class of
// X ∩ Ā_i) under d-neighborhood equivalence. Throws ScaleGuardError when a
// layer would exceed `max_layer_entries`.
SigmaRhoSolution solve_sigma_rho(const Graph& g, const std::vector<Vertex>& order, const SigmaRhoSpec& spec,
                                 std::size_t max_layer_entries = std::size_t{1} << 26);
SigmaRhoSolution solve_sigma_rho(const ClassChain& chain, const Graph& g, const SigmaRhoSpec& spec,
                                 std::size_t max_layer_entries = std::size_t{1} << 26);

inline constexpr std::size_t kSigmaRhoBruteforceMaxVertices = 18;
// All 2^n subsets; the witness is the first optimum in mask order. n <= 18.
SigmaRhoSolution brute_force_sigma_rho(const Graph& g, const SigmaRhoSpec& spec);

}  // namespace lbw
