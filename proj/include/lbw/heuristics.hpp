#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "lbw/exact.hpp"
#include "lbw/graph.hpp"
#include "lbw/neighborhood_family.hpp"

namespace lbw {

enum class ScoreKind { RN1, RN2, RN3, LeastCutValue, IUN };
enum class CandidateStrategy { Right, TwoNeighborhood };
enum class StartStrategy { DoubleBFS, SingleAndDoubleBFS, AllVertices };

std::string_view to_string(ScoreKind k);

/// Left/Right split of a greedy run. `left_right_neighborhoods` holds the
/// distinct sets N(u) ∩ Right for u ∈ Left and is updated incrementally.
class GreedyState {
public:
    GreedyState(const Graph& g, Vertex init);

    const VertexSet& left() const noexcept { return left_; }
    const VertexSet& right() const noexcept { return right_; }
    const std::vector<Vertex>& order() const noexcept { return order_; }
    // N(Left), including vertices of Left.
    const VertexSet& left_neighborhood() const noexcept { return left_neighborhood_; }
    const std::vector<VertexSet>& left_right_neighborhoods() const noexcept { return left_right_; }

    void move_to_left(Vertex v);

private:
    const Graph* g_;
    VertexSet left_, right_, left_neighborhood_;
    std::vector<Vertex> order_;
    std::vector<VertexSet> left_right_;
};

// Right, or N(Left ∪ N(Left)) ∩ Right falling back to Right when that is empty.
VertexSet candidates(const Graph& g, const GreedyState& state, CandidateStrategy strategy);

/// Smallest candidate v whose N(v) ∩ (Right∖{v}) equals N(X) ∩ (Right∖{v}) for
/// X = ∅ or X = {u}, u ∈ Left. With `un_left` supplied (generalized mode) any
/// X ⊆ Left is allowed, i.e. any member of UN(Left) restricted to Right∖{v}.
std::optional<Vertex> trivial_case(const Graph& g, const GreedyState& state, const VertexSet& candidates,
                                   const NeighborhoodFamily* un_left = nullptr);

// RN1 = |Ext|/(|Int|+|Ext|), RN2 = |Ext|/|N(v)|, RN3 = 1 - |Int|/|N(v)|, with
// Int = N(v) ∩ N(Left) ∩ Right and Ext = (N(v) ∖ N(Left)) ∩ Right. Isolated
// vertices and empty denominators score 0.
double score_relative_neighborhood(const Graph& g, const GreedyState& state, Vertex v, ScoreKind variant);

// |UN(Left ∪ {v})| given UN(Left); empty when it exceeds `bound`.
std::optional<std::uint64_t> score_least_cut_value(const Graph& g, const NeighborhoodFamily& un_left, Vertex v,
                                                   std::uint64_t bound = kNoLimit);

// Fired before a trivial-case vertex is moved to Left.
using TrivialCaseObserver = std::function<void(const Graph& g, const GreedyState& before, Vertex chosen)>;

struct HeuristicConfig {
    ScoreKind score = ScoreKind::IUN;
    CandidateStrategy candidates = CandidateStrategy::TwoNeighborhood;
    StartStrategy starts = StartStrategy::DoubleBFS;
    // Hard cap on |UN| of any cut (IUN / LeastCutValue); runs exceeding it are pruned.
    std::optional<std::uint64_t> prune_bound;
    // Thread the incumbent through multi-start runs as a prune bound.
    bool incumbent_pruning = true;
    // Trivial cases over every X ⊆ Left instead of ∅ and singletons.
    bool generalized_trivial_cases = false;
    // LeastCutValue scores by counting maximal independent sets of the
    // bipartite cut graph (n <= 32) instead of Increment-UN.
    bool lcv_count_mis = false;
    Deadline deadline;
    TrivialCaseObserver on_trivial_case;
};

struct GreedyRun {
    bool pruned = false;
    std::vector<Vertex> order;
    // Largest |UN| over the proper prefix cuts; known for IUN and LeastCutValue.
    std::optional<std::uint64_t> max_un;
    // Sum of the chosen vertices' scores (RN variants).
    double score_sum = 0.0;
    std::size_t trivial_steps = 0;
};

/// Greedy Left/Right loop from `init`: a trivial case when one exists, else
/// the argmin of the score with ties to the smallest index. `best_so_far` is
/// the incumbent in the heuristic's own currency (|UN| for IUN and
/// LeastCutValue, score sum for RN); the run stops with `pruned` once it can
/// no longer beat it. The graph must be connected.
GreedyRun generate_ordering(const Graph& g, const HeuristicConfig& cfg, Vertex init,
                            std::optional<double> best_so_far = std::nullopt);

// Start vertices in trial order: double BFS from vertex 0, single BFS, then
// the remaining vertices ascending, as selected by `strategy`.
std::vector<Vertex> start_vertices(const Graph& g, StartStrategy strategy);

struct MultiStartResult {
    GreedyRun best;
    Vertex start = 0;
    std::size_t runs = 0;
    std::size_t pruned_runs = 0;
};

// Best run over the configured starts (ties go to the earlier start). The
// graph must be connected.
MultiStartResult multi_start(const Graph& g, const HeuristicConfig& cfg);

}  // namespace lbw
