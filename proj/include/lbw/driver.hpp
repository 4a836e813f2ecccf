#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lbw/cut.hpp"
#include "lbw/heuristics.hpp"

namespace lbw {

enum class Strategy { RN1, RN2, RN3, LCV, IUN, Exact, Random };

Strategy parse_strategy(std::string_view name);
std::string_view to_string(Strategy s);

struct DecomposeOptions {
    Strategy strategy = Strategy::IUN;
    StartStrategy starts = StartStrategy::DoubleBFS;
    CandidateStrategy candidates = CandidateStrategy::TwoNeighborhood;
    std::uint64_t seed = 0;  // Random only
    Deadline deadline;
    TrivialCaseObserver on_trivial_case;
};

/// Decomposes every connected component separately and concatenates the
/// orderings in component order; Random permutes the whole vertex set. The
/// returned statistics are measured on the full graph.
LinearDecomposition decompose(const Graph& g, const DecomposeOptions& opts);

// A uniformly random permutation of V drawn from Xoshiro256(seed).
std::vector<Vertex> random_ordering(std::size_t n, std::uint64_t seed);

// "1.58"
std::string format_width(double width);

/// Decomposition file: `width <w>` then the vertex labels in order on one
/// line. With `raw`, a third line `max_un <|UN|>` follows.
void write_decomposition(std::ostream& out, const Graph& g, const LinearDecomposition& d, bool raw = false);

struct DecompositionFile {
    std::optional<double> width;
    std::vector<std::string> labels;
};

DecompositionFile parse_decomposition(std::istream& in);

// Maps labels to vertices. Throws ValidationError naming the first unknown,
// repeated, or missing vertex.
std::vector<Vertex> ordering_from_labels(const Graph& g, const std::vector<std::string>& labels);

// `prefix,un,booldim`, one row per proper prefix cut.
void write_cuts_csv(std::ostream& out, const LinearDecomposition& d);

}  // namespace lbw
