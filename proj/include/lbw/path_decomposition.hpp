#pragma once

#include <vector>

#include "lbw/cut.hpp"
#include "lbw/graph.hpp"

namespace lbw {

struct PathDecomposition {
    std::vector<VertexSet> bags;

    std::size_t max_bag_size() const;
};

// Throws ValidationError naming the first violated rule: vertex coverage,
// edge coverage, or contiguity of the bags containing a vertex.
void validate_path_decomposition(const Graph& g, const PathDecomposition& pd);

// Emits each vertex at the first bag containing it, bags left to right, in
// ascending index within a bag. The resulting width is at most the largest
// bag size in bits.
LinearDecomposition order_from_path_decomposition(const Graph& g, const PathDecomposition& pd);

}  // namespace lbw
