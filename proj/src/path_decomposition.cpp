#include "lbw/path_decomposition.hpp"

#include <algorithm>

#include "lbw/error.hpp"

namespace lbw {

std::size_t PathDecomposition::max_bag_size() const {
    std::size_t best = 0;
    for (const auto& bag : bags) best = std::max(best, bag.size());
    return best;
}

void validate_path_decomposition(const Graph& g, const PathDecomposition& pd) {
    for (const auto& bag : pd.bags)
        if (bag.capacity() != g.size()) throw ValidationError("path decomposition: bag capacity does not match graph");

    VertexSet covered(g.size());
    for (const auto& bag : pd.bags) covered |= bag;
    if (covered != g.all()) {
        Vertex missing = (g.all() - covered).first();
        throw ValidationError("path decomposition violates vertex coverage: vertex " + g.label(missing) +
                              " is in no bag");
    }

    for (auto [u, v] : g.edges()) {
        bool found = std::any_of(pd.bags.begin(), pd.bags.end(),
                                 [&](const VertexSet& bag) { return bag.contains(u) && bag.contains(v); });
        if (!found)
            throw ValidationError("path decomposition violates edge coverage: edge {" + g.label(u) + "," + g.label(v) +
                                  "} is in no bag");
    }

    // Once a vertex leaves, it must not come back.
    VertexSet active(g.size()), retired(g.size());
    for (const auto& bag : pd.bags) {
        if (bag.intersects(retired)) {
            Vertex back = (bag & retired).first();
            throw ValidationError("path decomposition violates contiguity: vertex " + g.label(back) +
                                  " reappears after leaving");
        }
        retired |= active - bag;
        active = bag;
    }
}

LinearDecomposition order_from_path_decomposition(const Graph& g, const PathDecomposition& pd) {
    validate_path_decomposition(g, pd);
    std::vector<Vertex> order;
    order.reserve(g.size());
    VertexSet placed(g.size());
    for (const auto& bag : pd.bags) {
        for (Vertex v : bag - placed) order.push_back(v);
        placed |= bag;
    }
    return width_of_ordering(g, order);
}

}  // namespace lbw
