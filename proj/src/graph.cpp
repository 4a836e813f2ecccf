#include "lbw/graph.hpp"

#include <algorithm>

#include "lbw/error.hpp"
#include "lbw/rng.hpp"

namespace lbw {

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::vector<std::string> labels)
    : adj_(n, VertexSet(n)), labels_(std::move(labels)) {
    if (labels_.empty()) {
        labels_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
    }
    if (labels_.size() != n) throw ContractViolation("Graph: label count does not match vertex count");
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw ContractViolation("Graph: edge endpoint out of range");
        if (u == v || adj_[u].contains(v)) continue;
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++edge_count_;
    }
}

double Graph::density() const noexcept {
    const std::size_t n = size();
    if (n < 2) return 0.0;
    return static_cast<double>(edge_count_) / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
    VertexSet out(size());
    for (Vertex v : s) out |= adj_[v];
    return out;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<Vertex>* mapping) const {
    std::vector<Vertex> old_of = keep.to_vector();
    std::vector<Vertex> new_of(size(), size());
    for (std::size_t i = 0; i < old_of.size(); ++i) new_of[old_of[i]] = i;
    std::vector<std::pair<Vertex, Vertex>> sub_edges;
    std::vector<std::string> sub_labels;
    for (Vertex u : old_of) {
        sub_labels.push_back(labels_[u]);
        for (Vertex v : adj_[u])
            if (u < v && keep.contains(v)) sub_edges.emplace_back(new_of[u], new_of[v]);
    }
    if (mapping) *mapping = old_of;
    return Graph(old_of.size(), sub_edges, std::move(sub_labels));
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet seen(g.size());
    for (Vertex s = 0; s < g.size(); ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp(g.size());
        VertexSet frontier(g.size(), {s});
        while (!frontier.empty()) {
            comp |= frontier;
            frontier = g.neighborhood(frontier) - comp;
        }
        seen |= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<VertexSet> bfs_levels(const Graph& g, Vertex origin) {
    if (origin >= g.size()) throw ContractViolation("bfs: origin out of range");
    std::vector<VertexSet> levels;
    VertexSet visited(g.size(), {origin});
    VertexSet frontier = visited;
    while (!frontier.empty()) {
        levels.push_back(frontier);
        frontier = g.neighborhood(frontier) - visited;
        visited |= frontier;
    }
    return levels;
}

Vertex bfs_start_vertex(const Graph& g, Vertex origin, bool twice) {
    Vertex found = bfs_levels(g, origin).back().first();
    if (twice) found = bfs_levels(g, found).back().first();
    return found;
}

}  // namespace lbw
