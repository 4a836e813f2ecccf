#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lbw/vertex_set.hpp"

namespace lbw {

/// Immutable simple undirected graph. Adjacency is one VertexSet per vertex;
/// labels keep the names vertices had in the input file.
class Graph {
public:
    Graph() = default;

    // Self-loops and duplicate edges are dropped. Labels default to "0".."n-1".
    Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::vector<std::string> labels = {});

    std::size_t size() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    // |E| / C(n,2); 0 for n < 2.
    double density() const noexcept;

    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Vertex v) const { return labels_[v]; }

    VertexSet empty_set() const { return VertexSet(size()); }
    VertexSet all() const { return VertexSet::full(size()); }

    // N(S) = union of N(v) over v in S (may intersect S).
    VertexSet neighborhood(const VertexSet& s) const;

    // Edges (u, v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    // Subgraph induced by `keep`, vertices renumbered in ascending order.
    // `mapping[i]` is the original index of new vertex i.
    Graph induced(const VertexSet& keep, std::vector<Vertex>* mapping = nullptr) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_ && a.labels_ == b.labels_; }

private:
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

// DGF: `c` comments, optional `p` header, `n <name>` vertex lines, `e <a> <b>`
// edge lines. Vertices are numbered in first-appearance order of names.
Graph parse_dgf(std::istream& in);
Graph parse_dgf(const std::string& text);

// DIMACS .col: `p edge <n> <m>` header, `e <u> <v>` lines with 1-based names.
Graph parse_dimacs_col(std::istream& in);
Graph parse_dimacs_col(const std::string& text);

// Picks the DIMACS reader for `.col` files, DGF otherwise.
Graph read_graph_file(const std::string& path);

// Canonical DGF: header, one `n` line per vertex in index order, sorted edges.
void write_dgf(std::ostream& out, const Graph& g);
std::string to_dgf(const Graph& g);

/// G(n, p): every unordered pair {u, v}, u < v, visited in lexicographic order
/// becomes an edge iff the next uniform draw from Xoshiro256(seed) is < p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// BFS levels from `origin` restricted to the component of origin.
std::vector<VertexSet> bfs_levels(const Graph& g, Vertex origin);

// Smallest vertex of the last BFS level from origin; with `twice`, the search
// is repeated once from that vertex.
Vertex bfs_start_vertex(const Graph& g, Vertex origin, bool twice);

}  // namespace lbw
