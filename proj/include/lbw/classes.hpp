#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lbw/graph.hpp"

namespace lbw {

/// Capped neighbor counts of a set X ⊆ A over the opposite side Ā: vertex u
/// occurs min(d, |N(u) ∩ X|) times. Stored as d layered bitsets, layer j
/// (1-based) holding the u with count >= j.
class DNeighborhood {
public:
    DNeighborhood() = default;
    DNeighborhood(std::size_t capacity, std::size_t d);

    // Direct construction from the definition.
    static DNeighborhood of(const Graph& g, const VertexSet& opposite, const VertexSet& x, std::size_t d);

    std::size_t d() const noexcept { return d_; }
    std::size_t count(Vertex u) const;
    std::span<const Word> layer(std::size_t j) const { return {packed_.data() + (j - 1) * words_, words_}; }

    // Adds `v` to the generating set, then restricts the vector to `opposite`.
    DNeighborhood extended(const Graph& g, Vertex v, bool add, const VertexSet& opposite) const;

    std::uint64_t hash() const noexcept { return simd::ops::hash(packed_.data(), packed_.size()); }
    friend bool operator==(const DNeighborhood& a, const DNeighborhood& b) { return a.packed_ == b.packed_; }

private:
    std::size_t capacity_ = 0;
    std::size_t d_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> packed_;
};

struct DNeighborhoodHash {
    std::size_t operator()(const DNeighborhood& k) const noexcept { return static_cast<std::size_t>(k.hash()); }
};

/// Equivalence classes of ≡_A^d, one representative per class.
class ClassFamily {
public:
    ClassFamily() = default;
    ClassFamily(const VertexSet& side, std::size_t d);

    const VertexSet& side() const noexcept { return side_; }
    const VertexSet& opposite() const noexcept { return opposite_; }
    std::size_t d() const noexcept { return d_; }
    std::size_t size() const noexcept { return reps_.size(); }

    const VertexSet& representative(std::size_t id) const { return reps_[id]; }
    const DNeighborhood& key(std::size_t id) const { return keys_[id]; }

    std::optional<std::size_t> find(const DNeighborhood& key) const;
    // Returns the id of the key, adding it with `rep` when new.
    std::size_t intern(DNeighborhood key, const VertexSet& rep);

private:
    VertexSet side_, opposite_;
    std::size_t d_ = 0;
    std::vector<VertexSet> reps_;
    std::vector<DNeighborhood> keys_;
    std::unordered_map<DNeighborhood, std::size_t, DNeighborhoodHash> index_;
};

/// Breadth-first closure from ∅ under single-vertex extensions of the
/// representatives. Representatives are smallest-size, then lexicographically
/// smallest among those found; ids follow that order.
ClassFamily enumerate_classes(const Graph& g, const VertexSet& side, std::size_t d);

/// Classes of every prefix A_i (inner) and suffix Ā_i (outer) of an ordering,
/// i = 0..n, built along the ordering so that each family is complete:
/// inner[i+1] from inner[i] by optionally adding π_{i+1}, outer[i] from
/// outer[i+1] likewise.
struct ClassChain {
    std::vector<Vertex> order;
    std::size_t d = 0;
    std::vector<ClassFamily> inner, outer;
    // inner_next[i][2*c + b]: class in inner[i+1] of rep(c) ∪ ({π_{i+1}} if b).
    std::vector<std::vector<std::uint32_t>> inner_next;
    // outer_parent[i][2*o + b]: class in outer[i] of rep(o) ∪ ({π_{i+1}} if b),
    // for o a class of outer[i+1].
    std::vector<std::vector<std::uint32_t>> outer_parent;
};

ClassChain build_class_chain(const Graph& g, const std::vector<Vertex>& order, std::size_t d);

struct NecProfile {
    std::size_t nec = 1;               // max over proper prefix cuts of both sides
    std::vector<std::size_t> inner;    // |classes(A_i)|, i = 1..n-1
    std::vector<std::size_t> outer;    // |classes(Ā_i)|, i = 1..n-1
};

NecProfile nec_profile(const ClassChain& chain);
std::size_t nec_of_decomposition(const Graph& g, const std::vector<Vertex>& order, std::size_t d);

/// log2 of the three upper bounds on nec_d for a decomposition, with
/// k = width, ntc = max over cuts and both sides of ntc, and
/// min_ntc = max over cuts of min(ntc(A), ntc(Ā)):
/// ub1 = d k^2, ub2 = min_ntc log2(d+1), ub3 = d k log2(ntc).
struct NecBounds {
    double width = 0.0;
    std::size_t ntc = 0;
    std::size_t min_ntc = 0;
    double ub1 = 0.0, ub2 = 0.0, ub3 = 0.0;
};

NecBounds nec_bounds(const Graph& g, const std::vector<Vertex>& order, std::size_t d);

}  // namespace lbw
