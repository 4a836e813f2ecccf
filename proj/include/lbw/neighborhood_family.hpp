#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "lbw/graph.hpp"
#include "lbw/vertex_set.hpp"

namespace lbw {

/// Deduplicated collection of vertex sets, all subsets of a fixed universe
/// (the far side of a cut). Members live contiguously in one word pool and are
/// indexed by an open-addressing hash table, so families with many thousands
/// of members stay cheap to build and probe. The empty set is always a member.
class NeighborhoodFamily {
public:
    NeighborhoodFamily() = default;
    explicit NeighborhoodFamily(VertexSet universe);

    // Drops all members except the empty set and switches to a new universe.
    // Keeps allocated storage.
    void reset(const VertexSet& universe);

    const VertexSet& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return count_; }
    std::size_t word_count() const noexcept { return words_; }

    // Returns true if the set was not yet present. The caller guarantees the
    // set is a subset of the universe (checked by insert(const VertexSet&)).
    bool insert(const Word* words);
    bool insert(const VertexSet& s);
    bool contains(const VertexSet& s) const;

    std::span<const Word> member_words(std::size_t i) const { return {pool_.data() + i * words_, words_}; }
    VertexSet member(std::size_t i) const { return VertexSet(universe_.capacity(), member_words(i)); }
    std::vector<VertexSet> members() const;

    // Same members regardless of insertion order.
    friend bool operator==(const NeighborhoodFamily& a, const NeighborhoodFamily& b);

private:
    std::size_t find_slot(const Word* words, std::uint64_t h) const;
    void grow();

    std::size_t words_ = 0;
    VertexSet universe_;
    std::vector<Word> pool_;
    std::vector<std::uint64_t> hashes_;
    std::vector<std::uint32_t> slots_;  // 0 = empty, else member index + 1
    std::size_t count_ = 0;
};

inline constexpr std::size_t kNoLimit = std::numeric_limits<std::size_t>::max();

/// One Increment-UN step: from UN(X) (universe = complement of X) build
/// UN(X ∪ {v}) into `out`. Each member S yields S∖{v} and (S∖{v}) ∪ M with
/// M = N(v) ∩ (universe∖{v}). Stops early and returns false as soon as the
/// result would exceed `limit` members; `out` is then partial.
bool increment_un_into(const Graph& g, const NeighborhoodFamily& un_x, Vertex v, NeighborhoodFamily& out,
                       std::size_t limit = kNoLimit);

}  // namespace lbw
