#include "lbw/neighborhood_family.hpp"

#include <algorithm>

#include "lbw/error.hpp"

namespace lbw {

namespace {
constexpr std::size_t kInitialSlots = 16;
}

NeighborhoodFamily::NeighborhoodFamily(VertexSet universe) { reset(universe); }

void NeighborhoodFamily::reset(const VertexSet& universe) {
    universe_ = universe;
    words_ = universe.word_count();
    pool_.clear();
    hashes_.clear();
    count_ = 0;
    if (slots_.size() < kInitialSlots)
        slots_.assign(kInitialSlots, 0);
    else
        std::fill(slots_.begin(), slots_.end(), 0U);
    std::vector<Word> zero(words_, 0);
    insert(zero.data());
}

std::size_t NeighborhoodFamily::find_slot(const Word* words, std::uint64_t h) const {
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = static_cast<std::size_t>(h) & mask;
    while (true) {
        const std::uint32_t s = slots_[i];
        if (s == 0) return i;
        const std::size_t m = s - 1;
        if (hashes_[m] == h && simd::ops::equal(pool_.data() + m * words_, words, words_)) return i;
        i = (i + 1) & mask;
    }
}

void NeighborhoodFamily::grow() {
    slots_.assign(slots_.size() * 2, 0);
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t m = 0; m < count_; ++m) {
        std::size_t i = static_cast<std::size_t>(hashes_[m]) & mask;
        while (slots_[i] != 0) i = (i + 1) & mask;
        slots_[i] = static_cast<std::uint32_t>(m + 1);
    }
}

bool NeighborhoodFamily::insert(const Word* words) {
    const std::uint64_t h = simd::ops::hash(words, words_);
    std::size_t i = find_slot(words, h);
    if (slots_[i] != 0) return false;
    if ((count_ + 1) * 2 > slots_.size()) {
        grow();
        i = find_slot(words, h);
    }
    pool_.insert(pool_.end(), words, words + words_);
    hashes_.push_back(h);
    slots_[i] = static_cast<std::uint32_t>(++count_);
    return true;
}

bool NeighborhoodFamily::insert(const VertexSet& s) {
    if (s.capacity() != universe_.capacity() || !s.is_subset_of(universe_))
        throw ContractViolation("NeighborhoodFamily: member must be a subset of the universe");
    return insert(s.words().data());
}

bool NeighborhoodFamily::contains(const VertexSet& s) const {
    if (s.capacity() != universe_.capacity()) return false;
    const Word* w = s.words().data();
    return slots_[find_slot(w, simd::ops::hash(w, words_))] != 0;
}

std::vector<VertexSet> NeighborhoodFamily::members() const {
    std::vector<VertexSet> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) out.push_back(member(i));
    return out;
}

bool operator==(const NeighborhoodFamily& a, const NeighborhoodFamily& b) {
    if (a.universe_ != b.universe_ || a.count_ != b.count_) return false;
    for (std::size_t i = 0; i < a.count_; ++i)
        if (!b.contains(a.member(i))) return false;
    return true;
}

bool increment_un_into(const Graph& g, const NeighborhoodFamily& un_x, Vertex v, NeighborhoodFamily& out,
                       std::size_t limit) {
    VertexSet universe = un_x.universe();
    universe.erase(v);
    out.reset(universe);
    const std::size_t w = un_x.word_count();
    std::vector<Word> added(w), scratch(w), drop(w, 0);
    simd::ops::bit_and(added.data(), g.neighbors(v).words().data(), universe.words().data(), w);
    drop[v / 64] = Word{1} << (v % 64);
    for (std::size_t i = 0; i < un_x.size(); ++i) {
        const Word* s = un_x.member_words(i).data();
        simd::ops::bit_andnot(scratch.data(), s, drop.data(), w);
        out.insert(scratch.data());
        simd::ops::bit_or(scratch.data(), scratch.data(), added.data(), w);
        out.insert(scratch.data());
        if (out.size() > limit) return false;
    }
    return true;
}

}  // namespace lbw
