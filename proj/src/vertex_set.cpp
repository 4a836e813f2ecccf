#include "lbw/vertex_set.hpp"

#include <algorithm>

#include "lbw/error.hpp"

namespace lbw {

VertexSet::VertexSet(std::size_t capacity, std::initializer_list<Vertex> members) : VertexSet(capacity) {
    for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t capacity, std::span<const Word> words) : VertexSet(capacity) {
    if (words.size() != words_.size()) throw ContractViolation("VertexSet: word count does not match capacity");
    std::copy(words.begin(), words.end(), words_.begin());
    trim();
}

VertexSet VertexSet::full(std::size_t capacity) {
    VertexSet s(capacity);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    s.trim();
    return s;
}

VertexSet VertexSet::from_range(std::size_t capacity, const std::vector<Vertex>& members) {
    VertexSet s(capacity);
    for (Vertex v : members) s.insert(v);
    return s;
}

void VertexSet::insert(Vertex v) {
    if (v >= capacity_) throw ContractViolation("VertexSet: vertex " + std::to_string(v) + " out of range");
    words_[v / 64] |= Word{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
    if (v >= capacity_) return;
    words_[v / 64] &= ~(Word{1} << (v % 64));
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

Vertex VertexSet::first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[i]));
    return capacity_;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    check_same_capacity(o);
    simd::ops::bit_or(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    check_same_capacity(o);
    simd::ops::bit_and(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    check_same_capacity(o);
    simd::ops::bit_andnot(words_.data(), words_.data(), o.words_.data(), words_.size());
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet out(capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    out.trim();
    return out;
}

bool VertexSet::intersects(const VertexSet& o) const {
    check_same_capacity(o);
    return simd::ops::intersects(words_.data(), o.words_.data(), words_.size());
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    check_same_capacity(o);
    return simd::ops::subset(words_.data(), o.words_.data(), words_.size());
}

std::size_t VertexSet::intersection_size(const VertexSet& o) const {
    check_same_capacity(o);
    return simd::ops::popcount_and(words_.data(), o.words_.data(), words_.size());
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
        if (*ia != *ib) return *ia < *ib;
    return ia == a.end() && ib != b.end();
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first_member = true;
    for (Vertex v : *this) {
        if (!first_member) out += ',';
        out += std::to_string(v);
        first_member = false;
    }
    return out + "}";
}

void VertexSet::check_same_capacity(const VertexSet& o) const {
    if (capacity_ != o.capacity_)
        throw ContractViolation("VertexSet: capacity mismatch (" + std::to_string(capacity_) + " vs " +
                                std::to_string(o.capacity_) + ")");
}

void VertexSet::trim() noexcept {
    if (capacity_ % 64 != 0 && !words_.empty()) words_.back() &= (Word{1} << (capacity_ % 64)) - 1;
}

}  // namespace lbw
