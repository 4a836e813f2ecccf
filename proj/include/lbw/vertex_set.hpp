#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "lbw/simd.hpp"

namespace lbw {

using Vertex = std::size_t;
using Word = simd::Word;

inline constexpr std::size_t words_for(std::size_t capacity) { return (capacity + 63) / 64; }

/// Fixed-capacity set of vertex indices {0, ..., capacity-1} stored as a bitset.
/// Binary operations require both operands to share the same capacity.
class VertexSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const Word* words, std::size_t nwords, std::size_t word_index)
            : words_(words), nwords_(nwords), index_(word_index) {
            if (index_ < nwords_) current_ = words_[index_];
            advance_to_set_bit();
        }

        Vertex operator*() const { return index_ * 64 + static_cast<std::size_t>(__builtin_ctzll(current_)); }

        const_iterator& operator++() {
            current_ &= current_ - 1;
            advance_to_set_bit();
            return *this;
        }

        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }

        bool operator==(const const_iterator& o) const { return index_ == o.index_ && current_ == o.current_; }

    private:
        void advance_to_set_bit() {
            while (current_ == 0 && index_ < nwords_) {
                ++index_;
                if (index_ < nwords_) current_ = words_[index_];
            }
        }

        const Word* words_ = nullptr;
        std::size_t nwords_ = 0;
        std::size_t index_ = 0;
        Word current_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_(words_for(capacity), 0) {}
    VertexSet(std::size_t capacity, std::initializer_list<Vertex> members);
    VertexSet(std::size_t capacity, std::span<const Word> words);

    static VertexSet full(std::size_t capacity);
    static VertexSet from_range(std::size_t capacity, const std::vector<Vertex>& members);

    std::size_t capacity() const noexcept { return capacity_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    bool contains(Vertex v) const noexcept { return v < capacity_ && (words_[v / 64] >> (v % 64)) & 1U; }
    void insert(Vertex v);
    void erase(Vertex v);
    void clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

    std::size_t size() const noexcept { return simd::ops::popcount(words_.data(), words_.size()); }
    bool empty() const noexcept;
    // Smallest member; capacity() when empty.
    Vertex first() const noexcept;

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    VertexSet complement() const;

    bool intersects(const VertexSet& o) const;
    bool is_subset_of(const VertexSet& o) const;
    std::size_t intersection_size(const VertexSet& o) const;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.capacity_ == b.capacity_ && simd::ops::equal(a.words_.data(), b.words_.data(), a.words_.size());
    }

    // Lexicographic on the sorted member sequences.
    friend bool lex_less(const VertexSet& a, const VertexSet& b);

    const_iterator begin() const { return {words_.data(), words_.size(), 0}; }
    const_iterator end() const { return {words_.data(), words_.size(), words_.size()}; }

    std::vector<Vertex> to_vector() const;
    std::uint64_t hash() const noexcept { return simd::ops::hash(words_.data(), words_.size()); }

    // "{0,2,5}"
    std::string to_string() const;

private:
    void check_same_capacity(const VertexSet& o) const;
    void trim() noexcept;

    std::size_t capacity_ = 0;
    std::vector<Word> words_;
};

}  // namespace lbw

template <>
struct std::hash<lbw::VertexSet> {
    std::size_t operator()(const lbw::VertexSet& s) const noexcept { return static_cast<std::size_t>(s.hash()); }
};
