#include "lbw/classes.hpp"

#include <algorithm>
#include <cmath>

#include "lbw/cut.hpp"
#include "lbw/error.hpp"

namespace lbw {

DNeighborhood::DNeighborhood(std::size_t capacity, std::size_t d)
    : capacity_(capacity), d_(d), words_(words_for(capacity)), packed_(d * words_for(capacity), 0) {}

DNeighborhood DNeighborhood::of(const Graph& g, const VertexSet& opposite, const VertexSet& x, std::size_t d) {
    DNeighborhood out(g.size(), d);
    for (Vertex u : opposite) {
        const std::size_t c = std::min(d, g.neighbors(u).intersection_size(x));
        for (std::size_t j = 1; j <= c; ++j) out.packed_[(j - 1) * out.words_ + u / 64] |= Word{1} << (u % 64);
    }
    return out;
}

std::size_t DNeighborhood::count(Vertex u) const {
    if (u >= capacity_) throw ContractViolation("DNeighborhood: vertex out of range");
    std::size_t c = 0;
    while (c < d_ && ((packed_[c * words_ + u / 64] >> (u % 64)) & 1U)) ++c;
    return c;
}

DNeighborhood DNeighborhood::extended(const Graph& g, Vertex v, bool add, const VertexSet& opposite) const {
    DNeighborhood out = *this;
    const Word* nv = g.neighbors(v).words().data();
    if (add && d_ > 0) {
        std::vector<Word> carry(words_);
        for (std::size_t j = d_; j >= 2; --j) {
            simd::ops::bit_and(carry.data(), out.packed_.data() + (j - 2) * words_, nv, words_);
            simd::ops::bit_or(out.packed_.data() + (j - 1) * words_, out.packed_.data() + (j - 1) * words_,
                              carry.data(), words_);
        }
        simd::ops::bit_or(out.packed_.data(), out.packed_.data(), nv, words_);
    }
    const Word* opp = opposite.words().data();
    for (std::size_t j = 0; j < d_; ++j)
        simd::ops::bit_and(out.packed_.data() + j * words_, out.packed_.data() + j * words_, opp, words_);
    return out;
}

ClassFamily::ClassFamily(const VertexSet& side, std::size_t d) : side_(side), opposite_(side.complement()), d_(d) {}

std::optional<std::size_t> ClassFamily::find(const DNeighborhood& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t ClassFamily::intern(DNeighborhood key, const VertexSet& rep) {
    auto [it, inserted] = index_.try_emplace(key, reps_.size());
    if (inserted) {
        reps_.push_back(rep);
        keys_.push_back(std::move(key));
    }
    return it->second;
}

ClassFamily enumerate_classes(const Graph& g, const VertexSet& side, std::size_t d) {
    ClassFamily family(side, d);
    family.intern(DNeighborhood(g.size(), d), VertexSet(g.size()));
    std::vector<std::size_t> level{0};
    while (!level.empty()) {
        std::unordered_map<DNeighborhood, VertexSet, DNeighborhoodHash> found;
        for (std::size_t id : level) {
            const VertexSet& rep = family.representative(id);
            for (Vertex v : side - rep) {
                DNeighborhood key = family.key(id).extended(g, v, true, family.opposite());
                if (family.find(key)) continue;
                VertexSet grown = rep;
                grown.insert(v);
                auto [it, inserted] = found.try_emplace(std::move(key), grown);
                if (!inserted && lex_less(grown, it->second)) it->second = std::move(grown);
            }
        }
        std::vector<std::pair<VertexSet, DNeighborhood>> fresh;
        fresh.reserve(found.size());
        for (auto& [key, rep] : found) fresh.emplace_back(rep, key);
        std::sort(fresh.begin(), fresh.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
        level.clear();
        for (auto& [rep, key] : fresh) level.push_back(family.intern(std::move(key), rep));
    }
    return family;
}

ClassChain build_class_chain(const Graph& g, const std::vector<Vertex>& order, std::size_t d) {
    if (!is_permutation_of_vertices(g, order)) throw ContractViolation("build_class_chain: ordering is not a permutation");
    const std::size_t n = order.size();
    ClassChain chain;
    chain.order = order;
    chain.d = d;
    chain.inner.resize(n + 1);
    chain.outer.resize(n + 1);
    chain.inner_next.resize(n);
    chain.outer_parent.resize(n);

    std::vector<VertexSet> prefix(n + 1, VertexSet(g.size()));
    for (std::size_t i = 0; i < n; ++i) {
        prefix[i + 1] = prefix[i];
        prefix[i + 1].insert(order[i]);
    }

    chain.inner[0] = ClassFamily(prefix[0], d);
    chain.inner[0].intern(DNeighborhood(g.size(), d), VertexSet(g.size()));
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = order[i];
        const ClassFamily& from = chain.inner[i];
        ClassFamily to(prefix[i + 1], d);
        auto& next = chain.inner_next[i];
        next.resize(2 * from.size());
        for (std::size_t c = 0; c < from.size(); ++c) {
            for (int b = 0; b < 2; ++b) {
                VertexSet rep = from.representative(c);
                if (b) rep.insert(v);
                next[2 * c + b] =
                    static_cast<std::uint32_t>(to.intern(from.key(c).extended(g, v, b != 0, to.opposite()), rep));
            }
        }
        chain.inner[i + 1] = std::move(to);
    }

    chain.outer[n] = ClassFamily(prefix[n].complement(), d);
    chain.outer[n].intern(DNeighborhood(g.size(), d), VertexSet(g.size()));
    for (std::size_t i = n; i-- > 0;) {
        const Vertex v = order[i];
        const ClassFamily& from = chain.outer[i + 1];
        ClassFamily to(prefix[i].complement(), d);
        auto& parent = chain.outer_parent[i];
        parent.resize(2 * from.size());
        for (std::size_t o = 0; o < from.size(); ++o) {
            for (int b = 0; b < 2; ++b) {
                VertexSet rep = from.representative(o);
                if (b) rep.insert(v);
                parent[2 * o + b] =
                    static_cast<std::uint32_t>(to.intern(from.key(o).extended(g, v, b != 0, to.opposite()), rep));
            }
        }
        chain.outer[i] = std::move(to);
    }
    return chain;
}

NecProfile nec_profile(const ClassChain& chain) {
    NecProfile p;
    const std::size_t n = chain.order.size();
    for (std::size_t i = 1; i < n; ++i) {
        p.inner.push_back(chain.inner[i].size());
        p.outer.push_back(chain.outer[i].size());
        p.nec = std::max({p.nec, chain.inner[i].size(), chain.outer[i].size()});
    }
    return p;
}

std::size_t nec_of_decomposition(const Graph& g, const std::vector<Vertex>& order, std::size_t d) {
    return nec_profile(build_class_chain(g, order, d)).nec;
}

NecBounds nec_bounds(const Graph& g, const std::vector<Vertex>& order, std::size_t d) {
    const LinearDecomposition dec = width_of_ordering(g, order);
    NecBounds b;
    b.width = dec.width;
    for (const CutStats& cut : dec.cuts) {
        b.ntc = std::max({b.ntc, cut.ntc_left, cut.ntc_right});
        b.min_ntc = std::max(b.min_ntc, std::min(cut.ntc_left, cut.ntc_right));
    }
    const double dd = static_cast<double>(d);
    b.ub1 = dd * b.width * b.width;
    b.ub2 = static_cast<double>(b.min_ntc) * std::log2(dd + 1.0);
    b.ub3 = b.ntc > 0 ? dd * b.width * std::log2(static_cast<double>(b.ntc)) : 0.0;
    return b;
}

}  // namespace lbw
