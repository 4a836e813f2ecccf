#include "lbw/exact.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "lbw/cut.hpp"
#include "lbw/error.hpp"
#include "lbw/neighborhood_family.hpp"

namespace lbw {
namespace {

using Mask = std::uint64_t;
constexpr std::uint32_t kUndefined = 0;
constexpr std::uint64_t kInfinity = std::numeric_limits<std::uint64_t>::max();
constexpr std::uint8_t kNoPred = 0xff;

VertexSet to_set(std::size_t n, Mask m) {
    VertexSet s(n);
    for (; m; m &= m - 1) s.insert(static_cast<Vertex>(__builtin_ctzll(m)));
    return s;
}

struct PEntry {
    std::uint64_t value = kInfinity;
    std::uint8_t pred = kNoPred;
};

// |UN| values are stored capped at K+1; anything above K only needs to be
// recognized as too large.
class FlatTables {
public:
    explicit FlatTables(std::size_t n) : t_un_(std::size_t{1} << n, kUndefined), p_(std::size_t{1} << n) {}

    std::uint32_t t_un(Mask m) const { return t_un_[m]; }
    void set_t_un(Mask m, std::uint32_t v) { t_un_[m] = v; }
    PEntry& p(Mask m) { return p_[m]; }
    const PEntry* find_p(Mask m) const { return &p_[m]; }
    std::size_t entries() const { return 0; }

private:
    std::vector<std::uint32_t> t_un_;
    std::vector<PEntry> p_;
};

class HashedTables {
public:
    explicit HashedTables(std::size_t /*n*/) {}

    std::uint32_t t_un(Mask m) const {
        auto it = t_un_.find(m);
        return it == t_un_.end() ? kUndefined : it->second;
    }
    void set_t_un(Mask m, std::uint32_t v) { t_un_[m] = v; }
    PEntry& p(Mask m) { return p_[m]; }
    const PEntry* find_p(Mask m) const {
        auto it = p_.find(m);
        return it == p_.end() ? nullptr : &it->second;
    }
    std::size_t entries() const { return t_un_.size() + p_.size(); }

private:
    std::unordered_map<Mask, std::uint32_t> t_un_;
    std::unordered_map<Mask, PEntry> p_;
};

template <class Tables>
class IncrementalExact {
public:
    IncrementalExact(const Graph& g, std::uint64_t k, const ExactOptions& opts)
        : g_(g), n_(g.size()), k_(k), opts_(opts), tables_(n_), families_(n_ + 1) {
        stored_cap_ = static_cast<std::uint32_t>(std::min<std::uint64_t>(k_, std::numeric_limits<std::uint32_t>::max() - 1));
    }

    ExactResult run() {
        // T_UN(∅) is never read by the recurrence; mark it defined.
        tables_.set_t_un(0, 1);
        families_[0].reset(g_.all());
        compute_count_un(0, 0);
        return solve_recurrence();
    }

private:
    void compute_count_un(Mask x, std::size_t depth) {
        const NeighborhoodFamily& un_x = families_[depth];
        NeighborhoodFamily& un_y = families_[depth + 1];
        for (Vertex v = 0; v < n_; ++v) {
            const Mask y = x | (Mask{1} << v);
            if (y == x || tables_.t_un(y) != kUndefined) continue;
            ++explored_;
            check_budget();
            const bool within = increment_un_into(g_, un_x, v, un_y, k_);
            const std::uint32_t stored = within ? static_cast<std::uint32_t>(un_y.size()) : stored_cap_ + 1;
            tables_.set_t_un(y, stored);
            if (within) compute_count_un(y, depth + 1);
        }
    }

    void check_budget() {
        if (tables_.entries() > opts_.max_table_entries)
            throw ScaleGuardError("incremental_un_exact: subset table budget exceeded after exploring " +
                                  std::to_string(explored_) + " subsets");
        if (opts_.deadline && (explored_ & 0xfff) == 0 && std::chrono::steady_clock::now() > *opts_.deadline)
            throw TimeLimitExceeded();
    }

    ExactResult solve_recurrence() {
        ExactResult result;
        result.explored = explored_;
        result.explored_total = explored_;
        tables_.p(0) = PEntry{0, kNoPred};
        std::vector<Mask> frontier{0}, touched;
        const Mask full = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        for (std::size_t level = 0; level < n_; ++level) {
            touched.clear();
            for (Mask x : frontier) {
                const std::uint64_t px = tables_.p(x).value;
                for (Vertex v = 0; v < n_; ++v) {
                    const Mask y = x | (Mask{1} << v);
                    if (y == x) continue;
                    const std::uint64_t value = std::max<std::uint64_t>(tables_.t_un(y), px);
                    PEntry& py = tables_.p(y);
                    if (py.pred == kNoPred) touched.push_back(y);
                    if (value < py.value || (value == py.value && v < py.pred)) {
                        py.value = value;
                        py.pred = static_cast<std::uint8_t>(v);
                    }
                }
            }
            frontier.clear();
            for (Mask y : touched)
                if (tables_.p(y).value <= k_) frontier.push_back(y);
        }
        const PEntry* root = tables_.find_p(full);
        if (n_ == 0) root = tables_.find_p(0);
        if (root == nullptr || root->value > k_) return result;
        result.un_value = root->value;
        result.width = log2_count(root->value);
        std::vector<Vertex> reversed;
        for (Mask m = full; m != 0;) {
            const std::uint8_t v = tables_.find_p(m)->pred;
            reversed.push_back(v);
            m &= ~(Mask{1} << v);
        }
        result.ordering.assign(reversed.rbegin(), reversed.rend());
        return result;
    }

    const Graph& g_;
    std::size_t n_;
    std::uint64_t k_;
    std::uint32_t stored_cap_;
    const ExactOptions& opts_;
    Tables tables_;
    std::vector<NeighborhoodFamily> families_;
    std::uint64_t explored_ = 0;
};

}  // namespace

ExactResult lbw_dp_bruteforce(const Graph& g) {
    const std::size_t n = g.size();
    if (n > kDpBruteforceMaxVertices)
        throw ScaleGuardError("lbw_dp_bruteforce: n = " + std::to_string(n) + " exceeds the oracle guard of " +
                              std::to_string(kDpBruteforceMaxVertices));
    const Mask full = (Mask{1} << n) - 1;
    std::vector<std::uint64_t> t_un(full + 1), p(full + 1, kInfinity);
    std::vector<std::uint8_t> pred(full + 1, kNoPred);
    for (Mask a = 1; a <= full; ++a) t_un[a] = un_bruteforce(g, to_set(n, a)).size();
    p[0] = 0;
    for (Mask a = 1; a <= full; ++a) {
        for (Vertex v = 0; v < n; ++v) {
            if (!((a >> v) & 1U)) continue;
            const std::uint64_t value = std::max(t_un[a], p[a & ~(Mask{1} << v)]);
            if (value < p[a]) {
                p[a] = value;
                pred[a] = static_cast<std::uint8_t>(v);
            }
        }
    }
    ExactResult result;
    result.explored = result.explored_total = full;
    result.un_value = n == 0 ? 1 : p[full];
    result.width = log2_count(*result.un_value);
    std::vector<Vertex> reversed;
    for (Mask m = full; m != 0; m &= ~(Mask{1} << pred[m])) reversed.push_back(pred[m]);
    result.ordering.assign(reversed.rbegin(), reversed.rend());
    return result;
}

ExactResult incremental_un_exact(const Graph& g, std::uint64_t k, const ExactOptions& opts) {
    if (k == 0) throw ContractViolation("incremental_un_exact: K must be positive");
    if (g.size() > kExactMaxVertices)
        throw ScaleGuardError("incremental_un_exact: n = " + std::to_string(g.size()) + " exceeds the limit of " +
                              std::to_string(kExactMaxVertices));
    if (g.size() == 0) {
        ExactResult r;
        r.width = 0.0;
        r.un_value = 1;
        return r;
    }
    if (g.size() <= kFlatTableMaxVertices) return IncrementalExact<FlatTables>(g, k, opts).run();
    return IncrementalExact<HashedTables>(g, k, opts).run();
}

ExactResult lbw_exact(const Graph& g, const ExactOptions& opts) {
    const std::uint64_t cap = g.size() >= 63 ? kInfinity : (std::uint64_t{1} << g.size());
    std::uint64_t total = 0;
    for (std::uint64_t k = 1;; k = std::min(cap, k * 2)) {
        ExactResult r = incremental_un_exact(g, k, opts);
        total += r.explored;
        if (r.finite() || k >= cap) {
            r.explored_total = total;
            return r;
        }
    }
}

}  // namespace lbw
