#include "lbw/heuristics.hpp"

#include <algorithm>
#include <unordered_set>

#include "lbw/cut.hpp"
#include "lbw/error.hpp"

namespace lbw {

std::string_view to_string(ScoreKind k) {
    switch (k) {
        case ScoreKind::RN1: return "rn1";
        case ScoreKind::RN2: return "rn2";
        case ScoreKind::RN3: return "rn3";
        case ScoreKind::LeastCutValue: return "lcv";
        case ScoreKind::IUN: return "iun";
    }
    return "?";
}

GreedyState::GreedyState(const Graph& g, Vertex init)
    : g_(&g), left_(g.size()), right_(g.all()), left_neighborhood_(g.size()) {
    if (init >= g.size()) throw ContractViolation("GreedyState: start vertex out of range");
    move_to_left(init);
}

void GreedyState::move_to_left(Vertex v) {
    if (!right_.contains(v)) throw ContractViolation("GreedyState: vertex " + std::to_string(v) + " is not in Right");
    right_.erase(v);
    left_.insert(v);
    order_.push_back(v);
    left_neighborhood_ |= g_->neighbors(v);

    std::unordered_set<VertexSet> seen;
    std::vector<VertexSet> next;
    next.reserve(left_right_.size() + 1);
    auto keep = [&](VertexSet s) {
        if (seen.insert(s).second) next.push_back(std::move(s));
    };
    for (auto& s : left_right_) {
        s.erase(v);
        keep(std::move(s));
    }
    keep(g_->neighbors(v) & right_);
    left_right_ = std::move(next);
}

VertexSet candidates(const Graph& g, const GreedyState& state, CandidateStrategy strategy) {
    if (strategy == CandidateStrategy::Right) return state.right();
    VertexSet two = g.neighborhood(state.left() | state.left_neighborhood()) & state.right();
    return two.empty() ? state.right() : two;
}

std::optional<Vertex> trivial_case(const Graph& g, const GreedyState& state, const VertexSet& cands,
                                   const NeighborhoodFamily* un_left) {
    VertexSet scratch(g.size());
    for (Vertex v : cands) {
        const VertexSet key = g.neighbors(v) & state.right();
        if (key.empty()) return v;
        if (un_left) {
            for (std::size_t i = 0; i < un_left->size(); ++i) {
                scratch = un_left->member(i);
                scratch.erase(v);
                if (scratch == key) return v;
            }
        } else {
            for (const auto& s : state.left_right_neighborhoods()) {
                scratch = s;
                scratch.erase(v);
                if (scratch == key) return v;
            }
        }
    }
    return std::nullopt;
}

double score_relative_neighborhood(const Graph& g, const GreedyState& state, Vertex v, ScoreKind variant) {
    const VertexSet& nv = g.neighbors(v);
    const std::size_t degree = nv.size();
    if (degree == 0) return 0.0;
    const VertexSet near = state.left_neighborhood() & state.right();
    const std::size_t internal = nv.intersection_size(near);
    const std::size_t external = nv.intersection_size(state.right()) - internal;
    switch (variant) {
        case ScoreKind::RN1:
            return internal + external == 0 ? 0.0
                                            : static_cast<double>(external) / static_cast<double>(internal + external);
        case ScoreKind::RN2: return static_cast<double>(external) / static_cast<double>(degree);
        case ScoreKind::RN3: return 1.0 - static_cast<double>(internal) / static_cast<double>(degree);
        default: throw ContractViolation("score_relative_neighborhood: not a relative-neighborhood variant");
    }
}

std::optional<std::uint64_t> score_least_cut_value(const Graph& g, const NeighborhoodFamily& un_left, Vertex v,
                                                   std::uint64_t bound) {
    NeighborhoodFamily out;
    if (!increment_un_into(g, un_left, v, out, bound)) return std::nullopt;
    return out.size();
}

namespace {

bool is_rn(ScoreKind k) { return k == ScoreKind::RN1 || k == ScoreKind::RN2 || k == ScoreKind::RN3; }

class GreedyRunner {
public:
    GreedyRunner(const Graph& g, const HeuristicConfig& cfg, Vertex init, std::optional<double> best)
        : g_(g), cfg_(cfg), state_(g, init), best_(best) {
        cap_ = cfg.prune_bound.value_or(kNoLimit);
        if (best_ && !is_rn(cfg.score)) {
            // Only |UN| <= incumbent can still tie or win.
            cap_ = std::min<std::uint64_t>(cap_, static_cast<std::uint64_t>(*best_));
        }
        tracks_un_ = cfg.score == ScoreKind::IUN || (cfg.score == ScoreKind::LeastCutValue && !cfg.lcv_count_mis) ||
                     cfg.generalized_trivial_cases;
        if (tracks_un_) {
            un_left_.reset(g.all());
            increment_un_into(g, NeighborhoodFamily(g.all()), init, scratch_);
            std::swap(un_left_, scratch_);
        }
    }

    GreedyRun run() {
        GreedyRun out;
        const std::size_t n = g_.size();
        if (n > 1) {
            const std::uint64_t first_cut = g_.neighbors(state_.order().front()).empty() ? 1 : 2;
            max_un_ = first_cut;
            if (first_cut > cap_) return pruned();
        }
        while (!state_.right().empty()) {
            if (cfg_.deadline && std::chrono::steady_clock::now() > *cfg_.deadline) throw TimeLimitExceeded();
            const bool proper_cut = state_.left().size() + 1 < n;
            const VertexSet cands = candidates(g_, state_, cfg_.candidates);
            std::optional<Vertex> chosen =
                trivial_case(g_, state_, cands, cfg_.generalized_trivial_cases ? &un_left_ : nullptr);
            if (chosen) {
                ++trivial_steps_;
                if (cfg_.on_trivial_case) cfg_.on_trivial_case(g_, state_, *chosen);
                if (is_rn(cfg_.score)) score_sum_ += score_relative_neighborhood(g_, state_, *chosen, cfg_.score);
                if (tracks_un_) advance_family(*chosen);
                if (cfg_.score == ScoreKind::LeastCutValue && cfg_.lcv_count_mis)
                    chosen_un_ = count_after(*chosen);
            } else if (is_rn(cfg_.score)) {
                chosen = pick_relative_neighborhood(cands);
            } else if (cfg_.score == ScoreKind::IUN) {
                chosen = pick_iun(cands, proper_cut);
                if (!chosen) return pruned();
            } else {
                chosen = pick_least_cut_value(cands);
            }
            if (proper_cut && !is_rn(cfg_.score)) {
                const std::uint64_t un = current_un();
                max_un_ = std::max(max_un_, un);
                if (un > cap_) return pruned();
            }
            state_.move_to_left(*chosen);
            if (is_rn(cfg_.score) && best_ && score_sum_ > *best_) return pruned();
        }
        out.order = state_.order();
        if (!is_rn(cfg_.score)) out.max_un = max_un_;
        out.score_sum = score_sum_;
        out.trivial_steps = trivial_steps_;
        return out;
    }

private:
    GreedyRun pruned() {
        GreedyRun out;
        out.pruned = true;
        out.order = state_.order();
        out.score_sum = score_sum_;
        out.trivial_steps = trivial_steps_;
        return out;
    }

    std::uint64_t current_un() const { return tracks_un_ && !cfg_.lcv_count_mis ? un_left_.size() : chosen_un_; }

    void advance_family(Vertex v) {
        increment_un_into(g_, un_left_, v, scratch_);
        std::swap(un_left_, scratch_);
        chosen_un_ = un_left_.size();
    }

    std::uint64_t count_after(Vertex v) const {
        VertexSet next_left = state_.left();
        next_left.insert(v);
        return count_mis_bipartite(g_, next_left);
    }

    Vertex pick_relative_neighborhood(const VertexSet& cands) {
        Vertex best = cands.first();
        double best_score = 0.0;
        bool first = true;
        for (Vertex v : cands) {
            const double s = score_relative_neighborhood(g_, state_, v, cfg_.score);
            if (first || s < best_score) {
                best = v;
                best_score = s;
                first = false;
            }
        }
        score_sum_ += best_score;
        return best;
    }

    // Increment-UN per candidate, abandoning a candidate as soon as it can no
    // longer beat the best one seen so far.
    std::optional<Vertex> pick_iun(const VertexSet& cands, bool proper_cut) {
        std::optional<Vertex> best;
        std::size_t best_size = 0;
        for (Vertex v : cands) {
            std::size_t limit = proper_cut ? cap_ : kNoLimit;
            if (best) limit = std::min(limit, best_size - 1);
            if (!increment_un_into(g_, un_left_, v, scratch_, limit)) continue;
            best = v;
            best_size = scratch_.size();
            std::swap(best_family_, scratch_);
        }
        if (best) {
            std::swap(un_left_, best_family_);
            chosen_un_ = un_left_.size();
        }
        return best;
    }

    Vertex pick_least_cut_value(const VertexSet& cands) {
        Vertex best = cands.first();
        std::uint64_t best_score = 0;
        bool first = true;
        for (Vertex v : cands) {
            const std::uint64_t s = cfg_.lcv_count_mis ? count_after(v) : *score_least_cut_value(g_, un_left_, v);
            if (first || s < best_score) {
                best = v;
                best_score = s;
                first = false;
            }
        }
        if (tracks_un_)
            advance_family(best);
        else
            chosen_un_ = best_score;
        return best;
    }

    const Graph& g_;
    const HeuristicConfig& cfg_;
    GreedyState state_;
    std::optional<double> best_;
    std::uint64_t cap_ = kNoLimit;
    bool tracks_un_ = false;
    NeighborhoodFamily un_left_, scratch_, best_family_;
    std::uint64_t max_un_ = 1;
    std::uint64_t chosen_un_ = 1;
    double score_sum_ = 0.0;
    std::size_t trivial_steps_ = 0;
};

}  // namespace

GreedyRun generate_ordering(const Graph& g, const HeuristicConfig& cfg, Vertex init, std::optional<double> best_so_far) {
    return GreedyRunner(g, cfg, init, best_so_far).run();
}

std::vector<Vertex> start_vertices(const Graph& g, StartStrategy strategy) {
    std::vector<Vertex> out;
    if (g.size() == 0) return out;
    auto add = [&](Vertex v) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    add(bfs_start_vertex(g, 0, true));
    if (strategy == StartStrategy::DoubleBFS) return out;
    add(bfs_start_vertex(g, 0, false));
    if (strategy == StartStrategy::SingleAndDoubleBFS) return out;
    for (Vertex v = 0; v < g.size(); ++v) add(v);
    return out;
}

MultiStartResult multi_start(const Graph& g, const HeuristicConfig& cfg) {
    MultiStartResult result;
    bool have_best = false;
    for (Vertex s : start_vertices(g, cfg.starts)) {
        std::optional<double> incumbent;
        if (have_best && cfg.incumbent_pruning)
            incumbent = is_rn(cfg.score) ? result.best.score_sum : static_cast<double>(*result.best.max_un);
        GreedyRun run = generate_ordering(g, cfg, s, incumbent);
        ++result.runs;
        if (run.pruned) {
            ++result.pruned_runs;
            continue;
        }
        const bool better = !have_best || (is_rn(cfg.score) ? run.score_sum < result.best.score_sum
                                                            : *run.max_un < *result.best.max_un);
        if (better) {
            result.best = std::move(run);
            result.start = s;
            have_best = true;
        }
    }
    // Every run hit the configured prune bound.
    if (!have_best) result.best.pruned = true;
    return result;
}

}  // namespace lbw
