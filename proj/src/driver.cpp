#include "lbw/driver.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "lbw/error.hpp"
#include "lbw/exact.hpp"
#include "lbw/rng.hpp"

namespace lbw {

Strategy parse_strategy(std::string_view name) {
    if (name == "rn1") return Strategy::RN1;
    if (name == "rn2") return Strategy::RN2;
    if (name == "rn3") return Strategy::RN3;
    if (name == "lcv") return Strategy::LCV;
    if (name == "iun") return Strategy::IUN;
    if (name == "exact") return Strategy::Exact;
    if (name == "random") return Strategy::Random;
    throw Error("unknown strategy '" + std::string(name) + "'");
}

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::RN1: return "rn1";
        case Strategy::RN2: return "rn2";
        case Strategy::RN3: return "rn3";
        case Strategy::LCV: return "lcv";
        case Strategy::IUN: return "iun";
        case Strategy::Exact: return "exact";
        case Strategy::Random: return "random";
    }
    return "?";
}

std::vector<Vertex> random_ordering(std::size_t n, std::uint64_t seed) {
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    Xoshiro256 rng(seed);
    rng.shuffle(order);
    return order;
}

namespace {

ScoreKind score_of(Strategy s) {
    switch (s) {
        case Strategy::RN1: return ScoreKind::RN1;
        case Strategy::RN2: return ScoreKind::RN2;
        case Strategy::RN3: return ScoreKind::RN3;
        case Strategy::LCV: return ScoreKind::LeastCutValue;
        default: return ScoreKind::IUN;
    }
}

std::vector<Vertex> order_component(const Graph& c, const DecomposeOptions& opts) {
    if (c.size() <= 1) return std::vector<Vertex>(c.size(), 0);
    if (opts.strategy == Strategy::Exact) {
        ExactOptions eo;
        eo.deadline = opts.deadline;
        return lbw_exact(c, eo).ordering;
    }
    HeuristicConfig cfg;
    cfg.score = score_of(opts.strategy);
    cfg.starts = opts.starts;
    cfg.candidates = opts.candidates;
    cfg.deadline = opts.deadline;
    cfg.on_trivial_case = opts.on_trivial_case;
    return multi_start(c, cfg).best.order;
}

}  // namespace

LinearDecomposition decompose(const Graph& g, const DecomposeOptions& opts) {
    if (opts.strategy == Strategy::Random) return width_of_ordering(g, random_ordering(g.size(), opts.seed));
    std::vector<Vertex> order;
    order.reserve(g.size());
    for (const VertexSet& comp : connected_components(g)) {
        std::vector<Vertex> mapping;
        const Graph sub = g.induced(comp, &mapping);
        for (Vertex v : order_component(sub, opts)) order.push_back(mapping[v]);
    }
    return width_of_ordering(g, order);
}

std::string format_width(double width) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", width);
    return buf;
}

void write_decomposition(std::ostream& out, const Graph& g, const LinearDecomposition& d, bool raw) {
    out << "width " << format_width(d.width) << '\n';
    for (std::size_t i = 0; i < d.order.size(); ++i) out << (i ? " " : "") << g.label(d.order[i]);
    out << '\n';
    if (raw) out << "max_un " << d.max_un << '\n';
}

DecompositionFile parse_decomposition(std::istream& in) {
    DecompositionFile file;
    std::string line;
    std::size_t lineno = 0;
    bool have_order = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string head;
        if (!(ss >> head)) continue;
        if (head == "width") {
            double w;
            if (!(ss >> w)) throw ParseError(lineno, "width line without a number");
            file.width = w;
        } else if (head == "max_un") {
            continue;
        } else if (!have_order) {
            file.labels.push_back(head);
            for (std::string label; ss >> label;) file.labels.push_back(label);
            have_order = true;
        } else {
            throw ParseError(lineno, "unexpected line '" + line + "'");
        }
    }
    return file;
}

std::vector<Vertex> ordering_from_labels(const Graph& g, const std::vector<std::string>& labels) {
    std::unordered_map<std::string, Vertex> index;
    for (Vertex v = 0; v < g.size(); ++v) index.emplace(g.label(v), v);
    std::vector<Vertex> order;
    VertexSet seen(g.size());
    for (const auto& label : labels) {
        auto it = index.find(label);
        if (it == index.end()) throw ValidationError("ordering names vertex '" + label + "' which is not in the graph");
        if (seen.contains(it->second)) throw ValidationError("ordering repeats vertex '" + label + "'");
        seen.insert(it->second);
        order.push_back(it->second);
    }
    for (Vertex v = 0; v < g.size(); ++v)
        if (!seen.contains(v)) throw ValidationError("ordering is missing vertex '" + g.label(v) + "'");
    return order;
}

void write_cuts_csv(std::ostream& out, const LinearDecomposition& d) {
    out << "prefix,un,booldim\n";
    char buf[32];
    for (std::size_t i = 0; i < d.cuts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.6f", d.cuts[i].booldim);
        out << i + 1 << ',' << d.cuts[i].un_count << ',' << buf << '\n';
    }
}

}  // namespace lbw
