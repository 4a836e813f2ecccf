#include <fstream>
#include <sstream>
#include <unordered_map>

#include "lbw/error.hpp"
#include "lbw/graph.hpp"

namespace lbw {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    for (std::string t; ss >> t;) tokens.push_back(t);
    return tokens;
}

class NameTable {
public:
    Vertex intern(const std::string& name) {
        auto [it, inserted] = index_.try_emplace(name, names_.size());
        if (inserted) names_.push_back(name);
        return it->second;
    }

    std::size_t size() const { return names_.size(); }
    std::vector<std::string> take() { return std::move(names_); }

private:
    std::unordered_map<std::string, Vertex> index_;
    std::vector<std::string> names_;
};

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Graph parse_dgf(std::istream& in) {
    NameTable names;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        auto tok = split_ws(line);
        if (tok.empty() || tok[0][0] == 'c' || tok[0] == "p") continue;
        if (tok[0] == "e") {
            if (tok.size() != 3)
                throw ParseError(lineno, "edge line needs exactly 2 endpoints, got " + std::to_string(tok.size() - 1));
            Vertex u = names.intern(tok[1]);
            Vertex v = names.intern(tok[2]);
            edges.emplace_back(u, v);
        } else if (tok[0] == "n") {
            if (tok.size() < 2) throw ParseError(lineno, "vertex line needs a name");
            names.intern(tok[1]);
        } else {
            throw ParseError(lineno, "unrecognized line type '" + tok[0] + "'");
        }
    }
    const std::size_t n = names.size();
    return Graph(n, edges, names.take());
}

Graph parse_dgf(const std::string& text) {
    std::istringstream in(text);
    return parse_dgf(in);
}

Graph parse_dimacs_col(std::istream& in) {
    std::size_t n = 0;
    bool have_header = false;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        auto tok = split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (tok.size() < 3) throw ParseError(lineno, "malformed header");
            try {
                n = std::stoul(tok[2]);
            } catch (const std::exception&) {
                throw ParseError(lineno, "vertex count is not a number");
            }
            have_header = true;
        } else if (tok[0] == "e") {
            if (!have_header) throw ParseError(lineno, "edge before 'p edge' header");
            if (tok.size() != 3)
                throw ParseError(lineno, "edge line needs exactly 2 endpoints, got " + std::to_string(tok.size() - 1));
            std::size_t u = 0, v = 0;
            try {
                u = std::stoul(tok[1]);
                v = std::stoul(tok[2]);
            } catch (const std::exception&) {
                throw ParseError(lineno, "endpoint is not a number");
            }
            if (u < 1 || v < 1 || u > n || v > n) throw ParseError(lineno, "endpoint out of range 1.." + std::to_string(n));
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw ParseError(lineno, "unrecognized line type '" + tok[0] + "'");
        }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return Graph(n, edges, std::move(labels));
}

Graph parse_dimacs_col(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs_col(in);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    return ends_with(path, ".col") ? parse_dimacs_col(in) : parse_dgf(in);
}

void write_dgf(std::ostream& out, const Graph& g) {
    out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
    for (Vertex v = 0; v < g.size(); ++v) out << "n " << g.label(v) << '\n';
    for (auto [u, v] : g.edges()) out << "e " << g.label(u) << ' ' << g.label(v) << '\n';
}

std::string to_dgf(const Graph& g) {
    std::ostringstream out;
    write_dgf(out, g);
    return out.str();
}

}  // namespace lbw
