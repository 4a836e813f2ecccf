#include <doctest.h>

#include <cmath>

#include "lbw/cut.hpp"
#include "lbw/error.hpp"
#include "lbw/exact.hpp"
#include "oracles.hpp"

using namespace lbw;

namespace {

Graph path(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Graph cycle(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph(n, e);
}

void check_witness(const Graph& g, const ExactResult& r) {
    REQUIRE(r.finite());
    CHECK(is_permutation_of_vertices(g, r.ordering));
    CHECK(width_of_ordering(g, r.ordering).max_un == *r.un_value);
    CHECK(*r.width == doctest::Approx(std::log2(static_cast<double>(*r.un_value))));
}

}  // namespace

TEST_CASE("dp baseline examples") {
    auto p5 = lbw_dp_bruteforce(path(5));
    CHECK(*p5.un_value == 2);
    CHECK(*p5.un_value == oracle::exhaustive_min_un(path(5)));
    check_witness(path(5), p5);
    Graph k4 = erdos_renyi(4, 1.0, 0);
    CHECK(*lbw_dp_bruteforce(k4).width == 1.0);
    CHECK(*lbw_dp_bruteforce(Graph(4, {})).width == 0.0);
    CHECK_THROWS_AS(lbw_dp_bruteforce(Graph(17, {})), ScaleGuardError);
}

TEST_CASE("K gate on P5") {
    CHECK_FALSE(incremental_un_exact(path(5), 1).finite());
    auto r = incremental_un_exact(path(5), 2);
    CHECK(*r.width == 1.0);
    check_witness(path(5), r);
    auto big = incremental_un_exact(path(5), 32);
    CHECK(*big.un_value == 2);
}

TEST_CASE("lbw_exact examples") {
    CHECK(*lbw_exact(path(8)).width == 1.0);
    Graph c5 = cycle(5);
    CHECK(*lbw_exact(c5).un_value == *lbw_dp_bruteforce(c5).un_value);
    CHECK(*lbw_exact(c5).un_value == oracle::exhaustive_min_un(c5));
    // K5 minus a matching.
    Graph k5 = erdos_renyi(5, 1.0, 0);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto e : k5.edges())
        if (e != std::pair<Vertex, Vertex>{0, 1} && e != std::pair<Vertex, Vertex>{2, 3}) edges.push_back(e);
    Graph g(5, edges);
    CHECK(*lbw_exact(g).un_value == *lbw_dp_bruteforce(g).un_value);
    CHECK(*lbw_exact(Graph(0, {})).width == 0.0);
    CHECK(*lbw_exact(Graph(1, {})).width == 0.0);
}

TEST_CASE("exact solvers agree with the permutation oracle") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const std::size_t n = 3 + s % 6;
        Graph g = erdos_renyi(n, 0.2 + 0.15 * static_cast<double>(s % 5), 2000 + s);
        const std::uint64_t expect = oracle::exhaustive_min_un(g);
        auto dp = lbw_dp_bruteforce(g);
        auto ex = lbw_exact(g);
        CHECK(*dp.un_value == expect);
        CHECK(*ex.un_value == expect);
        check_witness(g, dp);
        check_witness(g, ex);
    }
}

TEST_CASE("K gate semantics and explored monotonicity") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const std::size_t n = 6 + s % 7;
        Graph g = erdos_renyi(n, 0.45, 3000 + s);
        const std::uint64_t opt = *lbw_dp_bruteforce(g).un_value;
        std::uint64_t prev_explored = 0;
        for (std::uint64_t k = 1; k <= (std::uint64_t{1} << n); k *= 2) {
            auto r = incremental_un_exact(g, k);
            CHECK(r.finite() == (opt <= k));
            if (r.finite()) {
                CHECK(*r.un_value == opt);
                check_witness(g, r);
            }
            CHECK(r.explored >= prev_explored);
            CHECK(r.explored <= (std::uint64_t{1} << n));
            prev_explored = r.explored;
        }
    }
}

TEST_CASE("hashed tables match flat tables") {
    // Above the flat-table threshold the solver switches representation; a
    // sparse graph keeps the search small enough to run quickly.
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v + 1 < 26; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(0, 25);
    Graph c26(26, e);
    auto r = lbw_exact(c26);
    REQUIRE(r.finite());
    CHECK(*r.un_value == 4);
    CHECK(width_of_ordering(c26, r.ordering).max_un == 4);
}

TEST_CASE("exact respects a deadline and the size guard") {
    ExactOptions opts;
    opts.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
    CHECK_THROWS_AS(lbw_exact(erdos_renyi(16, 0.5, 1), opts), TimeLimitExceeded);
    CHECK_THROWS_AS(lbw_exact(Graph(31, {})), ScaleGuardError);
}
