#include <doctest.h>

#include <random>

#include "tsc/families.hpp"
#include "tsc/matching.hpp"

using namespace tsc;

namespace {

/* Oracle: minimum-weight perfect matching by bitmask DP (n <= 16). */
std::int64_t mwpm_oracle(const std::vector<std::vector<std::int64_t>>& d) {
    std::size_t n = d.size();
    std::vector<std::int64_t> dp(std::size_t(1) << n, INT64_MAX);
    dp[0] = 0;
    for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
        if (dp[mask] == INT64_MAX) continue;
        std::size_t i = 0;
        while ((mask >> i) & 1) ++i;
        for (std::size_t j = i + 1; j < n; ++j) {
            if ((mask >> j) & 1) continue;
            auto next = mask | (1u << i) | (1u << j);
            dp[next] = std::min(dp[next], dp[mask] + d[i][j]);
        }
    }
    return dp.back();
}

}  // namespace

TEST_CASE("trivial matchings") {
    DecodingGraph g(4);
    g.add_edge(0, 1, 0);
    g.add_edge(1, 2, 1);
    g.add_edge(2, 3, 2);
    g.add_edge(3, 0, 3);
    auto empty = build_defect_graph(g, {});
    CHECK(min_weight_perfect_matching(empty).pairs.empty());
    auto two = build_defect_graph(g, {0, 2});
    auto m = min_weight_perfect_matching(two);
    REQUIRE(m.pairs.size() == 1);
    CHECK(m.total_weight == 2);
    CHECK_THROWS_AS(build_defect_graph(g, {0, 1, 2}), ParityError);
}

TEST_CASE("square of weights picks the forced optimum") {
    DefectGraph g;
    g.nodes = {0, 1, 2, 3};
    g.dist = {{0, 1, 10, 10}, {1, 0, 10, 10}, {10, 10, 0, 1}, {10, 10, 1, 0}};
    auto m = min_weight_perfect_matching(g);
    CHECK(m.total_weight == 2);
    REQUIRE(m.pairs.size() == 2);
    CHECK(m.pairs[0] == std::array<std::size_t, 2>{0, 1});
    CHECK(m.pairs[1] == std::array<std::size_t, 2>{2, 3});
}

TEST_CASE("blossom agrees with the DP oracle on random complete graphs") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 1200; ++trial) {
        std::size_t n = 2 * (1 + rng() % 5);  // up to 10 nodes
        std::vector<std::vector<std::int64_t>> d(n, std::vector<std::int64_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                d[i][j] = d[j][i] = std::int64_t(rng() % 20);
        DefectGraph g;
        for (std::size_t i = 0; i < n; ++i) g.nodes.push_back(i);
        g.dist = d;
        auto m = min_weight_perfect_matching(g);
        CHECK(m.pairs.size() == n / 2);
        // every node appears exactly once
        std::vector<int> seen(n, 0);
        std::int64_t total = 0;
        for (auto [a, b] : m.pairs) {
            ++seen[a];
            ++seen[b];
            total += d[a][b];
        }
        for (auto s : seen) CHECK(s == 1);
        CHECK(total == m.total_weight);
        CHECK(m.total_weight == mwpm_oracle(d));
    }
}

TEST_CASE("blossom handles metric instances from a lattice") {
    auto colex = build_family(Family::square_octagon_torus, 2);
    auto d = dual(colex).complex;
    DecodingGraph g(d.num_vertices());
    for (std::size_t e = 0; e < d.num_edges(); ++e) g.add_edge(d.edge(e)[0], d.edge(e)[1], e);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::size_t> defects;
        std::size_t k = 2 * (1 + rng() % 6);
        while (defects.size() < k) {
            auto v = rng() % d.num_vertices();
            if (std::find(defects.begin(), defects.end(), v) == defects.end())
                defects.push_back(v);
        }
        auto dg = build_defect_graph(g, defects);
        auto m = min_weight_perfect_matching(dg);
        std::vector<std::vector<std::int64_t>> mat(k, std::vector<std::int64_t>(k, 0));
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) mat[a][b] = dg.dist[a][b];
        CHECK(m.total_weight == mwpm_oracle(mat));
        CHECK(m.total_weight <= greedy_perfect_matching(dg).total_weight);
    }
}

TEST_CASE("matching_to_error reproduces the defect set") {
    auto sq = build_family(Family::square_torus, 5);
    // toric-style graph: nodes = vertices, arcs = edges
    DecodingGraph g(sq.num_vertices());
    for (std::size_t e = 0; e < sq.num_edges(); ++e) g.add_edge(sq.edge(e)[0], sq.edge(e)[1], e);
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        // random error -> defect set = odd-degree nodes
        std::vector<bool> err(sq.num_edges(), false);
        for (std::size_t e = 0; e < sq.num_edges(); ++e) err[e] = (rng() % 10) == 0;
        std::vector<std::size_t> deg(sq.num_vertices(), 0);
        for (std::size_t e = 0; e < sq.num_edges(); ++e)
            if (err[e]) {
                ++deg[sq.edge(e)[0]];
                ++deg[sq.edge(e)[1]];
            }
        std::vector<std::size_t> defects;
        for (std::size_t v = 0; v < sq.num_vertices(); ++v)
            if (deg[v] % 2) defects.push_back(v);
        auto m = min_weight_perfect_matching(build_defect_graph(g, defects));
        auto correction = matching_to_error(g, m);
        // applying the correction flips exactly the defect nodes
        std::vector<std::size_t> deg2(sq.num_vertices(), 0);
        for (auto e : correction) {
            ++deg2[sq.edge(e)[0]];
            ++deg2[sq.edge(e)[1]];
        }
        for (std::size_t v = 0; v < sq.num_vertices(); ++v) {
            bool flagged = deg[v] % 2;
            CHECK(bool(deg2[v] % 2) == flagged);
        }
        // empty matching maps to the empty set
        if (defects.empty()) CHECK(correction.empty());
    }
}
