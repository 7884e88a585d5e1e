#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "tsc/gf2.hpp"

namespace tsc {

/* Exact maximum-weight matching on a general graph (blossom algorithm with
 * dual variables, primal-dual O(V^3)). Integer weights only; optimality is
 * certifiable through check_optimum(). This is the engine under the
 * minimum-weight perfect matching used by all decoders. */
class MaxWeightMatching {
  public:
    struct Edge {
        int u, v;
        std::int64_t w;
    };

    /* mate[v] = matched partner or -1. With max_cardinality the matching has
     * maximum size first, maximum weight second. */
    static std::vector<int> solve(int num_vertices, const std::vector<Edge>& edges,
                                  bool max_cardinality);
};

struct Matching {
    std::vector<std::array<std::size_t, 2>> pairs;  // node ids
    std::int64_t total_weight = 0;
};

/* Complete graph over an even set of defect nodes. */
struct DefectGraph {
    std::vector<std::size_t> nodes;               // original node ids
    std::vector<std::vector<std::int64_t>> dist;  // symmetric, nodes.size()^2
};

/* Syndrome graph: checks as nodes, qubits (or lattice edges) as unit-weight
 * arcs with a carrier id. Shortest paths are BFS trees, computed lazily once
 * per source and cached; safe to share across decoding threads. */
class DecodingGraph {
  public:
    DecodingGraph() = default;
    explicit DecodingGraph(std::size_t num_nodes) : adj_(num_nodes) {}
    DecodingGraph(const DecodingGraph& o) { *this = o; }
    DecodingGraph& operator=(const DecodingGraph& o) {
        if (this != &o) {
            adj_ = o.adj_;
            dist_ = o.dist_;
            parent_ = o.parent_;
            sorted_ = o.sorted_;
            built_.store(o.built_.load());
        }
        return *this;
    }
    DecodingGraph(DecodingGraph&& o) noexcept { *this = o; }
    DecodingGraph& operator=(DecodingGraph&& o) noexcept { return *this = o; }

    std::size_t num_nodes() const { return adj_.size(); }
    void add_edge(std::size_t u, std::size_t v, std::size_t carrier);

    std::int64_t distance(std::size_t u, std::size_t v) const;
    /* Carriers along one representative shortest path; deterministic
     * (BFS with ascending (node, carrier) neighbor order). */
    std::vector<std::size_t> path_carriers(std::size_t u, std::size_t v) const;
    /* Node sequence of that representative path, from u to v inclusive. */
    std::vector<std::size_t> path_nodes(std::size_t u, std::size_t v) const;
    /* All carriers of direct arcs between u and v, ascending. */
    std::vector<std::size_t> parallel_carriers(std::size_t u, std::size_t v) const;
    /* Carrier of a direct arc u-v of minimal carrier id (used for traces). */
    std::optional<std::size_t> direct_carrier(std::size_t u, std::size_t v) const;

    void ensure_all_paths() const;

  private:
    struct Arc {
        std::size_t to;
        std::size_t carrier;
        bool operator<(const Arc& o) const {
            return to != o.to ? to < o.to : carrier < o.carrier;
        }
    };
    std::vector<std::vector<Arc>> adj_;
    mutable std::vector<std::vector<std::int64_t>> dist_;
    mutable std::vector<std::vector<long>> parent_;  // BFS parent node per source
    mutable std::atomic<bool> built_{false};
    mutable std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
    void bfs_from(std::size_t src) const;
    bool sorted_ = false;
    void sort_adj();
};

/* Complete graph on the flagged nodes, weighted by shortest-path distance.
 * Throws ParityError when |defects| is odd. */
DefectGraph build_defect_graph(const DecodingGraph& g, const std::vector<std::size_t>& defects);

/* Exact minimum-weight perfect matching on a defect graph. */
Matching min_weight_perfect_matching(const DefectGraph& g);

/* Greedy pairing (closest-first); for speed comparisons only. */
Matching greedy_perfect_matching(const DefectGraph& g);

/* Symmetric difference of the representative shortest-path carrier sets of
 * all matched pairs. */
std::vector<std::size_t> matching_to_error(const DecodingGraph& g, const Matching& m);

}  // namespace tsc
