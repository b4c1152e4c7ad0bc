#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qperc/rng.hpp"

namespace qperc {

// Finite simple undirected graph with sorted adjacency lists. Immutable after
// construction; all queries are read-only.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph complete(int n);
    static Graph star(int leaves);
    static Graph petersen();
    static Graph empty(int n) { return from_edges(n, {}); }

    // Uniform simple d-regular graph by half-edge pairing with full restart on
    // any self-loop or multi-edge.
    static Graph random_regular(int n, int d, RngStream& rng, int max_restarts = 100000);

    int size() const { return n_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    long edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    // Text exchange format: header "n m", then one "u v" line per edge.
    static Graph load_edge_list(std::istream& in);
    void save_edge_list(std::ostream& out) const;

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Keeps each edge independently with probability p, on the same vertex set.
Graph percolate(const Graph& g, double p, RngStream& rng);

// Induced subgraph on the vertices within distance h of v, root relabeled to
// id 0 in BFS order; depth[i] is the BFS distance of ball vertex i.
struct RootedBall {
    Graph graph;
    std::vector<int> depth;
    int radius = 0;
};
RootedBall ball(const Graph& g, int v, int h);

// True iff (g,v)_h is isomorphic to the radius-h ball of the infinite
// (q+1)-regular tree: the induced ball is a tree, the root has degree q+1 and
// every non-root vertex at depth < h has degree q+1.
bool tree_ball_test(const Graph& g, int v, int h, int q);

struct BallReport {
    std::vector<int> n_h;                // |ball(v,h)| per vertex
    std::vector<std::uint8_t> is_target_ball;
    long b_count = 0;                    // vertices failing the tree-ball test
    double m_h = 0.0;                    // quadratic mean of n_h
};
BallReport ball_report(const Graph& g, int h, int q);

// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Named builders used by experiment configs: "cycle:n", "path:n",
// "complete:n", "star:n", "petersen", "random_regular:n:d".
Graph build_named_graph(const std::string& spec, RngStream& rng);

}  // namespace qperc
