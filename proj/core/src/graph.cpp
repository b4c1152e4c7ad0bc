#include "qperc/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "qperc/errors.hpp"

namespace qperc {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<size_t>(n), {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("graph: vertex id out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        g.adj_[static_cast<size_t>(u)].push_back(v);
        g.adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw std::invalid_argument("graph: duplicate edge");
        g.m_ += static_cast<long>(nb.size());
    }
    g.m_ /= 2;
    return g;
}

Graph Graph::cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    if (n <= 2) e.resize(n > 1 ? 1 : 0);  // avoid duplicate edge for n = 2
    return from_edges(n, e);
}

Graph Graph::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

Graph Graph::complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return from_edges(n, e);
}

Graph Graph::star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return from_edges(leaves + 1, e);
}

Graph Graph::petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        e.emplace_back(i, 5 + i);                // spokes
    }
    return from_edges(10, e);
}

Graph Graph::random_regular(int n, int d, RngStream& rng, int max_restarts) {
    if (d >= n || d < 0) throw std::invalid_argument("random_regular: need 0 <= d < n");
    if ((static_cast<long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular: n*d must be even");
    const long points = static_cast<long>(n) * d;
    std::vector<int> stub(static_cast<size_t>(points));
    for (long i = 0; i < points; ++i) stub[static_cast<size_t>(i)] = static_cast<int>(i / d);

    for (int attempt = 0; attempt < max_restarts; ++attempt) {
        for (long i = points - 1; i > 0; --i)
            std::swap(stub[static_cast<size_t>(i)], stub[rng.below(static_cast<std::uint64_t>(i + 1))]);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(static_cast<size_t>(points / 2));
        bool ok = true;
        for (long i = 0; i < points && ok; i += 2) {
            int u = stub[static_cast<size_t>(i)], v = stub[static_cast<size_t>(i + 1)];
            if (u == v) ok = false;
            else edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return from_edges(n, edges);
    }
    throw CapExceededError("random_regular: restart cap exceeded");
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[static_cast<size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) e.emplace_back(u, v);
    return e;
}

Graph Graph::load_edge_list(std::istream& in) {
    int n = 0;
    long m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<size_t>(m));
    for (long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
        e.emplace_back(u, v);
    }
    return from_edges(n, e);
}

void Graph::save_edge_list(std::ostream& out) const {
    out << n_ << ' ' << m_ << '\n';
    for (auto [u, v] : edges()) out << u << ' ' << v << '\n';
}

Graph percolate(const Graph& g, double p, RngStream& rng) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("percolate: p outside [0,1]");
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : g.edges())
        if (rng.next_double() < p) kept.emplace_back(u, v);
    return Graph::from_edges(g.size(), kept);
}

RootedBall ball(const Graph& g, int v, int h) {
    if (v < 0 || v >= g.size()) throw std::invalid_argument("ball: vertex out of range");
    if (h < 0) throw std::invalid_argument("ball: negative radius");
    std::vector<int> dist(static_cast<size_t>(g.size()), -1);
    std::vector<int> order;
    order.push_back(v);
    dist[static_cast<size_t>(v)] = 0;
    for (size_t head = 0; head < order.size(); ++head) {
        int u = order[head];
        int du = dist[static_cast<size_t>(u)];
        if (du == h) continue;
        for (int w : g.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = du + 1;
                order.push_back(w);
            }
        }
    }
    std::vector<int> idx(static_cast<size_t>(g.size()), -1);
    for (size_t i = 0; i < order.size(); ++i) idx[static_cast<size_t>(order[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> e;
    for (int u : order)
        for (int w : g.neighbors(u))
            if (u < w && idx[static_cast<size_t>(w)] >= 0)
                e.emplace_back(idx[static_cast<size_t>(u)], idx[static_cast<size_t>(w)]);
    RootedBall b;
    b.graph = Graph::from_edges(static_cast<int>(order.size()), e);
    b.depth.resize(order.size());
    for (size_t i = 0; i < order.size(); ++i) b.depth[i] = dist[static_cast<size_t>(order[i])];
    b.radius = h;
    return b;
}

bool tree_ball_test(const Graph& g, int v, int h, int q) {
    if (q < 1) throw std::invalid_argument("tree_ball_test: q must be >= 1");
    if (h == 0) return true;
    RootedBall b = ball(g, v, h);
    if (b.graph.edge_count() != b.graph.size() - 1) return false;  // not a tree
    if (b.graph.degree(0) != q + 1) return false;
    for (int u = 1; u < b.graph.size(); ++u)
        if (b.depth[static_cast<size_t>(u)] < h && b.graph.degree(u) != q + 1) return false;
    return true;
}

BallReport ball_report(const Graph& g, int h, int q) {
    if (h < 1) throw std::invalid_argument("ball_report: h must be >= 1");
    BallReport r;
    r.n_h.resize(static_cast<size_t>(g.size()));
    r.is_target_ball.resize(static_cast<size_t>(g.size()));
    double sum_sq = 0.0;
    for (int v = 0; v < g.size(); ++v) {
        RootedBall b = ball(g, v, h);
        bool target = true;
        if (b.graph.edge_count() != b.graph.size() - 1 || b.graph.degree(0) != q + 1) {
            target = false;
        } else {
            for (int u = 1; target && u < b.graph.size(); ++u)
                if (b.depth[static_cast<size_t>(u)] < h && b.graph.degree(u) != q + 1) target = false;
        }
        r.n_h[static_cast<size_t>(v)] = b.graph.size();
        r.is_target_ball[static_cast<size_t>(v)] = target ? 1 : 0;
        if (!target) ++r.b_count;
        sum_sq += static_cast<double>(b.graph.size()) * b.graph.size();
    }
    r.m_h = std::sqrt(sum_sq / std::max(1, g.size()));
    return r;
}

std::optional<int> girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<size_t>(g.size()));
    std::vector<int> parent(static_cast<size_t>(g.size()));
    for (int r = 0; r < g.size(); ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        q.push(r);
        dist[static_cast<size_t>(r)] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[static_cast<size_t>(u)] >= best) continue;
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<size_t>(w)] < 0) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(w)] = u;
                    q.push(w);
                } else if (parent[static_cast<size_t>(u)] != w && parent[static_cast<size_t>(w)] != u) {
                    best = std::min(best, dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

Graph build_named_graph(const std::string& spec, RngStream& rng) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("graph spec is empty");
    const std::string& name = parts[0];
    auto arg = [&](size_t i) {
        if (i >= parts.size()) throw std::invalid_argument("graph spec '" + spec + "': missing argument");
        return std::stoi(parts[i]);
    };
    if (name == "cycle") return Graph::cycle(arg(1));
    if (name == "path") return Graph::path(arg(1));
    if (name == "complete") return Graph::complete(arg(1));
    if (name == "star") return Graph::star(arg(1));
    if (name == "petersen") return Graph::petersen();
    if (name == "random_regular") return Graph::random_regular(arg(1), arg(2), rng);
    throw std::invalid_argument("unknown graph spec '" + spec + "'");
}

}  // namespace qperc
