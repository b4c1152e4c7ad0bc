#include "qperc/trees.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "qperc/errors.hpp"
#include "qperc/spectral.hpp"

namespace qperc {

namespace {

// depth < 0 means no depth limit (used for a.s.-finite laws).
RootedTree generate_tree(const OffspringDistribution& root_law, const OffspringDistribution& deep_law,
                         int depth, long vertex_cap, RngStream& rng, bool cap_is_error) {
    if (vertex_cap < 1) throw std::invalid_argument("tree sampler: vertex cap must be >= 1");
    std::vector<std::pair<int, int>> edges;
    std::vector<int> depths{0};
    bool truncated = false;
    long next_id = 1;
    // Frontier walk; vertices are created in BFS order.
    for (long v = 0; v < next_id; ++v) {
        int dv = depths[static_cast<size_t>(v)];
        if (depth >= 0 && dv == depth) continue;
        int kids = (v == 0 ? root_law : deep_law).sample(rng);
        for (int c = 0; c < kids; ++c) {
            if (next_id >= vertex_cap) {
                if (cap_is_error) throw CapExceededError("tree sampler: vertex cap exceeded");
                truncated = true;
                break;
            }
            edges.emplace_back(static_cast<int>(v), static_cast<int>(next_id));
            depths.push_back(dv + 1);
            ++next_id;
        }
        if (truncated) break;
    }
    RootedTree t;
    t.graph = Graph::from_edges(static_cast<int>(next_id), edges);
    t.depth = std::move(depths);
    t.depth_limit = depth;
    t.truncated = truncated || (depth >= 0 && t.graph.size() > 1 &&
                                *std::max_element(t.depth.begin(), t.depth.end()) == depth);
    return t;
}

}  // namespace

RootedTree sample_gw(const OffspringDistribution& P, int depth, long vertex_cap, RngStream& rng) {
    if (depth < 0) throw std::invalid_argument("sample_gw: negative depth");
    return generate_tree(P, P, depth, vertex_cap, rng, false);
}

RootedTree sample_ugw(const OffspringDistribution& P, int depth, long vertex_cap, RngStream& rng) {
    if (depth < 0) throw std::invalid_argument("sample_ugw: negative depth");
    return generate_tree(P, size_bias_shift(P), depth, vertex_cap, rng, false);
}

RootedTree sample_extinct_tree(const SkeletonLaws& laws, long vertex_cap, RngStream& rng) {
    if (!laws.extinct_offspring.has_value())
        throw std::invalid_argument("sample_extinct_tree: extinct law never sampled when pi_e = 0");
    RootedTree t =
        generate_tree(*laws.extinct_offspring, *laws.extinct_offspring, -1, vertex_cap, rng, true);
    t.depth_limit = -1;
    t.truncated = false;
    return t;
}

double total_progeny_tail_bound(const OffspringDistribution& Q, double rho, long t) {
    if (rho <= 1.0) throw std::invalid_argument("total_progeny_tail_bound: rho must be > 1");
    if (t < 1) throw std::invalid_argument("total_progeny_tail_bound: t must be >= 1");
    double psi = Q.pgf_at_radius(rho);
    if (psi >= rho)
        throw std::invalid_argument("total_progeny_tail_bound: psi(rho) < rho is violated");
    return rho * std::pow(psi / rho, static_cast<double>(t));
}

std::complex<double> tree_root_resolvent(const RootedTree& t, std::complex<double> z) {
    if (z.imag() <= 0.0) throw std::domain_error("tree_root_resolvent: Im z must be > 0");
    const Graph& g = t.graph;
    const int n = g.size();
    // Iterative post-order over the tree; children are neighbors one level
    // deeper. g_v = -1 / (z + sum_children g_c).
    std::vector<std::complex<double>> acc(static_cast<size_t>(n), 0.0);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    order.push_back(0);
    for (size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : g.neighbors(v))
            if (t.depth[static_cast<size_t>(w)] == t.depth[static_cast<size_t>(v)] + 1)
                order.push_back(w);
    }
    for (size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        std::complex<double> gv = -1.0 / (z + acc[static_cast<size_t>(v)]);
        if (v == 0) return gv;
        for (int w : g.neighbors(v)) {
            if (t.depth[static_cast<size_t>(w)] == t.depth[static_cast<size_t>(v)] - 1) {
                acc[static_cast<size_t>(w)] += gv;
                break;
            }
        }
    }
    return -1.0 / z;  // unreachable for n >= 1
}

std::string rooted_canonical_form(const Graph& tree, int root) {
    const int n = tree.size();
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<int> order;
    order.push_back(root);
    parent[static_cast<size_t>(root)] = root;
    for (size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : tree.neighbors(v))
            if (parent[static_cast<size_t>(w)] < 0) {
                parent[static_cast<size_t>(w)] = v;
                order.push_back(w);
            }
    }
    std::vector<std::string> label(static_cast<size_t>(n));
    for (size_t i = order.size(); i-- > 0;) {
        int v = order[i];
        std::vector<std::string> kids;
        for (int w : tree.neighbors(v))
            if (w != v && parent[static_cast<size_t>(w)] == v) kids.push_back(label[static_cast<size_t>(w)]);
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        s += ")";
        label[static_cast<size_t>(v)] = std::move(s);
    }
    return label[static_cast<size_t>(root)];
}

std::string free_canonical_form(const Graph& tree) {
    const int n = tree.size();
    if (n == 1) return "()";
    // Compute subtree sizes from an arbitrary root, then centroid(s).
    std::vector<int> parent(static_cast<size_t>(n), -1), order, sub(static_cast<size_t>(n), 1);
    order.push_back(0);
    parent[0] = 0;
    for (size_t head = 0; head < order.size(); ++head)
        for (int w : tree.neighbors(order[head]))
            if (parent[static_cast<size_t>(w)] < 0) {
                parent[static_cast<size_t>(w)] = order[head];
                order.push_back(w);
            }
    for (size_t i = order.size(); i-- > 1;) sub[static_cast<size_t>(parent[static_cast<size_t>(order[i])])] += sub[static_cast<size_t>(order[i])];
    std::vector<int> cents;
    int best = n + 1;
    for (int v = 0; v < n; ++v) {
        int worst = n - sub[static_cast<size_t>(v)];
        for (int w : tree.neighbors(v))
            if (parent[static_cast<size_t>(w)] == v) worst = std::max(worst, sub[static_cast<size_t>(w)]);
        if (worst < best) {
            best = worst;
            cents = {v};
        } else if (worst == best) {
            cents.push_back(v);
        }
    }
    if (cents.size() == 1) return rooted_canonical_form(tree, cents[0]);
    // Bicentral: split the centroid edge, canonize each half rooted at its
    // centroid, and combine order-independently.
    int c1 = cents[0], c2 = cents[1];
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [u, v] : tree.edges()) {
        if ((u == c1 && v == c2) || (u == c2 && v == c1)) continue;
        adj[static_cast<size_t>(u)].push_back(v);
        adj[static_cast<size_t>(v)].push_back(u);
    }
    auto side_canon = [&](int root) {
        // Extract the component of `root` in the split forest.
        std::vector<int> comp{root}, idx(static_cast<size_t>(n), -1);
        idx[static_cast<size_t>(root)] = 0;
        for (size_t head = 0; head < comp.size(); ++head)
            for (int w : adj[static_cast<size_t>(comp[head])])
                if (idx[static_cast<size_t>(w)] < 0) {
                    idx[static_cast<size_t>(w)] = static_cast<int>(comp.size());
                    comp.push_back(w);
                }
        std::vector<std::pair<int, int>> e;
        for (int u : comp)
            for (int w : adj[static_cast<size_t>(u)])
                if (idx[static_cast<size_t>(u)] < idx[static_cast<size_t>(w)])
                    e.emplace_back(idx[static_cast<size_t>(u)], idx[static_cast<size_t>(w)]);
        return rooted_canonical_form(Graph::from_edges(static_cast<int>(comp.size()), e), 0);
    };
    std::string a = side_canon(c1), b = side_canon(c2);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(static_cast<size_t>(n), 1);
    for (int x : seq) ++deg[static_cast<size_t>(x)];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<size_t>(v)] == 1) leaves.insert(v);
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--deg[static_cast<size_t>(x)] == 1) leaves.insert(x);
    }
    int u = *leaves.begin(), v = *std::next(leaves.begin());
    edges.emplace_back(std::min(u, v), std::max(u, v));
    return edges;
}

TreeCatalog enumerate_trees(int k) {
    if (k < 1 || k > 12) throw std::invalid_argument("enumerate_trees: k must be in 1..12");
    TreeCatalog cat;
    cat.k = k;
    if (k == 1) {
        cat.trees.push_back(Graph::empty(1));
        cat.lambda_k = {0.0};
        return cat;
    }
    // Beyer-Hedetniemi successor rule over level sequences of rooted trees
    // (root at level 1), from the path down to the star.
    std::vector<int> level(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) level[static_cast<size_t>(i)] = i + 1;
    std::set<std::string> seen;
    std::vector<double> eigen_pool;
    for (;;) {
        // Build the tree: parent of i is the nearest j < i with level[j]+1 == level[i].
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i < k; ++i) {
            for (int j = i - 1; j >= 0; --j) {
                if (level[static_cast<size_t>(j)] == level[static_cast<size_t>(i)] - 1) {
                    e.emplace_back(j, i);
                    break;
                }
            }
        }
        Graph t = Graph::from_edges(k, e);
        std::string canon = free_canonical_form(t);
        if (seen.insert(canon).second) {
            auto es = eigendecompose(t, true);
            eigen_pool.insert(eigen_pool.end(), es.eigenvalues.begin(), es.eigenvalues.end());
            cat.trees.push_back(std::move(t));
        }
        // Successor: find the last position > 2, lower it by one and repeat
        // the block that ends there.
        int p = -1;
        for (int i = k - 1; i >= 0; --i)
            if (level[static_cast<size_t>(i)] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[static_cast<size_t>(i)] == level[static_cast<size_t>(p)] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < k; ++i) level[static_cast<size_t>(i)] = level[static_cast<size_t>(i - (p - q))];
    }
    std::sort(eigen_pool.begin(), eigen_pool.end());
    for (double l : eigen_pool)
        if (cat.lambda_k.empty() || l - cat.lambda_k.back() > 1e-8) cat.lambda_k.push_back(l);
    return cat;
}

}  // namespace qperc
