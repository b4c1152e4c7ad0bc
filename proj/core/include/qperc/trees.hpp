#pragma once

#include <complex>
#include <string>
#include <vector>

#include "qperc/distributions.hpp"
#include "qperc/graph.hpp"

namespace qperc {

// Rooted tree with vertex 0 as root. `truncated` is set when generation was
// stopped by the depth limit or the vertex cap, so downstream spectral
// estimates know the sample is incomplete.
struct RootedTree {
    Graph graph;
    std::vector<int> depth;
    int depth_limit = -1;  // -1 for complete (untruncated) samples
    bool truncated = false;

    int size() const { return graph.size(); }
};

// Galton-Watson tree generated breadth-first: every vertex at depth < depth
// draws its offspring count from P. Hitting vertex_cap flags truncation.
RootedTree sample_gw(const OffspringDistribution& P, int depth, long vertex_cap, RngStream& rng);

// Unimodular variant: root offspring ~ P, deeper offspring ~ size_bias_shift(P).
RootedTree sample_ugw(const OffspringDistribution& P, int depth, long vertex_cap, RngStream& rng);

// Complete (a.s. finite) tree with the subcritical extinct-subtree law Q.
// Throws CapExceededError past vertex_cap.
RootedTree sample_extinct_tree(const SkeletonLaws& laws, long vertex_cap, RngStream& rng);

// rho * (psi(rho)/rho)^t bound for P(total progeny >= t) of GW(Q); requires
// psi(rho) < rho with rho > 1.
double total_progeny_tail_bound(const OffspringDistribution& Q, double rho, long t);

// Resolvent <e_0, (A - z)^{-1} e_0> of a finite tree, evaluated bottom-up by
// the Schur complement recursion. Exact and O(n); matches the value obtained
// by dense diagonalization.
std::complex<double> tree_root_resolvent(const RootedTree& t, std::complex<double> z);

// All unlabeled trees on k vertices with the set of their eigenvalues.
struct TreeCatalog {
    int k = 0;
    std::vector<Graph> trees;
    std::vector<double> lambda_k;  // sorted, deduplicated at 1e-8
};

// Rooted-tree generation by level sequences with centroid-canonical
// deduplication. Supports k <= 12.
TreeCatalog enumerate_trees(int k);

// AHU canonical string of a rooted tree (children sorted recursively).
std::string rooted_canonical_form(const Graph& tree, int root);

// Canonical string of a free tree (rooted at the centroid, or at the sorted
// centroid pair for bicentral trees).
std::string free_canonical_form(const Graph& tree);

// Edges of the labeled tree encoded by a Pruefer sequence over {0..n-1}.
std::vector<std::pair<int, int>> pruefer_decode(const std::vector<int>& seq);

}  // namespace qperc
