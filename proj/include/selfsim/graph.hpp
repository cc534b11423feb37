#ifndef SELFSIM_GRAPH_HPP
#define SELFSIM_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace selfsim {

/// Simple undirected graph on vertices 1..n (no loops, no multi-edges).
class BaseGraph {
public:
    BaseGraph() = default;

    int size() const { return n_; }
    bool adjacent(int i, int j) const { return adj_[idx(i)][idx(j)]; }
    int degree(int i) const { return degree_[idx(i)]; }
    std::uint64_t edge_count() const { return edges_.size(); }

    // Edges as 1-based (i, j) pairs with i < j, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool is_complete() const;
    bool operator==(const BaseGraph& other) const = default;

private:
    friend BaseGraph make_base_graph(int, const std::vector<std::pair<int, int>>&);

    int idx(int i) const;

    int n_ = 0;
    std::vector<std::vector<bool>> adj_;
    std::vector<int> degree_;
    std::vector<std::pair<int, int>> edges_;
};

/// Validates vertex count and 1-based edge pairs; duplicates are deduplicated.
BaseGraph make_base_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// Symmetric edge bundle: a subgraph of K_{n,n} whose relation holds the
/// pairs (i, j') with i ~ j'  iff  j ~ i'.  Loops (i, i') are permitted.
class Bundle {
public:
    Bundle() = default;

    int side() const { return n_; }
    bool contains(int i, int j) const { return rel_[idx(i)][idx(j)]; }

    // Row sum at i: the bundle degree d_J(i).
    int row_degree(int i) const { return row_degree_[idx(i)]; }

    // Edge count of J as a subgraph of K_{n,n}: every true entry is one
    // edge, so a loop counts once and a symmetric off-diagonal pair twice.
    std::uint64_t edge_count() const { return edge_count_; }

    // True entries as 1-based (i, j) pairs, row-major order.
    std::vector<std::pair<int, int>> pairs() const;

    bool empty() const { return edge_count_ == 0; }
    bool operator==(const Bundle& other) const = default;

private:
    friend Bundle make_bundle(int, const std::vector<std::pair<int, int>>&, bool);

    int idx(int i) const;

    int n_ = 0;
    std::vector<std::vector<bool>> rel_;
    std::vector<int> row_degree_;
    std::uint64_t edge_count_ = 0;
};

/// Builds a bundle from (i, j) pairs meaning i ~ j'.  With symmetrize the
/// symmetric closure is taken; otherwise asymmetric input is rejected.
Bundle make_bundle(int n, const std::vector<std::pair<int, int>>& pairs,
                   bool symmetrize = false);

/// The bundle redrawn as a graph on 1..n: a loop at i for the edge (i, i')
/// and a simple edge {i, j} for the pair (i, j'), (j, i').
struct BundleView {
    int n = 0;
    std::vector<int> loops;                      // sorted, 1-based
    std::vector<std::pair<int, int>> simple_edges; // i < j, sorted, 1-based
};

BundleView bundle_view(const Bundle& bundle);
Bundle bundle_from_view(const BundleView& view);

/// The pair (G, J) defining the sequence G^1 = G, G^2, ...
/// Depth k is a per-call parameter, not stored.
struct SelfSimilarSystem {
    BaseGraph base;
    Bundle bundle;

    SelfSimilarSystem(BaseGraph base_graph, Bundle edge_bundle);
    int size() const { return base.size(); }
};

/// A vertex of G^k: k coordinates in 1..n, first coordinate outermost.
using Vertex = std::vector<int>;

/// Index of a vertex in 0..n^k-1, coordinates read as base-n digits with
/// the first coordinate most significant.
std::uint64_t encode_vertex(const Vertex& v, int n);
Vertex decode_vertex(std::uint64_t index, int n, int k);

/// n^k with an overflow check.
std::uint64_t power_count(int n, int k);

/// Adjacency in G^k, evaluated in O(k): vertices are adjacent iff at the
/// first differing coordinate the base graph has an edge and every later
/// coordinate pair lies in the bundle.
bool adjacent(const SelfSimilarSystem& system, const Vertex& u, const Vertex& v);

/// Degree of u in G^k by the recursion
/// d(u_1..u_s) = d_G(u_s) + d(u_1..u_{s-1}) * d_J(u_s).
std::uint64_t degree(const SelfSimilarSystem& system, const Vertex& u);

/// Exact edge count of G^k: e(G) * sum_{i=0}^{k-1} n^{k-1-i} * e_J^i,
/// which collapses to k * n^{k-1} * e(G) when e_J = n.
std::uint64_t edge_count(const SelfSimilarSystem& system, int k);

} // namespace selfsim

#endif
