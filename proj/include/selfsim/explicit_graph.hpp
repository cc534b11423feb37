#ifndef SELFSIM_EXPLICIT_GRAPH_HPP
#define SELFSIM_EXPLICIT_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "selfsim/graph.hpp"

namespace selfsim {

inline constexpr std::uint64_t kDefaultVertexLimit = 100000;
inline constexpr std::uint64_t kDefaultEdgeLimit = 20000000;

/// Materialized G^k: integer-encoded vertices 0..n^k-1, sorted edge list,
/// CSR adjacency, plus dense bitset rows when small enough for them.
class ExplicitGraph {
public:
    using Edge = std::pair<std::uint32_t, std::uint32_t>;

    // Takes ownership of an edge list over vertices 0..vertex_count-1.
    // Edges are normalized to (min, max), deduplicated and sorted;
    // self-loops are rejected.
    ExplicitGraph(int n, int k, std::uint64_t vertex_count, std::vector<Edge> edges);

    // A plain graph without self-similar structure (n = vertex count, k = 1).
    static ExplicitGraph from_edges(std::uint64_t vertex_count, std::vector<Edge> edges);

    std::uint64_t vertex_count() const { return vertex_count_; }
    std::uint64_t edge_count() const { return edges_.size(); }
    int base_size() const { return n_; }
    int depth() const { return k_; }

    const std::vector<Edge>& edges() const { return edges_; }
    bool adjacent(std::uint32_t u, std::uint32_t v) const;
    std::uint32_t degree(std::uint32_t v) const;
    std::span<const std::uint32_t> neighbors(std::uint32_t v) const;

    bool is_regular() const;

    std::uint64_t encode(const Vertex& v) const { return encode_vertex(v, n_); }
    Vertex decode(std::uint64_t index) const { return decode_vertex(index, n_, k_); }

private:
    int n_ = 1;
    int k_ = 1;
    std::uint64_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> row_start_;     // CSR offsets, size vertex_count+1
    std::vector<std::uint32_t> neighbor_list_; // CSR neighbors, sorted per row
    std::size_t bit_words_ = 0;                // words per bitset row, 0 if disabled
    std::vector<std::uint64_t> bits_;
};

/// Builds G^k level by level: each vertex of G^{k-1} becomes a copy of G,
/// each edge of G^{k-1} becomes a copy of J between the two copies.
/// Refuses when n^k exceeds vertex_limit (or the edge total is absurd).
ExplicitGraph materialize(const SelfSimilarSystem& system, int k,
                          std::uint64_t vertex_limit = kDefaultVertexLimit);

} // namespace selfsim

#endif
