#include "selfsim/explicit_graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

// Above this many vertices adjacency queries fall back to binary search in
// the CSR rows; dense rows would need O(V^2) bits.
constexpr std::uint64_t kBitsetRowLimit = 16384;

} // namespace

ExplicitGraph::ExplicitGraph(int n, int k, std::uint64_t vertex_count,
                             std::vector<Edge> edges)
    : n_(n), k_(k), vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 1 || k_ < 1)
        throw std::invalid_argument("explicit graph needs n >= 1, k >= 1");
    if (vertex_count_ > std::numeric_limits<std::uint32_t>::max())
        throw SizeLimitError("vertex count exceeds 32-bit edge index range");
    for (auto& [u, v] : edges_) {
        if (u >= vertex_count_ || v >= vertex_count_)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop in edge list");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    row_start_.assign(vertex_count_ + 1, 0);
    for (auto [u, v] : edges_) {
        ++row_start_[u + 1];
        ++row_start_[v + 1];
    }
    for (std::uint64_t i = 0; i < vertex_count_; ++i) row_start_[i + 1] += row_start_[i];
    neighbor_list_.resize(edges_.size() * 2);
    std::vector<std::uint64_t> fill(row_start_.begin(), row_start_.end() - 1);
    for (auto [u, v] : edges_) {
        neighbor_list_[fill[u]++] = v;
        neighbor_list_[fill[v]++] = u;
    }
    for (std::uint64_t i = 0; i < vertex_count_; ++i)
        std::sort(neighbor_list_.begin() + static_cast<std::ptrdiff_t>(row_start_[i]),
                  neighbor_list_.begin() + static_cast<std::ptrdiff_t>(row_start_[i + 1]));

    if (vertex_count_ <= kBitsetRowLimit) {
        bit_words_ = static_cast<std::size_t>((vertex_count_ + 63) / 64);
        bits_.assign(bit_words_ * vertex_count_, 0);
        for (auto [u, v] : edges_) {
            bits_[u * bit_words_ + v / 64] |= std::uint64_t{1} << (v % 64);
            bits_[v * bit_words_ + u / 64] |= std::uint64_t{1} << (u % 64);
        }
    }
}

ExplicitGraph ExplicitGraph::from_edges(std::uint64_t vertex_count,
                                        std::vector<Edge> edges) {
    if (vertex_count < 1 || vertex_count > std::numeric_limits<int>::max())
        throw std::invalid_argument("bad vertex count");
    return ExplicitGraph(static_cast<int>(vertex_count), 1, vertex_count,
                         std::move(edges));
}

bool ExplicitGraph::adjacent(std::uint32_t u, std::uint32_t v) const {
    if (u >= vertex_count_ || v >= vertex_count_)
        throw std::out_of_range("vertex index out of range");
    if (u == v) return false;
    if (bit_words_ != 0)
        return (bits_[u * bit_words_ + v / 64] >> (v % 64)) & 1;
    auto row = neighbors(u);
    return std::binary_search(row.begin(), row.end(), v);
}

std::uint32_t ExplicitGraph::degree(std::uint32_t v) const {
    if (v >= vertex_count_)
        throw std::out_of_range("vertex index out of range");
    return static_cast<std::uint32_t>(row_start_[v + 1] - row_start_[v]);
}

std::span<const std::uint32_t> ExplicitGraph::neighbors(std::uint32_t v) const {
    if (v >= vertex_count_)
        throw std::out_of_range("vertex index out of range");
    return {neighbor_list_.data() + row_start_[v], neighbor_list_.data() + row_start_[v + 1]};
}

bool ExplicitGraph::is_regular() const {
    if (vertex_count_ == 0) return true;
    const std::uint32_t d = degree(0);
    for (std::uint64_t v = 1; v < vertex_count_; ++v)
        if (degree(static_cast<std::uint32_t>(v)) != d) return false;
    return true;
}

ExplicitGraph materialize(const SelfSimilarSystem& system, int k,
                          std::uint64_t vertex_limit) {
    if (k < 1)
        throw std::invalid_argument("depth k must be >= 1");
    const int n = system.size();
    std::uint64_t count = 1;
    for (int level = 0; level < k; ++level) {
        count *= static_cast<std::uint64_t>(n);
        if (count > vertex_limit)
            throw SizeLimitError("n^k = " + std::to_string(n) + "^" + std::to_string(k) +
                                 " exceeds vertex limit " + std::to_string(vertex_limit));
    }
    if (edge_count(system, k) > kDefaultEdgeLimit)
        throw SizeLimitError("edge count " + std::to_string(edge_count(system, k)) +
                             " exceeds edge limit " + std::to_string(kDefaultEdgeLimit));

    // 0-based base edges and bundle entries, reused each level.
    std::vector<ExplicitGraph::Edge> base_edges;
    for (auto [i, j] : system.base.edges())
        base_edges.emplace_back(static_cast<std::uint32_t>(i - 1),
                                static_cast<std::uint32_t>(j - 1));
    std::vector<std::pair<std::uint32_t, std::uint32_t>> bundle_entries;
    for (auto [i, j] : system.bundle.pairs())
        bundle_entries.emplace_back(static_cast<std::uint32_t>(i - 1),
                                    static_cast<std::uint32_t>(j - 1));

    std::vector<ExplicitGraph::Edge> edges = base_edges;
    std::uint64_t vertices = static_cast<std::uint64_t>(n);
    for (int level = 2; level <= k; ++level) {
        std::vector<ExplicitGraph::Edge> next;
        next.reserve(vertices * base_edges.size() + edges.size() * bundle_entries.size());
        const std::uint32_t un = static_cast<std::uint32_t>(n);
        // One copy of G per vertex of the previous level.
        for (std::uint64_t p = 0; p < vertices; ++p) {
            const std::uint32_t block = static_cast<std::uint32_t>(p) * un;
            for (auto [a, b] : base_edges) next.emplace_back(block + a, block + b);
        }
        // One copy of J per edge of the previous level.
        for (auto [p, q] : edges) {
            const std::uint32_t pb = p * un;
            const std::uint32_t qb = q * un;
            for (auto [a, b] : bundle_entries) next.emplace_back(pb + a, qb + b);
        }
        edges = std::move(next);
        vertices *= static_cast<std::uint64_t>(n);
    }
    return ExplicitGraph(n, k, vertices, std::move(edges));
}

} // namespace selfsim
