#include "selfsim/cuts.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

constexpr std::uint64_t kHardEnumerationCap = 30; // 2^30 subsets

// a is lexicographically before b when the smallest vertex present in
// exactly one of them belongs to a.
bool lex_before(std::uint32_t a, std::uint32_t b) {
    const std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    return (a & (diff & ~(diff - 1))) != 0;
}

std::vector<std::uint32_t> mask_to_vertices(std::uint32_t mask) {
    std::vector<std::uint32_t> vertices;
    for (std::uint32_t v = 0; mask != 0; ++v, mask >>= 1)
        if (mask & 1) vertices.push_back(v);
    return vertices;
}

std::vector<std::uint32_t> adjacency_masks(const ExplicitGraph& graph) {
    std::vector<std::uint32_t> masks(graph.vertex_count(), 0);
    for (auto [u, v] : graph.edges()) {
        masks[u] |= std::uint32_t{1} << v;
        masks[v] |= std::uint32_t{1} << u;
    }
    return masks;
}

void check_size(const ExplicitGraph& graph, std::uint64_t max_vertices) {
    if (max_vertices > kHardEnumerationCap)
        max_vertices = kHardEnumerationCap;
    if (graph.vertex_count() > max_vertices)
        throw SizeLimitError("subset enumeration limited to " +
                             std::to_string(max_vertices) + " vertices, got " +
                             std::to_string(graph.vertex_count()));
    if (graph.vertex_count() < 2)
        throw std::invalid_argument("cut analysis needs at least two vertices");
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : num(numerator), den(denominator) {
    if (den <= 0 || num < 0)
        throw std::invalid_argument("rational must be nonnegative with positive denominator");
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

CutReport conductance_exact(const ExplicitGraph& graph, std::uint64_t max_vertices) {
    check_size(graph, max_vertices);
    const int vc = static_cast<int>(graph.vertex_count());
    const std::vector<std::uint32_t> adj = adjacency_masks(graph);

    std::uint32_t set_mask = 0;
    int size = 0;
    std::int64_t cut = 0;
    std::int64_t best_cut = 0;
    int best_size = 0; // 0 = unset
    std::uint32_t best_mask = 0;

    const std::uint64_t subsets = std::uint64_t{1} << vc;
    for (std::uint64_t x = 1; x < subsets; ++x) {
        const int v = std::countr_zero(x);
        const std::uint32_t bit = std::uint32_t{1} << v;
        if (set_mask & bit) {
            set_mask ^= bit;
            --size;
            cut -= graph.degree(static_cast<std::uint32_t>(v)) -
                   2 * std::popcount(adj[v] & set_mask);
        } else {
            cut += graph.degree(static_cast<std::uint32_t>(v)) -
                   2 * std::popcount(adj[v] & set_mask);
            set_mask ^= bit;
            ++size;
        }
        if (size < 1 || 2 * size > vc) continue;
        // Half-sized sets and their complements tie; keep the ones with
        // vertex 0, which include the lexicographically least minimizer.
        if (2 * size == vc && (set_mask & 1) == 0) continue;
        if (best_size == 0 || cut * best_size < best_cut * size ||
            (cut * best_size == best_cut * size && lex_before(set_mask, best_mask))) {
            best_cut = cut;
            best_size = size;
            best_mask = set_mask;
        }
    }

    CutReport report;
    report.conductance = Rational(best_cut, best_size);
    report.witness = mask_to_vertices(best_mask);
    if (graph.is_regular()) {
        const SpectrumMultiset spectrum = eigenvalues_numeric(adjacency_matrix(graph));
        auto [lower, upper] = cheeger_bounds(spectrum, graph.degree(0));
        report.cheeger_lower = lower;
        report.cheeger_upper = upper;
    }
    return report;
}

Rational vertex_expansion_exact(const ExplicitGraph& graph, std::uint64_t max_vertices) {
    check_size(graph, max_vertices);
    if (!graph.is_regular())
        throw std::invalid_argument("vertex expansion is defined here for regular graphs");
    const int vc = static_cast<int>(graph.vertex_count());
    const std::vector<std::uint32_t> adj = adjacency_masks(graph);

    std::uint32_t set_mask = 0;
    int size = 0;
    int boundary = 0;                  // vertices outside S adjacent to S
    std::vector<int> hits(vc, 0);      // per-vertex neighbor count inside S
    std::int64_t best_num = 0;
    int best_size = 0;

    const std::uint64_t subsets = std::uint64_t{1} << vc;
    for (std::uint64_t x = 1; x < subsets; ++x) {
        const int v = std::countr_zero(x);
        const std::uint32_t bit = std::uint32_t{1} << v;
        if (set_mask & bit) {
            // v leaves S: neighbors lose one hit, v may rejoin the boundary.
            for (std::uint32_t m = adj[v]; m != 0; m &= m - 1) {
                const int u = std::countr_zero(m);
                if (--hits[u] == 0 && !(set_mask & (std::uint32_t{1} << u)) && u != v)
                    --boundary;
            }
            set_mask ^= bit;
            --size;
            if (hits[v] > 0) ++boundary;
        } else {
            if (hits[v] > 0) --boundary;
            set_mask ^= bit;
            ++size;
            for (std::uint32_t m = adj[v]; m != 0; m &= m - 1) {
                const int u = std::countr_zero(m);
                if (hits[u]++ == 0 && !(set_mask & (std::uint32_t{1} << u)))
                    ++boundary;
            }
        }
        if (size < 1 || 2 * size > vc) continue;
        if (best_size == 0 ||
            static_cast<std::int64_t>(boundary) * best_size < best_num * size) {
            best_num = boundary;
            best_size = size;
        }
    }
    return Rational(best_num, best_size);
}

} // namespace selfsim
