#include "selfsim/chromatic.hpp"

#include <stdexcept>
#include <string>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

bool is_loop_matching(const Bundle& bundle) {
    const int n = bundle.side();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (bundle.contains(i, j) != (i == j)) return false;
    return true;
}

bool mirrors_base(const SelfSimilarSystem& system) {
    const int n = system.size();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (system.bundle.contains(i, j) != system.base.adjacent(i, j))
                return false;
    return true;
}

// Optimal base coloring: exact chi, then the lexicographically least proper
// coloring with that many colors (deterministic golden values).
Coloring optimal_base_coloring(const BaseGraph& base) {
    std::vector<ExplicitGraph::Edge> edges;
    for (auto [i, j] : base.edges())
        edges.emplace_back(static_cast<std::uint32_t>(i - 1),
                           static_cast<std::uint32_t>(j - 1));
    ExplicitGraph g = ExplicitGraph::from_edges(
        static_cast<std::uint64_t>(base.size()), std::move(edges));
    ExactColoring exact = chromatic_number_exact(g, g.vertex_count());
    return lex_least_coloring(g, exact.chromatic_number);
}

BaseGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return make_base_graph(n, edges);
}

} // namespace

Coloring coloring_matching_mod(const SelfSimilarSystem& system, int k,
                               std::uint64_t vertex_limit) {
    if (!is_loop_matching(system.bundle))
        throw std::invalid_argument("bundle is not the loop matching {(i,i')}");
    if (k < 1) throw std::invalid_argument("depth k must be >= 1");
    const int n = system.size();
    const std::uint64_t vc = power_count(n, k);
    if (vc > vertex_limit)
        throw SizeLimitError("n^k exceeds vertex limit");

    const Coloring base = optimal_base_coloring(system.base);
    const int p = base.palette;

    Coloring result;
    result.palette = p;
    // Level by level: color(prefix, v) = color(prefix) + C(v) mod p.
    std::uint64_t level_size = 1;
    std::vector<int> level(1, 0);
    for (int depth = 1; depth <= k; ++depth) {
        std::vector<int> next(level_size * static_cast<std::uint64_t>(n));
        for (std::uint64_t prefix = 0; prefix < level_size; ++prefix)
            for (int v = 0; v < n; ++v)
                next[prefix * n + v] = (level[prefix] + base.assignment[v]) % p;
        level = std::move(next);
        level_size *= static_cast<std::uint64_t>(n);
    }
    result.assignment = std::move(level);
    return result;
}

Coloring coloring_mirror_classes(const SelfSimilarSystem& system, int k,
                                 std::uint64_t vertex_limit) {
    if (!mirrors_base(system))
        throw std::invalid_argument("bundle does not mirror the base adjacency");
    if (k < 1) throw std::invalid_argument("depth k must be >= 1");
    const int n = system.size();
    const std::uint64_t vc = power_count(n, k);
    if (vc > vertex_limit)
        throw SizeLimitError("n^k exceeds vertex limit");

    const Coloring base = optimal_base_coloring(system.base);
    Coloring result;
    result.palette = base.palette;
    result.assignment.assign(vc, 0);
    for (std::uint64_t v = 0; v < vc; ++v)
        result.assignment[v] = base.assignment[v % static_cast<std::uint64_t>(n)];
    return result;
}

Bundle jr_bundle(int n, int r) {
    if (n < 1 || r < 0 || r > n)
        throw std::invalid_argument("jr bundle needs 0 <= r <= n");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= r; ++i) pairs.emplace_back(i, i);
    for (int i = r + 1; i <= n; ++i)
        for (int j = r + 1; j <= n; ++j)
            if (i != j) pairs.emplace_back(i, j);
    return make_bundle(n, pairs);
}

Coloring coloring_jr_scheme(int n, int r, int k, std::uint64_t vertex_limit) {
    if (n < 1 || r < 0 || r > n)
        throw std::invalid_argument("jr scheme needs 0 <= r <= n");
    if (k < 1) throw std::invalid_argument("depth k must be >= 1");
    if (r == 0)
        return coloring_mirror_classes(
            SelfSimilarSystem(complete_graph(n), jr_bundle(n, 0)), k, vertex_limit);

    const std::uint64_t vc = power_count(n, k);
    if (vc > vertex_limit)
        throw SizeLimitError("n^k exceeds vertex limit");

    const int palette = 2 * n;
    // Class table: row q (last coordinate), column p (class of the prefix).
    // Loop rows rotate all 2n colors by two per row; the remaining rows use
    // the pair {2(q-r), 2(q-r)+1} picked by column parity.
    auto table = [&](int q, int p) {
        if (q < r) return (p + 2 * q) % palette;
        return 2 * (q - r) + (p % 2 == 0 ? 1 : 0);
    };

    std::vector<int> level(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) level[v] = v; // K_n colored with n of the 2n classes
    std::uint64_t level_size = static_cast<std::uint64_t>(n);
    for (int depth = 2; depth <= k; ++depth) {
        std::vector<int> next(level_size * static_cast<std::uint64_t>(n));
        for (std::uint64_t prefix = 0; prefix < level_size; ++prefix)
            for (int q = 0; q < n; ++q)
                next[prefix * n + q] = table(q, level[prefix]);
        level = std::move(next);
        level_size *= static_cast<std::uint64_t>(n);
    }
    Coloring result;
    result.palette = palette;
    result.assignment = std::move(level);
    return result;
}

Bundle k3_special_bundle() {
    return make_bundle(3, {{1, 1}, {2, 3}, {3, 2}});
}

Coloring coloring_k3_special(int k, std::uint64_t vertex_limit) {
    if (k < 2) throw std::invalid_argument("defined for k >= 2");
    const std::uint64_t vc = power_count(3, k);
    if (vc > vertex_limit)
        throw SizeLimitError("3^k exceeds vertex limit");

    // k = 2: the explicit four-class partition of the 9 vertices,
    // listed as (first, last) coordinates.
    Coloring coloring;
    coloring.palette = 4;
    coloring.assignment.assign(9, -1);
    auto put = [&](int a, int b, int cls) { coloring.assignment[(a - 1) * 3 + (b - 1)] = cls; };
    put(1, 1, 0);
    put(2, 2, 1);
    put(3, 1, 1);
    put(1, 2, 2);
    put(2, 1, 2);
    put(3, 2, 2);
    put(1, 3, 3);
    put(2, 3, 3);
    put(3, 3, 3);
    if (k == 2) return coloring;

    const SelfSimilarSystem system(complete_graph(3), k3_special_bundle());
    for (int depth = 3; depth <= k; ++depth) {
        // Seed each vertex with its prefix class, then search for a proper
        // 4-coloring of the next level.
        const ExplicitGraph graph = materialize(system, depth, vertex_limit);
        std::vector<int> seed(graph.vertex_count());
        for (std::uint64_t v = 0; v < graph.vertex_count(); ++v)
            seed[v] = coloring.assignment[v / 3];
        Coloring next;
        if (!find_coloring_with_palette(graph, 4, seed, next))
            throw std::runtime_error("no 4-coloring found at depth " +
                                     std::to_string(depth));
        coloring = std::move(next);
    }
    return coloring;
}

CliqueWitness clique_witness(const SelfSimilarSystem& system, int k, int i, int j) {
    const int n = system.size();
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw std::invalid_argument("need distinct vertices 1..n");
    if (!system.base.adjacent(i, j))
        throw std::invalid_argument("base graph has no edge (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
    if (!system.bundle.contains(i, i) || !system.bundle.contains(i, j) ||
        !system.bundle.contains(j, i))
        throw std::invalid_argument("bundle lacks one of (i,i'), (i,j'), (j,i')");
    if (k < 1) throw std::invalid_argument("depth k must be >= 1");

    CliqueWitness witness;
    witness.k = k;
    witness.vertices.emplace_back(static_cast<std::size_t>(k), i);
    for (int t = 0; t < k; ++t) {
        Vertex v(static_cast<std::size_t>(k), i);
        v[static_cast<std::size_t>(t)] = j;
        witness.vertices.push_back(std::move(v));
    }
    return witness;
}

Classification classify_bundle(int n, const Bundle& bundle) {
    if (bundle.side() != n)
        throw std::invalid_argument("bundle side mismatch");
    const BundleView view = bundle_view(bundle);

    // Infinite iff some loop touches a simple edge: that is exactly the
    // triple (i,i'), (i,j'), (j,i') with the base edge (i,j) free in K_n.
    for (int i : view.loops)
        for (int j = 1; j <= n; ++j)
            if (j != i && bundle.contains(i, j)) {
                Classification c;
                c.verdict = Finiteness::Infinite;
                c.witness = {BundleEdge{i, i}, BundleEdge{i, j}, BundleEdge{j, i}};
                c.base_edge = {i, j};
                return c;
            }

    Classification c;
    c.verdict = Finiteness::Finite;
    if (view.loops.empty() || view.simple_edges.empty())
        c.bound = n;     // subgraph of J* or of the loop matching
    else
        c.bound = 2 * n; // mixed loops and edges
    if (n == 3 && view.loops.size() == 1 && view.simple_edges.size() == 1)
        c.note = "exact limit is 4 for one isolated loop plus one edge on K_3";
    return c;
}

std::vector<CatalogEntry> k2_catalog() {
    auto b = [](std::vector<std::pair<int, int>> pairs) {
        return make_bundle(2, pairs);
    };
    std::vector<CatalogEntry> catalog;
    catalog.push_back({"j1", b({}), CatalogOutcome::BipartiteForever,
                       "chi(G^k) = 2 for all k (disjoint edges)"});
    catalog.push_back({"j2", b({{1, 1}}), CatalogOutcome::BipartiteForever,
                       "chi(G^k) = 2 for all k (trees)"});
    catalog.push_back({"j3", b({{2, 2}}), CatalogOutcome::BipartiteForever,
                       "chi(G^k) = 2 for all k (trees)"});
    catalog.push_back({"j4", b({{1, 1}, {2, 2}}), CatalogOutcome::BipartiteForever,
                       "chi(G^k) = 2 for all k (hypercube Q_k)"});
    catalog.push_back({"j5", b({{1, 2}, {2, 1}}), CatalogOutcome::BipartiteForever,
                       "chi(G^k) = 2 for all k (hypercube Q_k)"});
    catalog.push_back({"j6", b({{1, 2}, {2, 1}, {1, 1}}), CatalogOutcome::Unbounded,
                       "chi(G^k) >= k+1"});
    catalog.push_back({"j7", b({{1, 2}, {2, 1}, {2, 2}}), CatalogOutcome::Unbounded,
                       "chi(G^k) >= k+1"});
    catalog.push_back({"j8", b({{1, 1}, {1, 2}, {2, 1}, {2, 2}}),
                       CatalogOutcome::CompleteGrowth, "G^k = K_{2^k}, chi = 2^k"});
    return catalog;
}

} // namespace selfsim
