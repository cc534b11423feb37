#include "selfsim/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "selfsim/errors.hpp"

namespace selfsim {

bool verify_coloring(const ExplicitGraph& graph, const Coloring& coloring) {
    if (coloring.assignment.size() != graph.vertex_count())
        throw std::invalid_argument("assignment covers " +
                                    std::to_string(coloring.assignment.size()) +
                                    " vertices, graph has " +
                                    std::to_string(graph.vertex_count()));
    for (int c : coloring.assignment)
        if (c < 0 || c >= coloring.palette)
            throw std::invalid_argument("color " + std::to_string(c) +
                                        " outside palette of " +
                                        std::to_string(coloring.palette));
    for (auto [u, v] : graph.edges())
        if (coloring.assignment[u] == coloring.assignment[v]) return false;
    return true;
}

Coloring greedy_coloring(const ExplicitGraph& graph,
                         const std::vector<std::uint32_t>& order) {
    const std::uint64_t vc = graph.vertex_count();
    if (order.size() != vc)
        throw std::invalid_argument("order is not a permutation: wrong length");
    std::vector<bool> seen(vc, false);
    for (std::uint32_t v : order) {
        if (v >= vc || seen[v])
            throw std::invalid_argument("order is not a permutation");
        seen[v] = true;
    }
    Coloring result;
    result.assignment.assign(vc, -1);
    std::vector<char> used;
    for (std::uint32_t v : order) {
        used.assign(static_cast<std::size_t>(result.palette) + 1, 0);
        for (std::uint32_t u : graph.neighbors(v)) {
            int c = result.assignment[u];
            if (c >= 0 && c < static_cast<int>(used.size())) used[c] = 1;
        }
        int c = 0;
        while (used[c]) ++c;
        result.assignment[v] = c;
        result.palette = std::max(result.palette, c + 1);
    }
    return result;
}

namespace {

// Branch-and-bound state for the exact solver.  Vertex count is capped, so
// plain per-vertex color count tables are cheap enough.
struct ExactSolver {
    const ExplicitGraph& graph;
    int vertex_count;
    std::vector<int> color;          // -1 while uncolored
    std::vector<std::vector<int>> neighbor_color_count;
    std::vector<int> saturation;
    std::vector<int> uncolored_degree;
    int best = 0;
    std::vector<int> best_assignment;
    int lower_bound = 1;

    explicit ExactSolver(const ExplicitGraph& g)
        : graph(g), vertex_count(static_cast<int>(g.vertex_count())) {
        color.assign(vertex_count, -1);
        neighbor_color_count.assign(vertex_count, std::vector<int>(vertex_count + 1, 0));
        saturation.assign(vertex_count, 0);
        uncolored_degree.assign(vertex_count, 0);
        for (int v = 0; v < vertex_count; ++v)
            uncolored_degree[v] = static_cast<int>(g.degree(static_cast<std::uint32_t>(v)));
    }

    void assign(int v, int c) {
        color[v] = c;
        for (std::uint32_t u : graph.neighbors(static_cast<std::uint32_t>(v))) {
            if (neighbor_color_count[u][c]++ == 0) ++saturation[u];
            --uncolored_degree[u];
        }
    }

    void unassign(int v, int c) {
        color[v] = -1;
        for (std::uint32_t u : graph.neighbors(static_cast<std::uint32_t>(v))) {
            if (--neighbor_color_count[u][c] == 0) --saturation[u];
            ++uncolored_degree[u];
        }
    }

    int pick_vertex() const {
        int best_v = -1;
        for (int v = 0; v < vertex_count; ++v) {
            if (color[v] != -1) continue;
            if (best_v == -1 || saturation[v] > saturation[best_v] ||
                (saturation[v] == saturation[best_v] &&
                 uncolored_degree[v] > uncolored_degree[best_v]))
                best_v = v;
        }
        return best_v;
    }

    // Greedy clique from each start vertex, neighbors tried by degree.
    std::vector<int> seed_clique() const {
        std::vector<int> by_degree(vertex_count);
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::stable_sort(by_degree.begin(), by_degree.end(), [&](int a, int b) {
            return graph.degree(static_cast<std::uint32_t>(a)) >
                   graph.degree(static_cast<std::uint32_t>(b));
        });
        std::vector<int> best_clique;
        for (int start : by_degree) {
            std::vector<int> clique{start};
            for (int v : by_degree) {
                if (v == start) continue;
                bool ok = true;
                for (int u : clique)
                    if (!graph.adjacent(static_cast<std::uint32_t>(u),
                                        static_cast<std::uint32_t>(v))) {
                        ok = false;
                        break;
                    }
                if (ok) clique.push_back(v);
            }
            if (clique.size() > best_clique.size()) best_clique = std::move(clique);
        }
        return best_clique;
    }

    void dfs(int colored, int used) {
        if (used >= best) return;
        if (colored == vertex_count) {
            best = used;
            best_assignment = color;
            return;
        }
        const int v = pick_vertex();
        for (int c = 0; c <= used && c <= best - 2; ++c) {
            if (neighbor_color_count[v][c] != 0) continue;
            assign(v, c);
            dfs(colored + 1, std::max(used, c + 1));
            unassign(v, c);
            if (best == lower_bound) return; // optimum certified
        }
    }
};

} // namespace

ExactColoring chromatic_number_exact(const ExplicitGraph& graph,
                                     std::uint64_t max_vertices) {
    if (graph.vertex_count() > max_vertices)
        throw SizeLimitError("exact solver limited to " + std::to_string(max_vertices) +
                             " vertices, got " + std::to_string(graph.vertex_count()));
    if (graph.vertex_count() == 0)
        return {0, Coloring{}};

    ExactSolver solver(graph);
    const int vc = solver.vertex_count;

    // Initial upper bound: DSATUR first-fit.
    {
        ExactSolver heur(graph);
        for (int step = 0; step < vc; ++step) {
            int v = heur.pick_vertex();
            int c = 0;
            while (heur.neighbor_color_count[v][c] != 0) ++c;
            heur.assign(v, c);
        }
        solver.best = 1 + *std::max_element(heur.color.begin(), heur.color.end());
        solver.best_assignment = heur.color;
    }

    const std::vector<int> clique = solver.seed_clique();
    solver.lower_bound = static_cast<int>(clique.size());
    if (solver.lower_bound < solver.best) {
        // Symmetry breaking: clique vertices keep fixed distinct colors.
        int c = 0;
        for (int v : clique) solver.assign(v, c++);
        solver.dfs(static_cast<int>(clique.size()), c);
    }

    ExactColoring result;
    result.chromatic_number = solver.best;
    result.witness.palette = solver.best;
    result.witness.assignment = std::move(solver.best_assignment);
    return result;
}

namespace {

bool lex_dfs(const ExplicitGraph& graph, int palette, std::vector<int>& assignment,
             std::uint32_t v) {
    if (v == graph.vertex_count()) return true;
    for (int c = 0; c < palette; ++c) {
        bool ok = true;
        for (std::uint32_t u : graph.neighbors(v))
            if (u < v && assignment[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        assignment[v] = c;
        if (lex_dfs(graph, palette, assignment, v + 1)) return true;
    }
    assignment[v] = -1;
    return false;
}

} // namespace

Coloring lex_least_coloring(const ExplicitGraph& graph, int palette) {
    if (palette < 1)
        throw std::invalid_argument("palette must be positive");
    Coloring result;
    result.palette = palette;
    result.assignment.assign(graph.vertex_count(), -1);
    if (!lex_dfs(graph, palette, result.assignment, 0))
        throw std::invalid_argument("graph has no proper coloring with " +
                                    std::to_string(palette) + " colors");
    return result;
}

bool find_coloring_with_palette(const ExplicitGraph& graph, int palette,
                                const std::vector<int>& seed, Coloring& out) {
    if (palette < 1)
        throw std::invalid_argument("palette must be positive");
    const int vc = static_cast<int>(graph.vertex_count());
    if (!seed.empty() && seed.size() != graph.vertex_count())
        throw std::invalid_argument("seed size mismatch");
    if (vc == 0) {
        out.palette = palette;
        out.assignment.clear();
        return true;
    }
    // No graph needs more colors than vertices; keep the count tables small.
    const int effective = std::min(palette, vc);

    ExactSolver state(graph);
    // Saturation-ordered feasibility search with seed-first value order.
    auto dfs = [&](auto&& self, int colored) -> bool {
        if (colored == vc) return true;
        const int v = state.pick_vertex();
        const int preferred = seed.empty() ? 0 : seed[v] % effective;
        for (int step = 0; step < effective; ++step) {
            const int c = (preferred + step) % effective;
            if (state.neighbor_color_count[v][c] != 0) continue;
            state.assign(v, c);
            if (self(self, colored + 1)) return true;
            state.unassign(v, c);
        }
        return false;
    };
    if (!dfs(dfs, 0)) return false;
    out.palette = palette;
    out.assignment = state.color;
    return true;
}

} // namespace selfsim
