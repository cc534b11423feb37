#ifndef SELFSIM_COLORING_HPP
#define SELFSIM_COLORING_HPP

#include <cstdint>
#include <vector>

#include "selfsim/explicit_graph.hpp"

namespace selfsim {

/// A total color assignment over 0..vertex_count-1 with colors 0..palette-1.
/// Properness is checkable, never assumed.
struct Coloring {
    int palette = 0;
    std::vector<int> assignment;
};

/// True iff no edge is monochromatic.  Throws if the assignment does not
/// cover the graph or uses a color outside the palette.
bool verify_coloring(const ExplicitGraph& graph, const Coloring& coloring);

/// First-fit coloring along the given vertex order (must be a permutation).
Coloring greedy_coloring(const ExplicitGraph& graph,
                         const std::vector<std::uint32_t>& order);

struct ExactColoring {
    int chromatic_number = 0;
    Coloring witness;
};

/// Exact chromatic number by saturation-ordered branch and bound, seeded
/// with a greedily found clique for the lower bound.  Deterministic.
ExactColoring chromatic_number_exact(const ExplicitGraph& graph,
                                     std::uint64_t max_vertices = 64);

/// Lexicographically least proper coloring with the given palette size,
/// found by index-order backtracking.  Throws if none exists.
Coloring lex_least_coloring(const ExplicitGraph& graph, int palette);

/// Proper coloring with a fixed palette found by saturation-ordered
/// backtracking; `seed` (if nonempty) biases the color tried first per
/// vertex.  Returns false if no such coloring exists.
bool find_coloring_with_palette(const ExplicitGraph& graph, int palette,
                                const std::vector<int>& seed, Coloring& out);

} // namespace selfsim

#endif
