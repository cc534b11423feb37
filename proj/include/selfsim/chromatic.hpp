#ifndef SELFSIM_CHROMATIC_HPP
#define SELFSIM_CHROMATIC_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/coloring.hpp"
#include "selfsim/graph.hpp"

namespace selfsim {

/// Proper p-coloring of G^k when J is the loop matching {(i,i')}: the color
/// of (v_1..v_k) is the mod-p sum of base colors of its coordinates, with
/// p = chi(G).
Coloring coloring_matching_mod(const SelfSimilarSystem& system, int k,
                               std::uint64_t vertex_limit = kDefaultVertexLimit);

/// Proper chi(G)-coloring of G^k when the bundle mirrors the base adjacency
/// (i ~ j' iff v_i ~ v_j): the color of a vertex is the base color class of
/// its last coordinate only.
Coloring coloring_mirror_classes(const SelfSimilarSystem& system, int k,
                                 std::uint64_t vertex_limit = kDefaultVertexLimit);

/// The maximal bundle on K_n with r loops and a complete loopless part on
/// the remaining n-r indices.
Bundle jr_bundle(int n, int r);

/// 2n-color scheme for (K_n, J_r): 2n classes maintained level by level;
/// loop rows rotate the classes by two, the remaining rows use a fixed
/// color pair alternating with class parity.  For r = 0 this defers to the
/// mirror-class coloring with n colors.
Coloring coloring_jr_scheme(int n, int r, int k,
                            std::uint64_t vertex_limit = kDefaultVertexLimit);

/// The bundle {(1,1'),(2,3'),(3,2')} on K_3 whose sequence needs exactly
/// four colors.
Bundle k3_special_bundle();

/// Proper 4-coloring for (K_3, k3_special_bundle()): the explicit 9-vertex
/// partition at k = 2, a seeded exact search above that.
Coloring coloring_k3_special(int k, std::uint64_t vertex_limit = 2187);

struct CliqueWitness {
    int k = 0;
    std::vector<Vertex> vertices; // k+1 pairwise adjacent vertices of G^k
};

/// The (k+1)-clique {(i,i,..,i)} plus the k vertices with a single j: valid
/// whenever v_i ~ v_j and the bundle contains (i,i'), (i,j') and (j,i').
CliqueWitness clique_witness(const SelfSimilarSystem& system, int k, int i, int j);

enum class Finiteness { Finite, Infinite };

struct BundleEdge {
    int i = 0, j = 0; // the K_{n,n} edge (i, j')
    bool operator==(const BundleEdge&) const = default;
};

/// Verdict for chi_infinity(K_n, J).  Infinite comes with the witness
/// triple (i,i'), (i,j'), (j,i') and the base edge; Finite with an upper
/// bound that is n (loops only, or no loops) or 2n (mixed).
struct Classification {
    Finiteness verdict = Finiteness::Finite;
    int bound = 0;                                  // present iff Finite
    std::array<BundleEdge, 3> witness{};            // present iff Infinite
    std::pair<int, int> base_edge{0, 0};            // present iff Infinite
    std::string note;                               // informational only
};

Classification classify_bundle(int n, const Bundle& bundle);

enum class CatalogOutcome {
    BipartiteForever, // chi(G^k) = 2 for all k
    Unbounded,        // chi(G^k) >= k+1
    CompleteGrowth    // G^k = K_{2^k}, chi = 2^k
};

struct CatalogEntry {
    std::string name;
    Bundle bundle;
    CatalogOutcome outcome;
    std::string expected; // human-readable outcome
};

/// The eight symmetric bundles on n = 2 with their limit behavior.
std::vector<CatalogEntry> k2_catalog();

} // namespace selfsim

#endif
