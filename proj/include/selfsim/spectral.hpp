#ifndef SELFSIM_SPECTRAL_HPP
#define SELFSIM_SPECTRAL_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "selfsim/explicit_graph.hpp"

namespace selfsim {

/// Dense real symmetric matrix; writes keep both triangles in step.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t order)
        : order_(order), entries_(order * order, 0.0) {}

    std::size_t order() const { return order_; }
    double at(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    void set(std::size_t i, std::size_t j, double value) {
        entries_[i * order_ + j] = value;
        entries_[j * order_ + i] = value;
    }

private:
    std::size_t order_;
    std::vector<double> entries_;
};

SymmetricMatrix adjacency_matrix(const ExplicitGraph& graph);

/// Eigenvalues with multiplicities, sorted descending by eigenvalue.
struct SpectrumMultiset {
    std::vector<std::pair<double, std::uint64_t>> pairs;

    std::uint64_t total_multiplicity() const;
    double trace() const;  // sum of eigenvalue * multiplicity
    double energy() const; // sum of eigenvalue^2 * multiplicity
    double largest() const { return pairs.front().first; }
    // Second largest counted with multiplicity: equals the largest when it
    // repeats, which signals a disconnected (or empty) regular graph.
    double second_largest() const;
};

/// All eigenvalues by cyclic Jacobi rotations, iterated until the
/// off-diagonal norm drops below tol relative to the matrix norm, then
/// clustered into multiplicities with gap 1e-6.
SpectrumMultiset eigenvalues_numeric(const SymmetricMatrix& m, double tol = 1e-10,
                                     std::uint64_t max_order = 2000);

/// Closed spectrum of G^k for (K_n, loop matching): eigenvalue -k + j*n
/// with multiplicity C(k,j) * (n-1)^(k-j), j = 0..k.
SpectrumMultiset spectrum_matching_closed(int n, int k);

/// Per-level child rule applied to each eigenvalue of the previous level.
enum class LevelRule {
    Matching,       // mu -> mu - 1 (factor n-1), mu - 1 + n (factor 1)
    JStarCorrected, // mu -> -(mu + 1) (factor n-1), (n-1)(mu + 1) (factor 1)
};

/// Applies the block-determinant level rule k-1 times to a base spectrum.
SpectrumMultiset spectrum_block_recursion(const SpectrumMultiset& base_spectrum,
                                          int n, int k, LevelRule rule);

/// Spectrum of K_n: n-1 once, -1 with multiplicity n-1.
SpectrumMultiset complete_graph_spectrum(int n);

/// The eigenvalue sequence printed in the source analysis of (K_n, J*):
/// (n-1)^k, -(n-1)^(k-1), ..., (-1)^k.  Kept for side-by-side reports; it
/// does not match the constructed graphs and is never asserted.
std::vector<double> jstar_reported_sequence(int n, int k);

/// For a d-regular graph: (lower, upper) = ((l1-l2)/2, 2*sqrt(d*(l1-l2))).
std::pair<double, double> cheeger_bounds(const SpectrumMultiset& spectrum,
                                         std::uint64_t degree);

/// True when every eigenvalue matches within tol and multiplicities agree.
bool spectra_match(const SpectrumMultiset& a, const SpectrumMultiset& b,
                   double tol = 1e-8);

} // namespace selfsim

#endif
