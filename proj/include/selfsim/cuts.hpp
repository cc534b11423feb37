#ifndef SELFSIM_CUTS_HPP
#define SELFSIM_CUTS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "selfsim/explicit_graph.hpp"
#include "selfsim/spectral.hpp"

namespace selfsim {

/// Exact nonnegative fraction, kept reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t numerator, std::int64_t denominator);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
    bool operator<(const Rational& other) const { return num * other.den < other.num * den; }
};

/// Minimum-conductance result plus Cheeger bounds (filled for regular
/// graphs) and optional exact vertex expansion.
struct CutReport {
    Rational conductance;                 // delta(S)/|S| at the witness
    std::vector<std::uint32_t> witness;   // sorted, lexicographically least minimizer
    std::optional<double> cheeger_lower;  // (l1-l2)/2, regular graphs
    std::optional<double> cheeger_upper;  // 2*sqrt(d*(l1-l2)), regular graphs
    std::optional<Rational> vertex_expansion;
};

/// Exact conductance by Gray-code subset enumeration with incremental cut
/// updates over all S with 1 <= |S| <= |V|/2.  Cheeger bounds are attached
/// when the graph is regular.
CutReport conductance_exact(const ExplicitGraph& graph,
                            std::uint64_t max_vertices = 24);

/// Exact vertex expansion of a regular graph: minimum over the same subset
/// range of |{v outside S adjacent to S}| / |S|.
Rational vertex_expansion_exact(const ExplicitGraph& graph,
                                std::uint64_t max_vertices = 24);

} // namespace selfsim

#endif
