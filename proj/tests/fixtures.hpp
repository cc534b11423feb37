#ifndef SELFSIM_TESTS_FIXTURES_HPP
#define SELFSIM_TESTS_FIXTURES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "selfsim/chromatic.hpp"
#include "selfsim/graph.hpp"

namespace fixtures {

inline selfsim::BaseGraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return selfsim::make_base_graph(n, edges);
}

inline selfsim::BaseGraph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return selfsim::make_base_graph(n, edges);
}

inline selfsim::BaseGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
    return selfsim::make_base_graph(n, edges);
}

inline selfsim::Bundle matching(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i) pairs.emplace_back(i, i);
    return selfsim::make_bundle(n, pairs);
}

inline selfsim::Bundle jstar(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) pairs.emplace_back(i, j);
    return selfsim::make_bundle(n, pairs);
}

inline selfsim::Bundle full(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pairs.emplace_back(i, j);
    return selfsim::make_bundle(n, pairs);
}

inline selfsim::Bundle mirror(const selfsim::BaseGraph& base) {
    std::vector<std::pair<int, int>> pairs;
    for (auto [i, j] : base.edges()) {
        pairs.emplace_back(i, j);
        pairs.emplace_back(j, i);
    }
    return selfsim::make_bundle(base.size(), pairs);
}

// Deterministic symmetric bundle from a tiny linear congruential stream.
inline selfsim::Bundle seeded_bundle(int n, std::uint32_t seed) {
    std::vector<std::pair<int, int>> pairs;
    std::uint32_t state = seed;
    auto coin = [&]() {
        state = state * 1664525u + 1013904223u;
        return (state >> 16) & 1u;
    };
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            if (coin()) {
                pairs.emplace_back(i, j);
                pairs.emplace_back(j, i);
            }
    return selfsim::make_bundle(n, pairs);
}

struct NamedSystem {
    std::string name;
    selfsim::SelfSimilarSystem system;
};

// The fixed fixture set: bases of side n paired with at least ten bundles
// per side across the collection.
inline std::vector<NamedSystem> fixture_systems() {
    std::vector<NamedSystem> out;
    auto add = [&](std::string name, const selfsim::BaseGraph& base,
                   const selfsim::Bundle& bundle) {
        out.push_back({std::move(name), selfsim::SelfSimilarSystem(base, bundle)});
    };
    // n = 2: the whole catalog against K2.
    for (const auto& entry : selfsim::k2_catalog())
        add("k2/" + entry.name, complete(2), entry.bundle);
    // n = 3.
    const auto k3 = complete(3);
    const auto p3 = path(3);
    add("k3/matching", k3, matching(3));
    add("k3/jstar", k3, jstar(3));
    add("k3/full", k3, full(3));
    add("k3/jr1", k3, selfsim::jr_bundle(3, 1));
    add("k3/jr2", k3, selfsim::jr_bundle(3, 2));
    add("k3/special", k3, selfsim::k3_special_bundle());
    add("k3/seed7", k3, seeded_bundle(3, 7));
    add("k3/seed11", k3, seeded_bundle(3, 11));
    add("p3/matching", p3, matching(3));
    add("p3/mirror", p3, mirror(p3));
    add("p3/empty", p3, selfsim::make_bundle(3, {}));
    // n = 4.
    const auto k4 = complete(4);
    const auto c4 = cycle(4);
    const auto p4 = path(4);
    add("k4/matching", k4, matching(4));
    add("k4/jstar", k4, jstar(4));
    add("k4/full", k4, full(4));
    add("k4/jr2", k4, selfsim::jr_bundle(4, 2));
    add("k4/seed3", k4, seeded_bundle(4, 3));
    add("c4/matching", c4, matching(4));
    add("c4/mirror", c4, mirror(c4));
    add("p4/seed5", p4, seeded_bundle(4, 5));
    return out;
}

} // namespace fixtures

#endif
