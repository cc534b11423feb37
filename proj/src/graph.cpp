#include "selfsim/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

void check_range(int i, int n, const char* what) {
    if (i < 1 || i > n)
        throw std::out_of_range(std::string(what) + " index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(n));
}

} // namespace

int BaseGraph::idx(int i) const {
    check_range(i, n_, "vertex");
    return i - 1;
}

bool BaseGraph::is_complete() const {
    return edge_count() == static_cast<std::uint64_t>(n_) * (n_ - 1) / 2;
}

BaseGraph make_base_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1)
        throw std::invalid_argument("vertex count must be positive");
    BaseGraph g;
    g.n_ = n;
    g.adj_.assign(n, std::vector<bool>(n, false));
    g.degree_.assign(n, 0);
    for (auto [i, j] : edges) {
        check_range(i, n, "edge");
        check_range(j, n, "edge");
        if (i == j)
            throw std::invalid_argument("self-loop (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") not allowed");
        g.adj_[i - 1][j - 1] = true;
        g.adj_[j - 1][i - 1] = true;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adj_[i][j]) {
                g.edges_.emplace_back(i + 1, j + 1);
                ++g.degree_[i];
                ++g.degree_[j];
            }
    return g;
}

int Bundle::idx(int i) const {
    check_range(i, n_, "bundle");
    return i - 1;
}

std::vector<std::pair<int, int>> Bundle::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (rel_[i][j]) out.emplace_back(i + 1, j + 1);
    return out;
}

Bundle make_bundle(int n, const std::vector<std::pair<int, int>>& pairs,
                   bool symmetrize) {
    if (n < 1)
        throw std::invalid_argument("bundle side must be positive");
    Bundle b;
    b.n_ = n;
    b.rel_.assign(n, std::vector<bool>(n, false));
    for (auto [i, j] : pairs) {
        check_range(i, n, "bundle");
        check_range(j, n, "bundle");
        b.rel_[i - 1][j - 1] = true;
        if (symmetrize) b.rel_[j - 1][i - 1] = true;
    }
    if (!symmetrize) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (b.rel_[i][j] != b.rel_[j][i])
                    throw std::invalid_argument(
                        "asymmetric bundle: (" + std::to_string(i + 1) + "," +
                        std::to_string(j + 1) + "') lacks its mirror pair");
    }
    b.row_degree_.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b.rel_[i][j]) {
                ++b.row_degree_[i];
                ++b.edge_count_;
            }
    return b;
}

BundleView bundle_view(const Bundle& bundle) {
    BundleView view;
    view.n = bundle.side();
    for (int i = 1; i <= view.n; ++i) {
        if (bundle.contains(i, i)) view.loops.push_back(i);
        for (int j = i + 1; j <= view.n; ++j)
            if (bundle.contains(i, j)) view.simple_edges.emplace_back(i, j);
    }
    return view;
}

Bundle bundle_from_view(const BundleView& view) {
    std::vector<std::pair<int, int>> pairs;
    for (int i : view.loops) pairs.emplace_back(i, i);
    for (auto [i, j] : view.simple_edges) {
        pairs.emplace_back(i, j);
        pairs.emplace_back(j, i);
    }
    return make_bundle(view.n, pairs);
}

SelfSimilarSystem::SelfSimilarSystem(BaseGraph base_graph, Bundle edge_bundle)
    : base(std::move(base_graph)), bundle(std::move(edge_bundle)) {
    if (base.size() != bundle.side())
        throw std::invalid_argument("base graph and bundle sizes differ: " +
                                    std::to_string(base.size()) + " vs " +
                                    std::to_string(bundle.side()));
}

std::uint64_t power_count(int n, int k) {
    if (n < 1 || k < 1)
        throw std::invalid_argument("power_count requires n >= 1, k >= 1");
    std::uint64_t result = 1;
    for (int i = 0; i < k; ++i) {
        if (result > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(n))
            throw std::overflow_error("n^k exceeds 64-bit range");
        result *= static_cast<std::uint64_t>(n);
    }
    return result;
}

std::uint64_t encode_vertex(const Vertex& v, int n) {
    if (v.empty())
        throw std::invalid_argument("vertex needs at least one coordinate");
    std::uint64_t index = 0;
    for (int c : v) {
        check_range(c, n, "coordinate");
        index = index * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(c - 1);
    }
    return index;
}

Vertex decode_vertex(std::uint64_t index, int n, int k) {
    Vertex v(static_cast<std::size_t>(k));
    for (int s = k - 1; s >= 0; --s) {
        v[static_cast<std::size_t>(s)] = static_cast<int>(index % static_cast<std::uint64_t>(n)) + 1;
        index /= static_cast<std::uint64_t>(n);
    }
    if (index != 0)
        throw std::out_of_range("vertex index out of range for n^k");
    return v;
}

bool adjacent(const SelfSimilarSystem& system, const Vertex& u, const Vertex& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("vertices of different depth");
    if (u.empty())
        throw std::invalid_argument("vertex needs at least one coordinate");
    const int n = system.size();
    std::size_t t = 0;
    while (t < u.size() && u[t] == v[t]) {
        check_range(u[t], n, "coordinate");
        ++t;
    }
    if (t == u.size()) return false; // u == v
    if (!system.base.adjacent(u[t], v[t])) return false;
    for (std::size_t s = t + 1; s < u.size(); ++s)
        if (!system.bundle.contains(u[s], v[s])) return false;
    return true;
}

std::uint64_t degree(const SelfSimilarSystem& system, const Vertex& u) {
    if (u.empty())
        throw std::invalid_argument("vertex needs at least one coordinate");
    std::uint64_t d = static_cast<std::uint64_t>(system.base.degree(u[0]));
    for (std::size_t s = 1; s < u.size(); ++s)
        d = static_cast<std::uint64_t>(system.base.degree(u[s])) +
            d * static_cast<std::uint64_t>(system.bundle.row_degree(u[s]));
    return d;
}

std::uint64_t edge_count(const SelfSimilarSystem& system, int k) {
    if (k < 1)
        throw std::invalid_argument("depth k must be >= 1");
    const unsigned __int128 n = static_cast<unsigned __int128>(system.size());
    const unsigned __int128 ej = static_cast<unsigned __int128>(system.bundle.edge_count());
    // sum_{i=0}^{k-1} n^{k-1-i} * ej^i, exact.
    unsigned __int128 sum = 0;
    unsigned __int128 term = 1; // n^{k-1} at i = 0
    for (int i = 0; i < k - 1; ++i) term *= n;
    for (int i = 0; i < k; ++i) {
        sum += term;
        if (i + 1 < k) {
            term /= n;
            term *= ej;
        }
    }
    unsigned __int128 total = sum * static_cast<unsigned __int128>(system.base.edge_count());
    if (total > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("edge count exceeds 64-bit range");
    return static_cast<std::uint64_t>(total);
}

} // namespace selfsim
