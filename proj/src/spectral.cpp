#include "selfsim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "selfsim/errors.hpp"

namespace selfsim {

namespace {

constexpr double kClusterGap = 1e-6;

SpectrumMultiset cluster(std::vector<std::pair<double, std::uint64_t>> values) {
    std::sort(values.begin(), values.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    SpectrumMultiset spectrum;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i;
        double sum = 0.0;
        std::uint64_t mult = 0;
        while (j < values.size() &&
               (j == i || values[j - 1].first - values[j].first <= kClusterGap)) {
            sum += values[j].first * static_cast<double>(values[j].second);
            mult += values[j].second;
            ++j;
        }
        spectrum.pairs.emplace_back(sum / static_cast<double>(mult), mult);
        i = j;
    }
    return spectrum;
}

} // namespace

SymmetricMatrix adjacency_matrix(const ExplicitGraph& graph) {
    SymmetricMatrix m(graph.vertex_count());
    for (auto [u, v] : graph.edges()) m.set(u, v, 1.0);
    return m;
}

std::uint64_t SpectrumMultiset::total_multiplicity() const {
    std::uint64_t total = 0;
    for (auto [value, mult] : pairs) total += mult;
    return total;
}

double SpectrumMultiset::trace() const {
    double t = 0.0;
    for (auto [value, mult] : pairs) t += value * static_cast<double>(mult);
    return t;
}

double SpectrumMultiset::energy() const {
    double e = 0.0;
    for (auto [value, mult] : pairs) e += value * value * static_cast<double>(mult);
    return e;
}

double SpectrumMultiset::second_largest() const {
    if (pairs.empty())
        throw std::invalid_argument("empty spectrum");
    if (pairs.front().second > 1) return pairs.front().first;
    if (pairs.size() < 2)
        throw std::invalid_argument("spectrum has a single simple eigenvalue");
    return pairs[1].first;
}

SpectrumMultiset eigenvalues_numeric(const SymmetricMatrix& m, double tol,
                                     std::uint64_t max_order) {
    const std::size_t n = m.order();
    if (n > max_order)
        throw SizeLimitError("matrix order " + std::to_string(n) + " exceeds " +
                             std::to_string(max_order));
    if (n == 0)
        throw std::invalid_argument("empty matrix");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("matrix is not symmetric");

    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j);

    double norm = 0.0;
    for (double x : a) norm += x * x;
    norm = std::sqrt(norm);

    if (norm > 0.0) {
        const double target = tol * norm;
        for (int sweep = 0; sweep < 100; ++sweep) {
            double off = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * a[i * n + j] * a[i * n + j];
            off = std::sqrt(off);
            if (off <= target) break;
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const double apq = a[p * n + q];
                    if (apq == 0.0) continue;
                    const double app = a[p * n + p];
                    const double aqq = a[q * n + q];
                    const double theta = (aqq - app) / (2.0 * apq);
                    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;
                    a[p * n + p] = app - t * apq;
                    a[q * n + q] = aqq + t * apq;
                    a[p * n + q] = a[q * n + p] = 0.0;
                    for (std::size_t r = 0; r < n; ++r) {
                        if (r == p || r == q) continue;
                        const double arp = a[r * n + p];
                        const double arq = a[r * n + q];
                        a[r * n + p] = a[p * n + r] = c * arp - s * arq;
                        a[r * n + q] = a[q * n + r] = s * arp + c * arq;
                    }
                }
            }
        }
    }

    std::vector<std::pair<double, std::uint64_t>> values;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) values.emplace_back(a[i * n + i], 1);
    return cluster(std::move(values));
}

SpectrumMultiset spectrum_matching_closed(int n, int k) {
    if (n < 2 || k < 1)
        throw std::invalid_argument("closed spectrum needs n >= 2, k >= 1");
    SpectrumMultiset spectrum;
    for (int j = k; j >= 0; --j) {
        // binomial(k, j) * (n-1)^(k-j)
        std::uint64_t mult = 1;
        for (int i = 0; i < j; ++i) mult = mult * static_cast<std::uint64_t>(k - i) /
                                           static_cast<std::uint64_t>(i + 1);
        for (int i = 0; i < k - j; ++i) mult *= static_cast<std::uint64_t>(n - 1);
        spectrum.pairs.emplace_back(static_cast<double>(-k + j * n), mult);
    }
    return spectrum;
}

SpectrumMultiset spectrum_block_recursion(const SpectrumMultiset& base_spectrum,
                                          int n, int k, LevelRule rule) {
    if (n < 2 || k < 1)
        throw std::invalid_argument("block recursion needs n >= 2, k >= 1");
    SpectrumMultiset level = base_spectrum;
    const std::uint64_t repeated = static_cast<std::uint64_t>(n - 1);
    for (int depth = 2; depth <= k; ++depth) {
        std::vector<std::pair<double, std::uint64_t>> children;
        children.reserve(level.pairs.size() * 2);
        for (auto [mu, mult] : level.pairs) {
            switch (rule) {
            case LevelRule::Matching:
                children.emplace_back(mu - 1.0, mult * repeated);
                children.emplace_back(mu - 1.0 + n, mult);
                break;
            case LevelRule::JStarCorrected:
                children.emplace_back(-(mu + 1.0), mult * repeated);
                children.emplace_back(static_cast<double>(n - 1) * (mu + 1.0), mult);
                break;
            }
        }
        level = cluster(std::move(children));
    }
    return level;
}

SpectrumMultiset complete_graph_spectrum(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    SpectrumMultiset spectrum;
    spectrum.pairs.emplace_back(static_cast<double>(n - 1), 1);
    spectrum.pairs.emplace_back(-1.0, static_cast<std::uint64_t>(n - 1));
    return spectrum;
}

std::vector<double> jstar_reported_sequence(int n, int k) {
    std::vector<double> seq;
    for (int j = 0; j <= k; ++j) {
        double value = (j % 2 == 0) ? 1.0 : -1.0;
        for (int i = 0; i < k - j; ++i) value *= static_cast<double>(n - 1);
        seq.push_back(value);
    }
    return seq;
}

std::pair<double, double> cheeger_bounds(const SpectrumMultiset& spectrum,
                                         std::uint64_t degree) {
    if (spectrum.pairs.empty())
        throw std::invalid_argument("empty spectrum");
    const double gap = spectrum.largest() - spectrum.second_largest();
    return {gap / 2.0, 2.0 * std::sqrt(static_cast<double>(degree) * gap)};
}

bool spectra_match(const SpectrumMultiset& a, const SpectrumMultiset& b, double tol) {
    if (a.pairs.size() != b.pairs.size()) return false;
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
        if (std::abs(a.pairs[i].first - b.pairs[i].first) > tol) return false;
        if (a.pairs[i].second != b.pairs[i].second) return false;
    }
    return true;
}

} // namespace selfsim
