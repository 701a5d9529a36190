#include "regspan/generators.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace regspan {

BipartiteGraph circulant_regular(int n, int r) {
    if (r < 0 || r > n) throw std::invalid_argument("circulant_regular: r must be in [0, n]");
    BipartiteGraph g(n);
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < r; ++t) g.add_edge(i, (i + t) % n);
    }
    return g;
}

BipartiteGraph random_min_degree(int n, int d, std::uint64_t seed) {
    if (d < 0 || d > n) throw std::invalid_argument("random_min_degree: d must be in [0, n]");
    std::mt19937_64 rng(seed);
    BipartiteGraph g(n);

    // Partial Fisher-Yates: each A-vertex draws d distinct neighbors.
    std::vector<int> pool(n);
    for (int a = 0; a < n; ++a) {
        std::iota(pool.begin(), pool.end(), 0);
        for (int k = 0; k < d; ++k) {
            std::uniform_int_distribution<int> pick(k, n - 1);
            std::swap(pool[k], pool[pick(rng)]);
            g.add_edge(a, pool[k]);
        }
    }

    // Top up B-vertices still short of d with uniformly chosen non-neighbors.
    std::vector<int> candidates;
    for (int b = 0; b < n; ++b) {
        int need = d - g.degree_b(b);
        if (need <= 0) continue;
        candidates.clear();
        for (int a = 0; a < n; ++a) {
            if (!g.has_edge(a, b)) candidates.push_back(a);
        }
        for (int k = 0; k < need; ++k) {
            std::uniform_int_distribution<int> pick(k, static_cast<int>(candidates.size()) - 1);
            std::swap(candidates[k], candidates[pick(rng)]);
            g.add_edge(candidates[k], b);
        }
    }
    return g;
}

}  // namespace regspan
