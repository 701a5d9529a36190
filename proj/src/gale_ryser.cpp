#include "regspan/gale_ryser.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace regspan {

bool check_sum_condition(const FactorSpec& f) {
    return f.sum_a() == f.sum_b();
}

namespace {

void validate(const BipartiteGraph& g, const FactorSpec& f, int max_n, const char* name) {
    if (g.size() > max_n) {
        throw std::invalid_argument(std::string(name) + ": size limit exceeded (exhaustive mode, n <= " +
                                    std::to_string(max_n) + ")");
    }
    const int n = g.size();
    if (static_cast<int>(f.targets_a.size()) != n || static_cast<int>(f.targets_b.size()) != n) {
        throw std::invalid_argument(std::string(name) + ": target lists must both have length n");
    }
    for (int t : f.targets_a) {
        if (t < 0 || t > n) throw std::invalid_argument(std::string(name) + ": A-target outside [0, n]");
    }
    for (int t : f.targets_b) {
        if (t < 0 || t > n) throw std::invalid_argument(std::string(name) + ": B-target outside [0, n]");
    }
    if (!check_sum_condition(f)) {
        throw std::invalid_argument(std::string(name) + ": sum mismatch, target sums of A and B differ");
    }
}

// Next subset mask of the same popcount in increasing numeric order
// (Gosper's hack); returns a value >= 2^n when exhausted.
std::uint32_t next_same_popcount(std::uint32_t v) {
    std::uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

template <typename PerSubset>
void for_each_subset_by_popcount(int n, PerSubset&& fn) {
    fn(0u);
    for (int k = 1; k <= n; ++k) {
        std::uint32_t mask = (1u << k) - 1;
        while (mask < (1u << n)) {
            fn(mask);
            mask = next_same_popcount(mask);
        }
    }
}

std::vector<std::uint32_t> b_neighbor_masks(const BipartiteGraph& g) {
    std::vector<std::uint32_t> masks(g.size(), 0);
    for (int b = 0; b < g.size(); ++b) {
        for (int a : g.neighbors_b(b)) masks[b] |= 1u << a;
    }
    return masks;
}

// Canonical inner minimizer Y*(X) = {y : deg_X(y) < f(y)}; moving any y in
// or out of it cannot lower e(X, Y) + sum_{B-Y} f.
VertexSubset minimizing_y(const BipartiteGraph& g, const FactorSpec& f,
                          const std::vector<std::uint32_t>& nbr_mask, std::uint32_t xmask) {
    VertexSubset y{Side::B, {}};
    for (int b = 0; b < g.size(); ++b) {
        int deg_x = std::popcount(nbr_mask[b] & xmask);
        if (deg_x < f.targets_b[b]) y.members.push_back(b);
    }
    return y;
}

GaleRyserVerdict make_verdict(const BipartiteGraph& g, const FactorSpec& f,
                              const std::vector<std::uint32_t>& nbr_mask, long long min_slack,
                              std::optional<std::uint32_t> first_fail) {
    if (!first_fail) return {true, std::nullopt, min_slack};
    VertexSubset x = subset_from_mask(Side::A, *first_fail, g.size());
    VertexSubset y = minimizing_y(g, f, nbr_mask, *first_fail);
    return {false, std::make_pair(std::move(x), std::move(y)), min_slack};
}

}  // namespace

GaleRyserVerdict check_condition(const BipartiteGraph& g, const FactorSpec& f) {
    validate(g, f, kCheckConditionMaxN, "check_condition");
    const int n = g.size();
    const std::vector<std::uint32_t> nbr_mask = b_neighbor_masks(g);

    long long min_slack = 0;  // X = empty set contributes slack 0
    std::optional<std::uint32_t> first_fail;
    for_each_subset_by_popcount(n, [&](std::uint32_t xmask) {
        long long lhs = 0;
        for (std::uint32_t m = xmask; m != 0; m &= m - 1) {
            lhs += f.targets_a[std::countr_zero(m)];
        }
        long long rhs = 0;
        for (int b = 0; b < n; ++b) {
            rhs += std::min<long long>(std::popcount(nbr_mask[b] & xmask), f.targets_b[b]);
        }
        long long slack = rhs - lhs;
        min_slack = std::min(min_slack, slack);
        if (slack < 0 && !first_fail) first_fail = xmask;
    });
    return make_verdict(g, f, nbr_mask, min_slack, first_fail);
}

GaleRyserVerdict check_condition_full(const BipartiteGraph& g, const FactorSpec& f) {
    validate(g, f, kCheckConditionFullMaxN, "check_condition_full");
    const int n = g.size();
    const std::vector<std::uint32_t> nbr_mask = b_neighbor_masks(g);

    long long min_slack = 0;
    std::optional<std::uint32_t> first_fail;
    std::vector<int> deg_x(n);
    for_each_subset_by_popcount(n, [&](std::uint32_t xmask) {
        long long lhs = 0;
        for (std::uint32_t m = xmask; m != 0; m &= m - 1) {
            lhs += f.targets_a[std::countr_zero(m)];
        }
        for (int b = 0; b < n; ++b) deg_x[b] = std::popcount(nbr_mask[b] & xmask);

        long long best_rhs = 0;
        for (int b = 0; b < n; ++b) best_rhs += f.targets_b[b];  // Y = empty set
        for (std::uint32_t ymask = 1; ymask < (1u << n); ++ymask) {
            long long rhs = 0;
            for (int b = 0; b < n; ++b) {
                rhs += (ymask >> b & 1u) ? deg_x[b] : f.targets_b[b];
            }
            best_rhs = std::min(best_rhs, rhs);
        }
        long long slack = best_rhs - lhs;
        min_slack = std::min(min_slack, slack);
        if (slack < 0 && !first_fail) first_fail = xmask;
    });
    return make_verdict(g, f, nbr_mask, min_slack, first_fail);
}

}  // namespace regspan
