#pragma once

#include <optional>
#include <vector>

#include "regspan/bipartite_graph.hpp"

namespace regspan {

/// Per-vertex degree targets for an f-factor. Targets must lie in [0, n]
/// since a degree cannot exceed the opposite class size.
struct FactorSpec {
    std::vector<int> targets_a;
    std::vector<int> targets_b;

    static FactorSpec constant(int n, int r);

    long long sum_a() const;
    long long sum_b() const;
};

/// Finds a spanning subgraph H of g with deg_H(x) = f(x) for every vertex,
/// via a max-flow reduction (source -> A with capacity f(a), unit arcs per
/// edge, B -> sink with capacity f(b)). Returns the subgraph formed by the
/// saturated unit arcs when the flow meets the targets, absence otherwise.
/// Infeasibility is a legitimate result, not an error.
std::optional<BipartiteGraph> find_f_factor(const BipartiteGraph& g, const FactorSpec& f);

/// find_f_factor with f identically r. Throws std::invalid_argument unless
/// 0 <= r <= n.
std::optional<BipartiteGraph> find_regular_factor(const BipartiteGraph& g, int r);

/// Largest r such that g has an r-regular spanning subgraph (0 is always
/// feasible). Binary search over [0, min_degree(g)], valid because
/// feasibility is downward monotone: an r-regular bipartite graph splits
/// into r perfect matchings, and dropping one leaves an (r-1)-regular one.
int max_regular_degree(const BipartiteGraph& g);

/// Value of the maximum flow in the reduction network for (g, f); never
/// exceeds sum_a. Exposed for diagnostics and tests.
long long max_flow_value(const BipartiteGraph& g, const FactorSpec& f);

/// Perfect matching represented as A-index -> matched B-index.
using PerfectMatching = std::vector<int>;

/// Splits an r-regular graph into r pairwise edge-disjoint perfect matchings
/// whose union is exactly E(h), by repeated augmenting-path matching on the
/// residual graph (Hall's condition holds for every regular bipartite graph).
/// Throws std::invalid_argument if h is not r-regular or r < 1.
std::vector<PerfectMatching> decompose_into_matchings(const BipartiteGraph& h, int r);

}  // namespace regspan
