#pragma once

#include <optional>
#include <utility>

#include "regspan/bipartite_graph.hpp"
#include "regspan/factor.hpp"

namespace regspan {

/// Exhaustive-mode size limits (subset enumeration is exponential).
inline constexpr int kCheckConditionMaxN = 20;
inline constexpr int kCheckConditionFullMaxN = 10;

/// Outcome of the Gale-Ryser subset condition. `slack` is the minimum of
/// RHS - LHS over all checked subset pairs; on failure `witness` holds a
/// pair (X, Y) at which LHS > RHS literally.
struct GaleRyserVerdict {
    bool satisfied;
    std::optional<std::pair<VertexSubset, VertexSubset>> witness;
    long long slack;
};

/// Condition (i): the A-side and B-side target sums agree.
bool check_sum_condition(const FactorSpec& f);

/// Condition (ii): sum_{x in X} f(x) <= e(X, Y) + sum_{y in B-Y} f(y) for all
/// X subset A, Y subset B. Enumerates X by increasing popcount then numeric
/// order; for fixed X the minimum over Y of the RHS is the closed form
/// sum_y min(deg_X(y), f(y)), attained at Y = {y : deg_X(y) < f(y)}.
/// Requires n <= 20 and condition (i); violations raise std::invalid_argument.
GaleRyserVerdict check_condition(const BipartiteGraph& g, const FactorSpec& f);

/// Same verdict as check_condition, but the inner minimum over Y is found by
/// enumerating all 2^n subsets instead of the closed form. Exists to defend
/// the closed-form shortcut; requires n <= 10.
GaleRyserVerdict check_condition_full(const BipartiteGraph& g, const FactorSpec& f);

}  // namespace regspan
