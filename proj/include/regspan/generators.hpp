#pragma once

#include <cstdint>

#include "regspan/bipartite_graph.hpp"

namespace regspan {

/// Circulant bipartite graph: a_i is adjacent to b_{(i+t) mod n} for
/// t = 0..r-1, so every vertex has degree exactly r.
BipartiteGraph circulant_regular(int n, int r);

/// Seeded random graph with min_degree >= d. Each A-vertex first picks d
/// distinct uniform neighbors; B-vertices still short of d then add edges to
/// uniformly chosen non-neighbors. Identical output for identical (n, d, seed).
BipartiteGraph random_min_degree(int n, int d, std::uint64_t seed);

}  // namespace regspan
