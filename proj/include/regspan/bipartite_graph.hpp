#pragma once

#include <cstdint>
#include <vector>

namespace regspan {

enum class Side { A, B };

/// A set of vertex indices taken from one color class.
struct VertexSubset {
    Side side;
    std::vector<int> members;  // strictly increasing, each < n
};

VertexSubset subset_from_mask(Side side, std::uint32_t mask, int n);
VertexSubset full_subset(Side side, int n);

/// Balanced bipartite graph on color classes A and B, each of size n.
/// Vertices are addressed as (side, index) with index in [0, n); the pair
/// structure makes side mix-ups detectable at the API boundary.
///
/// The graph is simple (at most one edge per (a, b) pair) and is treated as
/// immutable once built: every algorithm in this library takes a const
/// reference, so values can be shared freely across threads.
class BipartiteGraph {
public:
    explicit BipartiteGraph(int n);

    int size() const { return n_; }
    long long edge_count() const { return edge_count_; }

    /// Inserts edge (a, b). Throws std::invalid_argument on out-of-range
    /// indices or a duplicate edge.
    void add_edge(int a, int b);

    bool has_edge(int a, int b) const;

    /// Neighbors in insertion order.
    const std::vector<int>& neighbors_a(int a) const { return adj_a_[check(a)]; }
    const std::vector<int>& neighbors_b(int b) const { return adj_b_[check(b)]; }

    int degree_a(int a) const { return static_cast<int>(adj_a_[check(a)].size()); }
    int degree_b(int b) const { return static_cast<int>(adj_b_[check(b)].size()); }

    /// Equality of size and edge set (insertion order is irrelevant).
    bool operator==(const BipartiteGraph& other) const;

private:
    int check(int v) const;

    int n_;
    int row_words_;
    long long edge_count_ = 0;
    std::vector<std::vector<int>> adj_a_;
    std::vector<std::vector<int>> adj_b_;
    std::vector<std::uint64_t> bits_;  // n x n adjacency bit matrix, rows indexed by A
};

/// Minimum degree over all 2n vertices.
int min_degree(const BipartiteGraph& g);

/// e(X, Y): number of edges with one endpoint in X (A-side) and the other in
/// Y (B-side). Throws std::invalid_argument if the subsets carry the wrong
/// sides or contain out-of-range indices.
long long edge_count_between(const BipartiteGraph& g, const VertexSubset& x,
                             const VertexSubset& y);

}  // namespace regspan
