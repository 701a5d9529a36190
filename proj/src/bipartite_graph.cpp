#include "regspan/bipartite_graph.hpp"

#include <numeric>
#include <stdexcept>

namespace regspan {

VertexSubset subset_from_mask(Side side, std::uint32_t mask, int n) {
    VertexSubset s{side, {}};
    for (int i = 0; i < n; ++i) {
        if (mask >> i & 1u) s.members.push_back(i);
    }
    return s;
}

VertexSubset full_subset(Side side, int n) {
    VertexSubset s{side, std::vector<int>(n)};
    std::iota(s.members.begin(), s.members.end(), 0);
    return s;
}

BipartiteGraph::BipartiteGraph(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("BipartiteGraph: n must be positive");
    row_words_ = (n_ + 63) / 64;
    adj_a_.resize(n_);
    adj_b_.resize(n_);
    bits_.assign(static_cast<std::size_t>(n_) * row_words_, 0);
}

int BipartiteGraph::check(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("BipartiteGraph: vertex index out of range");
    return v;
}

void BipartiteGraph::add_edge(int a, int b) {
    check(a);
    check(b);
    if (has_edge(a, b)) throw std::invalid_argument("BipartiteGraph: duplicate edge");
    bits_[static_cast<std::size_t>(a) * row_words_ + b / 64] |= 1ull << (b % 64);
    adj_a_[a].push_back(b);
    adj_b_[b].push_back(a);
    ++edge_count_;
}

bool BipartiteGraph::has_edge(int a, int b) const {
    check(a);
    check(b);
    return bits_[static_cast<std::size_t>(a) * row_words_ + b / 64] >> (b % 64) & 1ull;
}

bool BipartiteGraph::operator==(const BipartiteGraph& other) const {
    // The bit matrix is a canonical encoding of the edge set.
    return n_ == other.n_ && bits_ == other.bits_;
}

int min_degree(const BipartiteGraph& g) {
    int m = g.size();
    for (int v = 0; v < g.size(); ++v) {
        m = std::min({m, g.degree_a(v), g.degree_b(v)});
    }
    return m;
}

namespace {

void require_subset(const BipartiteGraph& g, const VertexSubset& s, Side expected,
                    const char* name) {
    if (s.side != expected) {
        throw std::invalid_argument(std::string("edge_count_between: subset ") + name +
                                    " is on the wrong side");
    }
    std::vector<char> seen(g.size(), 0);
    for (int v : s.members) {
        if (v < 0 || v >= g.size()) {
            throw std::invalid_argument(std::string("edge_count_between: subset ") + name +
                                        " has an out-of-range index");
        }
        if (seen[v]++) {
            throw std::invalid_argument(std::string("edge_count_between: subset ") + name +
                                        " repeats an index");
        }
    }
}

}  // namespace

long long edge_count_between(const BipartiteGraph& g, const VertexSubset& x,
                             const VertexSubset& y) {
    require_subset(g, x, Side::A, "X");
    require_subset(g, y, Side::B, "Y");
    std::vector<char> in_y(g.size(), 0);
    for (int b : y.members) in_y[b] = 1;
    long long count = 0;
    for (int a : x.members) {
        for (int b : g.neighbors_a(a)) count += in_y[b];
    }
    return count;
}

}  // namespace regspan
