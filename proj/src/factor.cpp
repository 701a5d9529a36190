#include "regspan/factor.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace regspan {

FactorSpec FactorSpec::constant(int n, int r) {
    return {std::vector<int>(n, r), std::vector<int>(n, r)};
}

long long FactorSpec::sum_a() const {
    long long s = 0;
    for (int t : targets_a) s += t;
    return s;
}

long long FactorSpec::sum_b() const {
    long long s = 0;
    for (int t : targets_b) s += t;
    return s;
}

namespace {

void validate_spec(const BipartiteGraph& g, const FactorSpec& f) {
    const int n = g.size();
    if (static_cast<int>(f.targets_a.size()) != n || static_cast<int>(f.targets_b.size()) != n) {
        throw std::invalid_argument("FactorSpec: target lists must both have length n");
    }
    for (int t : f.targets_a) {
        if (t < 0 || t > n) throw std::invalid_argument("FactorSpec: A-target outside [0, n]");
    }
    for (int t : f.targets_b) {
        if (t < 0 || t > n) throw std::invalid_argument("FactorSpec: B-target outside [0, n]");
    }
}

// Dinic on the factor reduction. Node layout: 0 = source, 1..n = A,
// n+1..2n = B, 2n+1 = sink. Middle arcs are unit capacity, one per graph
// edge, inserted in the graph's iteration order so results are deterministic.
struct FlowNetwork {
    struct Arc {
        int to;
        int rev;
        long long cap;
    };

    int node_count;
    int source;
    int sink;
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level;
    std::vector<int> iter;

    FlowNetwork(const BipartiteGraph& g, const FactorSpec& f)
        : node_count(2 * g.size() + 2),
          source(0),
          sink(2 * g.size() + 1),
          arcs(node_count),
          level(node_count),
          iter(node_count) {
        const int n = g.size();
        for (int a = 0; a < n; ++a) add_arc(source, 1 + a, f.targets_a[a]);
        for (int a = 0; a < n; ++a) {
            for (int b : g.neighbors_a(a)) add_arc(1 + a, 1 + n + b, 1);
        }
        for (int b = 0; b < n; ++b) add_arc(1 + n + b, sink, f.targets_b[b]);
    }

    void add_arc(int from, int to, long long cap) {
        arcs[from].push_back({to, static_cast<int>(arcs[to].size()), cap});
        arcs[to].push_back({from, static_cast<int>(arcs[from].size()) - 1, 0});
    }

    bool bfs() {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[source] = 0;
        q.push(source);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Arc& a : arcs[v]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    q.push(a.to);
                }
            }
        }
        return level[sink] >= 0;
    }

    long long dfs(int v, long long limit) {
        if (v == sink) return limit;
        long long pushed = 0;
        for (int& i = iter[v]; i < static_cast<int>(arcs[v].size()); ++i) {
            Arc& a = arcs[v][i];
            if (a.cap <= 0 || level[a.to] != level[v] + 1) continue;
            long long got = dfs(a.to, std::min(limit - pushed, a.cap));
            if (got > 0) {
                a.cap -= got;
                arcs[a.to][a.rev].cap += got;
                pushed += got;
                if (pushed == limit) return pushed;
            }
        }
        if (pushed == 0) level[v] = -1;
        return pushed;
    }

    long long max_flow() {
        long long total = 0;
        while (bfs()) {
            std::fill(iter.begin(), iter.end(), 0);
            total += dfs(source, std::numeric_limits<long long>::max());
        }
        return total;
    }

    // Saturated middle arcs form the factor.
    BipartiteGraph extract_factor(int n) const {
        BipartiteGraph h(n);
        for (int a = 0; a < n; ++a) {
            for (const Arc& arc : arcs[1 + a]) {
                if (arc.to > n && arc.to <= 2 * n && arc.cap == 0) {
                    h.add_edge(a, arc.to - 1 - n);
                }
            }
        }
        return h;
    }
};

}  // namespace

long long max_flow_value(const BipartiteGraph& g, const FactorSpec& f) {
    validate_spec(g, f);
    FlowNetwork net(g, f);
    return net.max_flow();
}

std::optional<BipartiteGraph> find_f_factor(const BipartiteGraph& g, const FactorSpec& f) {
    validate_spec(g, f);
    if (f.sum_a() != f.sum_b()) return std::nullopt;  // condition (i) fails
    FlowNetwork net(g, f);
    if (net.max_flow() != f.sum_a()) return std::nullopt;
    return net.extract_factor(g.size());
}

std::optional<BipartiteGraph> find_regular_factor(const BipartiteGraph& g, int r) {
    if (r < 0 || r > g.size()) {
        throw std::invalid_argument("find_regular_factor: r must be in [0, n]");
    }
    return find_f_factor(g, FactorSpec::constant(g.size(), r));
}

int max_regular_degree(const BipartiteGraph& g) {
    int lo = 0;
    int hi = min_degree(g);
    while (lo < hi) {
        int mid = lo + (hi - lo + 1) / 2;
        if (find_regular_factor(g, mid).has_value()) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

namespace {

// Augmenting-path perfect matching on mutable adjacency lists.
struct Matcher {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match_a;  // A-index -> B-index or -1
    std::vector<int> match_b;
    std::vector<char> visited;

    explicit Matcher(const std::vector<std::vector<int>>& adj_lists)
        : adj(adj_lists),
          match_a(adj_lists.size(), -1),
          match_b(adj_lists.size(), -1),
          visited(adj_lists.size(), 0) {}

    bool augment(int a) {
        for (int b : adj[a]) {
            if (visited[b]) continue;
            visited[b] = 1;
            if (match_b[b] < 0 || augment(match_b[b])) {
                match_a[a] = b;
                match_b[b] = a;
                return true;
            }
        }
        return false;
    }

    bool perfect() {
        const int n = static_cast<int>(adj.size());
        for (int a = 0; a < n; ++a) {
            std::fill(visited.begin(), visited.end(), 0);
            if (!augment(a)) return false;
        }
        return true;
    }
};

}  // namespace

std::vector<PerfectMatching> decompose_into_matchings(const BipartiteGraph& h, int r) {
    if (r < 1) throw std::invalid_argument("decompose_into_matchings: r must be positive");
    const int n = h.size();
    for (int v = 0; v < n; ++v) {
        if (h.degree_a(v) != r || h.degree_b(v) != r) {
            throw std::invalid_argument("decompose_into_matchings: graph is not r-regular");
        }
    }

    std::vector<std::vector<int>> adj(n);
    for (int a = 0; a < n; ++a) adj[a] = h.neighbors_a(a);

    std::vector<PerfectMatching> matchings;
    matchings.reserve(r);
    for (int round = 0; round < r; ++round) {
        Matcher m(adj);
        if (!m.perfect()) {
            throw std::logic_error(
                "decompose_into_matchings: regular bipartite graph lost its perfect matching");
        }
        for (int a = 0; a < n; ++a) {
            auto& row = adj[a];
            row.erase(std::find(row.begin(), row.end(), m.match_a[a]));
        }
        matchings.push_back(std::move(m.match_a));
    }
    return matchings;
}

}  // namespace regspan
