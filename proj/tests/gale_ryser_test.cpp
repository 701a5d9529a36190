#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "regspan/gale_ryser.hpp"
#include "regspan/generators.hpp"

using namespace regspan;

namespace {

BipartiteGraph path_graph() {
    BipartiteGraph g(2);
    g.add_edge(0, 0);
    g.add_edge(0, 1);
    g.add_edge(1, 1);
    return g;
}

BipartiteGraph graph_from_cells(int n, unsigned mask) {
    BipartiteGraph g(n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (mask >> (a * n + b) & 1u) g.add_edge(a, b);
        }
    }
    return g;
}

// Plug a witness into the subset inequality literally.
void check_witness_violates(const BipartiteGraph& g, const FactorSpec& f,
                            const GaleRyserVerdict& verdict) {
    REQUIRE(verdict.witness.has_value());
    const auto& [x, y] = *verdict.witness;
    long long lhs = 0;
    for (int a : x.members) lhs += f.targets_a[a];
    long long rhs = edge_count_between(g, x, y);
    std::vector<char> in_y(g.size(), 0);
    for (int b : y.members) in_y[b] = 1;
    for (int b = 0; b < g.size(); ++b) {
        if (!in_y[b]) rhs += f.targets_b[b];
    }
    CHECK(lhs > rhs);
}

}  // namespace

TEST_CASE("check_sum_condition") {
    CHECK(check_sum_condition(FactorSpec::constant(5, 3)));
    CHECK(check_sum_condition(FactorSpec::constant(4, 0)));
    CHECK_FALSE(check_sum_condition(FactorSpec{{2, 1}, {1, 1}}));
}

TEST_CASE("check_condition finds the path witness") {
    GaleRyserVerdict v = check_condition(path_graph(), FactorSpec::constant(2, 2));
    CHECK_FALSE(v.satisfied);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->first.members == std::vector<int>{1});
    CHECK(v.witness->second.members == std::vector<int>{0, 1});
    CHECK(v.slack < 0);
    check_witness_violates(path_graph(), FactorSpec::constant(2, 2), v);
}

TEST_CASE("check_condition satisfied cases") {
    GaleRyserVerdict tight = check_condition(circulant_regular(2, 2), FactorSpec::constant(2, 2));
    CHECK(tight.satisfied);
    CHECK_FALSE(tight.witness.has_value());
    CHECK(tight.slack == 0);

    CHECK(check_condition(circulant_regular(6, 3), FactorSpec::constant(6, 2)).satisfied);
}

TEST_CASE("check_condition input validation") {
    CHECK_THROWS_WITH_AS(check_condition(path_graph(), FactorSpec{{2, 1}, {1, 1}}),
                         doctest::Contains("sum mismatch"), std::invalid_argument);
    BipartiteGraph big(kCheckConditionMaxN + 1);
    CHECK_THROWS_WITH_AS(
        check_condition(big, FactorSpec::constant(kCheckConditionMaxN + 1, 0)),
        doctest::Contains("size limit"), std::invalid_argument);
    BipartiteGraph mid(kCheckConditionFullMaxN + 1);
    CHECK_THROWS_WITH_AS(
        check_condition_full(mid, FactorSpec::constant(kCheckConditionFullMaxN + 1, 0)),
        doctest::Contains("size limit"), std::invalid_argument);
}

TEST_CASE("full enumeration agrees with the closed form on the hand examples") {
    auto compare = [](const BipartiteGraph& g, const FactorSpec& f) {
        GaleRyserVerdict fast = check_condition(g, f);
        GaleRyserVerdict full = check_condition_full(g, f);
        CHECK(fast.satisfied == full.satisfied);
        CHECK(fast.slack == full.slack);
        REQUIRE(fast.witness.has_value() == full.witness.has_value());
        if (fast.witness) {
            CHECK(fast.witness->first.members == full.witness->first.members);
            CHECK(fast.witness->second.members == full.witness->second.members);
            check_witness_violates(g, f, fast);
            check_witness_violates(g, f, full);
        }
    };
    compare(path_graph(), FactorSpec::constant(2, 2));
    compare(circulant_regular(2, 2), FactorSpec::constant(2, 2));
}

TEST_CASE("full enumeration agrees with the closed form on every n=3 graph") {
    const int n = 3;
    for (unsigned mask = 0; mask < (1u << (n * n)); ++mask) {
        BipartiteGraph g = graph_from_cells(n, mask);
        for (int r = 0; r <= n; ++r) {
            FactorSpec f = FactorSpec::constant(n, r);
            GaleRyserVerdict fast = check_condition(g, f);
            GaleRyserVerdict full = check_condition_full(g, f);
            REQUIRE(fast.satisfied == full.satisfied);
            REQUIRE(fast.slack == full.slack);
            REQUIRE(fast.witness.has_value() == full.witness.has_value());
            if (fast.witness) {
                REQUIRE(fast.witness->first.members == full.witness->first.members);
                REQUIRE(fast.witness->second.members == full.witness->second.members);
            }
        }
    }
}

TEST_CASE("full enumeration agrees on non-constant targets") {
    // Mix of degrees on a fixed small graph, all balanced target splits.
    BipartiteGraph g = graph_from_cells(3, 0b101110011u);
    for (int ta0 = 0; ta0 <= 2; ++ta0) {
        for (int ta1 = 0; ta1 <= 2; ++ta1) {
            for (int tb0 = 0; tb0 <= 2; ++tb0) {
                for (int tb1 = 0; tb1 <= 2; ++tb1) {
                    int sum_a = ta0 + ta1 + 1;
                    int sum_b = tb0 + tb1;
                    if (sum_a - sum_b < 0 || sum_a - sum_b > 3) continue;
                    FactorSpec f{{ta0, ta1, 1}, {tb0, tb1, sum_a - sum_b}};
                    GaleRyserVerdict fast = check_condition(g, f);
                    GaleRyserVerdict full = check_condition_full(g, f);
                    REQUIRE(fast.satisfied == full.satisfied);
                    REQUIRE(fast.slack == full.slack);
                    if (fast.witness) {
                        REQUIRE(fast.witness->first.members == full.witness->first.members);
                    }
                }
            }
        }
    }
}

TEST_CASE("adding an edge never decreases the slack") {
    const int n = 4;
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned mask = static_cast<unsigned>(rng() & ((1u << (n * n)) - 1));
        const int r = static_cast<int>(rng() % (n + 1));
        BipartiteGraph g = graph_from_cells(n, mask);
        const long long before = check_condition(g, FactorSpec::constant(n, r)).slack;
        // add one absent cell, if any
        for (int cell = 0; cell < n * n; ++cell) {
            if (!(mask >> cell & 1u)) {
                BipartiteGraph bigger = graph_from_cells(n, mask | (1u << cell));
                const long long after =
                    check_condition(bigger, FactorSpec::constant(n, r)).slack;
                CHECK(after >= before);
                break;
            }
        }
    }
}
