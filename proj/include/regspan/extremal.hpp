#pragma once

#include <stdexcept>

#include "regspan/bipartite_graph.hpp"

namespace regspan {

/// Raised when (n, d) is too small for the four-block construction, i.e. the
/// block inequality gl < d < n - gl fails.
struct InfeasibleConstruction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Derived quantities for the four-block graph G_delta on classes
/// A = A_l + A_e, B = B_l + B_e with |A_l| = |B_l| = gl:
///   - no edges inside A_l x B_l,
///   - complete bipartite blocks A_l x B_e and A_e x B_l,
///   - a core_degree-regular core on A_e x B_e.
/// The integer fields are exact; the trailing diagnostics are floating-point
/// companions of the same quantities in normalized form.
struct ExtremalParams {
    int n;
    int d;
    int gl;           // gl = ceil(gamma' * n), gamma' = (1 - sqrt(2*d/n - 1)) / 2
    int core_degree;  // d - gl
    int upper_bound;  // floor((n - gl)(d - gl) / (n - 2*gl))

    double gamma_prime;
    double p_prime;
    double p_tilde;
    double p_zero;
    double predicted_degree;  // (1 - p_zero)(1 - gamma) n
};

/// Tightness summary for one (n, d): the flow-computed maximum regular
/// degree of G_delta against the guaranteed floor, the ceiling, and the
/// edge-counting cap. bounds_hold reports r_max <= rho_ceil (expected for
/// large n; reported, never asserted).
struct ExtremalReport {
    int n;
    int d;
    int r_max;
    int rho_floor_val;
    int rho_ceil_val;
    int upper_bound;
    bool bounds_hold;
};

/// Computes the block sizes and diagnostics. Requires 2d > n and d < n
/// (std::domain_error) and the block inequality (InfeasibleConstruction).
ExtremalParams derive_params(int n, int d);

/// Builds G_delta with the layout: A-indices [0, gl) are A_l, [gl, n) are
/// A_e, same split on B; the core is the circulant core_degree-regular graph.
/// min_degree is exactly d and every A_l/B_l vertex has degree n - gl.
BipartiteGraph build_extremal(int n, int d);

/// Edge-counting cap on the degree of any regular spanning subgraph of
/// G_delta: every A_l- and B_l-edge of such a subgraph lands in the opposite
/// e-block, forcing (n - 2*gl)*r core edges out of the (n - gl)(d - gl)
/// available, hence r <= floor((n - gl)(d - gl) / (n - 2*gl)).
int counting_upper_bound(const ExtremalParams& params);

/// Builds G_delta, computes r_max via the flow engine, and checks
/// rho_floor <= r_max <= counting_upper_bound (violations throw
/// std::logic_error since both bounds are proven).
ExtremalReport tightness_report(int n, int d);

}  // namespace regspan
