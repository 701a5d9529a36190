#include "regspan/extremal.hpp"

#include <cmath>
#include <sstream>

#include "regspan/certificate.hpp"
#include "regspan/factor.hpp"
#include "regspan/generators.hpp"

namespace regspan {

ExtremalParams derive_params(int n, int d) {
    if (n < 1) throw std::invalid_argument("derive_params: n must be positive");
    if (2LL * d <= n) throw std::domain_error("derive_params: requires min-degree ratio > 1/2 (2d > n)");
    if (d >= n) throw std::domain_error("derive_params: requires min-degree ratio < 1 (d < n)");

    const long long m = static_cast<long long>(n) * (2LL * d - n);
    const long long s = isqrt(m);
    // ceil((n - sqrt(m)) / 2) = ceil((n - isqrt(m)) / 2), exact across the
    // parity and perfect-square cases.
    const int gl = static_cast<int>((n - s) / 2 + (n - s) % 2);

    if (!(gl < d && d < n - gl)) {
        std::ostringstream msg;
        msg << "extremal construction infeasible for n=" << n << ", d=" << d
            << ": needs gl < d < n - gl with gl=" << gl << " (n too small for this ratio)";
        throw InfeasibleConstruction(msg.str());
    }

    const int core_degree = d - gl;
    const long long spare = n - 2LL * gl;  // > 0 given gl < d < n - gl
    const int upper_bound = static_cast<int>(static_cast<long long>(n - gl) * (d - gl) / spare);

    const double delta = static_cast<double>(d) / n;
    const double gamma_prime = (1.0 - std::sqrt(2.0 * delta - 1.0)) / 2.0;
    const double p_prime = (delta + gamma_prime - 1.0) / (2.0 * gamma_prime - 1.0);
    const double gamma = static_cast<double>(gl) / n;
    const double p_tilde = (delta + gamma - 1.0) / (2.0 * gamma - 1.0);
    // ceil(p_tilde * (1 - gamma) * n) = ceil((n-d-gl)(n-gl) / (n-2gl)), taken
    // in integers so float noise cannot flip the ceiling.
    const long long removed_num = static_cast<long long>(n - d - gl) * (n - gl);
    const long long removed = (removed_num + spare - 1) / spare;
    const double p_zero = static_cast<double>(removed) / (n - gl);
    const double predicted_degree = (1.0 - p_zero) * (n - gl);

    return {n, d, gl, core_degree, upper_bound, gamma_prime, p_prime, p_tilde, p_zero,
            predicted_degree};
}

BipartiteGraph build_extremal(int n, int d) {
    const ExtremalParams params = derive_params(n, d);
    const int gl = params.gl;
    const int ne = n - gl;
    BipartiteGraph g(n);
    // A_l x B_e and A_e x B_l complete, nothing inside A_l x B_l.
    for (int a = 0; a < gl; ++a) {
        for (int b = gl; b < n; ++b) g.add_edge(a, b);
    }
    for (int b = 0; b < gl; ++b) {
        for (int a = gl; a < n; ++a) g.add_edge(a, b);
    }
    // Circulant core_degree-regular core on A_e x B_e.
    for (int i = 0; i < ne; ++i) {
        for (int t = 0; t < params.core_degree; ++t) {
            g.add_edge(gl + i, gl + (i + t) % ne);
        }
    }
    return g;
}

int counting_upper_bound(const ExtremalParams& params) {
    const long long spare = params.n - 2LL * params.gl;
    return static_cast<int>(static_cast<long long>(params.n - params.gl) *
                            (params.d - params.gl) / spare);
}

ExtremalReport tightness_report(int n, int d) {
    const ExtremalParams params = derive_params(n, d);
    const BipartiteGraph g = build_extremal(n, d);
    const int r_max = max_regular_degree(g);
    const int lo = rho_floor(n, d);
    const int hi = rho_ceil(n, d);
    const int ub = counting_upper_bound(params);
    if (r_max < lo) {
        throw std::logic_error("tightness_report: maximum regular degree fell below the guaranteed floor");
    }
    if (r_max > ub) {
        throw std::logic_error("tightness_report: maximum regular degree exceeds the counting bound");
    }
    return {n, d, r_max, lo, hi, ub, lo <= r_max && r_max <= hi};
}

}  // namespace regspan
