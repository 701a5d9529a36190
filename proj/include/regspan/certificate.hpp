#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace regspan {

/// Integer triple (n, d, r) standing for the normalized pair delta = d/n,
/// rho = r/n. Every check on it runs in exact integer arithmetic on
/// n^2-scaled quantities; tightness makes several of them exactly zero, so
/// floating point is never allowed to decide a verdict.
struct CertificateInstance {
    int n;
    int d;
    int r;

    CertificateInstance(int n, int d, int r);  // requires 0 <= r <= d <= n
};

/// Result of the exhaustive grid scan. `margin` is the minimum of RHS - LHS
/// in n^2-scaled units over all (n+1)^2 grid points; `failing_point` is the
/// lexicographically smallest violating (i, j) when the scan fails.
struct GridVerdict {
    bool passed;
    std::optional<std::pair<int, int>> failing_point;
    long long margin;
};

/// Raised by theorem_certificate when one of its internal checks fails;
/// carries the failing grid point (i, j), with j = -1 for the polynomial
/// route and (-1, -1) for the discriminant route.
struct CertificateFailure : std::runtime_error {
    CertificateFailure(const std::string& what, int i, int j);
    int i;
    int j;
};

/// Integer square root: largest s with s*s <= m. Exact for all m >= 0.
long long isqrt(long long m);

/// floor(n * (d/n + sqrt(2*d/n - 1)) / 2), computed exactly as
/// floor((d + isqrt(n*(2d - n))) / 2). Requires 2d >= n (std::domain_error
/// otherwise). Replacing the square root by its integer part preserves the
/// floor across both parity cases.
int rho_floor(int n, int d);

/// Matching exact ceiling; when n*(2d - n) is not a perfect square the value
/// is irrational, so the ceiling is rho_floor + 1.
int rho_ceil(int n, int d);

/// n^2 * dcr(r/n) = 4r^2 - 4dr + d^2 - 2dn + n^2, the scaled discriminant of
/// the diagonal quadratic. Nonpositive iff that quadratic never goes negative.
long long discriminant_scaled(const CertificateInstance& c);

/// n^2 * p(i/n) = i^2 + (d - 2r - n)*i + r*n, the scaled diagonal quadratic.
/// Requires 0 <= i <= n.
long long p_poly_scaled(const CertificateInstance& c, int i);

/// n^2 * g(i/n, j/n) = j*(d + i - n) - r*(i + j - n). Requires 0 <= i, j <= n.
long long g_scaled(const CertificateInstance& c, int i, int j);

/// Scans every grid point (i, j) in {0..n}^2 and checks
///   r*(i + j - n) <= max(0, i*(d + j - n), j*(d + i - n)).
/// A pass implies that every balanced bipartite graph on 2n vertices with
/// min degree >= d has an r-regular spanning subgraph (the RHS is a lower
/// bound on e(X, Y) for |X| = i, |Y| = j, and the inequality is exactly the
/// Gale-Ryser subset condition for constant f = r).
GridVerdict grid_check(const CertificateInstance& c);

/// Builds (n, d, rho_floor(n, d)) and verifies the full certificate chain:
/// the grid scan, plus discriminant_scaled <= 0 -- except when 2d = n with
/// n = 2 (mod 4), where the discriminant is genuinely positive and the
/// substitute check is p_poly_scaled >= 0 at every grid i. Throws
/// CertificateFailure if any check fails (which would mean a bug, not a
/// property of any particular graph).
CertificateInstance theorem_certificate(int n, int d);

}  // namespace regspan
