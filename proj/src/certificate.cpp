#include "regspan/certificate.hpp"

#include <cmath>
#include <limits>

namespace regspan {

CertificateInstance::CertificateInstance(int n_, int d_, int r_) : n(n_), d(d_), r(r_) {
    if (n < 1) throw std::invalid_argument("CertificateInstance: n must be positive");
    if (!(0 <= r && r <= d && d <= n)) {
        throw std::invalid_argument("CertificateInstance: requires 0 <= r <= d <= n");
    }
}

CertificateFailure::CertificateFailure(const std::string& what, int i_, int j_)
    : std::runtime_error(what), i(i_), j(j_) {}

long long isqrt(long long m) {
    if (m < 0) throw std::invalid_argument("isqrt: negative argument");
    auto s = static_cast<long long>(std::sqrt(static_cast<double>(m)));
    while (s > 0 && s * s > m) --s;
    while ((s + 1) * (s + 1) <= m) ++s;
    return s;
}

namespace {

long long scaled_root_arg(int n, int d) {
    if (n < 1) throw std::invalid_argument("rho bounds: n must be positive");
    if (d < 0 || d > n) throw std::invalid_argument("rho bounds: d must be in [0, n]");
    if (2LL * d < n) throw std::domain_error("rho bounds: requires min-degree ratio >= 1/2 (2d >= n)");
    return static_cast<long long>(n) * (2LL * d - n);
}

}  // namespace

int rho_floor(int n, int d) {
    const long long m = scaled_root_arg(n, d);
    return static_cast<int>((d + isqrt(m)) / 2);
}

int rho_ceil(int n, int d) {
    const long long m = scaled_root_arg(n, d);
    const long long s = isqrt(m);
    if (s * s == m) return static_cast<int>((d + s + 1) / 2);
    // Non-square m: sqrt(m) is irrational, so (d + sqrt(m))/2 is never an integer.
    return static_cast<int>((d + s) / 2) + 1;
}

long long discriminant_scaled(const CertificateInstance& c) {
    const long long n = c.n, d = c.d, r = c.r;
    return 4 * r * r - 4 * d * r + d * d - 2 * d * n + n * n;
}

long long p_poly_scaled(const CertificateInstance& c, int i) {
    if (i < 0 || i > c.n) throw std::invalid_argument("p_poly_scaled: i must be in [0, n]");
    const long long n = c.n, d = c.d, r = c.r, x = i;
    return x * x + (d - 2 * r - n) * x + r * n;
}

long long g_scaled(const CertificateInstance& c, int i, int j) {
    if (i < 0 || i > c.n || j < 0 || j > c.n) {
        throw std::invalid_argument("g_scaled: point must lie in [0, n]^2");
    }
    const long long n = c.n, d = c.d, r = c.r;
    return j * (d + i - n) - r * (static_cast<long long>(i) + j - n);
}

GridVerdict grid_check(const CertificateInstance& c) {
    const long long n = c.n, d = c.d, r = c.r;
    long long min_margin = std::numeric_limits<long long>::max();
    std::optional<std::pair<int, int>> first_fail;
    for (long long i = 0; i <= n; ++i) {
        // Row i, incremental in j: lhs = r*(i+j-n), t1 = i*(d+j-n), t2 = j*(d+i-n).
        long long lhs = r * (i - n);
        long long t1 = i * (d - n);
        long long t2 = 0;
        const long long t2_step = d + i - n;
        for (long long j = 0; j <= n; ++j) {
            long long rhs = t1 > t2 ? t1 : t2;
            if (rhs < 0) rhs = 0;
            const long long margin = rhs - lhs;
            if (margin < min_margin) {
                min_margin = margin;
            }
            if (margin < 0 && !first_fail) {
                first_fail = {static_cast<int>(i), static_cast<int>(j)};
            }
            lhs += r;
            t1 += i;
            t2 += t2_step;
        }
    }
    return {!first_fail.has_value(), first_fail, min_margin};
}

CertificateInstance theorem_certificate(int n, int d) {
    const CertificateInstance c(n, d, rho_floor(n, d));
    if (2 * d == n && n % 4 == 2) {
        // The discriminant is genuinely positive here; the diagonal quadratic
        // is certified directly instead, nonnegative at every grid abscissa.
        for (int i = 0; i <= n; ++i) {
            if (p_poly_scaled(c, i) < 0) {
                throw CertificateFailure("certificate failed: diagonal quadratic negative at grid point", i, -1);
            }
        }
    } else {
        if (discriminant_scaled(c) > 0) {
            throw CertificateFailure("certificate failed: positive discriminant", -1, -1);
        }
    }
    const GridVerdict verdict = grid_check(c);
    if (!verdict.passed) {
        throw CertificateFailure("certificate failed: grid scan found a violating point",
                                 verdict.failing_point->first, verdict.failing_point->second);
    }
    return c;
}

}  // namespace regspan
