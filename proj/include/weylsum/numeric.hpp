#ifndef WEYLSUM_NUMERIC_HPP
#define WEYLSUM_NUMERIC_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "weylsum/errors.hpp"

namespace weylsum {

// Numeric kernels shared by the analytic modules. Everything is templated on
// the floating type so the CLI can switch between double and long double.

template <typename Real>
constexpr Real pi_v() { return static_cast<Real>(3.14159265358979323846264338327950288L); }

// ---------------------------------------------------------------------------
// Lanczos gamma (g = 7, n = 9), complex argument.
// ---------------------------------------------------------------------------
template <typename Real>
std::complex<Real> gamma_complex(std::complex<Real> z) {
    static const long double g = 7.0L;
    static const long double c[9] = {
        0.99999999999980993227684700473478L,
        676.520368121885098567009190444019L,
        -1259.13921672240287047156078755283L,
        771.3234287776530788486528258894L,
        -176.61502916214059906584551354L,
        12.507343278686904814458936853L,
        -0.13857109526572011689554707L,
        9.984369578019570859563e-6L,
        1.50563273514931155834e-7L};
    const Real pi = pi_v<Real>();
    if (z.real() < Real(0.5)) {
        // reflection
        std::complex<Real> s = std::sin(pi * z);
        return pi / (s * gamma_complex(std::complex<Real>(1) - z));
    }
    z -= Real(1);
    std::complex<Real> x(static_cast<Real>(c[0]), 0);
    for (int i = 1; i < 9; ++i) x += static_cast<Real>(c[i]) / (z + static_cast<Real>(i));
    std::complex<Real> t = z + static_cast<Real>(g) + Real(0.5);
    return std::sqrt(Real(2) * pi) * std::pow(t, z + Real(0.5)) * std::exp(-t) * x;
}

// ---------------------------------------------------------------------------
// Upper incomplete gamma Gamma(a, x) for real a (any sign), x > 0.
// ---------------------------------------------------------------------------
template <typename Real>
Real upper_gamma(Real a, Real x) {
    if (!(x > 0)) throw QuadratureNotConverged("upper_gamma: x must be positive");
    if (a < Real(0.5)) {
        // raise a with Gamma(a,x) = (Gamma(a+1,x) - x^a e^-x)/a
        Real ax = upper_gamma(a + 1, x);
        return (ax - std::pow(x, a) * std::exp(-x)) / a;
    }
    if (x > a + 1) {
        // Lentz continued fraction for Gamma(a,x)
        const Real tiny = std::numeric_limits<Real>::min() * 16;
        Real b = x + 1 - a, C = 1 / tiny, D = 1 / b, h = D;
        for (int i = 1; i < 400; ++i) {
            Real an = -static_cast<Real>(i) * (static_cast<Real>(i) - a);
            b += 2;
            D = an * D + b;
            if (std::fabs(D) < tiny) D = tiny;
            C = b + an / C;
            if (std::fabs(C) < tiny) C = tiny;
            D = 1 / D;
            Real del = D * C;
            h *= del;
            if (std::fabs(del - 1) < std::numeric_limits<Real>::epsilon()) break;
        }
        return std::exp(-x + a * std::log(x)) * h;
    }
    // series for lower incomplete gamma
    Real sum = 1 / a, term = sum;
    for (int n = 1; n < 500; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * std::numeric_limits<Real>::epsilon()) break;
    }
    Real lower = sum * std::exp(-x + a * std::log(x));
    return std::tgamma(static_cast<double>(a)) - lower;
}

// ---------------------------------------------------------------------------
// Hurwitz zeta via Euler-Maclaurin; complex s (s != 1), real a > 0.
// ---------------------------------------------------------------------------
template <typename Real>
std::complex<Real> hurwitz_zeta(std::complex<Real> s, Real a) {
    using C = std::complex<Real>;
    static const long double bern[] = {
        1.0L / 6, -1.0L / 30, 1.0L / 42, -1.0L / 30, 5.0L / 66, -691.0L / 2730,
        7.0L / 6, -3617.0L / 510, 43867.0L / 798, -174611.0L / 330,
        854513.0L / 138, -236364091.0L / 2730};
    const int N = 24, J = 12;
    C sum(0);
    for (int k = 0; k < N; ++k) sum += std::pow(C(a + k, 0), -s);
    Real q = a + N;
    C qs = std::pow(C(q, 0), -s);
    sum += qs * q / (s - C(1)) + qs / Real(2);
    // correction terms: B_2j / (2j)! * (s)_(2j-1) * q^(-s-2j+1)
    C fact = s * qs / q;           // (s)_1 * q^(-s-1)
    Real fac2 = Real(2);           // (2j)!
    for (int j = 1; j <= J; ++j) {
        sum += static_cast<Real>(bern[j - 1]) / fac2 * fact * q;
        if (j < J) {
            fact *= (s + Real(2 * j - 1)) * (s + Real(2 * j)) / (q * q);
            fac2 *= Real(2 * j + 1) * Real(2 * j + 2);
        }
    }
    return sum;
}

template <typename Real>
std::complex<Real> riemann_zeta(std::complex<Real> s) {
    return hurwitz_zeta<Real>(s, Real(1));
}

inline double riemann_zeta_d(double s) { return riemann_zeta<double>({s, 0.0}).real(); }

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes/weights on [-1, 1].
// ---------------------------------------------------------------------------
template <typename Real>
void gauss_legendre(int n, std::vector<Real>& nodes, std::vector<Real>& weights) {
    nodes.resize(n);
    weights.resize(n);
    const Real pi = pi_v<Real>();
    for (int i = 0; i < (n + 1) / 2; ++i) {
        Real x = std::cos(pi * (i + Real(0.75)) / (n + Real(0.5)));
        Real pp = 0;
        for (int it = 0; it < 100; ++it) {
            Real p0 = 1, p1 = 0;
            for (int j = 0; j < n; ++j) {
                Real p2 = p1;
                p1 = p0;
                p0 = ((2 * j + 1) * x * p1 - j * p2) / (j + 1);
            }
            pp = n * (x * p0 - p1) / (x * x - 1);
            Real dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < std::numeric_limits<Real>::epsilon() * 4) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = Real(2) / ((1 - x * x) * pp * pp);
    }
}

// Integrate f over [lo, hi] with GL panels, doubling order until stable.
template <typename Real, typename F>
std::complex<Real> integrate_adaptive(F&& f, Real lo, Real hi, Real tol, int max_order = 2048) {
    std::complex<Real> prev(0);
    bool have_prev = false;
    for (int n = 32; n <= max_order; n *= 2) {
        std::vector<Real> xs, ws;
        gauss_legendre<Real>(n, xs, ws);
        std::complex<Real> acc(0);
        Real mid = (lo + hi) / 2, half = (hi - lo) / 2;
        for (int i = 0; i < n; ++i) acc += ws[i] * f(mid + half * xs[i]);
        acc *= half;
        if (have_prev && std::abs(acc - prev) <= tol * (1 + std::abs(acc))) return acc;
        prev = acc;
        have_prev = true;
    }
    throw QuadratureNotConverged("integrate_adaptive: did not stabilize");
}

// Deterministic pairwise summation of an indexed series.
template <typename Real, typename F>
Real pairwise_sum(std::size_t n, F&& term) {
    if (n == 0) return Real(0);
    if (n <= 8) {
        Real s = 0;
        for (std::size_t i = 0; i < n; ++i) s += term(i);
        return s;
    }
    std::size_t h = n / 2;
    return pairwise_sum<Real>(h, term) +
           pairwise_sum<Real>(n - h, [&](std::size_t i) { return term(h + i); });
}

} // namespace weylsum

#endif
