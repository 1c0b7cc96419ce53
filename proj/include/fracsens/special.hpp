#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/digamma.hpp>

namespace fracsens {

inline double digamma(double x) { return boost::math::digamma(x); }

/// Gamma(num)/Gamma(den). Uses log-gamma when both arguments are positive,
/// plain tgamma otherwise (negative non-integer arguments occur for orders
/// in (1,2), e.g. Gamma(1-sigma)).
inline double gamma_ratio(double num, double den)
{
    if (num > 0.0 && den > 0.0)
        return std::exp(std::lgamma(num) - std::lgamma(den));
    return std::tgamma(num) / std::tgamma(den);
}

/// Legendre polynomial P_n(x) by the three-term recurrence.
inline double legendre_eval(int n, double x)
{
    if (n < 0) throw std::domain_error("legendre_eval: n must be >= 0");
    if (std::abs(x) > 1.0 + 1e-14)
        throw std::domain_error("legendre_eval: |x| > 1");
    if (n == 0) return 1.0;
    double pm1 = 1.0, p = x;
    for (int k = 1; k < n; ++k) {
        double pn = ((2.0 * k + 1.0) * x * p - k * pm1) / (k + 1.0);
        pm1 = p;
        p = pn;
    }
    return p;
}

/// d/dx P_n(x) via the bound-derivative relation (1-x^2) P_n' = n(P_{n-1} - x P_n).
inline double legendre_deriv(int n, double x)
{
    if (n == 0) return 0.0;
    if (std::abs(std::abs(x) - 1.0) < 1e-12) {
        double endp = 0.5 * n * (n + 1.0);
        if (x > 0) return endp;
        return (n % 2 == 0) ? -endp : endp;
    }
    return n * (legendre_eval(n - 1, x) - x * legendre_eval(n, x)) / (1.0 - x * x);
}

/// Jacobi polynomial P_n^{a,b}(x), a,b > -1, by recurrence.
inline double jacobi_eval(double a, double b, int n, double x)
{
    if (a <= -1.0 || b <= -1.0)
        throw std::domain_error("jacobi_eval: parameters must be > -1");
    if (n < 0) throw std::domain_error("jacobi_eval: n must be >= 0");
    if (n == 0) return 1.0;
    double p0 = 1.0;
    double p1 = 0.5 * ((a + b + 2.0) * x + (a - b));
    for (int k = 1; k < n; ++k) {
        // standard recurrence: a1 P_{k+1} = (a2 + a3 x) P_k - a4 P_{k-1}
        double t = 2.0 * k + a + b;
        double a1 = 2.0 * (k + 1.0) * (k + a + b + 1.0) * t;
        double a2 = (t + 1.0) * (a * a - b * b);
        double a3 = t * (t + 1.0) * (t + 2.0);
        double a4 = 2.0 * (k + a) * (k + b) * (t + 2.0);
        double p2 = ((a2 + a3 * x) * p1 - a4 * p0) / a1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

// Temporal bases: Jacobi poly-fractonomials of first/second kind.
// Normalization sigma_n = 1 (any nonzero constant only rescales the
// expansion coefficients).

/// First kind, psi_n^tau(eta) = (1+eta)^tau P_{n-1}^{-tau,tau}(eta); vanishes at eta = -1.
inline double polyfrac_first(int n, double tau, double eta)
{
    if (n < 1) throw std::domain_error("polyfrac_first: n must be >= 1");
    if (tau <= 0.0 || tau >= 1.0)
        throw std::domain_error("polyfrac_first: tau must be in (0,1)");
    if (eta <= -1.0) return 0.0;
    return std::pow(1.0 + eta, tau) * jacobi_eval(-tau, tau, n - 1, eta);
}

/// Second kind, (1-eta)^tau P_{k-1}^{tau,-tau}(eta); vanishes at eta = +1.
inline double polyfrac_second(int k, double tau, double eta)
{
    if (k < 1) throw std::domain_error("polyfrac_second: k must be >= 1");
    if (tau <= 0.0 || tau >= 1.0)
        throw std::domain_error("polyfrac_second: tau must be in (0,1)");
    if (eta >= 1.0) return 0.0;
    return std::pow(1.0 - eta, tau) * jacobi_eval(tau, -tau, k - 1, eta);
}

inline double spatial_sigma(int m) { return 2.0 + ((m % 2 == 0) ? 1.0 : -1.0); }
inline double spatial_sigma_test(int r) { return 2.0 * ((r % 2 == 0) ? 1.0 : -1.0) + 1.0; }

/// Spatial basis phi_m(xi) = sigma_m (P_{m+1} - P_{m-1}); vanishes at xi = +-1.
inline double spatial_basis(int m, double xi)
{
    if (m < 1) throw std::domain_error("spatial_basis: m must be >= 1");
    return spatial_sigma(m) * (legendre_eval(m + 1, xi) - legendre_eval(m - 1, xi));
}

/// Spatial test function Phi_r(xi) = sigma~_r (P_{r+1} - P_{r-1}).
inline double spatial_test(int r, double xi)
{
    if (r < 1) throw std::domain_error("spatial_test: r must be >= 1");
    return spatial_sigma_test(r) * (legendre_eval(r + 1, xi) - legendre_eval(r - 1, xi));
}

inline double spatial_basis_deriv(int m, double xi)
{
    return spatial_sigma(m) * (legendre_deriv(m + 1, xi) - legendre_deriv(m - 1, xi));
}

inline double spatial_test_deriv(int r, double xi)
{
    return spatial_sigma_test(r) * (legendre_deriv(r + 1, xi) - legendre_deriv(r - 1, xi));
}

// ---------------------------------------------------------------------------
// Monomial expansions about the left endpoint. These back the closed-form
// fractional and Log-Pow derivatives of the discrete bases. Coefficients
// grow binomially, so they are reliable for degrees up to ~20 (desk scale).

/// P_n(x) = sum_k c_k (1+x)^k.
inline std::vector<double> legendre_monomials(int n)
{
    // P_n(x) = sum_k (-1)^{n+k} C(n,k) C(n+k,k) ((1+x)/2)^k
    std::vector<double> c(n + 1);
    double binom_nk = 1.0, binom_nkk = 1.0; // C(n,0), C(n+0,0)
    for (int k = 0; k <= n; ++k) {
        double sign = ((n + k) % 2 == 0) ? 1.0 : -1.0;
        c[k] = sign * binom_nk * binom_nkk / std::pow(2.0, k);
        binom_nk *= double(n - k) / double(k + 1);
        binom_nkk *= double(n + k + 1) / double(k + 1);
    }
    return c;
}

/// P_{n}^{-tau,tau}(eta) = sum_m q_m (1+eta)^m  (expansion used by the
/// first-kind poly-fractonomials).
inline std::vector<double> jacobi_mt_monomials(int n, double tau)
{
    std::vector<double> q(n + 1);
    double pref = std::exp(std::lgamma(tau + n + 1.0) - std::lgamma(n + 1.0) - std::lgamma(n + 1.0));
    for (int m = 0; m <= n; ++m) {
        double sign = ((n + m) % 2 == 0) ? 1.0 : -1.0;
        double term = std::exp(std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - std::lgamma(n - m + 1.0)
                               + std::lgamma(n + m + 1.0) - std::lgamma(tau + m + 1.0));
        q[m] = sign * pref * term / std::pow(2.0, m);
    }
    return q;
}

} // namespace fracsens
