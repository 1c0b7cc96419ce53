#pragma once

// Test-only reference evaluators, independent of the library's operator
// implementations.

#include <cmath>
#include <functional>
#include <vector>

#include "fracsens/quadrature.hpp"

namespace oracles {

// W(x) = 1/Gamma(n-s) int_a^x u(s) (x-s)^{n-s-1} ds, evaluated by panels
// graded toward s = x. This is the raw RL integral before differentiation.
inline double rl_integral(const std::function<double(double)>& u, double s, int n,
                          double a, double x)
{
    double L = x - a;
    double total = 0.0;
    fracsens::QuadratureRule base = fracsens::gauss_legendre(24);
    double hi = L;
    for (int l = 0; l < 48; ++l) {
        double lo = (l == 47) ? 0.0 : hi * 0.5;
        if (lo == 0.0) {
            // last sliver: freeze u at s = x and use the exact moment
            double g0 = u(x);
            total += g0 * std::pow(hi, n - s) / (n - s);
        } else {
            fracsens::QuadratureRule p = base.mapped(lo, hi);
            for (std::size_t i = 0; i < p.size(); ++i)
                total += p.weights[i] * u(x - p.nodes[i]) * std::pow(p.nodes[i], n - s - 1.0);
        }
        hi = lo;
    }
    return total / std::tgamma(n - s);
}

// RL derivative by numerically differentiating the RL integral (Richardson
// on central differences). Deliberately the route the library avoids.
inline double rl_deriv_naive(const std::function<double(double)>& u, double sigma,
                             double a, double x)
{
    int n = (sigma < 1.0) ? 1 : 2;
    auto W = [&](double z) { return rl_integral(u, sigma, n, a, z); };
    double h = 1e-3;
    auto diff = [&](double hh) {
        if (n == 1) return (W(x + hh) - W(x - hh)) / (2.0 * hh);
        return (W(x + hh) - 2.0 * W(x) + W(x - hh)) / (hh * hh);
    };
    double d1 = diff(h), d2 = diff(h / 2.0);
    return (4.0 * d2 - d1) / 3.0;
}

// Caputo-form integral by trapezoid refinement after the substitution
// w = (x-s)^{1-s_frac} that removes the kernel singularity.
inline double caputo_trapezoid(const std::function<double(double)>& du, double sigma,
                               double a, double x)
{
    double p = 1.0 - sigma;
    double W = std::pow(x - a, p);
    auto g = [&](double w) { return du(x - std::pow(w, 1.0 / p)); };
    double prev = 0.0;
    int n = 64;
    double result = 0.0;
    for (int ref = 0; ref < 14; ++ref) {
        double h = W / n;
        double s = 0.5 * (g(1e-300) + g(W));
        for (int i = 1; i < n; ++i) s += g(i * h);
        result = s * h / p / std::tgamma(1.0 - sigma);
        if (ref > 2 && std::abs(result - prev) < 1e-9 * std::max(1.0, std::abs(result))) break;
        prev = result;
        n *= 2;
    }
    return result;
}

// L2 norm of f over [lo,hi] with panels graded toward both endpoints.
inline double l2_norm_graded(const std::function<double(double)>& f, double lo, double hi)
{
    fracsens::QuadratureRule r = fracsens::gauss_graded_both(16, 34).mapped(-1.0, 1.0);
    double s = 0.0;
    double h = 0.5 * (hi - lo), c = 0.5 * (hi + lo);
    for (std::size_t i = 0; i < r.size(); ++i) {
        double x = c + h * r.nodes[i];
        double v = f(x);
        s += h * r.weights[i] * v * v;
    }
    return std::sqrt(s);
}

} // namespace oracles
