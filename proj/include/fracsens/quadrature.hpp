#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "fracsens/special.hpp"

namespace fracsens {

enum class QuadKind { GaussLegendre, GaussJacobi, GaussLogSingular };

/// Nodes/weights on the standard interval [-1,1]. Gauss-Jacobi rules absorb
/// the weight (1-x)^a (1+x)^b.
struct QuadratureRule {
    QuadKind kind = QuadKind::GaussLegendre;
    double a = 0.0, b = 0.0; // Jacobi exponents when kind == GaussJacobi
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }

    template <typename F>
    double integrate(F&& f) const
    {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }

    /// Same rule mapped to [lo,hi]; the Jacobian is folded into the weights.
    /// Only meaningful for weightless kinds.
    QuadratureRule mapped(double lo, double hi) const
    {
        if (lo >= hi) throw std::domain_error("QuadratureRule::mapped: lo >= hi");
        QuadratureRule r = *this;
        double h = 0.5 * (hi - lo), c = 0.5 * (hi + lo);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            r.nodes[i] = c + h * nodes[i];
            r.weights[i] *= h;
        }
        return r;
    }
};

/// eta = 2 (t - lo)/(hi - lo) - 1
inline double affine_map(double t, double lo, double hi)
{
    if (lo >= hi) throw std::domain_error("affine_map: lo >= hi");
    return 2.0 * (t - lo) / (hi - lo) - 1.0;
}

inline double affine_unmap(double eta, double lo, double hi)
{
    if (lo >= hi) throw std::domain_error("affine_unmap: lo >= hi");
    return lo + 0.5 * (eta + 1.0) * (hi - lo);
}

namespace detail {

/// Golub-Welsch from the symmetric tridiagonal of recurrence coefficients.
inline QuadratureRule golub_welsch(int n, double mu0,
                                   const std::vector<double>& alpha,
                                   const std::vector<double>& beta)
{
    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        T(i, i) = alpha[i];
        if (i + 1 < n) {
            double off = std::sqrt(beta[i + 1]);
            T(i, i + 1) = off;
            T(i + 1, i) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

} // namespace detail

inline QuadratureRule gauss_legendre(int n)
{
    if (n < 1) throw std::domain_error("gauss_legendre: n must be >= 1");
    std::vector<double> alpha(n, 0.0), beta(n, 0.0);
    for (int k = 1; k < n; ++k) beta[k] = k * k / (4.0 * k * k - 1.0);
    QuadratureRule r = detail::golub_welsch(n, 2.0, alpha, beta);
    r.kind = QuadKind::GaussLegendre;
    return r;
}

/// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b, a,b > -1.
inline QuadratureRule gauss_jacobi(int n, double a, double b)
{
    if (n < 1) throw std::domain_error("gauss_jacobi: n must be >= 1");
    if (a <= -1.0 || b <= -1.0) throw std::domain_error("gauss_jacobi: parameters must be > -1");
    std::vector<double> alpha(n), beta(n, 0.0);
    double ab = a + b;
    alpha[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        double t = 2.0 * k + ab;
        alpha[k] = (b * b - a * a) / (t * (t + 2.0));
        if (k == 1) // (k+ab) and (t-1) share the factor (1+ab); cancel to survive ab = -1
            beta[k] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else
            beta[k] = 4.0 * k * (k + a) * (k + b) * (k + ab) / (t * t * (t + 1.0) * (t - 1.0));
    }
    double mu0 = std::pow(2.0, ab + 1.0) * std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));
    QuadratureRule r = detail::golub_welsch(n, mu0, alpha, beta);
    r.kind = QuadKind::GaussJacobi;
    r.a = a;
    r.b = b;
    return r;
}

/// Composite Gauss-Legendre on dyadically graded panels accumulating toward
/// one endpoint of [-1,1] (sing_left chooses which). Handles integrable
/// algebraic and log endpoint behavior without bespoke weights.
inline QuadratureRule gauss_log_singular(int pts_per_panel = 16, int levels = 40, bool sing_left = true)
{
    if (pts_per_panel < 1 || levels < 1)
        throw std::domain_error("gauss_log_singular: invalid configuration");
    QuadratureRule base = gauss_legendre(pts_per_panel);
    QuadratureRule r;
    r.kind = QuadKind::GaussLogSingular;
    double len = 2.0;
    for (int l = 0; l < levels; ++l) {
        // panel measured from the singular end: [len/2^{l+1}, len/2^l] (last panel reaches the end)
        double hi_off = len / std::pow(2.0, l);
        double lo_off = (l == levels - 1) ? 0.0 : hi_off * 0.5;
        double lo = sing_left ? -1.0 + lo_off : 1.0 - hi_off;
        double hi = sing_left ? -1.0 + hi_off : 1.0 - lo_off;
        QuadratureRule p = base.mapped(lo, hi);
        r.nodes.insert(r.nodes.end(), p.nodes.begin(), p.nodes.end());
        r.weights.insert(r.weights.end(), p.weights.begin(), p.weights.end());
    }
    if (sing_left) {
        std::vector<double> n2(r.nodes.rbegin(), r.nodes.rend());
        std::vector<double> w2(r.weights.rbegin(), r.weights.rend());
        r.nodes = std::move(n2);
        r.weights = std::move(w2);
    }
    return r;
}

/// Graded composite rule toward both endpoints; for integrands with
/// fractional-power or log behavior at each end (model-error integrals).
inline QuadratureRule gauss_graded_both(int pts_per_panel = 16, int levels = 34)
{
    QuadratureRule base = gauss_legendre(pts_per_panel);
    QuadratureRule r;
    r.kind = QuadKind::GaussLogSingular;
    auto add_half = [&](double from, double to, bool toward_from) {
        // grade panels of [from,to] toward 'from' (or 'to')
        double len = to - from;
        for (int l = 0; l < levels; ++l) {
            double hi_off = len / std::pow(2.0, l);
            double lo_off = (l == levels - 1) ? 0.0 : hi_off * 0.5;
            double lo = toward_from ? from + lo_off : to - hi_off;
            double hi = toward_from ? from + hi_off : to - lo_off;
            QuadratureRule p = base.mapped(lo, hi);
            r.nodes.insert(r.nodes.end(), p.nodes.begin(), p.nodes.end());
            r.weights.insert(r.weights.end(), p.weights.begin(), p.weights.end());
        }
    };
    add_half(-1.0, 0.0, true);
    add_half(0.0, 1.0, false);
    return r;
}

inline QuadratureRule gauss_rule(QuadKind kind, int n, double a = 0.0, double b = 0.0)
{
    switch (kind) {
        case QuadKind::GaussLegendre: return gauss_legendre(n);
        case QuadKind::GaussJacobi: return gauss_jacobi(n, a, b);
        case QuadKind::GaussLogSingular: return gauss_log_singular(n);
    }
    throw std::invalid_argument("gauss_rule: unsupported kind");
}

} // namespace fracsens
