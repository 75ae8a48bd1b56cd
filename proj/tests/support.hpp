// SPDX-License-Identifier: Apache-2.0
#pragma once

// Test-only generators and independent oracles. Nothing here calls the
// library routine it is used to check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <random>
#include <vector>

#include "cusp/jet.hpp"

namespace cusp::testing {

using Poly = std::vector<Complex>;

inline Complex random_in_disk(std::mt19937_64& rng, double radius = 1.0)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = radius * std::sqrt(u(rng));
    const double t = 2.0 * std::numbers::pi * u(rng);
    return std::polar(r, t);
}

inline Complex random_unimodular(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
    return std::polar(1.0, u(rng));
}

inline Jet random_jet(std::mt19937_64& rng, std::size_t truncation, double radius = 1.0)
{
    CVector c(truncation + 1);
    for (auto& x : c) {
        x = random_in_disk(rng, radius);
    }
    return Jet(std::move(c));
}

// Full (untruncated) polynomial product.
inline Poly poly_product(const Poly& a, const Poly& b)
{
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

inline Poly poly_power(const Poly& a, std::size_t k)
{
    Poly out{1.0};
    for (std::size_t i = 0; i < k; ++i) {
        out = poly_product(out, a);
    }
    return out;
}

inline Poly as_poly(const Jet& j) { return Poly(j.coeffs().begin(), j.coeffs().end()); }

inline Jet truncate_poly(const Poly& p, std::size_t truncation)
{
    CVector c(truncation + 1);
    for (std::size_t k = 0; k < c.size() && k < p.size(); ++k) {
        c[k] = p[k];
    }
    return Jet(std::move(c));
}

// g∘psi by expanding sum_k g_k psi^k as exact polynomials, then truncating.
inline Jet oracle_compose(const Jet& g, const Jet& psi)
{
    Poly acc{0.0};
    const Poly p = as_poly(psi);
    for (std::size_t k = 0; k <= g.truncation(); ++k) {
        Poly term = poly_power(p, k);
        for (auto& c : term) {
            c *= g[k];
        }
        if (term.size() > acc.size()) {
            acc.resize(term.size());
        }
        for (std::size_t i = 0; i < term.size(); ++i) {
            acc[i] += term[i];
        }
    }
    return truncate_poly(acc, g.truncation());
}

inline Jet oracle_mul(const Jet& a, const Jet& b)
{
    return truncate_poly(poly_product(as_poly(a), as_poly(b)), a.truncation());
}

// e^q = e^{q0} sum_k (q - q0)^k / k!, exact through the truncation.
inline Jet oracle_exp(const Jet& q)
{
    Poly shifted = as_poly(q);
    const Complex q0 = shifted[0];
    shifted[0] = 0.0;
    Poly acc(q.truncation() + 1);
    double factorial = 1.0;
    for (std::size_t k = 0; k <= q.truncation(); ++k) {
        if (k > 0) {
            factorial *= static_cast<double>(k);
        }
        const Poly term = poly_power(shifted, k);
        for (std::size_t i = 0; i < acc.size() && i < term.size(); ++i) {
            acc[i] += term[i] / factorial;
        }
    }
    for (auto& c : acc) {
        c *= std::exp(q0);
    }
    return Jet(std::move(acc));
}

inline double factorial(std::size_t n)
{
    double f = 1.0;
    for (std::size_t i = 2; i <= n; ++i) {
        f *= static_cast<double>(i);
    }
    return f;
}

inline double binomial(std::size_t n, std::size_t k)
{
    return factorial(n) / (factorial(k) * factorial(n - k));
}

// Incomplete Bell polynomials B_{n,k}(x_1, .., x_{n-k+1}) by the standard
// recurrence; x[i] is the i-th derivative of the inner function (x[0]
// unused).
inline std::vector<std::vector<Complex>> bell_table(const std::vector<Complex>& x, std::size_t nmax)
{
    std::vector<std::vector<Complex>> b(nmax + 1, std::vector<Complex>(nmax + 1));
    b[0][0] = 1.0;
    for (std::size_t n = 1; n <= nmax; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            Complex s = 0.0;
            for (std::size_t i = 1; i + k - 1 <= n; ++i) {
                s += binomial(n - 1, i - 1) * x[i] * b[n - i][k - 1];
            }
            b[n][k] = s;
        }
    }
    return b;
}

// Faa di Bruno pushforward in the derivative basis: a'_k = sum_n a_n B_{n,k}.
inline std::vector<Complex> oracle_pushforward_derivative(const std::vector<Complex>& a, const Jet& psi)
{
    const std::size_t nmax = a.size() - 1;
    std::vector<Complex> x(nmax + 1);
    for (std::size_t i = 1; i <= nmax; ++i) {
        x[i] = psi.coeff(i) * factorial(i);
    }
    const auto b = bell_table(x, nmax);
    std::vector<Complex> out(nmax + 1);
    out[0] = a[0];
    for (std::size_t k = 1; k <= nmax; ++k) {
        for (std::size_t n = k; n <= nmax; ++n) {
            out[k] += a[n] * b[n][k];
        }
    }
    return out;
}

inline double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

} // namespace cusp::testing
