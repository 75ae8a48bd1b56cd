// SPDX-License-Identifier: Apache-2.0
#include "cusp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cusp/error.hpp"

namespace cusp {

namespace {

constexpr int kMaxIterations = 1000;

CVector trimmed(const CVector& coeffs)
{
    double largest = 0.0;
    for (const auto& c : coeffs) {
        largest = std::max(largest, std::abs(c));
    }
    CVector out = coeffs;
    while (!out.empty() && std::abs(out.back()) <= 1e-14 * largest) {
        out.pop_back();
    }
    return out;
}

// p(z) and p'(z) together.
std::pair<Complex, Complex> eval_with_derivative(const CVector& c, Complex z)
{
    Complex p = 0.0;
    Complex dp = 0.0;
    for (std::size_t k = c.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
    return {p, dp};
}

} // namespace

Complex poly_eval(const CVector& coeffs, Complex z)
{
    Complex p = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        p = p * z + coeffs[k];
    }
    return p;
}

double relative_residual(const CVector& coeffs, Complex r)
{
    double scale = 0.0;
    double power = 1.0;
    const double modulus = std::abs(r);
    for (const auto& c : coeffs) {
        scale += std::abs(c) * power;
        power *= modulus;
    }
    if (scale == 0.0) {
        return 0.0;
    }
    return std::abs(poly_eval(coeffs, r)) / scale;
}

std::vector<Complex> polynomial_roots(const CVector& coeffs)
{
    CVector c = trimmed(coeffs);
    if (c.empty()) {
        throw Error(Errc::invalid_argument, "polynomial_roots: zero polynomial");
    }
    std::vector<Complex> roots;
    // Exact zeros at the origin.
    std::size_t shift = 0;
    while (shift + 1 < c.size() && c[shift] == Complex{}) {
        ++shift;
    }
    roots.assign(shift, Complex{});
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(shift));
    const std::size_t degree = c.size() - 1;
    if (degree == 0) {
        return roots;
    }

    // Initial guesses on a circle of geometric-mean radius, rotated off the
    // real axis to avoid symmetric stalls.
    const double radius = std::pow(std::abs(c.front()) / std::abs(c.back()), 1.0 / static_cast<double>(degree));
    std::vector<Complex> z(degree);
    for (std::size_t i = 0; i < degree; ++i) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(degree) + 0.4;
        z[i] = std::polar(radius, angle);
    }

    bool converged = false;
    for (int it = 0; it < kMaxIterations && !converged; ++it) {
        converged = true;
        for (std::size_t i = 0; i < degree; ++i) {
            const auto [p, dp] = eval_with_derivative(c, z[i]);
            if (p == Complex{}) {
                continue;
            }
            const Complex newton = p / dp;
            Complex repulsion = 0.0;
            for (std::size_t j = 0; j < degree; ++j) {
                if (j != i) {
                    repulsion += 1.0 / (z[i] - z[j]);
                }
            }
            const Complex step = newton / (1.0 - newton * repulsion);
            z[i] -= step;
            if (std::abs(step) > 1e-15 * (1.0 + std::abs(z[i]))) {
                converged = false;
            }
        }
    }

    for (auto& r : z) {
        for (int k = 0; k < 3; ++k) {
            const auto [p, dp] = eval_with_derivative(c, r);
            if (dp == Complex{} || p == Complex{}) {
                break;
            }
            const Complex next = r - p / dp;
            if (relative_residual(c, next) >= relative_residual(c, r)) {
                break;
            }
            r = next;
        }
        if (relative_residual(c, r) > kRootResidual) {
            throw Error(Errc::numerical, "polynomial_roots: root could not be certified");
        }
        roots.push_back(r);
    }
    return roots;
}

CVector deflate(const CVector& coeffs, Complex r)
{
    if (coeffs.size() < 2) {
        return {};
    }
    CVector q(coeffs.size() - 1);
    Complex carry = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;) {
        carry = carry * r + coeffs[k];
        q[k - 1] = carry;
    }
    return q;
}

CVector poly_mul(const CVector& a, const CVector& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    CVector out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

} // namespace cusp
