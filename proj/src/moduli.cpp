// SPDX-License-Identifier: Apache-2.0
#include "cusp/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cusp/error.hpp"

namespace cusp {

namespace {

constexpr double kUnimodularTolerance = 1e-10;

// Index of the first coordinate whose modulus exceeds tol.
std::optional<std::size_t> first_nonzero(const CVector& v, double tol)
{
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (std::abs(v[j]) > tol) {
            return j;
        }
    }
    return std::nullopt;
}

// All d-th roots of w (|w| ~ 1), normalized to modulus one, sorted by angle
// in [0, 2 pi).
std::vector<Complex> unimodular_roots(Complex w, std::size_t d)
{
    const double two_pi = 2.0 * std::numbers::pi;
    double base = std::arg(w);
    if (base < 0.0) {
        base += two_pi;
    }
    std::vector<std::pair<double, Complex>> roots;
    for (std::size_t m = 0; m < d; ++m) {
        double angle = (base + two_pi * static_cast<double>(m)) / static_cast<double>(d);
        angle = std::fmod(angle, two_pi);
        roots.emplace_back(angle, std::polar(1.0, angle));
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Complex> out;
    for (const auto& r : roots) {
        out.push_back(r.second);
    }
    return out;
}

CVector twist(const CVector& a, Complex tau)
{
    CVector out(a.size());
    Complex power = tau; // tau^{2j-1}, j = 1
    const Complex tau2 = tau * tau;
    for (std::size_t j = 0; j < a.size(); ++j) {
        out[j] = power * a[j];
        power *= tau2;
    }
    return out;
}

// Lexicographic "a < b" that treats components within tol as equal.
bool lex_less(const CVector& a, const CVector& b, double tol)
{
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double dr = a[j].real() - b[j].real();
        if (std::abs(dr) > tol) {
            return dr < 0.0;
        }
        const double di = a[j].imag() - b[j].imag();
        if (std::abs(di) > tol) {
            return di < 0.0;
        }
    }
    return false;
}

} // namespace

ModuliPoint normalize_primitive(const Jet& pi, std::size_t n, double tol)
{
    if (pi.truncation() < 2 * n + 1 || pi.truncation() < 2) {
        throw Error(Errc::invalid_argument, "normalize_primitive: truncation below 2n + 1");
    }
    if (std::abs(pi[0]) > tol || std::abs(pi[1]) > tol || std::abs(pi[2] - 1.0) > tol) {
        throw Error(Errc::invalid_argument,
                    "normalize_primitive: expected pi(0) = pi'(0) = 0 and pi-hat(2) = 1");
    }
    Jet chi = pi;
    for (std::size_t k = 2; k <= n; ++k) {
        chi = chi - chi[2 * k] * pow(chi, k);
    }
    ModuliPoint m;
    m.alphas.resize(n);
    for (std::size_t j = 1; j <= n; ++j) {
        m.alphas[j - 1] = chi[2 * j + 1];
    }
    return m;
}

ModuliPoint canonical_form(const CuspAlgebra& a)
{
    const Jet pi = find_primitive(a);
    return normalize_primitive(pi, a.codimension() - 1);
}

std::optional<Complex> equivalent_cusps(const ModuliPoint& a, const ModuliPoint& b, double tol)
{
    if (a.n() != b.n()) {
        throw Error(Errc::invalid_argument, "equivalent_cusps: parameter counts differ (" +
                                                std::to_string(a.n()) + " vs " + std::to_string(b.n()) +
                                                ")");
    }
    const auto lead = first_nonzero(a.alphas, tol);
    if (!lead) {
        if (first_nonzero(b.alphas, tol)) {
            return std::nullopt;
        }
        return Complex{1.0, 0.0};
    }
    const std::size_t j = *lead;
    const Complex alpha = a.alphas[j];
    const Complex beta = b.alphas[j];
    if (std::abs(std::abs(beta) - std::abs(alpha)) > tol * (1.0 + std::abs(alpha))) {
        return std::nullopt;
    }
    const std::size_t degree = 2 * j + 1;
    for (const Complex tau : unimodular_roots(beta / alpha, degree)) {
        const CVector image = twist(a.alphas, tau);
        bool match = true;
        for (std::size_t k = 0; k < image.size() && match; ++k) {
            match = std::abs(image[k] - b.alphas[k]) <= tol * (1.0 + std::abs(a.alphas[k]));
        }
        if (match) {
            if (std::abs(std::abs(tau) - 1.0) > kUnimodularTolerance) {
                throw Error(Errc::numerical, "equivalent_cusps: twist lost unimodularity");
            }
            return tau;
        }
    }
    return std::nullopt;
}

ModuliPoint moduli_coordinates(const ModuliPoint& a, double tol)
{
    const auto lead = first_nonzero(a.alphas, tol);
    if (!lead) {
        return a;
    }
    const std::size_t j = *lead;
    const Complex alpha = a.alphas[j];
    const Complex target = std::abs(alpha) / alpha;
    std::optional<CVector> best;
    for (const Complex tau : unimodular_roots(target, 2 * j + 1)) {
        CVector candidate = twist(a.alphas, tau);
        for (std::size_t k = 0; k < j; ++k) {
            candidate[k] = 0.0;
        }
        candidate[j] = std::abs(alpha);
        if (!best || lex_less(candidate, *best, tol)) {
            best = std::move(candidate);
        }
    }
    return ModuliPoint{std::move(*best)};
}

Jet local_equivalence_map(const Jet& pi1, const Jet& pi2, double tol)
{
    if (pi1.truncation() != pi2.truncation()) {
        throw Error(Errc::truncation_mismatch, "local_equivalence_map: truncations differ");
    }
    const Jet chi1 = sqrt_order2(pi1, tol);
    const Jet chi2 = sqrt_order2(pi2, tol);
    const Jet phi = compose(revert(chi2, tol), chi1, tol);
    const double residual = max_abs_diff(compose(pi2, phi, tol), pi1);
    if (residual > tol * (1.0 + pi1.max_abs())) {
        throw Error(Errc::numerical,
                    "local_equivalence_map: residual " + std::to_string(residual) + " above tolerance");
    }
    return phi;
}

} // namespace cusp
