// SPDX-License-Identifier: Apache-2.0
#include "cusp/jet.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cusp/error.hpp"

namespace cusp {

namespace {

void require_same(const Jet& a, const Jet& b, const char* op)
{
    if (a.truncation() != b.truncation()) {
        throw Error(Errc::truncation_mismatch,
                    std::string(op) + ": truncations " + std::to_string(a.truncation()) + " and " +
                        std::to_string(b.truncation()) + " differ");
    }
}

} // namespace

Jet::Jet(std::size_t truncation) : coeffs_(truncation + 1) {}

Jet::Jet(CVector coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw Error(Errc::invalid_argument, "jet needs at least one coefficient");
    }
}

Jet::Jet(std::size_t truncation, std::initializer_list<Complex> leading) : coeffs_(truncation + 1)
{
    if (leading.size() > coeffs_.size()) {
        throw Error(Errc::invalid_argument, "more coefficients than the truncation allows");
    }
    std::copy(leading.begin(), leading.end(), coeffs_.begin());
}

Jet Jet::constant(std::size_t truncation, Complex value)
{
    Jet j(truncation);
    j.coeffs_[0] = value;
    return j;
}

Jet Jet::identity(std::size_t truncation) { return monomial(truncation, 1); }

Jet Jet::monomial(std::size_t truncation, std::size_t degree, Complex scale)
{
    Jet j(truncation);
    if (degree <= truncation) {
        j.coeffs_[degree] = scale;
    }
    return j;
}

int Jet::order(double tol) const noexcept
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (std::abs(coeffs_[k]) > tol) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

double Jet::norm() const noexcept
{
    double s = 0.0;
    for (const auto& c : coeffs_) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

double Jet::max_abs() const noexcept
{
    double m = 0.0;
    for (const auto& c : coeffs_) {
        m = std::max(m, std::abs(c));
    }
    return m;
}

Jet Jet::resized(std::size_t truncation) const
{
    CVector c(truncation + 1);
    std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
    return Jet(std::move(c));
}

Jet Jet::shifted(std::ptrdiff_t shift) const
{
    const auto n = static_cast<std::ptrdiff_t>(coeffs_.size());
    CVector c(coeffs_.size());
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        const std::ptrdiff_t src = k - shift;
        if (src >= 0 && src < n) {
            c[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(src)];
        }
    }
    return Jet(std::move(c));
}

Jet Jet::operator-() const
{
    CVector c(coeffs_.size());
    std::transform(coeffs_.begin(), coeffs_.end(), c.begin(), [](Complex x) { return -x; });
    return Jet(std::move(c));
}

Jet operator+(const Jet& a, const Jet& b)
{
    require_same(a, b, "add");
    CVector c(a.coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a.coeffs_[k] + b.coeffs_[k];
    }
    return Jet(std::move(c));
}

Jet operator-(const Jet& a, const Jet& b)
{
    require_same(a, b, "sub");
    CVector c(a.coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = a.coeffs_[k] - b.coeffs_[k];
    }
    return Jet(std::move(c));
}

Jet operator*(Complex s, const Jet& a)
{
    CVector c(a.coeffs_.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = s * a.coeffs_[k];
    }
    return Jet(std::move(c));
}

Jet mul(const Jet& a, const Jet& b)
{
    require_same(a, b, "mul");
    const std::size_t n = a.truncation();
    CVector c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == Complex{}) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return Jet(std::move(c));
}

Jet pow(const Jet& a, std::size_t exponent)
{
    Jet result = Jet::constant(a.truncation(), 1.0);
    Jet base = a;
    while (exponent > 0) {
        if (exponent & 1U) {
            result = mul(result, base);
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

Jet compose(const Jet& g, const Jet& psi, double tol)
{
    require_same(g, psi, "compose");
    if (std::abs(psi[0]) > tol) {
        throw Error(Errc::invalid_argument, "compose: inner series has a nonzero constant term");
    }
    // Horner in psi; the constant term is dropped exactly.
    CVector c(psi.coeffs().begin(), psi.coeffs().end());
    c[0] = 0.0;
    const Jet inner(std::move(c));

    const std::size_t n = g.truncation();
    Jet acc = Jet::constant(n, g[n]);
    for (std::size_t k = n; k-- > 0;) {
        acc = mul(acc, inner) + Jet::constant(n, g[k]);
    }
    return acc;
}

Jet revert(const Jet& f, double tol)
{
    if (std::abs(f[0]) > tol) {
        throw Error(Errc::invalid_argument, "revert: series does not vanish at the origin");
    }
    const std::size_t n = f.truncation();
    if (n == 0) {
        return Jet(0);
    }
    if (std::abs(f[1]) <= tol) {
        throw Error(Errc::invalid_argument, "revert: vanishing linear coefficient (not locally univalent)");
    }
    CVector g(n + 1);
    g[1] = 1.0 / f[1];
    // The z^k coefficient of f∘g is f_1 g_k plus terms in g_1..g_{k-1}.
    for (std::size_t k = 2; k <= n; ++k) {
        const Jet partial = compose(f, Jet(g), tol);
        g[k] = -partial[k] / f[1];
    }
    return Jet(std::move(g));
}

Jet sqrt_order2(const Jet& pi, double tol)
{
    const std::size_t n = pi.truncation();
    if (n < 2 || std::abs(pi[0]) > tol || std::abs(pi[1]) > tol || std::abs(pi[2]) <= tol) {
        throw Error(Errc::invalid_argument, "sqrt_order2: series must have an exact double zero at the origin");
    }
    // chi = z s with s^2 = pi / z^2.
    CVector s(n);
    s[0] = std::sqrt(pi[2]);
    for (std::size_t k = 1; k < n; ++k) {
        Complex acc = pi.coeff(k + 2);
        for (std::size_t i = 1; i < k; ++i) {
            acc -= s[i] * s[k - i];
        }
        s[k] = acc / (2.0 * s[0]);
    }
    CVector chi(n + 1);
    std::copy(s.begin(), s.end(), chi.begin() + 1);
    return Jet(std::move(chi));
}

Jet exp_jet(const Jet& q)
{
    const std::size_t n = q.truncation();
    CVector e(n + 1);
    e[0] = std::exp(q[0]);
    for (std::size_t k = 1; k <= n; ++k) {
        Complex acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += static_cast<double>(j) * q[j] * e[k - j];
        }
        e[k] = acc / static_cast<double>(k);
    }
    return Jet(std::move(e));
}

Jet reciprocal(const Jet& f, double tol)
{
    if (std::abs(f[0]) <= tol) {
        throw Error(Errc::invalid_argument, "reciprocal: series vanishes at the origin");
    }
    const std::size_t n = f.truncation();
    CVector g(n + 1);
    g[0] = 1.0 / f[0];
    for (std::size_t k = 1; k <= n; ++k) {
        Complex acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += f[j] * g[k - j];
        }
        g[k] = -acc / f[0];
    }
    return Jet(std::move(g));
}

Jet divide(const Jet& f, const Jet& g, double tol)
{
    require_same(f, g, "divide");
    return mul(f, reciprocal(g, tol));
}

double max_abs_diff(const Jet& a, const Jet& b)
{
    require_same(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k <= a.truncation(); ++k) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

} // namespace cusp
