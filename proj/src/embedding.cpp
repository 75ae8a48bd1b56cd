// SPDX-License-Identifier: Apache-2.0
#include "cusp/embedding.hpp"

#include <algorithm>
#include <cmath>

#include "cusp/error.hpp"
#include "cusp/linalg.hpp"
#include "cusp/moduli.hpp"
#include "cusp/roots.hpp"

namespace cusp {

namespace {

Jet poly_jet(const CVector& c, std::size_t truncation)
{
    CVector out(truncation + 1);
    std::copy_n(c.begin(), std::min(c.size(), out.size()), out.begin());
    return Jet(std::move(out));
}

CVector poly_add(const CVector& a, const CVector& b, Complex scale_b = 1.0)
{
    CVector out(std::max(a.size(), b.size()));
    for (std::size_t k = 0; k < a.size(); ++k) {
        out[k] += a[k];
    }
    for (std::size_t k = 0; k < b.size(); ++k) {
        out[k] += scale_b * b[k];
    }
    return out;
}

// psi_alpha = (z - alpha) e^h without the |alpha| < 1 restriction; the root purge
// also handles roots on the margin just outside the unit circle.
PolyExpFunction psi_for(const CuspAlgebra& a, Complex alpha)
{
    const std::size_t ord = a.order();
    PolyExpFunction psi;
    psi.p = {-alpha, 1.0};
    psi.q.assign(ord + 1, 0.0);

    const auto& rows = a.connection().echelon();
    const auto& lead = a.connection().leading_orders();
    for (std::size_t i = rows.size(); i-- > 0;) {
        const std::size_t m = lead[i];
        psi.q[m] = 0.0;
        const Complex rest = rows[i].apply(psi.jet(a.truncation()));
        psi.q[m] = rest / alpha;
    }
    if (!a.contains(psi.jet(a.truncation()))) {
        throw Error(Errc::numerical, "solve_psi_alpha: constructed function is not in the algebra");
    }
    return psi;
}

} // namespace

Complex PolyExpFunction::operator()(Complex z) const { return poly_eval(p, z) * std::exp(poly_eval(q, z)); }

Jet PolyExpFunction::jet(std::size_t truncation) const
{
    return mul(poly_jet(p, truncation), exp_jet(poly_jet(q, truncation)));
}

PolyExpFunction operator*(const PolyExpFunction& a, const PolyExpFunction& b)
{
    return {poly_mul(a.p, b.p), poly_add(a.q, b.q)};
}

PolyExpFunction PolyExpFunction::pow(std::size_t exponent) const
{
    PolyExpFunction out;
    for (std::size_t k = 0; k < exponent; ++k) {
        out.p = poly_mul(out.p, p);
    }
    out.q = q;
    for (auto& c : out.q) {
        c *= static_cast<double>(exponent);
    }
    return out;
}

PolyExpFunction solve_psi_alpha(const CuspAlgebra& a, Complex alpha)
{
    const double modulus = std::abs(alpha);
    if (!(modulus > 0.0 && modulus < 1.0)) {
        throw Error(Errc::invalid_argument, "solve_psi_alpha: need 0 < |alpha| < 1");
    }
    if (!a.simple()) {
        throw Error(Errc::not_simple, "solve_psi_alpha: algebra is not simple");
    }
    return psi_for(a, alpha);
}

Jet invert_in_algebra(const CuspAlgebra& a, const Jet& f)
{
    if (!a.contains(f)) {
        throw Error(Errc::not_member, "invert_in_algebra: f is not in the algebra");
    }
    if (std::abs(f[0]) <= kDefaultTolerance) {
        throw Error(Errc::invalid_argument, "invert_in_algebra: f vanishes at the origin");
    }
    Jet inv = reciprocal(f);
    if (!a.contains(inv)) {
        throw Error(Errc::not_member, "invert_in_algebra: reciprocal left the algebra");
    }
    return inv;
}

Jet divide_by_psi(const CuspAlgebra& a, const Jet& f, const PolyExpFunction& psi, Complex alpha)
{
    if (!a.contains(f)) {
        throw Error(Errc::not_member, "divide_by_psi: f is not in the algebra");
    }
    if (relative_residual(psi.p, alpha) > kRootResidual) {
        throw Error(Errc::invalid_argument, "divide_by_psi: psi does not vanish at alpha");
    }
    Jet quotient = divide(f, psi.jet(f.truncation()));
    if (!a.contains(quotient)) {
        throw Error(Errc::not_member, "divide_by_psi: quotient is not in the algebra (f(alpha) != 0?)");
    }
    return quotient;
}

PolyExpFunction zero_free_primitive(const CuspAlgebra& a)
{
    if (!a.simple()) {
        throw Error(Errc::not_simple, "zero_free_primitive: algebra is not simple");
    }
    const ModuliPoint m = canonical_form(a);
    // p = z^2 c(z), c = 1 + alpha_1 z + alpha_2 z^3 + ... ; only c carries
    // roots off the origin.
    CVector cofactor(std::max<std::size_t>(2 * m.n(), 1));
    cofactor[0] = 1.0;
    for (std::size_t j = 1; j <= m.n(); ++j) {
        cofactor[2 * j - 1] = m.alphas[j - 1];
    }
    CVector q{0.0};
    for (const Complex r : polynomial_roots(cofactor)) {
        if (std::abs(r) > 1.0 + kRootPurgeMargin) {
            continue;
        }
        const PolyExpFunction psi = psi_for(a, r);
        cofactor = deflate(cofactor, r);
        q = poly_add(q, psi.q, -1.0);
    }
    while (cofactor.size() > 1 && cofactor.back() == Complex{}) {
        cofactor.pop_back();
    }
    const Complex lead = cofactor.front();
    for (auto& c : cofactor) {
        c /= lead;
    }
    PolyExpFunction h1;
    h1.p.assign(2, 0.0);
    h1.p.insert(h1.p.end(), cofactor.begin(), cofactor.end());
    h1.q = std::move(q);

    if (!a.contains(h1.jet(a.truncation()))) {
        throw Error(Errc::numerical, "zero_free_primitive: result is not in the algebra");
    }
    for (const Complex r : polynomial_roots(cofactor)) {
        if (std::abs(r) <= 1.0 + kRootPurgeMargin) {
            throw Error(Errc::numerical, "zero_free_primitive: a root survived the purge");
        }
    }
    return h1;
}

EmbeddingPair embedding_pair(const CuspAlgebra& a)
{
    EmbeddingPair pair;
    pair.h1 = zero_free_primitive(a);
    const std::size_t n = a.codimension() - 1;
    pair.h2 = PolyExpFunction{{0.0, 1.0}, {0.0}} * pair.h1.pow(n + 1);
    if (!a.contains(pair.h1.jet(a.truncation())) || !a.contains(pair.h2.jet(a.truncation()))) {
        throw Error(Errc::numerical, "embedding_pair: components are not in the algebra");
    }
    if (!density_check(a, pair)) {
        throw Error(Errc::numerical, "embedding_pair: density check failed");
    }
    return pair;
}

bool density_check(const CuspAlgebra& a, const EmbeddingPair& pair)
{
    const std::size_t n = a.truncation();
    const Jet j1 = pair.h1.jet(n);
    const Jet j2 = pair.h2.jet(n);
    const int o1 = j1.order(kDefaultTolerance);
    const int o2 = j2.order(kDefaultTolerance);
    if (o1 <= 0 || o2 <= 0) {
        return false;
    }
    linalg::Rows monomials;
    Jet row_start = Jet::constant(n, 1.0);
    for (std::size_t j = 0; j * static_cast<std::size_t>(o2) <= n; ++j) {
        Jet term = row_start;
        for (std::size_t i = 0; j * static_cast<std::size_t>(o2) + i * static_cast<std::size_t>(o1) <= n; ++i) {
            monomials.emplace_back(term.coeffs().begin(), term.coeffs().end());
            term = mul(term, j1);
        }
        row_start = mul(row_start, j2);
    }
    linalg::Rows basis;
    for (const auto& b : a.jet_basis()) {
        basis.emplace_back(b.coeffs().begin(), b.coeffs().end());
    }
    return linalg::same_span(monomials, basis);
}

} // namespace cusp
