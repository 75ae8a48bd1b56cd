// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "cusp/algebra.hpp"
#include "cusp/jet.hpp"

namespace cusp {

/// Entire function p(z) e^{q(z)}, polynomials in ascending coefficients.
/// Its zeros are exactly the roots of p.
struct PolyExpFunction {
    CVector p{1.0};
    CVector q{0.0};

    Complex operator()(Complex z) const;
    /// Exact Taylor jet mod z^{N+1}.
    Jet jet(std::size_t truncation) const;

    friend PolyExpFunction operator*(const PolyExpFunction& a, const PolyExpFunction& b);
    PolyExpFunction pow(std::size_t exponent) const;
};

struct EmbeddingPair {
    PolyExpFunction h1;
    PolyExpFunction h2;
};

/// psi_alpha = (z - alpha) e^{h} in A with h(0) = 0 and deg h <= ord(A).
/// Each echelon functional, taken in increasing leading order m, is affine
/// in h_m with slope -alpha, so the coefficients come out one at a time;
/// non-pivot coefficients of h are zero.
PolyExpFunction solve_psi_alpha(const CuspAlgebra& a, Complex alpha);

/// 1/f for a member with f(0) != 0; membership of the result is checked.
Jet invert_in_algebra(const CuspAlgebra& a, const Jet& f);

/// f / psi_alpha for a member f that the caller asserts vanishes at alpha.
/// psi_alpha is a unit of the jet algebra, so the quotient of a member is
/// always a member mod z^{N+1}; whether f(alpha) = 0 cannot be seen from the
/// jet and is the caller's responsibility. Throws Errc::not_member when f is
/// not a member or the quotient fails the membership check numerically.
Jet divide_by_psi(const CuspAlgebra& a, const Jet& f, const PolyExpFunction& psi, Complex alpha);

/// Primitive of A whose polynomial factor has no roots in
/// 0 < |z| <= 1 + kRootPurgeMargin.
PolyExpFunction zero_free_primitive(const CuspAlgebra& a);

inline constexpr double kRootPurgeMargin = 1e-6;

/// (h1, z h1^{n+1}) with h1 = zero_free_primitive(A), cod(A) = n + 1.
EmbeddingPair embedding_pair(const CuspAlgebra& a);

/// Whether the jets of the monomials h1^i h2^j span A mod z^{N+1}.
bool density_check(const CuspAlgebra& a, const EmbeddingPair& pair);

} // namespace cusp
