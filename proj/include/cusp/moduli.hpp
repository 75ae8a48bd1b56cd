// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>

#include "cusp/algebra.hpp"
#include "cusp/jet.hpp"

namespace cusp {

/// Kills the even coefficients 4..2n of a primitive by
/// chi_k = chi_{k-1} - chi_{k-1}-hat(2k) chi_{k-1}^k, then reads
/// alpha_j = coefficient of z^{2j+1}.
ModuliPoint normalize_primitive(const Jet& pi, std::size_t n, double tol = kDefaultTolerance);

/// The normalized parameters of a simple algebra.
ModuliPoint canonical_form(const CuspAlgebra& a);

/// Unimodular tau with b_j = tau^{2j-1} a_j for all j, if one exists.
std::optional<Complex> equivalent_cusps(const ModuliPoint& a, const ModuliPoint& b,
                                        double tol = kDefaultTolerance);

/// Representative of the orbit of `a` under alpha_j -> tau^{2j-1} alpha_j:
/// the first nonzero coordinate is made positive real, remaining ambiguity
/// is broken by lexicographic order (real part, then imaginary part).
ModuliPoint moduli_coordinates(const ModuliPoint& a, double tol = kDefaultTolerance);

/// Germ phi with pi2∘phi = pi1, phi = revert(sqrt(pi2)) ∘ sqrt(pi1).
/// Throws Errc::numerical if the check residual exceeds tol (1 + |pi1|).
Jet local_equivalence_map(const Jet& pi1, const Jet& pi2, double tol = kDefaultTolerance);

} // namespace cusp
