// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "cusp/jet.hpp"

namespace cusp {

/// Horner evaluation of sum_k c_k z^k.
Complex poly_eval(const CVector& coeffs, Complex z);

/// |p(r)| / sum_k |c_k| |r|^k, the backward-error style residual used to
/// certify roots.
double relative_residual(const CVector& coeffs, Complex r);

inline constexpr double kRootResidual = 1e-12;

/// All roots of sum_k c_k z^k (ascending coefficients) with multiplicity, by
/// Aberth-Ehrlich iteration followed by Newton polishing. Leading
/// coefficients below 1e-14 of the largest one are dropped first. Every
/// returned root has relative_residual <= kRootResidual, otherwise
/// Errc::numerical is thrown.
std::vector<Complex> polynomial_roots(const CVector& coeffs);

/// Quotient of p by (z - r); the remainder is discarded.
CVector deflate(const CVector& coeffs, Complex r);

CVector poly_mul(const CVector& a, const CVector& b);

} // namespace cusp
