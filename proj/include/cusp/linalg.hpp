// SPDX-License-Identifier: Apache-2.0
#pragma once

// Small dense complex linear algebra over row lists. Rows act on column
// vectors through the bilinear pairing sum_k r_k x_k (no conjugation), which
// is how a functional acts on a jet.

#include <cstddef>
#include <optional>
#include <vector>

#include "cusp/jet.hpp"

namespace cusp::linalg {

using Rows = std::vector<CVector>;

inline constexpr double kRankTolerance = 1e-8;

struct Echelon {
    /// Reduced rows, pivot entry exactly 1, every other row zero in each
    /// pivot column. Ordered by pivot column, highest first.
    Rows rows;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination scanning columns from the highest index down.
/// A column yields a pivot when its largest remaining entry exceeds
/// rel_tol times the largest input row norm.
Echelon reduce(Rows rows, std::size_t ncols, double rel_tol = kRankTolerance);

std::size_t rank(const Rows& rows, std::size_t ncols, double rel_tol = kRankTolerance);

/// Basis of { x : r . x = 0 for every row r }, one vector per free column in
/// increasing column order, with x[free] = 1.
Rows null_space(const Rows& rows, std::size_t ncols, double rel_tol = kRankTolerance);

/// Orthonormal basis (Hermitian inner product) of the row span.
Rows orthonormal_basis(const Rows& rows, double rel_tol = kRankTolerance);

/// Norm of v minus its orthogonal projection onto span(basis); `basis` must
/// be orthonormal.
double residual_norm(const CVector& v, const Rows& basis);

/// Mutual-residual span comparison: every normalized row of each side lies
/// within `tol` of the other's span.
bool same_span(const Rows& a, const Rows& b, double tol = kRankTolerance);

/// Minimal Euclidean-norm x with rows . x = rhs, or nullopt when the system
/// is inconsistent.
std::optional<CVector> min_norm_solution(const Rows& rows, const CVector& rhs,
                                         double rel_tol = kRankTolerance);

} // namespace cusp::linalg
