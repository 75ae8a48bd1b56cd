// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "cusp/jet.hpp"
#include "cusp/linalg.hpp"

namespace cusp {

/// Derivative functional at the origin, stored in the Taylor basis:
/// Lambda(f) = sum_k t_k f-hat(k). In derivative form sum_j a_j f^(j)(0) the
/// two are related by t_j = a_j j!.
class LocalFunctional {
public:
    explicit LocalFunctional(CVector taylor);
    static LocalFunctional from_derivative(const CVector& derivative);
    /// f |-> f^(j)(0), the functional usually written delta_j.
    static LocalFunctional delta(std::size_t truncation, std::size_t j);

    std::size_t truncation() const noexcept { return taylor_.size() - 1; }
    const CVector& taylor() const noexcept { return taylor_; }
    CVector derivative() const;

    /// Highest k with t_k != 0 (the top derivative order); -1 for zero.
    int order() const noexcept;

    /// Pairing with a jet; f may be truncated anywhere at or above order().
    Complex apply(const Jet& f) const;

    LocalFunctional resized(std::size_t truncation) const;

private:
    CVector taylor_;
};

/// Finite-dimensional space of local functionals supported at the origin.
///
/// Keeps the spanning list it was built from plus a row-reduced basis
/// (pivot coefficient 1, highest leading order first).
class Connection {
public:
    explicit Connection(std::size_t truncation, std::vector<LocalFunctional> functionals = {},
                        double rel_tol = linalg::kRankTolerance);

    std::size_t truncation() const noexcept { return truncation_; }
    const std::vector<LocalFunctional>& functionals() const noexcept { return functionals_; }
    const std::vector<LocalFunctional>& echelon() const noexcept { return echelon_; }
    /// Leading orders of the echelon rows, strictly decreasing.
    const std::vector<std::size_t>& leading_orders() const noexcept { return leading_; }

    std::size_t dim() const noexcept { return echelon_.size(); }
    /// Largest leading order; -1 when empty.
    int max_order() const noexcept;

    /// True when `lambda` lies in the span (orthogonal residual <= tol after
    /// normalization).
    bool contains(const LocalFunctional& lambda, double tol = linalg::kRankTolerance) const;

    /// Same functionals viewed at another truncation. Shrinking is allowed
    /// only down to max_order().
    Connection resized(std::size_t truncation) const;

    linalg::Rows echelon_rows() const;

private:
    std::size_t truncation_;
    std::vector<LocalFunctional> functionals_;
    std::vector<LocalFunctional> echelon_;
    std::vector<std::size_t> leading_;
};

/// Connection whose spanning list is the reduced basis itself.
Connection echelonize(const Connection& gamma);

/// Basis of the jets mod z^{N+1} annihilated by every functional of gamma,
/// i.e. Gamma-perp intersected with the jet space.
std::vector<Jet> annihilator_basis(const Connection& gamma, std::size_t truncation);

/// Whether gamma-perp is closed under multiplication. Every echelon row must
/// also kill constants.
bool is_algebraic(const Connection& gamma, std::size_t truncation);

/// g |-> Lambda(g∘psi), realized as t^T M with column k of M the jet of psi^k.
LocalFunctional pushforward(const LocalFunctional& lambda, const Jet& psi,
                            double tol = kDefaultTolerance);

Connection pushforward_connection(const Connection& gamma, const Jet& psi,
                                  double tol = kDefaultTolerance);

/// Span equality by mutual residual.
bool same_span(const Connection& a, const Connection& b, double tol = linalg::kRankTolerance);

} // namespace cusp
