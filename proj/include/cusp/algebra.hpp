// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "cusp/functional.hpp"
#include "cusp/jet.hpp"

namespace cusp {

struct Invariants {
    std::size_t codimension = 0;
    std::size_t order = 0;
    std::size_t contact = 0;

    bool simple() const noexcept { return contact == 1; }
    friend bool operator==(const Invariants&, const Invariants&) = default;
};

/// Parameters alpha_1..alpha_n of the canonical primitive
/// z^2 + alpha_1 z^3 + alpha_2 z^5 + ... + alpha_n z^{2n+1}.
struct ModuliPoint {
    CVector alphas;

    std::size_t n() const noexcept { return alphas.size(); }
};

/// The canonical primitive of `m` as a jet mod z^{N+1}.
Jet canonical_primitive(const ModuliPoint& m, std::size_t truncation);

/// Smallest truncation from_connection accepts for a connection of this
/// dimension, and the default used by the tools: 2 dim + 3.
std::size_t default_truncation(std::size_t codimension);

/// Finite-codimension subalgebra of O(D) cut out by a connection supported at
/// the origin, viewed through jets mod z^{N+1}. Since z^{ord+1} O(D) lies in
/// the algebra, jet-level membership is exact.
class CuspAlgebra {
public:
    /// Validates gamma (algebraic, kills constants, contact >= 1) and computes
    /// the invariants. gamma is re-truncated to N if needed.
    static CuspAlgebra from_connection(const Connection& gamma, std::size_t truncation);

    const Connection& connection() const noexcept { return gamma_; }
    std::size_t truncation() const noexcept { return gamma_.truncation(); }
    const std::vector<Jet>& jet_basis() const noexcept { return basis_; }
    const Invariants& invariants() const noexcept { return inv_; }
    std::size_t codimension() const noexcept { return inv_.codimension; }
    std::size_t order() const noexcept { return inv_.order; }
    std::size_t contact() const noexcept { return inv_.contact; }
    bool simple() const noexcept { return inv_.simple(); }

    /// |Lambda(f)| <= 1e-8 |Lambda| (1 + |f|) for every echelon functional.
    bool contains(const Jet& f) const;

private:
    CuspAlgebra(Connection gamma, std::vector<Jet> basis, Invariants inv);

    Connection gamma_;
    std::vector<Jet> basis_;
    Invariants inv_;
};

/// Contact of a connection: the largest n with delta_1..delta_n in its span.
std::size_t contact_of(const Connection& gamma);

bool membership(const CuspAlgebra& a, const Jet& f);

/// Minimal-norm jet pi in A with pi-hat(0) = pi-hat(1) = 0, pi-hat(2) = 1.
Jet find_primitive(const CuspAlgebra& a);

struct FiltrationProfile {
    /// dim E_k = dim A_k / A_{k+1} for k = 0 .. (N-1)/2, with A_k the
    /// members vanishing to order 2k.
    std::vector<std::size_t> dims;
    /// Last index whose quotient is one-dimensional.
    std::size_t n0 = 0;
};

FiltrationProfile filtration_profile(const CuspAlgebra& a);

struct Decomposition {
    /// c_0..c_{n0} with f = sum c_k pi^k + z^{2 n0 + 2} g.
    CVector poly;
    Jet remainder;
};

/// Unique decomposition of a member f along the powers of a primitive.
/// f and pi share a truncation N; the remainder is truncated at N - (2 n0 + 2).
Decomposition decompose(const CuspAlgebra& a, const Jet& f, const Jet& pi);

/// Inverse of decompose; the result has the truncation of pi.
Jet reconstruct(const Decomposition& d, const Jet& pi);

/// A(alpha_1..alpha_n): the algebra spanned by 1, pi, .., pi^n and
/// z^{2n+2} O(D), with pi the canonical primitive of m.
CuspAlgebra algebra_from_primitive(const ModuliPoint& m, std::size_t truncation);

/// Connection annihilating span{1, pi, .., pi^n, z^{2n+2}, .., z^N} for a
/// primitive pi with n = codimension - 1.
Connection connection_from_primitive(const Jet& pi, std::size_t n);

} // namespace cusp
