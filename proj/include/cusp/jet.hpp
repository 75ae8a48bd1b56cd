// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cusp {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Absolute tolerance for scalar comparisons (zero tests on leading
/// coefficients and the like).
inline constexpr double kDefaultTolerance = 1e-9;

/// Truncated Taylor expansion at the origin, c_0 + c_1 z + ... + c_N z^N.
///
/// Coefficients are Taylor coefficients, not derivatives. A Jet is an
/// immutable value; every binary operation requires both operands to share
/// the same truncation N and throws Errc::truncation_mismatch otherwise.
class Jet {
public:
    /// The zero jet mod z^{N+1}.
    explicit Jet(std::size_t truncation);
    /// Takes ownership of c_0..c_N; must be non-empty.
    explicit Jet(CVector coeffs);
    Jet(std::size_t truncation, std::initializer_list<Complex> leading);

    static Jet constant(std::size_t truncation, Complex value);
    /// The identity germ z.
    static Jet identity(std::size_t truncation);
    static Jet monomial(std::size_t truncation, std::size_t degree, Complex scale = 1.0);

    std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
    Complex operator[](std::size_t k) const { return coeffs_[k]; }
    /// Coefficient of z^k, zero beyond the truncation.
    Complex coeff(std::size_t k) const noexcept
    {
        return k < coeffs_.size() ? coeffs_[k] : Complex{};
    }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    /// Lowest index whose coefficient exceeds `tol` in modulus; -1 for the
    /// zero jet.
    int order(double tol = 0.0) const noexcept;
    double norm() const noexcept;
    double max_abs() const noexcept;

    /// Same series re-truncated at `truncation` (zero-padded when larger).
    Jet resized(std::size_t truncation) const;
    /// Multiplies by z^shift (positive) or divides it out (negative); the
    /// truncation is kept and lost coefficients are dropped.
    Jet shifted(std::ptrdiff_t shift) const;

    Jet operator-() const;
    friend Jet operator+(const Jet& a, const Jet& b);
    friend Jet operator-(const Jet& a, const Jet& b);
    friend Jet operator*(Complex s, const Jet& a);
    friend Jet operator*(const Jet& a, Complex s) { return s * a; }

    friend bool operator==(const Jet&, const Jet&) = default;

private:
    CVector coeffs_;
};

/// Cauchy product truncated at N.
Jet mul(const Jet& a, const Jet& b);
inline Jet operator*(const Jet& a, const Jet& b) { return mul(a, b); }

Jet pow(const Jet& a, std::size_t exponent);

/// Taylor coefficients of g∘psi through degree N. psi(0) must vanish.
Jet compose(const Jet& g, const Jet& psi, double tol = kDefaultTolerance);

/// Compositional inverse: compose(f, revert(f)) == z mod z^{N+1}.
/// Requires f(0) = 0 and f'(0) != 0.
Jet revert(const Jet& f, double tol = kDefaultTolerance);

/// chi with chi*chi == pi, for pi with a double zero at the origin. The branch
/// takes chi'(0) as the principal square root of pi-hat(2). Coefficients of pi
/// beyond the truncation are taken as zero.
Jet sqrt_order2(const Jet& pi, double tol = kDefaultTolerance);

/// e^q through degree N via (e^q)' = q' e^q.
Jet exp_jet(const Jet& q);

/// 1/f for f(0) != 0.
Jet reciprocal(const Jet& f, double tol = kDefaultTolerance);
Jet divide(const Jet& f, const Jet& g, double tol = kDefaultTolerance);

/// Largest coefficient-wise modulus of a - b.
double max_abs_diff(const Jet& a, const Jet& b);

} // namespace cusp
