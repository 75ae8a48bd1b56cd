// SPDX-License-Identifier: Apache-2.0
#include "cusp/functional.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cusp/error.hpp"

namespace cusp {

namespace {

double factorial(std::size_t k)
{
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) {
        f *= static_cast<double>(i);
    }
    return f;
}

void require_order_within(const Connection& gamma, std::size_t truncation, const char* op)
{
    if (gamma.max_order() > static_cast<int>(truncation)) {
        throw Error(Errc::invalid_argument, std::string(op) + ": functional order " +
                                                std::to_string(gamma.max_order()) +
                                                " exceeds truncation " + std::to_string(truncation));
    }
}

void require_univalent_germ(const Jet& psi, double tol)
{
    if (psi.truncation() >= 1 && (std::abs(psi[0]) > tol || std::abs(psi[1]) <= tol)) {
        throw Error(Errc::invalid_argument,
                    "pushforward: psi must satisfy psi(0) = 0 and psi'(0) != 0");
    }
}

} // namespace

LocalFunctional::LocalFunctional(CVector taylor) : taylor_(std::move(taylor))
{
    if (taylor_.empty()) {
        throw Error(Errc::invalid_argument, "functional needs at least one coefficient");
    }
}

LocalFunctional LocalFunctional::from_derivative(const CVector& derivative)
{
    CVector t(derivative.size());
    for (std::size_t j = 0; j < t.size(); ++j) {
        t[j] = derivative[j] * factorial(j);
    }
    return LocalFunctional(std::move(t));
}

LocalFunctional LocalFunctional::delta(std::size_t truncation, std::size_t j)
{
    if (j > truncation) {
        throw Error(Errc::invalid_argument, "delta: order exceeds truncation");
    }
    CVector t(truncation + 1);
    t[j] = factorial(j);
    return LocalFunctional(std::move(t));
}

CVector LocalFunctional::derivative() const
{
    CVector a(taylor_.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
        a[j] = taylor_[j] / factorial(j);
    }
    return a;
}

int LocalFunctional::order() const noexcept
{
    for (std::size_t k = taylor_.size(); k-- > 0;) {
        if (taylor_[k] != Complex{}) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

Complex LocalFunctional::apply(const Jet& f) const
{
    if (order() > static_cast<int>(f.truncation())) {
        throw Error(Errc::invalid_argument, "functional order exceeds the jet truncation");
    }
    Complex s = 0.0;
    const std::size_t n = std::min(taylor_.size(), f.truncation() + 1);
    for (std::size_t k = 0; k < n; ++k) {
        s += taylor_[k] * f[k];
    }
    return s;
}

LocalFunctional LocalFunctional::resized(std::size_t truncation) const
{
    if (order() > static_cast<int>(truncation)) {
        throw Error(Errc::invalid_argument, "functional order exceeds the requested truncation");
    }
    CVector t(truncation + 1);
    std::copy_n(taylor_.begin(), std::min(t.size(), taylor_.size()), t.begin());
    return LocalFunctional(std::move(t));
}

Connection::Connection(std::size_t truncation, std::vector<LocalFunctional> functionals, double rel_tol)
    : truncation_(truncation), functionals_(std::move(functionals))
{
    linalg::Rows rows;
    rows.reserve(functionals_.size());
    for (const auto& f : functionals_) {
        if (f.truncation() != truncation_) {
            throw Error(Errc::truncation_mismatch, "connection: functional truncation " +
                                                       std::to_string(f.truncation()) +
                                                       " differs from " + std::to_string(truncation_));
        }
        rows.push_back(f.taylor());
    }
    auto ech = linalg::reduce(std::move(rows), truncation_ + 1, rel_tol);
    for (auto& r : ech.rows) {
        echelon_.emplace_back(std::move(r));
    }
    leading_ = std::move(ech.pivots);
}

int Connection::max_order() const noexcept
{
    return leading_.empty() ? -1 : static_cast<int>(leading_.front());
}

linalg::Rows Connection::echelon_rows() const
{
    linalg::Rows rows;
    rows.reserve(echelon_.size());
    for (const auto& f : echelon_) {
        rows.push_back(f.taylor());
    }
    return rows;
}

bool Connection::contains(const LocalFunctional& lambda, double tol) const
{
    if (lambda.order() < 0) {
        return true;
    }
    const LocalFunctional l =
        lambda.truncation() == truncation_ ? lambda : lambda.resized(truncation_);
    const auto basis = linalg::orthonormal_basis(echelon_rows());
    CVector unit = l.taylor();
    double n = 0.0;
    for (const auto& x : unit) {
        n += std::norm(x);
    }
    n = std::sqrt(n);
    for (auto& x : unit) {
        x /= n;
    }
    return linalg::residual_norm(unit, basis) <= tol;
}

Connection Connection::resized(std::size_t truncation) const
{
    std::vector<LocalFunctional> fs;
    fs.reserve(echelon_.size());
    for (const auto& f : echelon_) {
        fs.push_back(f.resized(truncation));
    }
    return Connection(truncation, std::move(fs));
}

Connection echelonize(const Connection& gamma)
{
    return Connection(gamma.truncation(), gamma.echelon());
}

std::vector<Jet> annihilator_basis(const Connection& gamma, std::size_t truncation)
{
    require_order_within(gamma, truncation, "annihilator_basis");
    const Connection g = gamma.truncation() == truncation ? gamma : gamma.resized(truncation);
    std::vector<Jet> basis;
    for (auto& v : linalg::null_space(g.echelon_rows(), truncation + 1)) {
        basis.emplace_back(std::move(v));
    }
    return basis;
}

bool is_algebraic(const Connection& gamma, std::size_t truncation)
{
    require_order_within(gamma, truncation, "is_algebraic");
    if (gamma.dim() == 0) {
        return true;
    }
    for (const auto& row : gamma.echelon()) {
        if (std::abs(row.taylor()[0]) > linalg::kRankTolerance * Jet(row.taylor()).norm()) {
            return false;
        }
    }
    // Gamma-perp contains z^{m+1} O, so products only matter mod z^{m+1}.
    // Echelon rows and basis jets can carry large entries, so the closure
    // residual is measured against |row| |product|.
    const auto m = static_cast<std::size_t>(gamma.max_order());
    const Connection g = gamma.resized(m);
    const auto basis = annihilator_basis(g, m);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const Jet prod = mul(basis[i], basis[j]);
            const double scale = linalg::kRankTolerance * prod.norm();
            for (const auto& row : g.echelon()) {
                if (std::abs(row.apply(prod)) > scale * Jet(row.taylor()).norm()) {
                    return false;
                }
            }
        }
    }
    return true;
}

LocalFunctional pushforward(const LocalFunctional& lambda, const Jet& psi, double tol)
{
    if (lambda.truncation() != psi.truncation()) {
        throw Error(Errc::truncation_mismatch, "pushforward: functional and germ truncations differ");
    }
    require_univalent_germ(psi, tol);
    const std::size_t n = psi.truncation();
    const auto& t = lambda.taylor();
    CVector out(n + 1);
    Jet power = Jet::constant(n, 1.0);
    for (std::size_t k = 0; k <= n; ++k) {
        Complex s = 0.0;
        for (std::size_t i = 0; i <= n; ++i) {
            s += t[i] * power[i];
        }
        out[k] = s;
        if (k < n) {
            power = mul(power, psi);
        }
    }
    return LocalFunctional(std::move(out));
}

Connection pushforward_connection(const Connection& gamma, const Jet& psi, double tol)
{
    std::vector<LocalFunctional> pushed;
    pushed.reserve(gamma.dim());
    for (const auto& f : gamma.echelon()) {
        pushed.push_back(pushforward(f, psi, tol));
    }
    return Connection(gamma.truncation(), std::move(pushed));
}

bool same_span(const Connection& a, const Connection& b, double tol)
{
    if (a.truncation() != b.truncation()) {
        throw Error(Errc::truncation_mismatch, "same_span: truncations differ");
    }
    return linalg::same_span(a.echelon_rows(), b.echelon_rows(), tol);
}

} // namespace cusp
