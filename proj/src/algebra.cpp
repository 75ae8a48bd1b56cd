// SPDX-License-Identifier: Apache-2.0
#include "cusp/algebra.hpp"

#include <cmath>
#include <string>

#include "cusp/error.hpp"
#include "cusp/linalg.hpp"

namespace cusp {

namespace {

constexpr double kMembershipTolerance = 1e-8;

// The smallest truncation that still shows the orders 2n+2 and 2n+3 used by
// the embedding density argument.
std::size_t minimum_truncation(std::size_t codimension) { return 2 * codimension + 1; }

void require_simple(const CuspAlgebra& a, const char* op)
{
    if (!a.simple()) {
        throw Error(Errc::not_simple, std::string(op) + ": algebra has contact " +
                                          std::to_string(a.contact()) + ", not 1");
    }
}

CVector unit(std::size_t size, std::size_t k)
{
    CVector e(size);
    e[k] = 1.0;
    return e;
}

} // namespace

Jet canonical_primitive(const ModuliPoint& m, std::size_t truncation)
{
    if (truncation < 2 * m.n() + 1 || truncation < 2) {
        throw Error(Errc::invalid_argument, "canonical_primitive: truncation " + std::to_string(truncation) +
                                                " too small for n = " + std::to_string(m.n()));
    }
    CVector c(truncation + 1);
    c[2] = 1.0;
    for (std::size_t j = 1; j <= m.n(); ++j) {
        c[2 * j + 1] = m.alphas[j - 1];
    }
    return Jet(std::move(c));
}

std::size_t default_truncation(std::size_t codimension) { return 2 * codimension + 3; }

std::size_t contact_of(const Connection& gamma)
{
    std::size_t con = 0;
    while (con + 1 <= gamma.truncation() &&
           gamma.contains(LocalFunctional::delta(gamma.truncation(), con + 1))) {
        ++con;
    }
    return con;
}

CuspAlgebra::CuspAlgebra(Connection gamma, std::vector<Jet> basis, Invariants inv)
    : gamma_(std::move(gamma)), basis_(std::move(basis)), inv_(inv)
{
}

CuspAlgebra CuspAlgebra::from_connection(const Connection& gamma, std::size_t truncation)
{
    if (truncation < minimum_truncation(gamma.dim())) {
        throw Error(Errc::invalid_argument,
                    "from_connection: truncation " + std::to_string(truncation) + " below " +
                        std::to_string(minimum_truncation(gamma.dim())) + " for dimension " +
                        std::to_string(gamma.dim()));
    }
    if (gamma.max_order() > static_cast<int>(truncation)) {
        throw Error(Errc::invalid_argument, "from_connection: functional order exceeds truncation");
    }
    Connection g = gamma.truncation() == truncation ? gamma : gamma.resized(truncation);
    for (const auto& row : g.echelon()) {
        if (std::abs(row.taylor()[0]) > linalg::kRankTolerance * Jet(row.taylor()).norm()) {
            throw Error(Errc::not_algebraic, "connection does not annihilate constants");
        }
    }
    if (!is_algebraic(g, truncation)) {
        throw Error(Errc::not_algebraic, "annihilator of the connection is not an algebra");
    }
    Invariants inv;
    inv.codimension = g.dim();
    inv.contact = contact_of(g);
    if (inv.contact == 0) {
        throw Error(Errc::not_cusp, "contact 0: not a cusp algebra");
    }
    inv.order = static_cast<std::size_t>(g.max_order());
    auto basis = annihilator_basis(g, truncation);
    return CuspAlgebra(std::move(g), std::move(basis), inv);
}

bool CuspAlgebra::contains(const Jet& f) const
{
    if (f.truncation() < inv_.order) {
        throw Error(Errc::invalid_argument, "membership: jet truncation " + std::to_string(f.truncation()) +
                                                " below the algebra order " + std::to_string(inv_.order));
    }
    const double scale = kMembershipTolerance * (1.0 + f.norm());
    for (const auto& row : gamma_.echelon()) {
        if (std::abs(row.apply(f)) > scale * Jet(row.taylor()).norm()) {
            return false;
        }
    }
    return true;
}

bool membership(const CuspAlgebra& a, const Jet& f) { return a.contains(f); }

Jet find_primitive(const CuspAlgebra& a)
{
    require_simple(a, "find_primitive");
    const std::size_t size = a.truncation() + 1;
    linalg::Rows rows = a.connection().echelon_rows();
    CVector rhs(rows.size());
    for (std::size_t k = 0; k < 3; ++k) {
        rows.push_back(unit(size, k));
        rhs.push_back(k == 2 ? 1.0 : 0.0);
    }
    auto x = linalg::min_norm_solution(rows, rhs);
    if (!x) {
        throw Error(Errc::numerical, "find_primitive: primitive system is inconsistent");
    }
    // Pin the defining coefficients exactly.
    (*x)[0] = 0.0;
    (*x)[1] = 0.0;
    (*x)[2] = 1.0;
    return Jet(std::move(*x));
}

FiltrationProfile filtration_profile(const CuspAlgebra& a)
{
    require_simple(a, "filtration_profile");
    const std::size_t n = a.truncation();
    const std::size_t size = n + 1;
    const linalg::Rows base = a.connection().echelon_rows();

    // dim of A_k mod z^{N+1}.
    auto level_dim = [&](std::size_t k) {
        linalg::Rows rows = base;
        for (std::size_t i = 0; i < 2 * k && i < size; ++i) {
            rows.push_back(unit(size, i));
        }
        return size - linalg::rank(rows, size);
    };

    FiltrationProfile prof;
    const std::size_t last = (n - 1) / 2;
    std::size_t current = level_dim(0);
    for (std::size_t k = 0; k <= last; ++k) {
        const std::size_t next = level_dim(k + 1);
        prof.dims.push_back(current - next);
        current = next;
    }
    for (std::size_t k = 0; k < prof.dims.size(); ++k) {
        if (prof.dims[k] == 1) {
            prof.n0 = k;
        }
    }
    return prof;
}

Decomposition decompose(const CuspAlgebra& a, const Jet& f, const Jet& pi)
{
    require_simple(a, "decompose");
    if (f.truncation() != pi.truncation()) {
        throw Error(Errc::truncation_mismatch, "decompose: f and pi truncations differ");
    }
    const std::size_t n0 = a.codimension() - 1;
    const std::size_t tail = 2 * n0 + 2;
    const std::size_t n = f.truncation();
    if (n < tail) {
        throw Error(Errc::invalid_argument, "decompose: truncation below 2 n0 + 2");
    }
    if (std::abs(pi[0]) > kDefaultTolerance || std::abs(pi[1]) > kDefaultTolerance ||
        std::abs(pi[2] - 1.0) > kDefaultTolerance || !a.contains(pi)) {
        throw Error(Errc::invalid_argument, "decompose: pi is not a primitive of the algebra");
    }
    if (!a.contains(f)) {
        throw Error(Errc::not_member, "decompose: f is not in the algebra");
    }

    Decomposition d{CVector(n0 + 1), Jet(n - tail)};
    Jet residual = f;
    Jet power = Jet::constant(n, 1.0);
    for (std::size_t k = 0; k <= n0; ++k) {
        d.poly[k] = residual[2 * k];
        residual = residual - d.poly[k] * power;
        power = mul(power, pi);
    }
    d.remainder = residual.shifted(-static_cast<std::ptrdiff_t>(tail)).resized(n - tail);
    return d;
}

Jet reconstruct(const Decomposition& d, const Jet& pi)
{
    const std::size_t n = pi.truncation();
    Jet out(n);
    Jet power = Jet::constant(n, 1.0);
    for (const auto& c : d.poly) {
        out = out + c * power;
        power = mul(power, pi);
    }
    const auto tail = static_cast<std::ptrdiff_t>(2 * d.poly.size());
    return out + d.remainder.resized(n).shifted(tail);
}

Connection connection_from_primitive(const Jet& pi, std::size_t n)
{
    const std::size_t trunc = pi.truncation();
    linalg::Rows rows;
    Jet power = Jet::constant(trunc, 1.0);
    for (std::size_t k = 0; k <= n; ++k) {
        rows.emplace_back(power.coeffs().begin(), power.coeffs().end());
        power = mul(power, pi);
    }
    for (std::size_t j = 2 * n + 2; j <= trunc; ++j) {
        rows.push_back(unit(trunc + 1, j));
    }
    std::vector<LocalFunctional> fs;
    for (auto& v : linalg::null_space(rows, trunc + 1)) {
        fs.emplace_back(std::move(v));
    }
    return Connection(trunc, std::move(fs));
}

CuspAlgebra algebra_from_primitive(const ModuliPoint& m, std::size_t truncation)
{
    if (truncation < 2 * m.n() + 3) {
        throw Error(Errc::invalid_argument, "algebra_from_primitive: truncation below 2n + 3");
    }
    const Jet pi = canonical_primitive(m, truncation);
    return CuspAlgebra::from_connection(connection_from_primitive(pi, m.n()), truncation);
}

} // namespace cusp
