// SPDX-License-Identifier: Apache-2.0
#include "cusp/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "cusp/error.hpp"

namespace cusp::linalg {

namespace {

double row_norm(const CVector& r)
{
    double s = 0.0;
    for (const auto& x : r) {
        s += std::norm(x);
    }
    return std::sqrt(s);
}

// Gauss-Jordan on `rows` (first ncols entries) carrying an optional
// right-hand side along. Rows beyond the rank are left in place, unreduced
// leftovers, so the caller can inspect their rhs.
struct Reduction {
    Rows rows;
    CVector rhs;
    std::vector<std::size_t> pivots;
};

Reduction eliminate(Rows rows, CVector rhs, std::size_t ncols, double rel_tol)
{
    for (auto& r : rows) {
        if (r.size() != ncols) {
            throw Error(Errc::invalid_argument, "row length does not match column count");
        }
    }
    double scale = 0.0;
    for (const auto& r : rows) {
        scale = std::max(scale, row_norm(r));
    }
    const double threshold = rel_tol * scale;
    const bool with_rhs = !rhs.empty();

    std::size_t next = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t col = ncols; col-- > 0 && next < rows.size();) {
        std::size_t best = next;
        double best_abs = 0.0;
        for (std::size_t i = next; i < rows.size(); ++i) {
            const double a = std::abs(rows[i][col]);
            if (a > best_abs) {
                best_abs = a;
                best = i;
            }
        }
        if (best_abs <= threshold) {
            for (std::size_t i = next; i < rows.size(); ++i) {
                rows[i][col] = 0.0;
            }
            continue;
        }
        std::swap(rows[next], rows[best]);
        if (with_rhs) {
            std::swap(rhs[next], rhs[best]);
        }
        const Complex inv = 1.0 / rows[next][col];
        for (auto& x : rows[next]) {
            x *= inv;
        }
        rows[next][col] = 1.0;
        if (with_rhs) {
            rhs[next] *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next) {
                continue;
            }
            const Complex factor = rows[i][col];
            if (factor == Complex{}) {
                continue;
            }
            for (std::size_t k = 0; k < ncols; ++k) {
                rows[i][k] -= factor * rows[next][k];
            }
            rows[i][col] = 0.0;
            if (with_rhs) {
                rhs[i] -= factor * rhs[next];
            }
        }
        pivots.push_back(col);
        ++next;
    }
    return {std::move(rows), std::move(rhs), std::move(pivots)};
}

} // namespace

Echelon reduce(Rows rows, std::size_t ncols, double rel_tol)
{
    auto red = eliminate(std::move(rows), {}, ncols, rel_tol);
    red.rows.resize(red.pivots.size());
    return {std::move(red.rows), std::move(red.pivots)};
}

std::size_t rank(const Rows& rows, std::size_t ncols, double rel_tol)
{
    return reduce(rows, ncols, rel_tol).pivots.size();
}

Rows null_space(const Rows& rows, std::size_t ncols, double rel_tol)
{
    const Echelon ech = reduce(rows, ncols, rel_tol);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : ech.pivots) {
        is_pivot[p] = true;
    }
    Rows basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        CVector x(ncols);
        x[free] = 1.0;
        for (std::size_t i = 0; i < ech.rows.size(); ++i) {
            x[ech.pivots[i]] = -ech.rows[i][free];
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

Rows orthonormal_basis(const Rows& rows, double rel_tol)
{
    Rows basis;
    for (const auto& r : rows) {
        const double original = row_norm(r);
        if (original == 0.0) {
            continue;
        }
        CVector v = r;
        // Two passes of modified Gram-Schmidt.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : basis) {
                Complex dot = 0.0;
                for (std::size_t k = 0; k < v.size(); ++k) {
                    dot += std::conj(q[k]) * v[k];
                }
                for (std::size_t k = 0; k < v.size(); ++k) {
                    v[k] -= dot * q[k];
                }
            }
        }
        const double n = row_norm(v);
        if (n <= rel_tol * original) {
            continue;
        }
        for (auto& x : v) {
            x /= n;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

double residual_norm(const CVector& v, const Rows& basis)
{
    CVector r = v;
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis) {
            Complex dot = 0.0;
            for (std::size_t k = 0; k < r.size(); ++k) {
                dot += std::conj(q[k]) * r[k];
            }
            for (std::size_t k = 0; k < r.size(); ++k) {
                r[k] -= dot * q[k];
            }
        }
    }
    return row_norm(r);
}

bool same_span(const Rows& a, const Rows& b, double tol)
{
    const Rows qa = orthonormal_basis(a, tol);
    const Rows qb = orthonormal_basis(b, tol);
    auto inside = [tol](const Rows& vs, const Rows& basis) {
        for (const auto& v : vs) {
            const double n = row_norm(v);
            if (n == 0.0) {
                continue;
            }
            CVector unit = v;
            for (auto& x : unit) {
                x /= n;
            }
            if (residual_norm(unit, basis) > tol) {
                return false;
            }
        }
        return true;
    };
    return inside(a, qb) && inside(b, qa);
}

std::optional<CVector> min_norm_solution(const Rows& rows, const CVector& rhs, double rel_tol)
{
    if (rows.size() != rhs.size()) {
        throw Error(Errc::invalid_argument, "min_norm_solution: row count and rhs length differ");
    }
    if (rows.empty()) {
        return CVector{};
    }
    const std::size_t ncols = rows.front().size();
    double rhs_scale = 1.0;
    for (const auto& x : rhs) {
        rhs_scale = std::max(rhs_scale, std::abs(x));
    }
    auto red = eliminate(rows, rhs, ncols, rel_tol);
    const std::size_t r = red.pivots.size();
    for (std::size_t i = r; i < red.rows.size(); ++i) {
        if (std::abs(red.rhs[i]) > rel_tol * rhs_scale) {
            return std::nullopt;
        }
    }

    // x = R^H y with (R R^H) y = d.
    std::vector<CVector> gram(r, CVector(r + 1));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < ncols; ++k) {
                s += red.rows[i][k] * std::conj(red.rows[j][k]);
            }
            gram[i][j] = s;
        }
        gram[i][r] = red.rhs[i];
    }
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t best = c;
        for (std::size_t i = c + 1; i < r; ++i) {
            if (std::abs(gram[i][c]) > std::abs(gram[best][c])) {
                best = i;
            }
        }
        std::swap(gram[c], gram[best]);
        for (std::size_t i = c + 1; i < r; ++i) {
            const Complex f = gram[i][c] / gram[c][c];
            for (std::size_t k = c; k <= r; ++k) {
                gram[i][k] -= f * gram[c][k];
            }
        }
    }
    CVector y(r);
    for (std::size_t i = r; i-- > 0;) {
        Complex s = gram[i][r];
        for (std::size_t k = i + 1; k < r; ++k) {
            s -= gram[i][k] * y[k];
        }
        y[i] = s / gram[i][i];
    }
    CVector x(ncols);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < ncols; ++k) {
            x[k] += y[i] * std::conj(red.rows[i][k]);
        }
    }
    return x;
}

} // namespace cusp::linalg
