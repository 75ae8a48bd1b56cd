// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <numbers>
#include <random>

#include "cusp/algebra.hpp"
#include "cusp/error.hpp"
#include "cusp/functional.hpp"
#include "cusp/moduli.hpp"
#include "support.hpp"

using namespace cusp;
using cusp::testing::random_in_disk;
using cusp::testing::random_unimodular;

namespace {

const Complex I(0.0, 1.0);

ModuliPoint random_moduli(std::mt19937_64& rng, std::size_t n)
{
    ModuliPoint m;
    for (std::size_t j = 0; j < n; ++j) {
        m.alphas.push_back(random_in_disk(rng));
    }
    return m;
}

double max_diff(const ModuliPoint& a, const ModuliPoint& b)
{
    REQUIRE(a.n() == b.n());
    return a.n() == 0 ? 0.0 : testing::max_abs_diff(a.alphas, b.alphas);
}

// Another primitive of the algebra of pi: pi + sum_{k>=2} c_k pi^k plus a
// random tail beyond z^{2n+1}.
Jet perturbed_primitive(std::mt19937_64& rng, const Jet& pi, std::size_t n)
{
    const std::size_t N = pi.truncation();
    Jet out = pi;
    Jet power = mul(pi, pi);
    for (std::size_t k = 2; k <= n; ++k) {
        out = out + random_in_disk(rng) * power;
        power = mul(power, pi);
    }
    for (std::size_t j = 2 * n + 2; j <= N; ++j) {
        out = out + Jet::monomial(N, j, random_in_disk(rng));
    }
    return out;
}

// pi(tau z) / tau^2, the primitive of the rotated algebra.
Jet rotated(const Jet& pi, Complex tau)
{
    return (1.0 / (tau * tau)) * compose(pi, Jet::monomial(pi.truncation(), 1, tau));
}

} // namespace

TEST_CASE("normalize_primitive examples")
{
    CHECK(normalize_primitive(Jet::monomial(5, 2), 2).alphas == CVector{0.0, 0.0});
    CHECK(max_diff(normalize_primitive(Jet(5, {0.0, 0.0, 1.0, 0.0, 1.0}), 2), ModuliPoint{{0.0, 0.0}}) < 1e-15);
    CHECK(max_diff(normalize_primitive(Jet(5, {0.0, 0.0, 1.0, 1.0, 1.0}), 1), ModuliPoint{{1.0}}) < 1e-15);
    CHECK(normalize_primitive(Jet::monomial(3, 2), 0).n() == 0);

    CHECK_THROWS_AS(normalize_primitive(Jet(5, {0.0, 1.0, 1.0}), 1), Error);
    CHECK_THROWS_AS(normalize_primitive(Jet(5, {0.0, 0.0, 2.0}), 1), Error);
    CHECK_THROWS_AS(normalize_primitive(Jet::monomial(4, 2), 2), Error);
}

TEST_CASE("canonical_form examples")
{
    const auto neil = CuspAlgebra::from_connection(Connection(5, {LocalFunctional::delta(5, 1)}), 5);
    CHECK(canonical_form(neil).n() == 0);

    const Complex alpha(-0.4, 0.25);
    CHECK(max_diff(canonical_form(algebra_from_primitive(ModuliPoint{{alpha}}, 5)), ModuliPoint{{alpha}}) < 1e-10);

    const Jet pi(5, {0.0, 0.0, 1.0, 1.0, 1.0});
    const auto a = CuspAlgebra::from_connection(connection_from_primitive(pi, 1), 5);
    CHECK(max_diff(canonical_form(a), ModuliPoint{{1.0}}) < 1e-10);

    const auto c2 = CuspAlgebra::from_connection(
        Connection(7, {LocalFunctional::delta(7, 1), LocalFunctional::delta(7, 2)}), 7);
    CHECK_THROWS_AS(canonical_form(c2), Error);
}

TEST_CASE("canonical form round trip")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = rng() % 7;
        const auto m = random_moduli(rng, n);
        const auto a = algebra_from_primitive(m, default_truncation(n + 1));
        CHECK(max_diff(canonical_form(a), m) < 1e-8);
    }
}

TEST_CASE("normalization is independent of the chosen primitive")
{
    std::mt19937_64 rng(77);
    for (std::size_t n = 1; n <= 5; ++n) {
        const auto m = random_moduli(rng, n);
        const std::size_t N = default_truncation(n + 1);
        const Jet pi = canonical_primitive(m, N);
        const auto a = algebra_from_primitive(m, N);
        for (int trial = 0; trial < 50; ++trial) {
            const Jet other = perturbed_primitive(rng, pi, n);
            REQUIRE(a.contains(other));
            CHECK(max_diff(normalize_primitive(other, n), m) < 1e-8);
        }
    }
}

TEST_CASE("equivalent_cusps examples")
{
    const auto t1 = equivalent_cusps(ModuliPoint{{0.5}}, ModuliPoint{{-0.5}});
    REQUIRE(t1.has_value());
    CHECK(std::abs(*t1 + 1.0) < 1e-15);

    const auto t2 = equivalent_cusps(ModuliPoint{{1.0, I}}, ModuliPoint{{I, 1.0}});
    REQUIRE(t2.has_value());
    CHECK(std::abs(*t2 - I) < 1e-15);

    CHECK_FALSE(equivalent_cusps(ModuliPoint{{1.0, 0.0}}, ModuliPoint{{1.0, 1.0}}).has_value());
    CHECK_FALSE(equivalent_cusps(ModuliPoint{{0.5}}, ModuliPoint{{0.6}}).has_value());

    const auto t3 = equivalent_cusps(ModuliPoint{{0.0, 0.0}}, ModuliPoint{{0.0, 0.0}});
    REQUIRE(t3.has_value());
    CHECK(*t3 == Complex(1.0));
    CHECK_FALSE(equivalent_cusps(ModuliPoint{{0.0, 0.0}}, ModuliPoint{{0.0, 0.1}}).has_value());
    CHECK(equivalent_cusps(ModuliPoint{}, ModuliPoint{}).has_value());

    CHECK_THROWS_AS(equivalent_cusps(ModuliPoint{{1.0}}, ModuliPoint{{1.0, 0.0}}), Error);
}

TEST_CASE("equivalence under rotation")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        auto m = random_moduli(rng, n);
        // Exercise later first-nonzero indices too.
        const std::size_t zeros = rng() % n;
        for (std::size_t j = 0; j < zeros; ++j) {
            m.alphas[j] = 0.0;
        }
        const Complex tau = random_unimodular(rng);
        const std::size_t N = default_truncation(n + 1);
        const Jet pi = rotated(canonical_primitive(m, N), tau);

        ModuliPoint expected;
        for (std::size_t j = 1; j <= n; ++j) {
            expected.alphas.push_back(std::pow(tau, static_cast<int>(2 * j - 1)) * m.alphas[j - 1]);
        }
        const auto b = canonical_form(CuspAlgebra::from_connection(connection_from_primitive(pi, n), N));
        CHECK(max_diff(b, expected) < 1e-8);

        const auto found = equivalent_cusps(m, b);
        REQUIRE(found.has_value());
        CHECK(std::abs(std::abs(*found) - 1.0) <= 1e-10);
        for (std::size_t j = 1; j <= n; ++j) {
            CHECK(std::abs(std::pow(*found, static_cast<int>(2 * j - 1)) * m.alphas[j - 1] - b.alphas[j - 1]) < 1e-8);
        }
    }
}

TEST_CASE("moduli coordinates")
{
    CHECK(moduli_coordinates(ModuliPoint{{0.0, 0.0}}).alphas == CVector{0.0, 0.0});
    CHECK(moduli_coordinates(ModuliPoint{{-2.0}}).alphas == CVector{2.0});
    CHECK(moduli_coordinates(ModuliPoint{}).n() == 0);

    const auto c = moduli_coordinates(ModuliPoint{{0.0, I, 0.5}});
    CHECK(c.alphas[0] == Complex(0.0));
    CHECK(c.alphas[1] == Complex(1.0));

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 5;
        auto m = random_moduli(rng, n);
        if (rng() % 3 == 0) {
            m.alphas[0] = 0.0;
        }
        const Complex tau = random_unimodular(rng);
        ModuliPoint twisted;
        for (std::size_t j = 1; j <= n; ++j) {
            twisted.alphas.push_back(std::pow(tau, static_cast<int>(2 * j - 1)) * m.alphas[j - 1]);
        }
        const auto c1 = moduli_coordinates(m);
        const auto c2 = moduli_coordinates(twisted);
        CHECK(max_diff(c1, c2) < 1e-8);
        CHECK(max_diff(moduli_coordinates(c1), c1) < 1e-12);
        CHECK(equivalent_cusps(m, c1).has_value());
    }
}

TEST_CASE("local equivalence map examples")
{
    const Jet z2 = Jet::monomial(7, 2);
    const Jet z2z3(7, {0.0, 0.0, 1.0, 1.0});
    CHECK(max_abs_diff(local_equivalence_map(z2z3, z2z3), Jet::identity(7)) < 1e-14);

    const Jet phi = local_equivalence_map(z2, z2z3);
    CHECK(max_abs_diff(compose(z2z3, phi), z2) < 1e-9);

    const Jet chi = local_equivalence_map(z2z3, z2);
    CHECK(max_abs_diff(chi, sqrt_order2(z2z3)) < 1e-14);
    CHECK(std::abs(chi[2] - 0.5) < 1e-15);
    CHECK(std::abs(chi[3] + 0.125) < 1e-15);

    CHECK_THROWS_AS(local_equivalence_map(Jet(7, {0.0, 1.0}), z2), Error);
    CHECK_THROWS_AS(local_equivalence_map(z2, Jet::monomial(6, 2)), Error);
}

TEST_CASE("local equivalence maps on random primitives")
{
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t N = 5 + rng() % 11;
        Jet p1 = Jet::monomial(N, 2);
        Jet p2 = Jet::monomial(N, 2);
        for (std::size_t j = 3; j <= N; ++j) {
            p1 = p1 + Jet::monomial(N, j, random_in_disk(rng));
            p2 = p2 + Jet::monomial(N, j, random_in_disk(rng));
        }
        const Jet phi = local_equivalence_map(p1, p2);
        CHECK(max_abs_diff(compose(p2, phi), p1) <= 1e-9);
        CHECK(std::abs(phi[1]) > 0.5);
    }
}

TEST_CASE("different codimensions are never equivalent")
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n1 = rng() % 3;
        const std::size_t n2 = n1 + 1 + rng() % 2;
        const std::size_t N = default_truncation(n2 + 1);
        const auto m1 = random_moduli(rng, n1);
        const auto m2 = random_moduli(rng, n2);
        const Jet pi1 = canonical_primitive(m1, N);
        const Jet pi2 = canonical_primitive(m2, N);
        // A germ matching the primitives always exists, but it cannot carry
        // one connection onto the other.
        const Jet phi = local_equivalence_map(pi1, pi2);
        const Connection g1 = algebra_from_primitive(m1, N).connection();
        const Connection g2 = algebra_from_primitive(m2, N).connection();
        CHECK_FALSE(same_span(pushforward_connection(g1, phi), g2));
        CHECK_FALSE(same_span(pushforward_connection(g2, revert(phi)), g1));
    }
}
