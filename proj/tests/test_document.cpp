// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "cusp/document.hpp"
#include "cusp/error.hpp"
#include "support.hpp"

using namespace cusp;
using cusp::testing::random_in_disk;

TEST_CASE("kind detection")
{
    CHECK(doc::detect(R"({"truncation": 3, "basis": "taylor", "functionals": []})") == doc::Kind::connection);
    CHECK(doc::detect(R"({"n": 1, "alphas": [[1, 0]]})") == doc::Kind::moduli);
    CHECK(doc::detect(R"({"truncation": 1, "coeffs": [[1, 0], [0, 0]]})") == doc::Kind::jet);
    CHECK(doc::detect(R"([[1, 0]])") == doc::Kind::jet);
    CHECK(doc::detect(R"({"x": 1})") == doc::Kind::unknown);
}

TEST_CASE("connection documents")
{
    const auto g = doc::parse_connection(
        R"({"truncation": 3, "basis": "derivative", "functionals": [[[0, 0], [0, 0], [1, 0], [0, 0]]]})");
    REQUIRE(g.dim() == 1);
    CHECK(g.functionals()[0].taylor() == CVector{0.0, 0.0, 2.0, 0.0});

    const auto back = doc::parse_connection(doc::emit_connection(g));
    CHECK(same_span(back, g));
    CHECK(back.functionals()[0].taylor() == g.functionals()[0].taylor());
    const auto via_derivative = doc::parse_connection(doc::emit_connection(g, doc::Basis::derivative));
    CHECK(via_derivative.functionals()[0].taylor() == g.functionals()[0].taylor());

    CHECK_THROWS_AS(doc::parse_connection("{"), Error);
    CHECK_THROWS_AS(doc::parse_connection(R"({"truncation": 3, "basis": "taylor", "functionals": [[[0, 0]]]})"),
                    Error);
    CHECK_THROWS_AS(doc::parse_connection(R"({"truncation": 1, "basis": "other", "functionals": []})"), Error);
    CHECK_THROWS_AS(doc::parse_connection(R"({"truncation": 1, "basis": "taylor", "functionals": [[[0], [1, 0]]]})"),
                    Error);
}

TEST_CASE("moduli and jet documents")
{
    const ModuliPoint m{{Complex(1.0, -2.0), Complex(0.25, 0.0)}};
    const auto back = doc::parse_moduli(doc::emit_moduli(m));
    CHECK(back.alphas == m.alphas);
    CHECK(doc::parse_moduli(R"({"n": 0, "alphas": []})").n() == 0);
    CHECK_THROWS_AS(doc::parse_moduli(R"({"n": 2, "alphas": [[1, 0]]})"), Error);

    const Jet f(2, {1.0, Complex(0.0, 3.0), -1.0});
    CHECK(doc::parse_jet(doc::emit_jet(f)) == f);
    CHECK(doc::parse_jet("[[1, 0], [0, 3], [-1, 0]]") == f);
    CHECK_THROWS_AS(doc::parse_jet(R"({"truncation": 5, "coeffs": [[1, 0]]})"), Error);
    CHECK_THROWS_AS(doc::parse_jet("[]"), Error);
}

TEST_CASE("full precision round trip")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        std::vector<LocalFunctional> fs;
        for (std::size_t i = 0; i < 1 + rng() % 3; ++i) {
            CVector t(n + 1);
            for (auto& x : t) {
                x = random_in_disk(rng);
            }
            fs.emplace_back(std::move(t));
        }
        const Connection g(n, fs);
        const auto back = doc::parse_connection(doc::emit_connection(g));
        REQUIRE(back.functionals().size() == g.functionals().size());
        for (std::size_t i = 0; i < fs.size(); ++i) {
            CHECK(back.functionals()[i].taylor() == g.functionals()[i].taylor());
        }
    }
}

TEST_CASE("significant digit rounding")
{
    CHECK(doc::round_significant(0.123456789, 3) == 0.123);
    CHECK(doc::round_significant(12345.0, 2) == 12000.0);
    CHECK(doc::round_significant(1.0 / 3.0, 0) == 1.0 / 3.0);
    CHECK(!std::signbit(doc::round_significant(-0.0, 5)));
    CHECK(doc::round_significant(0.0, 5) == 0.0);
    CHECK(doc::format_complex_list({Complex(0.5, -1.0)}, 6) == "[[0.5,-1.0]]");
}
