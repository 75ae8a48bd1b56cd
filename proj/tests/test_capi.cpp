// SPDX-License-Identifier: Apache-2.0
// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "cusp/cusp.h"

namespace {

std::vector<cusp_complex> jet_coeffs(const cusp_jet* j)
{
    size_t n = 0;
    REQUIRE(cusp_jet_coefficients(j, nullptr, 0, &n) == CUSP_OK);
    std::vector<cusp_complex> out(n);
    REQUIRE(cusp_jet_coefficients(j, out.data(), out.size(), &n) == CUSP_OK);
    return out;
}

std::string take(char* s)
{
    REQUIRE(s != nullptr);
    std::string out(s);
    cusp_string_free(s);
    return out;
}

cusp_algebra* neil()
{
    cusp_connection* g = nullptr;
    REQUIRE(cusp_connection_from_json(
                R"({"truncation": 3, "basis": "derivative", "functionals": [[[0, 0], [1, 0], [0, 0], [0, 0]]]})", &g) ==
            CUSP_OK);
    cusp_algebra* a = nullptr;
    REQUIRE(cusp_algebra_from_connection(g, 0, &a) == CUSP_OK);
    cusp_connection_destroy(g);
    return a;
}

} // namespace

TEST_CASE("jets")
{
    const cusp_complex zz[] = {{0, 0}, {1, 0}, {1, 0}, {0, 0}, {0, 0}};
    cusp_jet* f = nullptr;
    REQUIRE(cusp_jet_create(zz, 5, &f) == CUSP_OK);
    CHECK(cusp_jet_truncation(f) == 4);

    cusp_jet* r = nullptr;
    REQUIRE(cusp_jet_revert(f, &r) == CUSP_OK);
    const auto c = jet_coeffs(r);
    CHECK(c[1].re == 1.0);
    CHECK(c[2].re == -1.0);
    CHECK(c[3].re == 2.0);
    CHECK(c[4].re == -5.0);

    cusp_jet* id = nullptr;
    REQUIRE(cusp_jet_compose(f, r, &id) == CUSP_OK);
    const auto ci = jet_coeffs(id);
    CHECK(std::abs(ci[1].re - 1.0) < 1e-15);
    CHECK(std::abs(ci[4].re) < 1e-14);

    cusp_complex small[2];
    size_t n = 0;
    CHECK(cusp_jet_coefficients(f, small, 2, &n) == CUSP_ERR_BUFFER_TOO_SMALL);
    CHECK(n == 5);

    const cusp_complex short_jet[] = {{0, 0}, {1, 0}};
    cusp_jet* g = nullptr;
    REQUIRE(cusp_jet_create(short_jet, 2, &g) == CUSP_OK);
    cusp_jet* bad = nullptr;
    CHECK(cusp_jet_mul(f, g, &bad) == CUSP_ERR_TRUNCATION_MISMATCH);
    CHECK(bad == nullptr);
    CHECK(std::string(cusp_last_error()).size() > 0);

    const std::string json = take([&] {
        char* s = nullptr;
        REQUIRE(cusp_jet_to_json(f, 0, &s) == CUSP_OK);
        return s;
    }());
    cusp_jet* back = nullptr;
    REQUIRE(cusp_jet_from_json(json.c_str(), &back) == CUSP_OK);
    CHECK(jet_coeffs(back).size() == 5);
    CHECK(cusp_jet_from_json("not json", &bad) == CUSP_ERR_PARSE);

    for (cusp_jet* j : {f, r, id, g, back}) {
        cusp_jet_destroy(j);
    }
    cusp_jet_destroy(nullptr);
}

TEST_CASE("algebra invariants and errors")
{
    cusp_algebra* a = neil();
    cusp_invariants inv{};
    REQUIRE(cusp_algebra_invariants(a, &inv) == CUSP_OK);
    CHECK(inv.codimension == 1);
    CHECK(inv.order == 1);
    CHECK(inv.contact == 1);
    CHECK(cusp_algebra_truncation(a) == 5);

    size_t dims[8];
    size_t count = 0;
    size_t n0 = 99;
    REQUIRE(cusp_algebra_filtration(a, dims, 8, &count, &n0) == CUSP_OK);
    CHECK(count == 3);
    CHECK(dims[0] == 1);
    CHECK(dims[1] == 2);
    CHECK(n0 == 0);

    cusp_jet* pi = nullptr;
    REQUIRE(cusp_algebra_primitive(a, &pi) == CUSP_OK);
    int member = 0;
    REQUIRE(cusp_algebra_contains(a, pi, &member) == CUSP_OK);
    CHECK(member == 1);
    cusp_jet_destroy(pi);
    cusp_algebra_destroy(a);

    cusp_connection* d2 = nullptr;
    REQUIRE(cusp_connection_from_json(
                R"({"truncation": 3, "basis": "derivative", "functionals": [[[0, 0], [0, 0], [1, 0], [0, 0]]]})",
                &d2) == CUSP_OK);
    int alg = 1;
    REQUIRE(cusp_connection_is_algebraic(d2, &alg) == CUSP_OK);
    CHECK(alg == 0);
    cusp_algebra* none = nullptr;
    CHECK(cusp_algebra_from_connection(d2, 0, &none) == CUSP_ERR_NOT_ALGEBRAIC);
    CHECK(none == nullptr);
    cusp_connection_destroy(d2);

    CHECK(cusp_algebra_invariants(nullptr, &inv) == CUSP_ERR_INVALID_ARGUMENT);
    CHECK(std::string(cusp_status_message(CUSP_ERR_NOT_CUSP)).size() > 0);
}

TEST_CASE("moduli and equivalence")
{
    const cusp_complex a1[] = {{1, 0}, {0, 1}};
    const cusp_complex a2[] = {{0, 1}, {1, 0}};
    cusp_moduli* m1 = nullptr;
    cusp_moduli* m2 = nullptr;
    REQUIRE(cusp_moduli_create(a1, 2, &m1) == CUSP_OK);
    REQUIRE(cusp_moduli_create(a2, 2, &m2) == CUSP_OK);
    int eq = 0;
    cusp_complex tau{};
    REQUIRE(cusp_moduli_equivalent(m1, m2, 0.0, &eq, &tau) == CUSP_OK);
    CHECK(eq == 1);
    CHECK(std::abs(tau.re) < 1e-15);
    CHECK(std::abs(tau.im - 1.0) < 1e-15);

    cusp_algebra* alg = nullptr;
    REQUIRE(cusp_algebra_from_moduli(m1, 0, &alg) == CUSP_OK);
    CHECK(cusp_algebra_truncation(alg) == 9);
    cusp_moduli* canon = nullptr;
    REQUIRE(cusp_algebra_canonical_form(alg, &canon) == CUSP_OK);
    cusp_complex back[2];
    size_t n = 0;
    REQUIRE(cusp_moduli_alphas(canon, back, 2, &n) == CUSP_OK);
    CHECK(n == 2);
    CHECK(std::abs(back[0].re - 1.0) < 1e-10);
    CHECK(std::abs(back[1].im - 1.0) < 1e-10);

    cusp_moduli* coords = nullptr;
    REQUIRE(cusp_moduli_coordinates(m2, 0.0, &coords) == CUSP_OK);
    cusp_complex cc[2];
    REQUIRE(cusp_moduli_alphas(coords, cc, 2, &n) == CUSP_OK);
    CHECK(std::abs(cc[0].re - 1.0) < 1e-12);
    CHECK(cc[0].im == 0.0);

    const cusp_complex one[] = {{1, 0}};
    cusp_moduli* m3 = nullptr;
    REQUIRE(cusp_moduli_create(one, 1, &m3) == CUSP_OK);
    CHECK(cusp_moduli_equivalent(m1, m3, 0.0, &eq, &tau) == CUSP_ERR_INVALID_ARGUMENT);

    for (cusp_moduli* m : {m1, m2, m3, canon, coords}) {
        cusp_moduli_destroy(m);
    }
    cusp_algebra_destroy(alg);
}

TEST_CASE("decomposition and local maps")
{
    const cusp_complex half[] = {{0.5, 0}};
    cusp_moduli* m = nullptr;
    REQUIRE(cusp_moduli_create(half, 1, &m) == CUSP_OK);
    cusp_algebra* a = nullptr;
    REQUIRE(cusp_algebra_from_moduli(m, 7, &a) == CUSP_OK);
    cusp_jet* pi = nullptr;
    REQUIRE(cusp_moduli_primitive(m, 7, &pi) == CUSP_OK);

    // f = 2 + 3 pi, built through jet arithmetic.
    auto c = jet_coeffs(pi);
    for (auto& x : c) {
        x.re *= 3.0;
        x.im *= 3.0;
    }
    c[0].re += 2.0;
    cusp_jet* f = nullptr;
    REQUIRE(cusp_jet_create(c.data(), c.size(), &f) == CUSP_OK);
    cusp_complex poly[4];
    size_t count = 0;
    cusp_jet* rem = nullptr;
    REQUIRE(cusp_algebra_decompose(a, f, pi, poly, 4, &count, &rem) == CUSP_OK);
    CHECK(count == 2);
    CHECK(std::abs(poly[0].re - 2.0) < 1e-12);
    CHECK(std::abs(poly[1].re - 3.0) < 1e-12);

    const cusp_complex z2[] = {{0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}};
    cusp_jet* pz = nullptr;
    REQUIRE(cusp_jet_create(z2, 8, &pz) == CUSP_OK);
    cusp_jet* phi = nullptr;
    REQUIRE(cusp_local_equivalence_map(pi, pz, 0.0, &phi) == CUSP_OK);
    CHECK(std::abs(jet_coeffs(phi)[1].re - 1.0) < 1e-15);

    cusp_jet* bad = nullptr;
    const cusp_complex zz[] = {{0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}};
    cusp_jet* nonmember = nullptr;
    REQUIRE(cusp_jet_create(zz, 8, &nonmember) == CUSP_OK);
    CHECK(cusp_algebra_decompose(a, nonmember, pi, poly, 4, &count, &bad) == CUSP_ERR_NOT_MEMBER);

    for (cusp_jet* j : {pi, f, rem, pz, phi, nonmember}) {
        cusp_jet_destroy(j);
    }
    cusp_algebra_destroy(a);
    cusp_moduli_destroy(m);
}

TEST_CASE("pushforward")
{
    cusp_connection* g = nullptr;
    REQUIRE(cusp_connection_from_json(
                R"({"truncation": 3, "basis": "derivative", "functionals": [[[0, 0], [0, 0], [1, 0], [0, 0]]]})", &g) ==
            CUSP_OK);
    const cusp_complex psi_c[] = {{0, 0}, {1, 0}, {1, 0}, {0, 0}};
    cusp_jet* psi = nullptr;
    REQUIRE(cusp_jet_create(psi_c, 4, &psi) == CUSP_OK);
    cusp_connection* pushed = nullptr;
    REQUIRE(cusp_connection_pushforward(g, psi, 0.0, &pushed) == CUSP_OK);
    CHECK(cusp_connection_dim(pushed) == 1);
    const std::string text = take([&] {
        char* s = nullptr;
        REQUIRE(cusp_connection_to_json(pushed, 0, &s) == CUSP_OK);
        return s;
    }());
    // delta_2 pushes to 2 delta_1 + delta_2, echelonized to t_1 + t_2.
    CHECK(text.find("[[0.0,0.0],[1.0,0.0],[1.0,0.0],[0.0,0.0]]") != std::string::npos);

    const cusp_complex rows[] = {{0, 0}, {2, 0}, {2, 0}, {0, 0}};
    cusp_connection* expected = nullptr;
    REQUIRE(cusp_connection_create(3, rows, 1, &expected) == CUSP_OK);
    int same = 0;
    REQUIRE(cusp_connection_same_span(pushed, expected, 0.0, &same) == CUSP_OK);
    CHECK(same == 1);
    for (cusp_connection* c : {g, pushed, expected}) {
        cusp_connection_destroy(c);
    }
    cusp_jet_destroy(psi);
}

TEST_CASE("embedding and rendering")
{
    cusp_algebra* a = neil();
    cusp_embedding* e = nullptr;
    REQUIRE(cusp_embedding_create(a, &e) == CUSP_OK);
    cusp_complex p[8];
    cusp_complex q[8];
    size_t np = 0;
    size_t nq = 0;
    REQUIRE(cusp_embedding_component(e, 2, p, 8, &np, q, 8, &nq) == CUSP_OK);
    CHECK(np == 4);
    CHECK(p[3].re == 1.0);
    CHECK(cusp_embedding_component(e, 3, p, 8, &np, q, 8, &nq) == CUSP_ERR_INVALID_ARGUMENT);
    int dense = 0;
    REQUIRE(cusp_embedding_density_check(a, e, &dense) == CUSP_OK);
    CHECK(dense == 1);

    cusp_render* r = nullptr;
    REQUIRE(cusp_embedding_render(e, 4, 8, &r) == CUSP_OK);
    CHECK(cusp_render_count(r) == 32);
    std::vector<cusp_complex> z(32);
    std::vector<cusp_complex> w(32);
    REQUIRE(cusp_render_samples(r, z.data(), w.data(), 32) == CUSP_OK);
    CHECK(z[0].re == 0.0);
    const std::string csv = take([&] {
        char* s = nullptr;
        REQUIRE(cusp_render_csv(r, &s) == CUSP_OK);
        return s;
    }());
    CHECK(csv.rfind("re_z,im_z,re_w,im_w\n", 0) == 0);
    const std::string svg = take([&] {
        char* s = nullptr;
        REQUIRE(cusp_render_svg(r, CUSP_SVG_IMAG, &s) == CUSP_OK);
        return s;
    }());
    CHECK(svg.find("<svg") != std::string::npos);
    cusp_render* empty = nullptr;
    CHECK(cusp_embedding_render(e, 0, 8, &empty) == CUSP_ERR_INVALID_ARGUMENT);
    CHECK(empty == nullptr);

    cusp_render_destroy(r);
    cusp_embedding_destroy(e);
    cusp_algebra_destroy(a);
}
