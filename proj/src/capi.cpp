// SPDX-License-Identifier: Apache-2.0
#include "cusp/cusp.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cusp/algebra.hpp"
#include "cusp/document.hpp"
#include "cusp/embedding.hpp"
#include "cusp/error.hpp"
#include "cusp/moduli.hpp"
#include "cusp/render.hpp"

struct cusp_jet {
    cusp::Jet value;
};
struct cusp_connection {
    cusp::Connection value;
};
struct cusp_algebra {
    cusp::CuspAlgebra value;
};
struct cusp_moduli {
    cusp::ModuliPoint value;
};
struct cusp_embedding {
    cusp::EmbeddingPair value;
};
struct cusp_render {
    std::vector<cusp::CuspSample> samples;
    std::size_t angular_steps;
};

namespace {

thread_local std::string last_error;

cusp_status to_status(cusp::Errc code)
{
    switch (code) {
    case cusp::Errc::invalid_argument:
        return CUSP_ERR_INVALID_ARGUMENT;
    case cusp::Errc::truncation_mismatch:
        return CUSP_ERR_TRUNCATION_MISMATCH;
    case cusp::Errc::not_algebraic:
        return CUSP_ERR_NOT_ALGEBRAIC;
    case cusp::Errc::not_cusp:
        return CUSP_ERR_NOT_CUSP;
    case cusp::Errc::not_simple:
        return CUSP_ERR_NOT_SIMPLE;
    case cusp::Errc::not_member:
        return CUSP_ERR_NOT_MEMBER;
    case cusp::Errc::numerical:
        return CUSP_ERR_NUMERICAL;
    case cusp::Errc::parse:
        return CUSP_ERR_PARSE;
    }
    return CUSP_ERR_INTERNAL;
}

cusp_status fail(cusp_status status, std::string what)
{
    last_error = std::move(what);
    return status;
}

template <typename F>
cusp_status guarded(F&& body)
{
    try {
        return body();
    } catch (const cusp::Error& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(CUSP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CUSP_ERR_INTERNAL, e.what());
    }
}

template <typename... P>
bool any_null(const P*... ptrs)
{
    return ((ptrs == nullptr) || ...);
}

cusp_status null_argument() { return fail(CUSP_ERR_INVALID_ARGUMENT, "null argument"); }

double tolerance_or_default(double tol) { return tol > 0.0 ? tol : cusp::kDefaultTolerance; }

cusp::CVector to_cvector(const cusp_complex* values, std::size_t count)
{
    cusp::CVector out(count);
    for (std::size_t k = 0; k < count; ++k) {
        out[k] = {values[k].re, values[k].im};
    }
    return out;
}

// Query-pattern copy: out == nullptr only reports the count.
template <typename Range>
cusp_status copy_out(const Range& values, cusp_complex* out, std::size_t capacity, std::size_t* count)
{
    const std::size_t n = std::size(values);
    if (count != nullptr) {
        *count = n;
    }
    if (out == nullptr) {
        return CUSP_OK;
    }
    if (capacity < n) {
        return fail(CUSP_ERR_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(capacity) + " values, need " +
                                                   std::to_string(n));
    }
    std::size_t k = 0;
    for (const auto& v : values) {
        out[k++] = {v.real(), v.imag()};
    }
    return CUSP_OK;
}

cusp_status return_string(const std::string& s, char** out)
{
    char* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (buf == nullptr) {
        return fail(CUSP_ERR_INTERNAL, "out of memory");
    }
    std::memcpy(buf, s.c_str(), s.size() + 1);
    *out = buf;
    return CUSP_OK;
}

template <typename Handle, typename Value>
cusp_status emit(Value&& value, Handle** out)
{
    *out = new Handle{std::forward<Value>(value)};
    return CUSP_OK;
}

} // namespace

extern "C" {

const char* cusp_status_message(cusp_status status)
{
    switch (status) {
    case CUSP_OK:
        return "ok";
    case CUSP_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case CUSP_ERR_TRUNCATION_MISMATCH:
        return "truncation mismatch";
    case CUSP_ERR_NOT_ALGEBRAIC:
        return "not algebraic";
    case CUSP_ERR_NOT_CUSP:
        return "not a cusp algebra";
    case CUSP_ERR_NOT_SIMPLE:
        return "not simple";
    case CUSP_ERR_NOT_MEMBER:
        return "not a member of the algebra";
    case CUSP_ERR_NUMERICAL:
        return "numerical failure";
    case CUSP_ERR_PARSE:
        return "malformed document";
    case CUSP_ERR_BUFFER_TOO_SMALL:
        return "buffer too small";
    case CUSP_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char* cusp_last_error(void) { return last_error.c_str(); }

void cusp_string_free(char* s) { std::free(s); }

// ---- jets ------------------------------------------------------------------

cusp_status cusp_jet_create(const cusp_complex* coeffs, size_t count, cusp_jet** out)
{
    if (any_null(coeffs, out) || count == 0) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::Jet(to_cvector(coeffs, count)), out); });
}

cusp_status cusp_jet_from_json(const char* text, cusp_jet** out)
{
    if (any_null(text, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::doc::parse_jet(text), out); });
}

cusp_status cusp_jet_to_json(const cusp_jet* jet, int digits, char** out)
{
    if (any_null(jet, out)) {
        return null_argument();
    }
    return guarded([&] { return return_string(cusp::doc::emit_jet(jet->value, digits), out); });
}

void cusp_jet_destroy(cusp_jet* jet) { delete jet; }

size_t cusp_jet_truncation(const cusp_jet* jet) { return jet != nullptr ? jet->value.truncation() : 0; }

cusp_status cusp_jet_coefficients(const cusp_jet* jet, cusp_complex* out, size_t capacity, size_t* count)
{
    if (jet == nullptr) {
        return null_argument();
    }
    return copy_out(jet->value.coeffs(), out, capacity, count);
}

cusp_status cusp_jet_mul(const cusp_jet* a, const cusp_jet* b, cusp_jet** out)
{
    if (any_null(a, b, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::mul(a->value, b->value), out); });
}

cusp_status cusp_jet_compose(const cusp_jet* g, const cusp_jet* psi, cusp_jet** out)
{
    if (any_null(g, psi, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::compose(g->value, psi->value), out); });
}

cusp_status cusp_jet_revert(const cusp_jet* f, cusp_jet** out)
{
    if (any_null(f, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::revert(f->value), out); });
}

cusp_status cusp_jet_sqrt_order2(const cusp_jet* pi, cusp_jet** out)
{
    if (any_null(pi, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::sqrt_order2(pi->value), out); });
}

cusp_status cusp_jet_exp(const cusp_jet* q, cusp_jet** out)
{
    if (any_null(q, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::exp_jet(q->value), out); });
}

// ---- connections -------------------------------------------------------------

cusp_status cusp_connection_create(size_t truncation, const cusp_complex* taylor_rows, size_t row_count,
                                   cusp_connection** out)
{
    if (out == nullptr || (row_count > 0 && taylor_rows == nullptr)) {
        return null_argument();
    }
    return guarded([&] {
        std::vector<cusp::LocalFunctional> fs;
        for (std::size_t i = 0; i < row_count; ++i) {
            fs.emplace_back(to_cvector(taylor_rows + i * (truncation + 1), truncation + 1));
        }
        return emit(cusp::Connection(truncation, std::move(fs)), out);
    });
}

cusp_status cusp_connection_from_json(const char* text, cusp_connection** out)
{
    if (any_null(text, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::doc::parse_connection(text), out); });
}

cusp_status cusp_connection_to_json(const cusp_connection* gamma, int digits, char** out)
{
    if (any_null(gamma, out)) {
        return null_argument();
    }
    return guarded([&] {
        return return_string(cusp::doc::emit_connection(gamma->value, cusp::doc::Basis::taylor, digits), out);
    });
}

void cusp_connection_destroy(cusp_connection* gamma) { delete gamma; }

size_t cusp_connection_dim(const cusp_connection* gamma) { return gamma != nullptr ? gamma->value.dim() : 0; }

size_t cusp_connection_truncation(const cusp_connection* gamma)
{
    return gamma != nullptr ? gamma->value.truncation() : 0;
}

cusp_status cusp_connection_is_algebraic(const cusp_connection* gamma, int* out)
{
    if (any_null(gamma, out)) {
        return null_argument();
    }
    return guarded([&] {
        *out = cusp::is_algebraic(gamma->value, gamma->value.truncation()) ? 1 : 0;
        return CUSP_OK;
    });
}

cusp_status cusp_connection_pushforward(const cusp_connection* gamma, const cusp_jet* psi, double tolerance,
                                        cusp_connection** out)
{
    if (any_null(gamma, psi, out)) {
        return null_argument();
    }
    return guarded([&] {
        const cusp::Jet germ = psi->value.resized(gamma->value.truncation());
        return emit(cusp::echelonize(cusp::pushforward_connection(gamma->value, germ, tolerance_or_default(tolerance))),
                    out);
    });
}

cusp_status cusp_connection_same_span(const cusp_connection* a, const cusp_connection* b, double tolerance,
                                      int* out)
{
    if (any_null(a, b, out)) {
        return null_argument();
    }
    return guarded([&] {
        const double tol = tolerance > 0.0 ? tolerance : cusp::linalg::kRankTolerance;
        *out = cusp::same_span(a->value, b->value, tol) ? 1 : 0;
        return CUSP_OK;
    });
}

// ---- algebras ----------------------------------------------------------------

cusp_status cusp_algebra_from_connection(const cusp_connection* gamma, size_t truncation, cusp_algebra** out)
{
    if (any_null(gamma, out)) {
        return null_argument();
    }
    return guarded([&] {
        const std::size_t n =
            truncation != 0 ? truncation
                            : std::max(gamma->value.truncation(), cusp::default_truncation(gamma->value.dim()));
        return emit(cusp::CuspAlgebra::from_connection(gamma->value, n), out);
    });
}

cusp_status cusp_algebra_from_moduli(const cusp_moduli* m, size_t truncation, cusp_algebra** out)
{
    if (any_null(m, out)) {
        return null_argument();
    }
    return guarded([&] {
        const std::size_t n = truncation != 0 ? truncation : cusp::default_truncation(m->value.n() + 1);
        return emit(cusp::algebra_from_primitive(m->value, n), out);
    });
}

void cusp_algebra_destroy(cusp_algebra* a) { delete a; }

size_t cusp_algebra_truncation(const cusp_algebra* a) { return a != nullptr ? a->value.truncation() : 0; }

cusp_status cusp_algebra_invariants(const cusp_algebra* a, cusp_invariants* out)
{
    if (any_null(a, out)) {
        return null_argument();
    }
    const auto& inv = a->value.invariants();
    *out = {inv.codimension, inv.order, inv.contact, inv.simple() ? 1 : 0};
    return CUSP_OK;
}

cusp_status cusp_algebra_connection(const cusp_algebra* a, cusp_connection** out)
{
    if (any_null(a, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(a->value.connection(), out); });
}

cusp_status cusp_algebra_contains(const cusp_algebra* a, const cusp_jet* f, int* out)
{
    if (any_null(a, f, out)) {
        return null_argument();
    }
    return guarded([&] {
        *out = a->value.contains(f->value) ? 1 : 0;
        return CUSP_OK;
    });
}

cusp_status cusp_algebra_primitive(const cusp_algebra* a, cusp_jet** out)
{
    if (any_null(a, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::find_primitive(a->value), out); });
}

cusp_status cusp_algebra_filtration(const cusp_algebra* a, size_t* dims, size_t capacity, size_t* count, size_t* n0)
{
    if (a == nullptr) {
        return null_argument();
    }
    return guarded([&] {
        const auto prof = cusp::filtration_profile(a->value);
        if (count != nullptr) {
            *count = prof.dims.size();
        }
        if (n0 != nullptr) {
            *n0 = prof.n0;
        }
        if (dims == nullptr) {
            return CUSP_OK;
        }
        if (capacity < prof.dims.size()) {
            return fail(CUSP_ERR_BUFFER_TOO_SMALL, "filtration buffer too small");
        }
        std::copy(prof.dims.begin(), prof.dims.end(), dims);
        return CUSP_OK;
    });
}

cusp_status cusp_algebra_decompose(const cusp_algebra* a, const cusp_jet* f, const cusp_jet* pi,
                                   cusp_complex* poly, size_t capacity, size_t* count, cusp_jet** remainder)
{
    if (any_null(a, f, pi)) {
        return null_argument();
    }
    return guarded([&] {
        auto d = cusp::decompose(a->value, f->value, pi->value);
        const cusp_status s = copy_out(d.poly, poly, capacity, count);
        if (s != CUSP_OK) {
            return s;
        }
        if (remainder != nullptr) {
            return emit(std::move(d.remainder), remainder);
        }
        return CUSP_OK;
    });
}

cusp_status cusp_algebra_canonical_form(const cusp_algebra* a, cusp_moduli** out)
{
    if (any_null(a, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::canonical_form(a->value), out); });
}

// ---- moduli ------------------------------------------------------------------

cusp_status cusp_moduli_create(const cusp_complex* alphas, size_t n, cusp_moduli** out)
{
    if (out == nullptr || (n > 0 && alphas == nullptr)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::ModuliPoint{to_cvector(alphas, n)}, out); });
}

cusp_status cusp_moduli_from_json(const char* text, cusp_moduli** out)
{
    if (any_null(text, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::doc::parse_moduli(text), out); });
}

cusp_status cusp_moduli_to_json(const cusp_moduli* m, int digits, char** out)
{
    if (any_null(m, out)) {
        return null_argument();
    }
    return guarded([&] { return return_string(cusp::doc::emit_moduli(m->value, digits), out); });
}

void cusp_moduli_destroy(cusp_moduli* m) { delete m; }

size_t cusp_moduli_count(const cusp_moduli* m) { return m != nullptr ? m->value.n() : 0; }

cusp_status cusp_moduli_alphas(const cusp_moduli* m, cusp_complex* out, size_t capacity, size_t* count)
{
    if (m == nullptr) {
        return null_argument();
    }
    return copy_out(m->value.alphas, out, capacity, count);
}

cusp_status cusp_moduli_primitive(const cusp_moduli* m, size_t truncation, cusp_jet** out)
{
    if (any_null(m, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::canonical_primitive(m->value, truncation), out); });
}

cusp_status cusp_moduli_coordinates(const cusp_moduli* m, double tolerance, cusp_moduli** out)
{
    if (any_null(m, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::moduli_coordinates(m->value, tolerance_or_default(tolerance)), out); });
}

cusp_status cusp_moduli_equivalent(const cusp_moduli* a, const cusp_moduli* b, double tolerance, int* equivalent,
                                   cusp_complex* tau)
{
    if (any_null(a, b, equivalent)) {
        return null_argument();
    }
    return guarded([&] {
        const auto t = cusp::equivalent_cusps(a->value, b->value, tolerance_or_default(tolerance));
        *equivalent = t ? 1 : 0;
        if (t && tau != nullptr) {
            *tau = {t->real(), t->imag()};
        }
        return CUSP_OK;
    });
}

cusp_status cusp_local_equivalence_map(const cusp_jet* pi1, const cusp_jet* pi2, double tolerance, cusp_jet** out)
{
    if (any_null(pi1, pi2, out)) {
        return null_argument();
    }
    return guarded(
        [&] { return emit(cusp::local_equivalence_map(pi1->value, pi2->value, tolerance_or_default(tolerance)), out); });
}

// ---- embeddings --------------------------------------------------------------

cusp_status cusp_embedding_create(const cusp_algebra* a, cusp_embedding** out)
{
    if (any_null(a, out)) {
        return null_argument();
    }
    return guarded([&] { return emit(cusp::embedding_pair(a->value), out); });
}

void cusp_embedding_destroy(cusp_embedding* e) { delete e; }

cusp_status cusp_embedding_component(const cusp_embedding* e, int component, cusp_complex* p, size_t p_capacity,
                                     size_t* p_count, cusp_complex* q, size_t q_capacity, size_t* q_count)
{
    if (e == nullptr || (component != 1 && component != 2)) {
        return fail(CUSP_ERR_INVALID_ARGUMENT, "component must be 1 or 2");
    }
    const auto& h = component == 1 ? e->value.h1 : e->value.h2;
    const cusp_status s = copy_out(h.p, p, p_capacity, p_count);
    if (s != CUSP_OK) {
        return s;
    }
    return copy_out(h.q, q, q_capacity, q_count);
}

cusp_status cusp_embedding_density_check(const cusp_algebra* a, const cusp_embedding* e, int* out)
{
    if (any_null(a, e, out)) {
        return null_argument();
    }
    return guarded([&] {
        *out = cusp::density_check(a->value, e->value) ? 1 : 0;
        return CUSP_OK;
    });
}

cusp_status cusp_embedding_render(const cusp_embedding* e, size_t radial_steps, size_t angular_steps,
                                  cusp_render** out)
{
    if (any_null(e, out)) {
        return null_argument();
    }
    return guarded([&] {
        *out = new cusp_render{cusp::render_cusp(e->value, radial_steps, angular_steps), angular_steps};
        return CUSP_OK;
    });
}

void cusp_render_destroy(cusp_render* r) { delete r; }

size_t cusp_render_count(const cusp_render* r) { return r != nullptr ? r->samples.size() : 0; }

cusp_status cusp_render_samples(const cusp_render* r, cusp_complex* z, cusp_complex* w, size_t capacity)
{
    if (any_null(r, z, w)) {
        return null_argument();
    }
    if (capacity < r->samples.size()) {
        return fail(CUSP_ERR_BUFFER_TOO_SMALL, "sample buffer too small");
    }
    for (std::size_t k = 0; k < r->samples.size(); ++k) {
        z[k] = {r->samples[k].z.real(), r->samples[k].z.imag()};
        w[k] = {r->samples[k].w.real(), r->samples[k].w.imag()};
    }
    return CUSP_OK;
}

cusp_status cusp_render_csv(const cusp_render* r, char** out)
{
    if (any_null(r, out)) {
        return null_argument();
    }
    return guarded([&] { return return_string(cusp::samples_to_csv(r->samples), out); });
}

cusp_status cusp_render_svg(const cusp_render* r, cusp_svg_axes axes, char** out)
{
    if (any_null(r, out)) {
        return null_argument();
    }
    return guarded([&] {
        const auto a = axes == CUSP_SVG_IMAG ? cusp::SvgAxes::imag : cusp::SvgAxes::real;
        return return_string(cusp::samples_to_svg(r->samples, r->angular_steps, a), out);
    });
}

} // extern "C"
