// SPDX-License-Identifier: Apache-2.0
//
// cusp-tool: command-line front end over the C API.
//
// Exit codes: 0 success, 1 malformed input, 2 not algebraic,
// 3 not simple / not a cusp algebra, 4 inequivalent.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cusp/cusp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitNotAlgebraic = 2;
constexpr int kExitNotSimple = 3;
constexpr int kExitInequivalent = 4;

constexpr int kReportDigits = 12;

struct Failure {
    int exit_code;
    std::string message;
};

template <typename T, void (*Destroy)(T*)>
struct Deleter {
    void operator()(T* p) const { Destroy(p); }
};

using JetPtr = std::unique_ptr<cusp_jet, Deleter<cusp_jet, cusp_jet_destroy>>;
using ConnectionPtr = std::unique_ptr<cusp_connection, Deleter<cusp_connection, cusp_connection_destroy>>;
using AlgebraPtr = std::unique_ptr<cusp_algebra, Deleter<cusp_algebra, cusp_algebra_destroy>>;
using ModuliPtr = std::unique_ptr<cusp_moduli, Deleter<cusp_moduli, cusp_moduli_destroy>>;
using EmbeddingPtr = std::unique_ptr<cusp_embedding, Deleter<cusp_embedding, cusp_embedding_destroy>>;
using RenderPtr = std::unique_ptr<cusp_render, Deleter<cusp_render, cusp_render_destroy>>;

int exit_code_for(cusp_status s)
{
    switch (s) {
    case CUSP_ERR_NOT_ALGEBRAIC:
        return kExitNotAlgebraic;
    case CUSP_ERR_NOT_CUSP:
    case CUSP_ERR_NOT_SIMPLE:
        return kExitNotSimple;
    default:
        return kExitMalformed;
    }
}

void check(cusp_status s)
{
    if (s != CUSP_OK) {
        throw Failure{exit_code_for(s), std::string(cusp_status_message(s)) + ": " + cusp_last_error()};
    }
}

std::string take_string(char* s)
{
    std::string out(s);
    cusp_string_free(s);
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{kExitMalformed, "cannot read " + path};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Jet arguments may be inline JSON or a path to a jet document.
std::string jet_text(const std::string& arg)
{
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
        return arg;
    }
    return read_file(arg);
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw Failure{kExitMalformed, "cannot write " + path};
    }
}

double round12(double x)
{
    if (x == 0.0) {
        return 0.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

// Components below 1e-14 of the modulus are rounding noise (e.g. cos(pi/2)).
std::string format_complex(cusp_complex c)
{
    const double modulus = std::hypot(c.re, c.im);
    if (std::abs(c.re) <= 1e-14 * modulus) {
        c.re = 0.0;
    }
    if (std::abs(c.im) <= 1e-14 * modulus) {
        c.im = 0.0;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "[%.*g, %.*g]", kReportDigits, round12(c.re), kReportDigits, round12(c.im));
    return buf;
}

std::string format_list(const std::vector<cusp_complex>& values)
{
    std::string out = "[";
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += (k ? ", " : "") + format_complex(values[k]);
    }
    return out + "]";
}

ConnectionPtr load_connection(const std::string& path)
{
    cusp_connection* raw = nullptr;
    check(cusp_connection_from_json(read_file(path).c_str(), &raw));
    return ConnectionPtr(raw);
}

ModuliPtr load_moduli(const std::string& path)
{
    cusp_moduli* raw = nullptr;
    check(cusp_moduli_from_json(read_file(path).c_str(), &raw));
    return ModuliPtr(raw);
}

JetPtr parse_jet(const std::string& text)
{
    cusp_jet* raw = nullptr;
    check(cusp_jet_from_json(text.c_str(), &raw));
    return JetPtr(raw);
}

// Algebra from either document kind; a connection document is checked for
// algebraicity first so that the exit code separates the two failures.
AlgebraPtr load_algebra(const std::string& path)
{
    const std::string text = read_file(path);
    cusp_algebra* raw = nullptr;
    cusp_connection* conn = nullptr;
    if (cusp_connection_from_json(text.c_str(), &conn) == CUSP_OK) {
        ConnectionPtr owned(conn);
        check(cusp_algebra_from_connection(conn, 0, &raw));
        return AlgebraPtr(raw);
    }
    const std::string conn_error = cusp_last_error();
    cusp_moduli* m = nullptr;
    if (cusp_moduli_from_json(text.c_str(), &m) == CUSP_OK) {
        ModuliPtr owned(m);
        check(cusp_algebra_from_moduli(m, 0, &raw));
        return AlgebraPtr(raw);
    }
    throw Failure{kExitMalformed, "not a connection or moduli document: " + conn_error};
}

std::vector<cusp_complex> jet_coefficients(const cusp_jet* j)
{
    std::size_t n = 0;
    check(cusp_jet_coefficients(j, nullptr, 0, &n));
    std::vector<cusp_complex> out(n);
    check(cusp_jet_coefficients(j, out.data(), out.size(), &n));
    return out;
}

std::vector<cusp_complex> moduli_alphas(const cusp_moduli* m)
{
    std::size_t n = 0;
    check(cusp_moduli_alphas(m, nullptr, 0, &n));
    std::vector<cusp_complex> out(n);
    check(cusp_moduli_alphas(m, out.data(), out.size(), &n));
    return out;
}

std::string moduli_document(const std::vector<cusp_complex>& alphas, const std::vector<cusp_complex>& coordinates)
{
    return "{\"alphas\": " + format_list(alphas) + ", \"moduli_coordinates\": " + format_list(coordinates) +
           ", \"n\": " + std::to_string(alphas.size()) + "}\n";
}

// ---- subcommands -------------------------------------------------------------

int cmd_invariants(const std::string& path)
{
    const auto gamma = load_connection(path);
    int algebraic = 0;
    check(cusp_connection_is_algebraic(gamma.get(), &algebraic));
    if (!algebraic) {
        std::cout << "algebraic=false\nnot algebraic\n";
        return kExitNotAlgebraic;
    }
    std::cout << "algebraic=true\n";
    cusp_algebra* raw = nullptr;
    const cusp_status s = cusp_algebra_from_connection(gamma.get(), 0, &raw);
    if (s == CUSP_ERR_NOT_CUSP) {
        std::cout << "not a cusp algebra\n";
        return kExitNotSimple;
    }
    check(s);
    const AlgebraPtr a(raw);
    cusp_invariants inv{};
    check(cusp_algebra_invariants(a.get(), &inv));
    std::cout << "cod=" << inv.codimension << " ord=" << inv.order << " con=" << inv.contact
              << " simple=" << (inv.simple ? "true" : "false") << "\n";
    return kExitOk;
}

int cmd_canonical(const std::string& path, double tol)
{
    const auto a = load_algebra(path);
    cusp_moduli* raw = nullptr;
    check(cusp_algebra_canonical_form(a.get(), &raw));
    const ModuliPtr m(raw);
    check(cusp_moduli_coordinates(m.get(), tol, &raw));
    const ModuliPtr coords(raw);
    std::cout << moduli_document(moduli_alphas(m.get()), moduli_alphas(coords.get()));
    return kExitOk;
}

int cmd_equiv(const std::string& path_a, const std::string& path_b, double tol)
{
    const auto a = load_moduli(path_a);
    const auto b = load_moduli(path_b);
    if (cusp_moduli_count(a.get()) != cusp_moduli_count(b.get())) {
        throw Failure{kExitMalformed, "moduli documents have different n"};
    }
    int equivalent = 0;
    cusp_complex tau{};
    check(cusp_moduli_equivalent(a.get(), b.get(), tol, &equivalent, &tau));
    if (!equivalent) {
        std::cout << "inequivalent\n";
        return kExitInequivalent;
    }
    std::cout << "tau=" << format_complex(tau) << "\n";
    return kExitOk;
}

int cmd_pushforward(const std::string& path, const std::string& psi_text, double tol)
{
    const auto gamma = load_connection(path);
    const auto psi = parse_jet(jet_text(psi_text));
    cusp_connection* raw = nullptr;
    check(cusp_connection_pushforward(gamma.get(), psi.get(), tol, &raw));
    const ConnectionPtr pushed(raw);
    char* text = nullptr;
    check(cusp_connection_to_json(pushed.get(), kReportDigits, &text));
    std::cout << take_string(text);
    return kExitOk;
}

int cmd_decompose(const std::string& algebra_path, const std::string& jet_path, const std::string& primitive_path)
{
    const auto a = load_algebra(algebra_path);
    const auto f = parse_jet(jet_text(jet_path));
    JetPtr pi;
    if (!primitive_path.empty()) {
        pi = parse_jet(jet_text(primitive_path));
    } else {
        cusp_moduli* raw = nullptr;
        check(cusp_algebra_canonical_form(a.get(), &raw));
        const ModuliPtr m(raw);
        cusp_jet* jraw = nullptr;
        check(cusp_moduli_primitive(m.get(), cusp_jet_truncation(f.get()), &jraw));
        pi.reset(jraw);
    }
    std::size_t count = 0;
    check(cusp_algebra_decompose(a.get(), f.get(), pi.get(), nullptr, 0, &count, nullptr));
    std::vector<cusp_complex> poly(count);
    cusp_jet* rraw = nullptr;
    check(cusp_algebra_decompose(a.get(), f.get(), pi.get(), poly.data(), poly.size(), &count, &rraw));
    const JetPtr remainder(rraw);
    std::cout << "{\"n0\": " << (count - 1) << ", \"primitive\": " << format_list(jet_coefficients(pi.get()))
              << ", \"p\": " << format_list(poly) << ", \"remainder\": "
              << format_list(jet_coefficients(remainder.get())) << "}\n";
    return kExitOk;
}

struct RenderOptions {
    bool render = false;
    std::string csv;
    std::string svg;
    std::size_t radial_steps = 64;
    std::size_t angular_steps = 256;
    std::string axes = "real";
};

int cmd_embed(const std::string& path, RenderOptions opts)
{
    const auto a = load_algebra(path);
    cusp_invariants inv{};
    check(cusp_algebra_invariants(a.get(), &inv));
    cusp_embedding* raw = nullptr;
    check(cusp_embedding_create(a.get(), &raw));
    const EmbeddingPtr e(raw);

    std::cout << "n=" << inv.codimension - 1 << "\n";
    for (int component = 1; component <= 2; ++component) {
        std::size_t np = 0;
        std::size_t nq = 0;
        check(cusp_embedding_component(e.get(), component, nullptr, 0, &np, nullptr, 0, &nq));
        std::vector<cusp_complex> p(np);
        std::vector<cusp_complex> q(nq);
        check(cusp_embedding_component(e.get(), component, p.data(), np, &np, q.data(), nq, &nq));
        std::cout << "h" << component << ".p=" << format_list(p) << "\n";
        std::cout << "h" << component << ".q=" << format_list(q) << "\n";
    }
    int dense = 0;
    check(cusp_embedding_density_check(a.get(), e.get(), &dense));
    std::cout << "density=" << (dense ? "true" : "false") << "\n";

    if (opts.render) {
        if (opts.csv.empty()) {
            opts.csv = "cusp.csv";
        }
        if (opts.svg.empty()) {
            opts.svg = "cusp.svg";
        }
    }
    if (opts.csv.empty() && opts.svg.empty()) {
        return kExitOk;
    }
    cusp_render* rraw = nullptr;
    check(cusp_embedding_render(e.get(), opts.radial_steps, opts.angular_steps, &rraw));
    const RenderPtr r(rraw);
    std::cout << "samples=" << cusp_render_count(r.get()) << "\n";
    if (!opts.csv.empty()) {
        char* text = nullptr;
        check(cusp_render_csv(r.get(), &text));
        write_file(opts.csv, take_string(text));
        std::cout << "csv=" << opts.csv << "\n";
    }
    if (!opts.svg.empty()) {
        char* text = nullptr;
        check(cusp_render_svg(r.get(), opts.axes == "imag" ? CUSP_SVG_IMAG : CUSP_SVG_REAL, &text));
        write_file(opts.svg, take_string(text));
        std::cout << "svg=" << opts.svg << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cusp algebra toolkit: invariants, canonical forms, equivalence, embeddings"};
    app.require_subcommand(1);
    app.fallthrough();
    double tolerance = 1e-9;
    app.add_option("--tolerance", tolerance, "Absolute comparison tolerance")->capture_default_str();

    std::string input;
    std::string second;
    std::string psi;
    std::string primitive;
    RenderOptions render;

    auto* invariants = app.add_subcommand("invariants", "Codimension, order and contact of a connection");
    invariants->add_option("connection", input, "Connection document")->required();

    auto* canonical = app.add_subcommand("canonical", "Canonical parameters and moduli coordinates");
    canonical->add_option("document", input, "Connection or moduli document")->required();

    auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two moduli points");
    equiv->add_option("a", input, "First moduli document")->required();
    equiv->add_option("b", second, "Second moduli document")->required();

    auto* push = app.add_subcommand("pushforward", "Push a connection forward along a univalent germ");
    push->add_option("connection", input, "Connection document")->required();
    push->add_option("--psi", psi, "Germ as inline JSON (list of [re, im] pairs or jet document) or a path")->required();

    auto* decomp = app.add_subcommand("decompose", "Write a member as p(pi) + z^{2 n0 + 2} g");
    decomp->add_option("document", input, "Connection or moduli document")->required();
    decomp->add_option("jet", second, "Member as inline JSON or a jet document path")->required();
    decomp->add_option("--primitive", primitive, "Primitive as inline JSON or a jet document path (default: canonical)");

    auto* embed = app.add_subcommand("embed", "Two-function embedding and optional rendering");
    embed->add_option("document", input, "Connection or moduli document")->required();
    embed->add_flag("--render", render.render, "Write cusp.csv and cusp.svg unless paths are given");
    embed->add_option("--csv", render.csv, "CSV output path");
    embed->add_option("--svg", render.svg, "SVG output path");
    embed->add_option("--radial-steps", render.radial_steps, "Radial grid size")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    embed->add_option("--angular-steps", render.angular_steps, "Angular grid size")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    embed->add_option("--svg-axes", render.axes, "Projection: real or imag")
        ->capture_default_str()
        ->check(CLI::IsMember({"real", "imag"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitMalformed;
    }

    try {
        if (*invariants) {
            return cmd_invariants(input);
        }
        if (*canonical) {
            return cmd_canonical(input, tolerance);
        }
        if (*equiv) {
            return cmd_equiv(input, second, tolerance);
        }
        if (*push) {
            return cmd_pushforward(input, psi, tolerance);
        }
        if (*decomp) {
            return cmd_decompose(input, second, primitive);
        }
        if (*embed) {
            return cmd_embed(input, render);
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        if (f.exit_code == kExitNotAlgebraic) {
            std::cout << "not algebraic\n";
        } else if (f.exit_code == kExitNotSimple) {
            std::cout << "not simple\n";
        }
        return f.exit_code;
    }
    return kExitMalformed;
}
