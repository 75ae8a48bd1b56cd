// SPDX-License-Identifier: Apache-2.0
#include "cusp/document.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "cusp/error.hpp"

namespace cusp::doc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::parse, what); }

json parse_object(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) {
        fail("document must be a JSON object");
    }
    return j;
}

std::size_t read_count(const json& j, const char* key)
{
    if (!j.contains(key)) {
        fail(std::string("missing key \"") + key + "\"");
    }
    const json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        fail(std::string("\"") + key + "\" must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

Complex read_complex(const json& v)
{
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        fail("complex values must be [re, im] pairs");
    }
    return {v[0].get<double>(), v[1].get<double>()};
}

CVector read_complex_list(const json& v, const char* what)
{
    if (!v.is_array()) {
        fail(std::string(what) + " must be a list of [re, im] pairs");
    }
    CVector out;
    out.reserve(v.size());
    for (const auto& x : v) {
        out.push_back(read_complex(x));
    }
    return out;
}

json complex_list(const CVector& values, int digits)
{
    json arr = json::array();
    for (const auto& c : values) {
        arr.push_back(json::array({round_significant(c.real(), digits), round_significant(c.imag(), digits)}));
    }
    return arr;
}

double factorial(std::size_t k)
{
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) {
        f *= static_cast<double>(i);
    }
    return f;
}

} // namespace

double round_significant(double x, int digits)
{
    if (x == 0.0) {
        return 0.0;
    }
    if (digits <= 0) {
        return x;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

Kind detect(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error&) {
        return Kind::unknown;
    }
    if (j.is_array()) {
        return Kind::jet;
    }
    if (!j.is_object()) {
        return Kind::unknown;
    }
    if (j.contains("functionals")) {
        return Kind::connection;
    }
    if (j.contains("alphas")) {
        return Kind::moduli;
    }
    if (j.contains("coeffs")) {
        return Kind::jet;
    }
    return Kind::unknown;
}

Connection parse_connection(std::string_view text)
{
    const json j = parse_object(text);
    const std::size_t n = read_count(j, "truncation");
    Basis basis = Basis::taylor;
    if (j.contains("basis")) {
        const json& b = j.at("basis");
        if (b == "taylor") {
            basis = Basis::taylor;
        } else if (b == "derivative") {
            basis = Basis::derivative;
        } else {
            fail("\"basis\" must be \"taylor\" or \"derivative\"");
        }
    }
    if (!j.contains("functionals") || !j.at("functionals").is_array()) {
        fail("\"functionals\" must be a list");
    }
    std::vector<LocalFunctional> fs;
    for (const auto& row : j.at("functionals")) {
        CVector v = read_complex_list(row, "each functional");
        if (v.size() != n + 1) {
            fail("functional has " + std::to_string(v.size()) + " entries, expected truncation + 1 = " +
                 std::to_string(n + 1));
        }
        fs.push_back(basis == Basis::taylor ? LocalFunctional(std::move(v)) : LocalFunctional::from_derivative(v));
    }
    return Connection(n, std::move(fs));
}

std::string emit_connection(const Connection& gamma, Basis basis, int digits)
{
    json j;
    j["truncation"] = gamma.truncation();
    j["basis"] = basis == Basis::taylor ? "taylor" : "derivative";
    json rows = json::array();
    for (const auto& f : gamma.functionals()) {
        CVector v = f.taylor();
        if (basis == Basis::derivative) {
            for (std::size_t k = 0; k < v.size(); ++k) {
                v[k] /= factorial(k);
            }
        }
        rows.push_back(complex_list(v, digits));
    }
    j["functionals"] = std::move(rows);
    return j.dump() + "\n";
}

ModuliPoint parse_moduli(std::string_view text)
{
    const json j = parse_object(text);
    const std::size_t n = read_count(j, "n");
    if (!j.contains("alphas")) {
        fail("missing key \"alphas\"");
    }
    ModuliPoint m{read_complex_list(j.at("alphas"), "\"alphas\"")};
    if (m.n() != n) {
        fail("\"alphas\" has " + std::to_string(m.n()) + " entries but n = " + std::to_string(n));
    }
    return m;
}

std::string emit_moduli(const ModuliPoint& m, int digits)
{
    json j;
    j["n"] = m.n();
    j["alphas"] = complex_list(m.alphas, digits);
    return j.dump() + "\n";
}

Jet parse_jet(std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("malformed JSON: ") + e.what());
    }
    if (j.is_array()) {
        CVector c = read_complex_list(j, "jet");
        if (c.empty()) {
            fail("jet needs at least one coefficient");
        }
        return Jet(std::move(c));
    }
    if (!j.is_object()) {
        fail("jet must be an object or a list of [re, im] pairs");
    }
    const std::size_t n = read_count(j, "truncation");
    if (!j.contains("coeffs")) {
        fail("missing key \"coeffs\"");
    }
    CVector c = read_complex_list(j.at("coeffs"), "\"coeffs\"");
    if (c.size() != n + 1) {
        fail("\"coeffs\" must have truncation + 1 entries");
    }
    return Jet(std::move(c));
}

std::string emit_jet(const Jet& f, int digits)
{
    json j;
    j["truncation"] = f.truncation();
    j["coeffs"] = complex_list(CVector(f.coeffs().begin(), f.coeffs().end()), digits);
    return j.dump() + "\n";
}

std::string format_complex_list(const CVector& values, int digits) { return complex_list(values, digits).dump(); }

} // namespace cusp::doc
