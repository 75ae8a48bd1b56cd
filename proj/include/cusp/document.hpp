// SPDX-License-Identifier: Apache-2.0
#pragma once

// Text documents exchanged by the tools. All are JSON objects; complex
// numbers are always [re, im] pairs.
//
//   connection: {"truncation": N, "basis": "taylor" | "derivative",
//                "functionals": [[[re, im], ... N+1 entries], ...]}
//   moduli:     {"n": n, "alphas": [[re, im], ... n entries]}
//   jet:        {"truncation": N, "coeffs": [[re, im], ... N+1 entries]}
//
// Emitters take a significant-digit count; 0 keeps full round-trip
// precision.

#include <string>
#include <string_view>

#include "cusp/algebra.hpp"
#include "cusp/functional.hpp"
#include "cusp/jet.hpp"

namespace cusp::doc {

enum class Basis { taylor, derivative };
enum class Kind { connection, moduli, jet, unknown };

Kind detect(std::string_view text);

Connection parse_connection(std::string_view text);
std::string emit_connection(const Connection& gamma, Basis basis = Basis::taylor, int digits = 0);

ModuliPoint parse_moduli(std::string_view text);
std::string emit_moduli(const ModuliPoint& m, int digits = 0);

/// Accepts a jet document or a bare list of [re, im] pairs (truncation =
/// length - 1).
Jet parse_jet(std::string_view text);
std::string emit_jet(const Jet& f, int digits = 0);

/// A complex list rendered as "[[re, im], ...]" in compact JSON.
std::string format_complex_list(const CVector& values, int digits = 0);

/// One scalar rounded to `digits` significant digits (0 = unchanged);
/// negative zero becomes zero.
double round_significant(double x, int digits);

} // namespace cusp::doc
