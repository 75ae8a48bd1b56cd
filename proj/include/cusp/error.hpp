// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cusp {

enum class Errc {
    invalid_argument,
    truncation_mismatch,
    not_algebraic,
    not_cusp,
    not_simple,
    not_member,
    numerical,
    parse,
};

// Single exception type thrown by the core; the C API maps `code()` onto
// cusp_status values.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace cusp
