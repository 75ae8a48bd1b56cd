// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cusp/embedding.hpp"

namespace cusp {

struct CuspSample {
    Complex zeta;
    Complex z; // h1(zeta)
    Complex w; // h2(zeta)
};

/// Samples (h1, h2) on the polar grid zeta = r e^{i theta} with
/// r = i / radial_steps (i < radial_steps) and theta = 2 pi j / angular_steps.
/// Ring i occupies samples [i * angular_steps, (i + 1) * angular_steps).
std::vector<CuspSample> render_cusp(const EmbeddingPair& pair, std::size_t radial_steps,
                                    std::size_t angular_steps);

enum class SvgAxes { real, imag };

/// Header `re_z,im_z,re_w,im_w`, one row per sample, %.17g.
std::string samples_to_csv(const std::vector<CuspSample>& samples);

/// One closed polyline per radial ring, projecting (z, w) onto the chosen
/// parts.
std::string samples_to_svg(const std::vector<CuspSample>& samples, std::size_t angular_steps,
                           SvgAxes axes = SvgAxes::real);

} // namespace cusp
