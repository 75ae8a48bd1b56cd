// SPDX-License-Identifier: Apache-2.0
#include "cusp/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "cusp/error.hpp"

namespace cusp {

namespace {

constexpr double kCanvas = 512.0;
constexpr double kMargin = 16.0;

void append_format(std::string& out, const char* fmt, double a, double b)
{
    char buf[96];
    const int n = std::snprintf(buf, sizeof buf, fmt, a, b);
    out.append(buf, static_cast<std::size_t>(n));
}

} // namespace

std::vector<CuspSample> render_cusp(const EmbeddingPair& pair, std::size_t radial_steps,
                                    std::size_t angular_steps)
{
    if (radial_steps == 0 || angular_steps == 0) {
        throw Error(Errc::invalid_argument, "render_cusp: step counts must be positive");
    }
    std::vector<CuspSample> out;
    out.reserve(radial_steps * angular_steps);
    for (std::size_t i = 0; i < radial_steps; ++i) {
        const double r = static_cast<double>(i) / static_cast<double>(radial_steps);
        for (std::size_t j = 0; j < angular_steps; ++j) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angular_steps);
            const Complex zeta = std::polar(r, theta);
            out.push_back({zeta, pair.h1(zeta), pair.h2(zeta)});
        }
    }
    return out;
}

std::string samples_to_csv(const std::vector<CuspSample>& samples)
{
    std::string out = "re_z,im_z,re_w,im_w\n";
    char buf[160];
    for (const auto& s : samples) {
        const int n = std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.z.real(), s.z.imag(),
                                    s.w.real(), s.w.imag());
        out.append(buf, static_cast<std::size_t>(n));
    }
    return out;
}

std::string samples_to_svg(const std::vector<CuspSample>& samples, std::size_t angular_steps, SvgAxes axes)
{
    if (angular_steps == 0) {
        throw Error(Errc::invalid_argument, "samples_to_svg: angular_steps must be positive");
    }
    auto project = [axes](const CuspSample& s) {
        return axes == SvgAxes::real ? std::pair{s.z.real(), s.w.real()} : std::pair{s.z.imag(), s.w.imag()};
    };
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (const auto& s : samples) {
        const auto [x, y] = project(s);
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-12});
    const double scale = (kCanvas - 2.0 * kMargin) / span;

    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n"
        "<rect width=\"512\" height=\"512\" fill=\"white\"/>\n";
    for (std::size_t start = 0; start < samples.size(); start += angular_steps) {
        const std::size_t end = std::min(samples.size(), start + angular_steps);
        out += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.5\" points=\"";
        for (std::size_t k = start; k <= end; ++k) {
            const auto [x, y] = project(samples[k == end ? start : k]);
            append_format(out, k == start ? "%.4f,%.4f" : " %.4f,%.4f", kMargin + (x - xmin) * scale,
                          kCanvas - kMargin - (y - ymin) * scale);
        }
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace cusp
