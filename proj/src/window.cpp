// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/window.hpp"

#include <cmath>
#include <numbers>

#include "splicelab/errors.hpp"

namespace splicelab {

WindowFunction make_window(WindowKind kind, std::size_t length) {
    if (length < 2)
        throw InvalidArgument("window length must be >= 2, got " + std::to_string(length));

    WindowFunction w;
    w.kind = kind;
    w.values.resize(length);

    const double two_pi = 2.0 * std::numbers::pi;
    switch (kind) {
        case WindowKind::rectangular:
            for (auto& v : w.values) v = 1.0;
            break;
        case WindowKind::hann_periodic:
            for (std::size_t n = 0; n < length; ++n)
                w.values[n] = 0.5 * (1.0 - std::cos(two_pi * static_cast<double>(n) / static_cast<double>(length)));
            break;
        case WindowKind::hann_symmetric:
            for (std::size_t n = 0; n < length; ++n)
                w.values[n] = 0.5 * (1.0 - std::cos(two_pi * static_cast<double>(n) / static_cast<double>(length - 1)));
            break;
    }
    return w;
}

WindowKind window_kind_from_string(const std::string& name) {
    if (name == "rect" || name == "rectangular") return WindowKind::rectangular;
    if (name == "hann" || name == "hann_periodic") return WindowKind::hann_periodic;
    if (name == "hann_symmetric") return WindowKind::hann_symmetric;
    throw InvalidArgument("unknown window kind: " + name);
}

std::string to_string(WindowKind kind) {
    switch (kind) {
        case WindowKind::rectangular: return "rectangular";
        case WindowKind::hann_periodic: return "hann_periodic";
        case WindowKind::hann_symmetric: return "hann_symmetric";
    }
    return "?";
}

}  // namespace splicelab
