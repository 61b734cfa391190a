// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace splicelab {

enum class WindowKind {
    rectangular,
    hann_periodic,   // denominator L; COLA at hop L/2
    hann_symmetric,  // denominator L-1
};

struct WindowFunction {
    WindowKind kind = WindowKind::rectangular;
    std::vector<double> values;

    std::size_t length() const { return values.size(); }
};

/// length >= 2 required. hann_periodic[n] = 0.5*(1 - cos(2*pi*n/L)).
WindowFunction make_window(WindowKind kind, std::size_t length);

WindowKind window_kind_from_string(const std::string& name);
std::string to_string(WindowKind kind);

}  // namespace splicelab
