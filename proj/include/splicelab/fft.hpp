// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace splicelab {

/// One-sided DFT of a real frame: len/2 + 1 complex bins up to Nyquist.
/// Backed by FFTW (deterministic plans); plan creation is serialized,
/// execution is safe from concurrent threads.
std::vector<std::complex<double>> real_dft(std::span<const double> frame);

/// One-sided magnitude spectrum, |X[k]| for k in [0, len/2].
/// frame length >= 2 required.
std::vector<double> dft_magnitude(std::span<const double> frame);

}  // namespace splicelab
