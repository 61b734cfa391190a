// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace splicelab {

// Base class for everything splicelab throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

// Malformed input file (WAV chunk, label line, manifest row, ...).
struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Track has no interior silent region usable as a splice anchor.
struct NoSilenceError : Error {
    using Error::Error;
};

// Segment or track too short for the requested analysis/crossfade.
struct TooShortError : Error {
    using Error::Error;
};

// Not enough usable source pairs to build the requested corpus.
struct CorpusExhaustedError : Error {
    using Error::Error;
};

// SNR is undefined for an all-zero signal.
struct UndefinedSnrError : Error {
    using Error::Error;
};

// Signal shorter than one analysis window.
struct EmptySpectrogramError : Error {
    using Error::Error;
};

}  // namespace splicelab
