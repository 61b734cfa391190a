// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>

#include "splicelab/audio.hpp"

namespace splicelab {

/// Container format for write_wav. Mono only; pcm16 samples decode as
/// value / 32768 (so -32768 maps to -1.0), float32 is stored verbatim.
struct WavFormat {
    enum class Encoding { pcm16, float32 };
    Encoding encoding = Encoding::pcm16;
    int sample_rate = 0;  // 0 = take the buffer's rate
};

/// Strict RIFF/WAVE reader: mono, PCM16 or IEEE float32. Unknown chunks are
/// skipped; structural damage (truncated chunks, missing fmt/data,
/// unsupported encodings, multichannel audio) raises ParseError naming the
/// offending chunk.
AudioBuffer read_wav(const std::filesystem::path& path);

struct WavWriteStats {
    std::size_t clamped = 0;  // pcm16 samples outside [-1, 1] that were clamped
};

/// Canonical RIFF layout (fmt + data), byte-identical output for identical
/// inputs. pcm16 values outside [-1, 1] are clamped and counted.
WavWriteStats write_wav(const std::filesystem::path& path, const AudioBuffer& x,
                        const WavFormat& fmt);

}  // namespace splicelab
