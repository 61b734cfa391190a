// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/wav.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "splicelab/errors.hpp"

namespace splicelab {

namespace {

static_assert(std::endian::native == std::endian::little,
              "WAV I/O assumes a little-endian host");

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

struct Reader {
    std::vector<char> bytes;
    std::size_t pos = 0;
    std::string name;

    explicit Reader(const std::filesystem::path& path) : name(path.string()) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError("cannot open wav file: " + name);
        in.seekg(0, std::ios::end);
        bytes.resize(static_cast<std::size_t>(in.tellg()));
        in.seekg(0);
        in.read(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!in) throw IoError("read failed: " + name);
    }

    std::size_t remaining() const { return bytes.size() - pos; }

    void need(std::size_t n, const char* what) const {
        if (remaining() < n)
            throw ParseError(name + ": truncated " + what + " (need " + std::to_string(n) +
                             " bytes, have " + std::to_string(remaining()) + ")");
    }

    std::string tag() {
        need(4, "chunk id");
        std::string t(bytes.data() + pos, 4);
        pos += 4;
        return t;
    }

    std::uint32_t u32() {
        need(4, "u32");
        std::uint32_t v;
        std::memcpy(&v, bytes.data() + pos, 4);
        pos += 4;
        return v;
    }

    std::uint16_t u16() {
        need(2, "u16");
        std::uint16_t v;
        std::memcpy(&v, bytes.data() + pos, 2);
        pos += 2;
        return v;
    }
};

void put_u32(std::ofstream& out, std::uint32_t v) {
    out.write(reinterpret_cast<const char*>(&v), 4);
}
void put_u16(std::ofstream& out, std::uint16_t v) {
    out.write(reinterpret_cast<const char*>(&v), 2);
}

}  // namespace

AudioBuffer read_wav(const std::filesystem::path& path) {
    Reader r(path);

    if (r.tag() != "RIFF") throw ParseError(r.name + ": missing RIFF magic");
    r.u32();  // RIFF size; we trust chunk sizes below instead
    if (r.tag() != "WAVE") throw ParseError(r.name + ": not a WAVE file");

    bool have_fmt = false;
    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    AudioBuffer out;
    bool have_data = false;

    while (r.remaining() >= 8) {
        const std::string id = r.tag();
        const std::uint32_t size = r.u32();
        if (id == "fmt ") {
            if (size < 16) throw ParseError(r.name + ": fmt chunk too small");
            r.need(size, "fmt chunk");
            const std::size_t chunk_end = r.pos + size;
            format = r.u16();
            channels = r.u16();
            rate = r.u32();
            r.u32();  // byte rate
            r.u16();  // block align
            bits = r.u16();
            r.pos = chunk_end;
            if (format == kFormatExtensible)
                throw ParseError(r.name + ": fmt chunk uses WAVE_FORMAT_EXTENSIBLE (unsupported)");
            if (format != kFormatPcm && format != kFormatFloat)
                throw ParseError(r.name + ": fmt chunk has unsupported encoding tag " +
                                 std::to_string(format));
            if (channels != 1)
                throw ParseError(r.name + ": fmt chunk declares " + std::to_string(channels) +
                                 " channels; only mono is supported");
            if (rate == 0) throw ParseError(r.name + ": fmt chunk declares zero sample rate");
            if (format == kFormatPcm && bits != 16)
                throw ParseError(r.name + ": fmt chunk: PCM must be 16-bit, got " +
                                 std::to_string(bits));
            if (format == kFormatFloat && bits != 32)
                throw ParseError(r.name + ": fmt chunk: float must be 32-bit, got " +
                                 std::to_string(bits));
            have_fmt = true;
        } else if (id == "data") {
            if (!have_fmt) throw ParseError(r.name + ": data chunk before fmt chunk");
            r.need(size, "data chunk");
            if (format == kFormatPcm) {
                if (size % 2 != 0) throw ParseError(r.name + ": data chunk: odd PCM16 byte count");
                const std::size_t n = size / 2;
                out.samples.resize(n);
                for (std::size_t i = 0; i < n; ++i) {
                    std::int16_t v;
                    std::memcpy(&v, r.bytes.data() + r.pos + 2 * i, 2);
                    out.samples[i] = static_cast<double>(v) / 32768.0;
                }
            } else {
                if (size % 4 != 0)
                    throw ParseError(r.name + ": data chunk: byte count not a multiple of 4");
                const std::size_t n = size / 4;
                out.samples.resize(n);
                for (std::size_t i = 0; i < n; ++i) {
                    float v;
                    std::memcpy(&v, r.bytes.data() + r.pos + 4 * i, 4);
                    out.samples[i] = static_cast<double>(v);
                }
            }
            r.pos += size;
            have_data = true;
        } else {
            r.need(size, ("chunk '" + id + "'").c_str());
            r.pos += size;
        }
        if (size % 2 == 1 && r.remaining() >= 1) ++r.pos;  // RIFF pad byte
    }

    if (!have_fmt) throw ParseError(r.name + ": missing fmt chunk");
    if (!have_data) throw ParseError(r.name + ": missing data chunk");
    out.sample_rate = static_cast<int>(rate);
    return out;
}

WavWriteStats write_wav(const std::filesystem::path& path, const AudioBuffer& x,
                        const WavFormat& fmt) {
    const int rate = fmt.sample_rate > 0 ? fmt.sample_rate : x.sample_rate;
    if (rate <= 0) throw InvalidArgument("write_wav: sample rate must be positive");
    for (double v : x.samples)
        if (!std::isfinite(v)) throw InvalidArgument("write_wav: non-finite sample");

    const bool pcm = fmt.encoding == WavFormat::Encoding::pcm16;
    const std::uint32_t bytes_per_sample = pcm ? 2 : 4;
    const std::uint32_t data_size = static_cast<std::uint32_t>(x.samples.size()) * bytes_per_sample;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open wav file for writing: " + path.string());

    out.write("RIFF", 4);
    put_u32(out, 36 + data_size);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    put_u32(out, 16);
    put_u16(out, pcm ? kFormatPcm : kFormatFloat);
    put_u16(out, 1);  // mono
    put_u32(out, static_cast<std::uint32_t>(rate));
    put_u32(out, static_cast<std::uint32_t>(rate) * bytes_per_sample);
    put_u16(out, static_cast<std::uint16_t>(bytes_per_sample));
    put_u16(out, pcm ? 16 : 32);
    out.write("data", 4);
    put_u32(out, data_size);

    WavWriteStats stats;
    if (pcm) {
        std::vector<std::int16_t> buf(x.samples.size());
        for (std::size_t i = 0; i < x.samples.size(); ++i) {
            double scaled = std::round(x.samples[i] * 32768.0);
            if (scaled > 32767.0) {
                scaled = 32767.0;
                if (x.samples[i] > 1.0) ++stats.clamped;
            } else if (scaled < -32768.0) {
                scaled = -32768.0;
                if (x.samples[i] < -1.0) ++stats.clamped;
            }
            buf[i] = static_cast<std::int16_t>(scaled);
        }
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(buf.size() * 2));
    } else {
        std::vector<float> buf(x.samples.size());
        for (std::size_t i = 0; i < x.samples.size(); ++i)
            buf[i] = static_cast<float>(x.samples[i]);
        out.write(reinterpret_cast<const char*>(buf.data()),
                  static_cast<std::streamsize>(buf.size() * 4));
    }
    if (!out) throw IoError("write failed: " + path.string());
    return stats;
}

}  // namespace splicelab
