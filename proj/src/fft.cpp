// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <unordered_map>

#include "splicelab/errors.hpp"

namespace splicelab {

namespace {

// One r2c plan per frame length, created with FFTW_ESTIMATE so planning is
// deterministic, and FFTW_UNALIGNED so the new-array execute interface
// accepts ordinary vector storage. The planner is not thread-safe; plan
// execution is.
class PlanCache {
  public:
    fftw_plan get(std::size_t n) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = plans_.find(n);
        if (it != plans_.end()) return it->second.plan;

        Entry e;
        e.in.resize(n);
        e.out.resize(n / 2 + 1);
        e.plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), e.in.data(),
                                      reinterpret_cast<fftw_complex*>(e.out.data()),
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (e.plan == nullptr)
            throw Error("fftw plan creation failed for length " + std::to_string(n));
        auto [pos, inserted] = plans_.emplace(n, std::move(e));
        (void)inserted;
        return pos->second.plan;
    }

  private:
    struct Entry {
        std::vector<double> in;
        std::vector<std::complex<double>> out;
        fftw_plan plan = nullptr;
    };
    std::mutex mutex_;
    std::unordered_map<std::size_t, Entry> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

}  // namespace

std::vector<std::complex<double>> real_dft(std::span<const double> frame) {
    if (frame.size() < 2)
        throw InvalidArgument("dft frame must have at least 2 samples");
    fftw_plan plan = plan_cache().get(frame.size());

    std::vector<double> in(frame.begin(), frame.end());
    std::vector<std::complex<double>> out(frame.size() / 2 + 1);
    fftw_execute_dft_r2c(plan, in.data(), reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

std::vector<double> dft_magnitude(std::span<const double> frame) {
    auto spectrum = real_dft(frame);
    std::vector<double> mag(spectrum.size());
    for (std::size_t k = 0; k < spectrum.size(); ++k) mag[k] = std::abs(spectrum[k]);
    return mag;
}

}  // namespace splicelab
