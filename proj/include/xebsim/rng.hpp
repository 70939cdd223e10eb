// Copyright 2026 The xebsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace xebsim {

/// Reproducible random stream keyed by (seed, stream_id).
///
/// Each circuit or trial gets its own stream_id so that results do not
/// depend on scheduling order.
class RngStream {
  public:
    using result_type = std::mt19937_64::result_type;

    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id), engine_(make_seed(seed, stream_id)) {}

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t stream_id() const noexcept {
        return stream_id_;
    }

    /// Child stream for a sub-task; deterministic in (seed, stream_id, tag).
    [[nodiscard]] RngStream split(std::uint64_t tag) const {
        return RngStream(seed_, splitmix(stream_id_ ^ splitmix(tag + 1)));
    }

    result_type operator()() { return engine_(); }
    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }

    double uniform01() { return unit_(engine_); }
    double normal() { return normal_(engine_); }

  private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    static std::mt19937_64 make_seed(std::uint64_t seed,
                                     std::uint64_t stream_id) {
        const std::uint64_t a = splitmix(seed);
        const std::uint64_t b = splitmix(stream_id ^ 0x5851f42d4c957f2dULL);
        std::seed_seq seq{static_cast<std::uint32_t>(a),
                          static_cast<std::uint32_t>(a >> 32),
                          static_cast<std::uint32_t>(b),
                          static_cast<std::uint32_t>(b >> 32)};
        return std::mt19937_64(seq);
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace xebsim
