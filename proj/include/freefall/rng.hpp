/*
   Copyright 2026 The freefall Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <array>
#include <cstdint>

// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3", SC'11), with a Box-Muller normal stream on
// top. A stream is identified by (seed, substream): the seed is mixed into
// the 64-bit key with splitmix64, the substream index occupies the upper two
// counter words and the block index the lower two, so streams with distinct
// substream indices never share a counter value.

namespace freefall::rng {

using Counter = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

/// One Philox4x32-10 block.
Counter philox4x32(Counter counter, Key key) noexcept;

std::uint64_t splitmix64(std::uint64_t x) noexcept;

Key key_from_seed(std::uint64_t seed) noexcept;

class PhiloxStream {
public:
    PhiloxStream(std::uint64_t seed, std::uint64_t substream) noexcept;

    std::uint32_t next_u32() noexcept;
    std::uint64_t next_u64() noexcept;
    /// Uniform in [0, 1) with 53 random bits.
    double next_uniform() noexcept;

private:
    void refill() noexcept;

    Key key_;
    std::uint64_t substream_;
    std::uint64_t block_ = 0;
    Counter buffer_{};
    int used_ = 4;
};

class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint64_t substream) noexcept : uniforms_(seed, substream)
    {}

    double next() noexcept;

private:
    PhiloxStream uniforms_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace freefall::rng
