// SPDX-License-Identifier: MIT
/**
 * @file rng.hpp
 * @brief Counter-based normal variates keyed by (seed, stream, index).
 *
 * Philox4x32-10 (Salmon et al., SC'11) maps a 128-bit counter and a 64-bit
 * key to four 32-bit words. Key = seed, counter = (block, stream). One block
 * yields two uniforms and, through Box-Muller, normals 2*block and 2*block+1.
 * Every variate is therefore a pure function of (seed, stream, index), and
 * simulation output does not depend on execution order or thread count.
 */

#pragma once

#include <array>
#include <cstdint>

namespace vve {

using Philox4x32Block = std::array<std::uint32_t, 4>;
using Philox4x32Key = std::array<std::uint32_t, 2>;

/// Raw Philox4x32-10 bijection.
Philox4x32Block philox4x32(Philox4x32Block counter, Philox4x32Key key);

/// Uniform on (0, 1) with 52-bit resolution built from two 32-bit words.
double uniform_open(std::uint32_t hi, std::uint32_t lo);

class NormalStream {
public:
    NormalStream(std::uint64_t seed, std::uint64_t stream) noexcept;

    double normal();

    /// Position the stream so that the next normal() is draw number `index`.
    void seek(std::uint64_t index);

private:
    void generate_pair();

    Philox4x32Key key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    double pair_[2] = {0.0, 0.0};
    int next_ = 2;
};

}  // namespace vve
