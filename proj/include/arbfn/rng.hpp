#pragma once

#include <array>
#include <cstdint>

namespace arbfn {

/// Counter-based random stream (Philox4x32-10, Salmon et al. SC 2011).
///
/// A stream is addressed by (seed, stream_id): the seed is the Philox key
/// and the stream id occupies the upper half of the 128-bit counter, so
/// distinct replicate ids index disjoint counter planes of one keyed
/// bijection. Output is a pure function of (seed, stream_id, position):
/// equal addresses replay identical sequences, distinct ids are
/// statistically independent.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    /// Disjoint sub-stream of this stream (tag selects a counter plane).
    /// Each plane holds 2^32 blocks; draws never cross planes.
    RandomStream substream(std::uint32_t tag) const noexcept;

    std::uint64_t next_u64() noexcept;

    /// Uniform on [0, 1), 53-bit resolution.
    double next_uniform() noexcept;
    /// Uniform on (0, 1]; safe as a log() argument.
    double next_uniform_open() noexcept;
    /// Standard normal via Box-Muller; pairs are cached.
    double next_normal() noexcept;

    /// One raw Philox4x32-10 block, exposed for known-answer tests.
    static std::array<std::uint32_t, 4> philox_block(
        const std::array<std::uint32_t, 4>& counter,
        const std::array<std::uint32_t, 2>& key) noexcept;

private:
    void refill() noexcept;

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t block_ = 0;   // position within the plane (2^32 blocks max)
    std::uint32_t plane_ = 0;   // substream tag
    std::array<std::uint32_t, 4> buf_{};
    int buf_pos_ = 4;           // empty
    bool have_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

inline RandomStream derive_stream(std::uint64_t seed, std::uint64_t stream_id) noexcept {
    return RandomStream(seed, stream_id);
}

}  // namespace arbfn
