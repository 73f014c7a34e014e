#pragma once

#include <cstdint>

namespace jacobi {

/// Counter-based 64-bit generator (SplitMix64 stepping) keyed by a base seed
/// and a stream id. Streams derived from one base seed are independent
/// objects, so trials can each own one without coordination.
class RngStream {
public:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    explicit RngStream(std::uint64_t base_seed, std::uint64_t stream_id = 0);

    std::uint64_t next_u64();

    /// Uniform on the open interval (0, 1); never returns 0 or 1.
    double uniform();

    std::uint64_t stream_id() const { return stream_id_; }

private:
    std::uint64_t state_;
    std::uint64_t stream_id_;
};

}  // namespace jacobi
