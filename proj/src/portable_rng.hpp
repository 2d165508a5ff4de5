#pragma once

#include <cstdint>
#include <random>

namespace surfdyn::detail {

// std::mt19937_64 produces the exact same stream on every conforming
// implementation. Bounded draws go through a fixed 128-bit multiply-shift
// instead of std::uniform_int_distribution, whose mapping is
// implementation-defined; this keeps generated structures identical across
// platforms and standard libraries.
class PortableRng {
public:
    explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, n); n >= 1.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Uniform in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

} // namespace surfdyn::detail
