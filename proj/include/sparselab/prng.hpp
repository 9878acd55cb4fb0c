#pragma once

#include <cmath>
#include <cstdint>

namespace sparselab {

// Counter-based pseudo-randomness: every draw is a pure function of
// (seed, stream, a, b). Streams are FNV-1a tags of a short name so that
// independent consumers (bucket hashes, sign hashes, subsampling, ...)
// can never alias.

constexpr uint64_t stream_tag(const char* name) {
    uint64_t h = 0xcbf29ce484222325ULL;
    while (*name) {
        h ^= static_cast<uint64_t>(static_cast<unsigned char>(*name++));
        h *= 0x100000001b3ULL;
    }
    return h;
}

// splitmix64 finalizer
constexpr uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr uint64_t derive64(uint64_t seed, uint64_t stream, uint64_t a, uint64_t b) {
    uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h + stream);
    h = mix64(h + a);
    h = mix64(h + b);
    return h;
}

// uniform in (0,1), never exactly 0 or 1
inline double to_unit(uint64_t u) {
    return (static_cast<double>(u >> 11) + 0.5) * 0x1p-53;
}

// standard normal via Box-Muller; counters 2c and 2c+1 of the stream
inline double normal_draw(uint64_t seed, uint64_t stream, uint64_t counter) {
    const uint64_t u1 = derive64(seed, stream, counter, 0);
    const uint64_t u2 = derive64(seed, stream, counter, 1);
    const double r = std::sqrt(-2.0 * std::log((static_cast<double>(u1 >> 11) + 1.0) * 0x1p-53));
    const double t = 6.283185307179586476925287 * (static_cast<double>(u2 >> 11) * 0x1p-53);
    return r * std::cos(t);
}

}  // namespace sparselab
