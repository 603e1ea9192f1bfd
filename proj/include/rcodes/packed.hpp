#pragma once

// Bit-sliced Z4 words of length <= 64: coordinate i lives in bit i of two
// planes, lo (value & 1) and hi (value >> 1).

#include <bit>
#include <cstdint>

#include "rcodes/ring.hpp"

namespace rcodes {

enum class Metric { Lee, Euclidean };

struct PackedWord {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;

    bool is_zero() const { return (lo | hi) == 0; }
    friend bool operator==(const PackedWord&, const PackedWord&) = default;
};

inline constexpr Eigen::Index kMaxPackedLength = 64;

inline PackedWord operator+(PackedWord x, PackedWord y) {
    return {x.lo ^ y.lo, x.hi ^ y.hi ^ (x.lo & y.lo)};
}

inline PackedWord operator-(PackedWord x) { return {x.lo, x.hi ^ x.lo}; }

inline PackedWord operator-(PackedWord x, PackedWord y) { return x + (-y); }

inline unsigned weight(PackedWord x, Metric metric) {
    const auto odd = static_cast<unsigned>(std::popcount(x.lo));
    const auto twos = static_cast<unsigned>(std::popcount(x.hi & ~x.lo));
    return odd + (metric == Metric::Lee ? 2u : 4u) * twos;
}

inline int value_at(PackedWord x, int i) {
    return static_cast<int>(((x.lo >> i) & 1) | (((x.hi >> i) & 1) << 1));
}

/// Lexicographic order with coordinate 0 most significant and 0 < 1 < 2 < 3.
inline bool lex_less(PackedWord x, PackedWord y) {
    const std::uint64_t diff = (x.lo ^ y.lo) | (x.hi ^ y.hi);
    if (diff == 0) return false;
    const int i = std::countr_zero(diff);
    return value_at(x, i) < value_at(y, i);
}

/// Throws Error(BadLength) for words longer than 64.
PackedWord pack(const Z4Vector& v);
Z4Vector unpack(PackedWord w, Eigen::Index length);

}  // namespace rcodes
