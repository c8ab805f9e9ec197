#pragma once

// Word-level helpers over little-endian bit vectors (bit i lives in word i/64).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace scflip::bits {

using Word = std::uint64_t;
using Words = std::vector<Word>;

inline std::size_t words_for(std::size_t nbits) { return (nbits + 63) / 64; }

inline bool test(std::span<const Word> w, std::size_t i) { return (w[i >> 6] >> (i & 63)) & 1u; }
inline void set(std::span<Word> w, std::size_t i) { w[i >> 6] |= Word{1} << (i & 63); }
inline void reset(std::span<Word> w, std::size_t i) { w[i >> 6] &= ~(Word{1} << (i & 63)); }

inline std::size_t popcount(std::span<const Word> w) {
    std::size_t n = 0;
    for (Word x : w) n += static_cast<std::size_t>(std::popcount(x));
    return n;
}

// |a \ b|
inline std::size_t andnot_count(const Word* a, const Word* b, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < n; ++k) c += static_cast<std::size_t>(std::popcount(a[k] & ~b[k]));
    return c;
}

inline std::size_t and_count(const Word* a, const Word* b, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t k = 0; k < n; ++k) c += static_cast<std::size_t>(std::popcount(a[k] & b[k]));
    return c;
}

// out = in >> s (bit i of out = bit i+s of in)
inline void shr(const Word* in, Word* out, std::size_t n, std::size_t s) {
    const std::size_t ws = s >> 6, bs = s & 63;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t src = k + ws;
        Word lo = src < n ? in[src] : 0;
        Word hi = src + 1 < n ? in[src + 1] : 0;
        out[k] = bs ? (lo >> bs) | (hi << (64 - bs)) : lo;
    }
}

// out = in << s (bit i+s of out = bit i of in)
inline void shl(const Word* in, Word* out, std::size_t n, std::size_t s) {
    const std::size_t ws = s >> 6, bs = s & 63;
    for (std::size_t k = n; k-- > 0;) {
        Word lo = k >= ws ? in[k - ws] : 0;
        Word lo2 = k >= ws + 1 ? in[k - ws - 1] : 0;
        out[k] = bs ? (lo << bs) | (lo2 >> (64 - bs)) : lo;
    }
}

// Canonical order: compare bit 0 first, then bit 1, ...; 0 < 1.
inline int compare(const Word* a, const Word* b, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
        Word x = a[k] ^ b[k];
        if (x) {
            Word low = x & (~x + 1);
            return (a[k] & low) ? 1 : -1;
        }
    }
    return 0;
}

inline std::size_t hash(const Word* a, std::size_t n) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::size_t k = 0; k < n; ++k) {
        h ^= a[k] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace scflip::bits
