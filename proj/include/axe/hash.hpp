#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "axe/u256.hpp"

namespace axe {

/// 32-byte SHA3-256 digest. Read big-endian when treated as an integer.
struct Hash256 {
    std::array<std::uint8_t, 32> bytes{};

    friend bool operator==(const Hash256& a, const Hash256& b) {
        return a.bytes == b.bytes;
    }
    friend bool operator!=(const Hash256& a, const Hash256& b) {
        return !(a == b);
    }
    friend bool operator<(const Hash256& a, const Hash256& b) {
        return a.bytes < b.bytes;
    }

    Word256 to_word() const { return from_be_bytes(bytes.data()); }
    bool is_zero() const {
        for (auto b : bytes)
            if (b) return false;
        return true;
    }
};

namespace detail {

inline constexpr std::uint64_t kKeccakRC[24] = {
    0x0000000000000001ull, 0x0000000000008082ull, 0x800000000000808aull,
    0x8000000080008000ull, 0x000000000000808bull, 0x0000000080000001ull,
    0x8000000080008081ull, 0x8000000000008009ull, 0x000000000000008aull,
    0x0000000000000088ull, 0x0000000080008009ull, 0x000000008000000aull,
    0x000000008000808bull, 0x800000000000008bull, 0x8000000000008089ull,
    0x8000000000008003ull, 0x8000000000008002ull, 0x8000000000000080ull,
    0x000000000000800aull, 0x800000008000000aull, 0x8000000080008081ull,
    0x8000000000008080ull, 0x0000000080000001ull, 0x8000000080008008ull};

inline constexpr int kKeccakRot[25] = {0,  1,  62, 28, 27, 36, 44, 6,  55,
                                       20, 3,  10, 43, 25, 39, 41, 45, 15,
                                       21, 8,  18, 2,  61, 56, 14};

inline constexpr std::uint64_t rotl64(std::uint64_t x, int n) {
    return n == 0 ? x : (x << n) | (x >> (64 - n));
}

inline void keccak_f1600(std::uint64_t st[25]) {
    for (int round = 0; round < 24; ++round) {
        // theta
        std::uint64_t c[5], d[5];
        for (int x = 0; x < 5; ++x)
            c[x] = st[x] ^ st[x + 5] ^ st[x + 10] ^ st[x + 15] ^ st[x + 20];
        for (int x = 0; x < 5; ++x) {
            d[x] = c[(x + 4) % 5] ^ rotl64(c[(x + 1) % 5], 1);
            for (int y = 0; y < 5; ++y) st[x + 5 * y] ^= d[x];
        }
        // rho + pi
        std::uint64_t b[25];
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                b[y + 5 * ((2 * x + 3 * y) % 5)] =
                    rotl64(st[x + 5 * y], kKeccakRot[x + 5 * y]);
        // chi
        for (int x = 0; x < 5; ++x)
            for (int y = 0; y < 5; ++y)
                st[x + 5 * y] =
                    b[x + 5 * y] ^ (~b[(x + 1) % 5 + 5 * y] & b[(x + 2) % 5 + 5 * y]);
        // iota
        st[0] ^= kKeccakRC[round];
    }
}

}  // namespace detail

/// FIPS-202 SHA3-256 (not Keccak-legacy padding).
class Sha3_256 {
public:
    static constexpr std::size_t kRate = 136;

    void update(const std::uint8_t* data, std::size_t len) {
        while (len > 0) {
            std::size_t take = kRate - fill_;
            if (take > len) take = len;
            std::uint8_t* dst = reinterpret_cast<std::uint8_t*>(state_) + fill_;
            for (std::size_t i = 0; i < take; ++i) dst[i] ^= data[i];
            fill_ += take;
            data += take;
            len -= take;
            if (fill_ == kRate) {
                detail::keccak_f1600(state_);
                fill_ = 0;
            }
        }
    }

    Hash256 finalize() {
        std::uint8_t* bytes = reinterpret_cast<std::uint8_t*>(state_);
        bytes[fill_] ^= 0x06;
        bytes[kRate - 1] ^= 0x80;
        detail::keccak_f1600(state_);
        Hash256 out;
        std::memcpy(out.bytes.data(), bytes, 32);
        return out;
    }

private:
    // lanes are little-endian byte strings, which matches x86 layout
    std::uint64_t state_[25] = {};
    std::size_t fill_ = 0;
};

inline Hash256 sha3(std::span<const std::uint8_t> data) {
    Sha3_256 h;
    h.update(data.data(), data.size());
    return h.finalize();
}

inline Hash256 sha3(const std::vector<std::uint8_t>& v) {
    return sha3(std::span<const std::uint8_t>(v.data(), v.size()));
}

inline Hash256 sha3(std::string_view s) {
    return sha3(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

// ---- FNV aggregation ---------------------------------------------------------

inline constexpr std::uint64_t kFnvPrime = 0x100000001B3ull;

/// Ethash-style basis-free FNV mixing lifted to 64 bits.
inline constexpr std::uint64_t fnv64(std::uint64_t x, std::uint64_t y) {
    return (x * kFnvPrime) ^ y;
}

/// The four big-endian 8-byte groups of a digest: H[0] is the first 8 bytes.
inline std::array<std::uint64_t, 4> hash_words(const Hash256& h) {
    std::array<std::uint64_t, 4> out{};
    for (int i = 0; i < 4; ++i) {
        std::uint64_t v = 0;
        for (int j = 0; j < 8; ++j) v = (v << 8) | h.bytes[i * 8 + j];
        out[i] = v;
    }
    return out;
}

// ---- hex helpers -------------------------------------------------------------

inline std::string hex_encode(std::span<const std::uint8_t> data) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(data.size() * 2);
    for (auto b : data) {
        s += digits[b >> 4];
        s += digits[b & 0xf];
    }
    return s;
}

inline std::string to_hex(const Hash256& h) {
    return hex_encode(std::span<const std::uint8_t>(h.bytes.data(), 32));
}

inline std::optional<std::vector<std::uint8_t>> hex_decode(std::string_view s) {
    if (s.size() % 2) return std::nullopt;
    std::vector<std::uint8_t> out;
    out.reserve(s.size() / 2);
    for (std::size_t i = 0; i < s.size(); i += 2) {
        int hi, lo;
        auto nyb = [](char c) -> int {
            if (c >= '0' && c <= '9') return c - '0';
            if (c >= 'a' && c <= 'f') return c - 'a' + 10;
            if (c >= 'A' && c <= 'F') return c - 'A' + 10;
            return -1;
        };
        hi = nyb(s[i]);
        lo = nyb(s[i + 1]);
        if (hi < 0 || lo < 0) return std::nullopt;
        out.push_back((std::uint8_t)((hi << 4) | lo));
    }
    return out;
}

inline std::optional<Hash256> parse_hash(std::string_view s) {
    auto bytes = hex_decode(s);
    if (!bytes || bytes->size() != 32) return std::nullopt;
    Hash256 h;
    std::memcpy(h.bytes.data(), bytes->data(), 32);
    return h;
}

// ---- deterministic seed expansion --------------------------------------------

/// splitmix64; the portable RNG all simulation randomness flows from.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit constexpr SplitMix64(std::uint64_t seed) : state(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Unbiased-enough for simulation use: rejection-free modulo draw.
    constexpr std::uint64_t next_below(std::uint64_t bound) {
        return bound == 0 ? 0 : next() % bound;
    }
};

}  // namespace axe
