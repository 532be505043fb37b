#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "axe/hash.hpp"

namespace axe {

/// The nonce-independent part of a block header. Canonical byte layout:
/// prev_hash(32) || merkle_root(32) || height(8 BE) || timestamp(8 BE).
struct HeaderPreimage {
    Hash256 prev_hash;
    Hash256 merkle_root;
    std::uint64_t height = 0;
    std::uint64_t timestamp = 0;

    friend bool operator==(const HeaderPreimage& a, const HeaderPreimage& b) {
        return a.prev_hash == b.prev_hash && a.merkle_root == b.merkle_root &&
               a.height == b.height && a.timestamp == b.timestamp;
    }
};

inline void put_be64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int i = 7; i >= 0; --i) out.push_back((std::uint8_t)(v >> (8 * i)));
}

inline std::uint64_t get_be64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
    return v;
}

inline std::vector<std::uint8_t> header_bytes(const HeaderPreimage& h) {
    std::vector<std::uint8_t> out;
    out.reserve(80);
    out.insert(out.end(), h.prev_hash.bytes.begin(), h.prev_hash.bytes.end());
    out.insert(out.end(), h.merkle_root.bytes.begin(), h.merkle_root.bytes.end());
    put_be64(out, h.height);
    put_be64(out, h.timestamp);
    return out;
}

/// H = SHA3(nonce || header): the nonce is 8 big-endian bytes prepended to
/// the canonical header preimage.
inline Hash256 mining_hash(const HeaderPreimage& h, std::uint64_t nonce) {
    std::vector<std::uint8_t> buf;
    buf.reserve(88);
    put_be64(buf, nonce);
    auto hb = header_bytes(h);
    buf.insert(buf.end(), hb.begin(), hb.end());
    return sha3(buf);
}

}  // namespace axe
