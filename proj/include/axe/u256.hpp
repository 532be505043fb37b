#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <string>
#include <string_view>

namespace axe {

/// 256-bit unsigned machine word of the problem VM.
///
/// All arithmetic wraps modulo 2^256; comparisons are unsigned. Signed
/// quantities (solution-space bounds, contract intermediates) live in the
/// same representation as two's complement.
struct Word256 {
    // limb[0] is least significant.
    std::array<std::uint64_t, 4> limb{0, 0, 0, 0};

    constexpr Word256() = default;
    constexpr Word256(std::uint64_t v) : limb{v, 0, 0, 0} {}
    static constexpr Word256 from_limbs(std::uint64_t l0, std::uint64_t l1,
                                        std::uint64_t l2, std::uint64_t l3) {
        Word256 w;
        w.limb = {l0, l1, l2, l3};
        return w;
    }

    static constexpr Word256 zero() { return Word256(); }
    static constexpr Word256 one() { return Word256(1); }
    static constexpr Word256 max() {
        return from_limbs(~0ull, ~0ull, ~0ull, ~0ull);
    }
    /// 2^255, the sign bit. Adding it maps signed order onto unsigned order.
    static constexpr Word256 sign_bit() {
        return from_limbs(0, 0, 0, 0x8000000000000000ull);
    }

    constexpr bool is_zero() const {
        return (limb[0] | limb[1] | limb[2] | limb[3]) == 0;
    }
    constexpr bool is_negative() const { return (limb[3] >> 63) != 0; }
    constexpr bool fits_u64() const {
        return (limb[1] | limb[2] | limb[3]) == 0;
    }
    constexpr std::uint64_t low64() const { return limb[0]; }

    friend constexpr bool operator==(const Word256& a, const Word256& b) {
        return a.limb == b.limb;
    }
    friend constexpr bool operator!=(const Word256& a, const Word256& b) {
        return !(a == b);
    }
};

// ---- unsigned comparison ----------------------------------------------------

constexpr int cmp(const Word256& a, const Word256& b) {
    for (int i = 3; i >= 0; --i) {
        if (a.limb[i] < b.limb[i]) return -1;
        if (a.limb[i] > b.limb[i]) return 1;
    }
    return 0;
}
constexpr bool operator<(const Word256& a, const Word256& b) { return cmp(a, b) < 0; }
constexpr bool operator>(const Word256& a, const Word256& b) { return cmp(a, b) > 0; }
constexpr bool operator<=(const Word256& a, const Word256& b) { return cmp(a, b) <= 0; }
constexpr bool operator>=(const Word256& a, const Word256& b) { return cmp(a, b) >= 0; }

/// Two's-complement order: unsigned order with the sign bit flipped.
constexpr int cmp_signed(const Word256& a, const Word256& b) {
    Word256 ab = a, bb = b;
    ab.limb[3] ^= 0x8000000000000000ull;
    bb.limb[3] ^= 0x8000000000000000ull;
    return cmp(ab, bb);
}

// ---- wrapping arithmetic ----------------------------------------------------

constexpr Word256 add(const Word256& a, const Word256& b) {
    Word256 r;
    unsigned __int128 carry = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 s = (unsigned __int128)a.limb[i] + b.limb[i] + carry;
        r.limb[i] = (std::uint64_t)s;
        carry = s >> 64;
    }
    return r;
}

constexpr Word256 sub(const Word256& a, const Word256& b) {
    Word256 r;
    std::uint64_t borrow = 0;
    for (int i = 0; i < 4; ++i) {
        std::uint64_t d = a.limb[i] - b.limb[i];
        std::uint64_t b2 = (a.limb[i] < b.limb[i]);
        std::uint64_t d2 = d - borrow;
        b2 |= (d < borrow);
        r.limb[i] = d2;
        borrow = b2;
    }
    return r;
}

constexpr Word256 negate(const Word256& a) { return sub(Word256::zero(), a); }

/// Low 256 bits of the schoolbook product.
constexpr Word256 mul(const Word256& a, const Word256& b) {
    std::array<std::uint64_t, 4> r{0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        if (a.limb[i] == 0) continue;
        unsigned __int128 carry = 0;
        for (int j = 0; i + j < 4; ++j) {
            unsigned __int128 cur = (unsigned __int128)a.limb[i] * b.limb[j] +
                                    r[i + j] + carry;
            r[i + j] = (std::uint64_t)cur;
            carry = cur >> 64;
        }
    }
    Word256 w;
    w.limb = r;
    return w;
}

constexpr Word256 and_(const Word256& a, const Word256& b) {
    Word256 r;
    for (int i = 0; i < 4; ++i) r.limb[i] = a.limb[i] & b.limb[i];
    return r;
}
constexpr Word256 or_(const Word256& a, const Word256& b) {
    Word256 r;
    for (int i = 0; i < 4; ++i) r.limb[i] = a.limb[i] | b.limb[i];
    return r;
}
constexpr Word256 xor_(const Word256& a, const Word256& b) {
    Word256 r;
    for (int i = 0; i < 4; ++i) r.limb[i] = a.limb[i] ^ b.limb[i];
    return r;
}
constexpr Word256 not_(const Word256& a) {
    Word256 r;
    for (int i = 0; i < 4; ++i) r.limb[i] = ~a.limb[i];
    return r;
}

constexpr Word256 shl1(const Word256& a) {
    Word256 r;
    r.limb[0] = a.limb[0] << 1;
    for (int i = 1; i < 4; ++i)
        r.limb[i] = (a.limb[i] << 1) | (a.limb[i - 1] >> 63);
    return r;
}

struct DivModResult {
    Word256 quot;
    Word256 rem;
};

/// Truncating division; by convention x/0 = 0 and x%0 = 0 (VM semantics).
constexpr DivModResult divmod(const Word256& num, const Word256& den) {
    DivModResult out;
    if (den.is_zero()) return out;
    if (cmp(num, den) < 0) {
        out.rem = num;
        return out;
    }
    if (den.fits_u64()) {
        // limb-wise division by a single 64-bit divisor
        std::uint64_t d = den.limb[0];
        unsigned __int128 rem = 0;
        for (int i = 3; i >= 0; --i) {
            unsigned __int128 cur = (rem << 64) | num.limb[i];
            out.quot.limb[i] = (std::uint64_t)(cur / d);
            rem = cur % d;
        }
        out.rem = Word256((std::uint64_t)rem);
        return out;
    }
    // bitwise long division; the shifted-out top bit stands for 2^256,
    // which always exceeds den, so wraparound subtraction is exact
    Word256 rem;
    for (int i = 255; i >= 0; --i) {
        bool hi = (rem.limb[3] >> 63) != 0;
        rem = shl1(rem);
        rem.limb[0] |= (num.limb[i / 64] >> (i % 64)) & 1;
        if (hi || cmp(rem, den) >= 0) {
            rem = sub(rem, den);
            out.quot.limb[i / 64] |= 1ull << (i % 64);
        }
    }
    out.rem = rem;
    return out;
}

/// 256x64 -> 320-bit product, for exact cross-multiplied rational compares.
struct Word320 {
    std::array<std::uint64_t, 5> limb{0, 0, 0, 0, 0};
};

constexpr Word320 mul_wide64(const Word256& a, std::uint64_t b) {
    Word320 r;
    unsigned __int128 carry = 0;
    for (int i = 0; i < 4; ++i) {
        unsigned __int128 cur = (unsigned __int128)a.limb[i] * b + carry;
        r.limb[i] = (std::uint64_t)cur;
        carry = cur >> 64;
    }
    r.limb[4] = (std::uint64_t)carry;
    return r;
}

constexpr int cmp(const Word320& a, const Word320& b) {
    for (int i = 4; i >= 0; --i) {
        if (a.limb[i] < b.limb[i]) return -1;
        if (a.limb[i] > b.limb[i]) return 1;
    }
    return 0;
}

// ---- byte and string conversions --------------------------------------------

/// Big-endian 32-byte image, most significant byte first.
inline std::array<std::uint8_t, 32> to_be_bytes(const Word256& w) {
    std::array<std::uint8_t, 32> out{};
    for (int i = 0; i < 4; ++i) {
        std::uint64_t v = w.limb[3 - i];
        for (int j = 0; j < 8; ++j)
            out[i * 8 + j] = (std::uint8_t)(v >> (56 - 8 * j));
    }
    return out;
}

inline Word256 from_be_bytes(const std::uint8_t* p) {
    Word256 w;
    for (int i = 0; i < 4; ++i) {
        std::uint64_t v = 0;
        for (int j = 0; j < 8; ++j) v = (v << 8) | p[i * 8 + j];
        w.limb[3 - i] = v;
    }
    return w;
}

inline std::string to_hex(const Word256& w) {
    static const char* digits = "0123456789abcdef";
    auto bytes = to_be_bytes(w);
    std::string s = "0x";
    bool seen = false;
    for (auto b : bytes) {
        if (!seen && b == 0) continue;
        if (!seen) {
            if (b >> 4) s += digits[b >> 4];
            seen = true;
        } else {
            s += digits[b >> 4];
        }
        s += digits[b & 0xf];
    }
    if (!seen) s += '0';
    return s;
}

inline std::string to_dec(const Word256& w) {
    if (w.is_zero()) return "0";
    std::string out;
    Word256 cur = w;
    const Word256 chunk(10000000000000000000ull);  // 10^19
    while (!cur.is_zero()) {
        auto dm = divmod(cur, chunk);
        cur = dm.quot;
        std::uint64_t part = dm.rem.low64();
        for (int i = 0; i < 19; ++i) {
            out += char('0' + part % 10);
            part /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    return std::string(out.rbegin(), out.rend());
}

/// Parses decimal or 0x-hex, with an optional leading '-' mapped to
/// two's complement. Returns nullopt on malformed or overflowing input.
inline std::optional<Word256> parse_word(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) return std::nullopt;
    Word256 v;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        s.remove_prefix(2);
        if (s.empty() || s.size() > 64) return std::nullopt;
        for (char c : s) {
            int d;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
            else return std::nullopt;
            v = add(mul(v, Word256(16)), Word256((std::uint64_t)d));
        }
    } else {
        const Word256 cap = divmod(Word256::max(), Word256(10)).quot;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
            if (cmp(v, cap) > 0) return std::nullopt;
            Word256 next = add(mul(v, Word256(10)), Word256((std::uint64_t)(c - '0')));
            if (cmp(v, cap) == 0 && cmp(next, v) < 0) return std::nullopt;
            v = next;
        }
    }
    return neg ? negate(v) : v;
}

}  // namespace axe
