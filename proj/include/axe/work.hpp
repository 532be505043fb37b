#pragma once

#include <cstdint>
#include <string>

#include "axe/hash.hpp"
#include "axe/u256.hpp"

namespace axe {

/// Equivalent workload: an exact rational num/den with a 256-bit numerator.
/// Consensus comparisons cross-multiply into 320 bits; no floating point.
struct WorkValue {
    Word256 num;            // raw work (a digest read as an integer)
    std::uint64_t den = 1;  // n_fnv normalizer, always >= 1

    static WorkValue infinite() { return {Word256::max(), 1}; }

    friend int cmp(const WorkValue& a, const WorkValue& b) {
        return cmp(mul_wide64(a.num, b.den), mul_wide64(b.num, a.den));
    }
    friend bool operator<(const WorkValue& a, const WorkValue& b) { return cmp(a, b) < 0; }
    friend bool operator>=(const WorkValue& a, const WorkValue& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const WorkValue& a, const WorkValue& b) { return cmp(a, b) == 0; }

    double to_double() const {
        double x = 0;
        for (int i = 3; i >= 0; --i) x = x * 18446744073709551616.0 + (double)num.limb[i];
        return x / (double)den;
    }
};

/// Difficulty target, same exact-rational representation. A target is most
/// naturally stated as a fraction of 2^256: frac_pow2(n) is 2^256 / 2^n.
struct Target {
    Word256 num;
    std::uint64_t den = 1;

    /// target = 2^(256-n) exactly, i.e. the fraction 2^-n of the digest space.
    static Target frac_pow2(unsigned n) {
        Target t;
        if (n == 0) {
            t.num = Word256::max();  // accept everything
            return t;
        }
        unsigned bit = 256 - n;
        t.num = Word256::zero();
        t.num.limb[bit / 64] = 1ull << (bit % 64);
        return t;
    }

    static Target never() { return {Word256::zero(), 1}; }
    static Target always() { return {Word256::max(), 1}; }

    bool beaten_by(const WorkValue& w) const {
        return cmp(mul_wide64(w.num, den), mul_wide64(num, w.den)) < 0;
    }
};

inline std::string to_string(const WorkValue& w) {
    return to_hex(w.num) + "/" + std::to_string(w.den);
}

}  // namespace axe
