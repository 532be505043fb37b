#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <openssl/evp.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "axe/hash.hpp"
#include "axe/u256.hpp"
#include "axe/work.hpp"

using namespace axe;
namespace mp = boost::multiprecision;

namespace {

// Independent FIPS-202 oracle for the in-tree SHA3-256.
Hash256 openssl_sha3(const std::vector<std::uint8_t>& data) {
    Hash256 out;
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    REQUIRE(ctx != nullptr);
    REQUIRE(EVP_DigestInit_ex(ctx, EVP_sha3_256(), nullptr) == 1);
    REQUIRE(EVP_DigestUpdate(ctx, data.data(), data.size()) == 1);
    REQUIRE(EVP_DigestFinal_ex(ctx, out.bytes.data(), &len) == 1);
    EVP_MD_CTX_free(ctx);
    REQUIRE(len == 32);
    return out;
}

mp::uint256_t to_big(const Word256& w) {
    mp::uint256_t v = 0;
    for (int i = 3; i >= 0; --i) {
        v <<= 64;
        v += w.limb[i];
    }
    return v;
}

Word256 from_big(mp::uint256_t v) {
    Word256 w;
    for (int i = 0; i < 4; ++i) {
        w.limb[i] = (std::uint64_t)(v & 0xffffffffffffffffull);
        v >>= 64;
    }
    return w;
}

Word256 random_word(SplitMix64& rng) {
    // mix of dense and sparse words so carries and zero limbs both occur
    switch (rng.next() % 4) {
        case 0: return Word256(rng.next());
        case 1: return Word256::from_limbs(rng.next(), rng.next(), rng.next(), rng.next());
        case 2: return Word256::from_limbs(rng.next(), 0, 0, rng.next());
        default: {
            Word256 w = Word256::from_limbs(~0ull, ~0ull, ~0ull, ~0ull);
            w.limb[rng.next() % 4] = rng.next();
            return w;
        }
    }
}

}  // namespace

TEST_CASE("sha3-256 pinned vectors") {
    CHECK(to_hex(sha3(std::string_view{})) ==
          "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a");
    // determinism and sensitivity to a single appended zero byte
    CHECK(sha3(std::string_view{}) == sha3(std::string_view{}));
    std::vector<std::uint8_t> one_zero{0x00};
    CHECK(sha3(one_zero) != sha3(std::string_view{}));
    CHECK(to_hex(sha3(one_zero)) == to_hex(openssl_sha3(one_zero)));
}

TEST_CASE("sha3-256 agrees with openssl across lengths") {
    SplitMix64 rng(0xABCDEF01);
    for (std::size_t len : {0u, 1u, 16u, 135u, 136u, 137u, 271u, 272u, 273u, 1000u}) {
        std::vector<std::uint8_t> data(len);
        for (auto& b : data) b = (std::uint8_t)rng.next();
        CHECK(sha3(data) == openssl_sha3(data));
    }
}

TEST_CASE("fnv64 basics") {
    CHECK(fnv64(0, 0) == 0);
    CHECK(fnv64(1, 0) == 0x100000001B3ull);
    SplitMix64 rng(7);
    for (int i = 0; i < 32; ++i) {
        std::uint64_t y = rng.next();
        CHECK(fnv64(0, y) == y);
    }
    // not commutative in general
    CHECK(fnv64(1, 2) != fnv64(2, 1));
}

TEST_CASE("hash_words big-endian groups") {
    Hash256 zero;
    auto w0 = hash_words(zero);
    CHECK(w0 == std::array<std::uint64_t, 4>{0, 0, 0, 0});

    Hash256 asc;
    for (int i = 0; i < 32; ++i) asc.bytes[i] = (std::uint8_t)i;
    auto w = hash_words(asc);
    CHECK(w[0] == 0x0001020304050607ull);
    CHECK(w[3] == 0x18191A1B1C1D1E1Full);

    // round-trip: reassembling the groups reproduces the digest bytes
    Hash256 back;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 8; ++j)
            back.bytes[i * 8 + j] = (std::uint8_t)(w[i] >> (56 - 8 * j));
    CHECK(back == asc);
}

TEST_CASE("word256 wrap-around") {
    CHECK(add(Word256::max(), Word256::one()) == Word256::zero());
    CHECK(sub(Word256::zero(), Word256::one()) == Word256::max());
    CHECK(mul(Word256::max(), Word256(2)) ==
          sub(Word256::max(), Word256::one()));
}

TEST_CASE("word256 arithmetic matches boost oracle") {
    SplitMix64 rng(0x5EED);
    for (int i = 0; i < 4000; ++i) {
        Word256 a = random_word(rng);
        Word256 b = random_word(rng);
        // boost's fixed-width unsigned type wraps modulo 2^256 natively
        mp::uint256_t ba = to_big(a), bb = to_big(b);

        CHECK(to_big(add(a, b)) == mp::uint256_t(ba + bb));
        CHECK(to_big(sub(a, b)) == mp::uint256_t(ba - bb));
        CHECK(to_big(mul(a, b)) == mp::uint256_t(ba * bb));
        CHECK((cmp(a, b) < 0) == (ba < bb));

        if (!b.is_zero()) {
            auto dm = divmod(a, b);
            CHECK(to_big(dm.quot) == ba / bb);
            CHECK(to_big(dm.rem) == ba % bb);
        } else {
            auto dm = divmod(a, b);
            CHECK(dm.quot == Word256::zero());
            CHECK(dm.rem == Word256::zero());
        }

        // small divisors exercise the fast limb path
        Word256 small(rng.next() | 1);
        auto dm2 = divmod(a, small);
        CHECK(to_big(dm2.quot) == ba / to_big(small));
        CHECK(to_big(dm2.rem) == ba % to_big(small));
    }
}

TEST_CASE("word256 byte and string round trips") {
    SplitMix64 rng(0xB17E5);
    for (int i = 0; i < 500; ++i) {
        Word256 a = random_word(rng);
        auto bytes = to_be_bytes(a);
        CHECK(from_be_bytes(bytes.data()) == a);
        CHECK(*parse_word(to_dec(a)) == a);
        CHECK(*parse_word(to_hex(a)) == a);
    }
    CHECK(*parse_word("-1") == Word256::max());
    CHECK(*parse_word("0x10") == Word256(16));
    CHECK(!parse_word("").has_value());
    CHECK(!parse_word("12x").has_value());
    // 2^256 overflows
    CHECK(!parse_word("115792089237316195423570985008687907853269984665640564039457584007913129639936")
               .has_value());
    CHECK(*parse_word("115792089237316195423570985008687907853269984665640564039457584007913129639935") ==
          Word256::max());
}

TEST_CASE("signed comparison via sign-bit flip") {
    Word256 minus_one = Word256::max();
    Word256 minus_two = sub(Word256::max(), Word256::one());
    CHECK(cmp_signed(minus_one, Word256::zero()) < 0);
    CHECK(cmp_signed(minus_two, minus_one) < 0);
    CHECK(cmp_signed(Word256::one(), minus_one) > 0);
    CHECK(cmp_signed(Word256::zero(), Word256::zero()) == 0);
}

TEST_CASE("work value cross-multiplied compare") {
    // equal ratios with different denominators
    WorkValue a{Word256(100), 10};
    WorkValue b{Word256(10), 1};
    CHECK(cmp(a, b) == 0);

    // doubling the denominator strictly decreases a nonzero work
    WorkValue w{Word256::from_limbs(0, 0, 1, 0), 1355};
    WorkValue half{w.num, 2 * w.den};
    CHECK(half < w);

    // 320-bit products do not truncate
    WorkValue big{Word256::max(), 1};
    WorkValue big2{Word256::max(), 2};
    CHECK(big2 < big);

    Target t = Target::frac_pow2(12);
    WorkValue below{sub(t.num, Word256::one()), 1};
    WorkValue at{t.num, 1};
    CHECK(t.beaten_by(below));
    CHECK(!t.beaten_by(at));
}
