#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "axe/contract.hpp"
#include "axe/corpus.hpp"

using namespace axe;

namespace {

// Brute-force oracles, independent of the VM path.

int subset_sum_oracle(unsigned n, std::uint64_t target, std::uint64_t mask) {
    std::uint64_t sum = 0;
    for (unsigned i = 0; i < n; ++i)
        if (mask & (1ull << i)) sum += i + 1;
    return sum == target;
}

bool dio_oracle(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t target) {
    return x * x * x + y * y * y + z * z * z == target;
}

struct NlPoint {
    std::int64_t x1, x2, x3, x4, x5;
};

bool nonlinear_oracle(const NlPoint& p, std::int64_t threshold) {
    auto sq = [](std::int64_t v) { return v * v; };
    auto cu = [](std::int64_t v) { return v * v * v; };
    bool c1 = p.x1 + sq(p.x2) + cu(p.x3) <= 2014;
    bool c2 = p.x1 * p.x3 - p.x2 * p.x4 - 5 * p.x5 <= 256;
    bool c3 = p.x2 < 2 * p.x5;
    bool c4 = p.x1 * p.x2 + p.x3 + sq(p.x4) - p.x5 > 1024;
    std::int64_t obj = 7 * sq(p.x1) - 8 * cu(p.x2) + 9 * p.x1 * p.x2 -
                       3 * p.x1 * p.x2 + 5 * p.x4 - sq(p.x5);
    return c1 && c2 && c3 && c4 && obj >= threshold;
}

Word256 enc_i64(std::int64_t v) {
    return v < 0 ? negate(Word256((std::uint64_t)(-v))) : Word256((std::uint64_t)v);
}

bool solve(const ProblemContract& c, const SolutionVector& s,
           const ChainView& view = {}) {
    auto out = run_solve(c, s, view);
    REQUIRE(out.halt_reason == HaltReason::Returned);
    return out.solved;
}

}  // namespace

TEST_CASE("package load: subset-sum sample") {
    auto c = corpus::subset_sum_sample();
    std::string text = serialize_package(c);
    auto r = load_package(text);
    REQUIRE(r.ok());
    CHECK((*r).times == 2);
    CHECK((*r).space.dims.size() == 1);
    CHECK((*r).id == c.id);
    // byte-identical packages yield identical ids
    auto r2 = load_package(text);
    CHECK((*r2).id == (*r).id);
}

TEST_CASE("package load failures") {
    auto bad_space = load_package(
        "[problem]\ntip = 0\ndeposit = 5\ntimes = 1\nspace = (3,1)\n[code]\nSTOP\n");
    CHECK(bad_space.err == PackageError::InvalidSpace);

    auto no_sections = load_package("tip = 0\n");
    CHECK(no_sections.err == PackageError::ParseError);

    auto bad_code = load_package(
        "[problem]\ntip = 0\ndeposit = 5\ntimes = 1\nspace = (0,1)\n[code]\nJUMP 9\n");
    CHECK(bad_code.err == PackageError::InvalidBytecode);

    auto dio = load_package(serialize_package(corpus::diophantine_42()));
    REQUIRE(dio.ok());
    CHECK((*dio).space.dims.size() == 3);
}

TEST_CASE("subset-sum agrees with the exhaustive oracle") {
    auto c = corpus::subset_sum_sample();
    int solutions = 0;
    for (std::uint64_t mask = 0; mask < 32; ++mask) {
        bool expect = subset_sum_oracle(5, 9, mask);
        bool got = solve(c, {Word256(mask)});
        CHECK(got == expect);
        solutions += expect;
    }
    // S = {1..5}, target 9: exactly {4,5}, {2,3,4}, {1,3,5}
    CHECK(solutions == 3);

    // named cases: {1,3,5} solves, {1,2} does not
    CHECK(solve(c, {Word256(0b10101)}));
    CHECK(!solve(c, {Word256(0b00011)}));
}

TEST_CASE("diophantine planted variant") {
    auto c = corpus::diophantine_planted();
    CHECK(solve(c, {enc_i64(11), enc_i64(-7), enc_i64(2)}));  // 1331-343+8 = 996
    CHECK(solve(c, {enc_i64(2), enc_i64(11), enc_i64(-7)}));
    CHECK(!solve(c, {enc_i64(1), enc_i64(2), enc_i64(3)}));

    // sampled agreement with the oracle across the signed box
    SplitMix64 rng(0xD10);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t x = (std::int64_t)rng.next_below(101) - 50;
        std::int64_t y = (std::int64_t)rng.next_below(101) - 50;
        std::int64_t z = (std::int64_t)rng.next_below(101) - 50;
        CHECK(solve(c, {enc_i64(x), enc_i64(y), enc_i64(z)}) ==
              dio_oracle(x, y, z, 996));
    }
}

TEST_CASE("nonlinear program agrees with the oracle") {
    const std::int64_t T = 250000;
    auto c = corpus::nonlinear_program(T);

    // a known feasible high-objective point
    NlPoint good{-32, -32, 10, 5, 0};
    REQUIRE(nonlinear_oracle(good, T));
    CHECK(solve(c, {enc_i64(good.x1), enc_i64(good.x2), enc_i64(good.x3),
                    enc_i64(good.x4), enc_i64(good.x5)}));

    SplitMix64 rng(0x41);
    int hits = 0;
    for (int i = 0; i < 5000; ++i) {
        NlPoint p{(std::int64_t)rng.next_below(65) - 32,
                  (std::int64_t)rng.next_below(65) - 32,
                  (std::int64_t)rng.next_below(17) - 8,
                  (std::int64_t)rng.next_below(65) - 32,
                  (std::int64_t)rng.next_below(17) - 8};
        bool expect = nonlinear_oracle(p, T);
        CHECK(solve(c, {enc_i64(p.x1), enc_i64(p.x2), enc_i64(p.x3),
                        enc_i64(p.x4), enc_i64(p.x5)}) == expect);
        hits += expect;
    }
    // the region is sparse but the sampler should still see both outcomes
    CHECK(hits < 5000);
}

TEST_CASE("chain filter selects accounts at or above the threshold") {
    const std::uint64_t kAccounts = 64, kThreshold = 500;
    ChainView view;
    SplitMix64 rng(0xACC);
    std::vector<std::uint64_t> balances;
    for (std::uint64_t i = 0; i < kAccounts; ++i) {
        std::uint64_t b = rng.next_below(1000);
        balances.push_back(b);
        view.accounts[Word256(i)] = Word256(b);
    }
    auto c = corpus::chain_filter(kAccounts, kThreshold);
    for (std::uint64_t i = 0; i < kAccounts; ++i) {
        // oracle: linear scan of the seeded table
        bool expect = balances[i] >= kThreshold;
        CHECK(solve(c, {Word256(i)}, view) == expect);
    }
}

TEST_CASE("corpus is complete and loadable") {
    std::vector<ProblemContract> all = {
        corpus::subset_sum_sample(),    corpus::diophantine_42(),
        corpus::diophantine_planted(),  corpus::nonlinear_program(),
        corpus::chain_filter(64, 500),  corpus::always_true(),
        corpus::constant_gas(167),      corpus::default_problem(),
    };
    for (auto mode : corpus::kAllModes) all.push_back(corpus::test_function(mode));
    for (const auto& c : all) {
        CHECK(space_valid(c.space));
        CHECK(validate_bytecode(c.solve_code).ok());
        auto r = load_package(serialize_package(c));
        REQUIRE(r.ok());
        CHECK((*r).id == c.id);
        CHECK((*r).solve_code == c.solve_code);
    }
}

TEST_CASE("test-function modes run within the default gas budget") {
    SplitMix64 rng(0xF00D);
    for (auto mode : corpus::kAllModes) {
        auto c = corpus::test_function(mode);
        SolutionVector input;
        for (int i = 0; i < 12; ++i) input.push_back(Word256(rng.next()));
        auto out = run_solve(c, input, ChainView{});
        CHECK(out.halt_reason == HaltReason::Returned);
        CHECK(!out.solved);  // r0 = 0 is never beaten
        CHECK(out.gas_used > 600);
        CHECK(out.gas_used < 1500);
    }
}

TEST_CASE("constant-gas contract consumes exactly the requested gas") {
    for (std::uint64_t target : {19ull, 167ull, 500ull, 1000ull}) {
        auto c = corpus::constant_gas(target);
        auto out = run_solve(c, {Word256(0)}, ChainView{});
        CHECK(out.halt_reason == HaltReason::Returned);
        CHECK(!out.solved);
        CHECK(out.gas_used == target);
    }
}
