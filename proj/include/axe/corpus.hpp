#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "axe/contract.hpp"
#include "axe/hash.hpp"
#include "axe/vm.hpp"

namespace axe {
namespace corpus {

// Shipped problem corpus. Each builder emits a validated contract; the
// .axe packages under corpus/ are the serialized forms of these.

namespace detail {

inline void push(Bytecode& c, const Word256& v) { c.emplace_back(Opcode::PUSH, v); }
inline void push(Bytecode& c, std::uint64_t v) { c.emplace_back(Opcode::PUSH, Word256(v)); }
inline void op(Bytecode& c, Opcode o) { c.emplace_back(o); }
inline void input(Bytecode& c, std::uint64_t i) { c.emplace_back(Opcode::INPUT, Word256(i)); }

/// result(top) <- result OP x, for EVM-ordered binary ops (top OP second).
inline void fold(Bytecode& c, std::uint64_t input_idx, Opcode o) {
    input(c, input_idx);   // [.., result, x]
    op(c, Opcode::SWAP1);  // [.., x, result]
    op(c, o);              // [.., result OP x]
}

/// x^3 of the value just pushed on top (keeps two's-complement sign).
inline void cube_top(Bytecode& c) {
    op(c, Opcode::DUP1);
    op(c, Opcode::DUP1);
    op(c, Opcode::MUL);
    op(c, Opcode::MUL);
}

inline ProblemContract finish(ProblemContract c) {
    c.id = package_id(c);
    return c;
}

inline SpaceDim dim_i64(std::int64_t lo, std::int64_t hi) {
    auto enc = [](std::int64_t v) {
        return v < 0 ? negate(Word256((std::uint64_t)(-v))) : Word256((std::uint64_t)v);
    };
    return {enc(lo), enc(hi)};
}

}  // namespace detail

/// Subset-sum over S = {1..n}: one bitmask dimension [0, 2^n-1], bit i
/// selecting element i+1; solved when the selected elements sum to target.
inline ProblemContract subset_sum(unsigned n, std::uint64_t target,
                                  std::uint64_t times = 2, std::uint64_t tip = 0,
                                  std::uint64_t deposit = 1000) {
    using namespace detail;
    ProblemContract c;
    c.tip = tip;
    c.deposit = deposit;
    c.times = times;
    c.space.dims = {dim_i64(0, (std::int64_t)((1ull << n) - 1))};

    Bytecode& code = c.solve_code;
    push(code, 0);  // accumulator
    for (unsigned i = 0; i < n; ++i) {
        input(code, 0);            // [acc, m]
        push(code, 1ull << i);     // [acc, m, 2^i]
        op(code, Opcode::SWAP1);   // [acc, 2^i, m]
        op(code, Opcode::DIV);     // [acc, m>>i]
        push(code, 2);             // [acc, m>>i, 2]
        op(code, Opcode::SWAP1);   // [acc, 2, m>>i]
        op(code, Opcode::MOD);     // [acc, bit]
        push(code, i + 1);         // [acc, bit, elem]
        op(code, Opcode::MUL);     // [acc, bit*elem]
        op(code, Opcode::ADD);     // [acc']
    }
    push(code, target);
    op(code, Opcode::EQ);
    op(code, Opcode::RETURN_BOOL);
    return finish(c);
}

/// The paper's sample instance: S = {1..5}, subset summing to 9, two
/// solutions requested.
inline ProblemContract subset_sum_sample() { return subset_sum(5, 9, 2); }

/// x^3 + y^3 + z^3 = target over a bounded box. The classic target 42 has
/// no solution at desk scale; the planted variant uses 996 = 11^3-7^3+2^3
/// inside [-50,50]^3 so honest mining can actually hit it.
inline ProblemContract diophantine(std::int64_t bound, std::uint64_t target,
                                   std::uint64_t deposit = 1000) {
    using namespace detail;
    ProblemContract c;
    c.tip = 0;
    c.deposit = deposit;
    c.times = 1;
    c.space.dims = {dim_i64(-bound, bound), dim_i64(-bound, bound),
                    dim_i64(-bound, bound)};

    Bytecode& code = c.solve_code;
    input(code, 0);
    cube_top(code);
    input(code, 1);
    cube_top(code);
    op(code, Opcode::ADD);
    input(code, 2);
    cube_top(code);
    op(code, Opcode::ADD);
    push(code, target);
    op(code, Opcode::EQ);
    op(code, Opcode::RETURN_BOOL);
    return finish(c);
}

inline ProblemContract diophantine_42() { return diophantine(1000000, 42); }
inline ProblemContract diophantine_planted() { return diophantine(50, 996); }

/// Nonlinear integer program: feasibility of the four constraints plus
/// objective >= threshold, signed arithmetic in two's complement with
/// sign-bit-biased comparisons.
///
///   obj = 7*x1^2 - 8*x2^3 + 9*x1*x2 - 3*x1*x2 + 5*x4 - x5^2
///   c1:  x1 + x2^2 + x3^3        <= 2014
///   c2:  x1*x3 - x2*x4 - 5*x5    <= 256
///   c3:  x2                      <  2*x5
///   c4:  x1*x2 + x3 + x4^2 - x5  >  1024
inline ProblemContract nonlinear_program(std::int64_t threshold = 250000,
                                         std::uint64_t deposit = 1000) {
    using namespace detail;
    ProblemContract c;
    c.tip = 0;
    c.deposit = deposit;
    c.times = 1;
    c.space.dims = {dim_i64(-32, 32), dim_i64(-32, 32), dim_i64(-8, 8),
                    dim_i64(-32, 32), dim_i64(-8, 8)};

    Bytecode& code = c.solve_code;
    const Word256 bias = Word256::sign_bit();
    const Word256 thr = threshold < 0 ? negate(Word256((std::uint64_t)(-threshold)))
                                      : Word256((std::uint64_t)threshold);

    auto square_top = [&]() {  // [.., a] -> [.., a^2]
        op(code, Opcode::DUP1);
        op(code, Opcode::MUL);
    };
    auto prod = [&](std::uint64_t i, std::uint64_t j) {  // push x_i * x_j
        input(code, i);
        input(code, j);
        op(code, Opcode::MUL);
    };
    auto sub_second_from_top = [&]() {  // [.., y, x] -> [.., x - y]
        op(code, Opcode::SUB);
    };
    auto minus_top = [&]() {  // [.., acc, t] -> [.., acc - t]
        op(code, Opcode::SWAP1);
        sub_second_from_top();
    };
    // [.., rhs, lhs] -> [.., lhs < rhs] in two's-complement order
    auto signed_lt = [&]() {
        push(code, bias);
        op(code, Opcode::ADD);    // [.., rhs, lhs+B]
        op(code, Opcode::SWAP1);  // [.., lhs+B, rhs]
        push(code, bias);
        op(code, Opcode::ADD);    // [.., lhs+B, rhs+B]
        op(code, Opcode::SWAP1);  // [.., rhs+B, lhs+B]
        op(code, Opcode::LT);
    };
    auto logical_not = [&]() {  // [.., f] -> [.., f == 0]
        push(code, 0);
        op(code, Opcode::EQ);
    };

    // c1 flag: lhs1 = x1 + x2^2 + x3^3; c1 = !(2014 < lhs1)
    input(code, 0);
    input(code, 1);
    square_top();
    op(code, Opcode::ADD);
    input(code, 2);
    cube_top(code);
    op(code, Opcode::ADD);  // [lhs1]
    push(code, 2014);       // [lhs1, 2014]: lhs=2014, rhs=lhs1
    signed_lt();            // 2014 < lhs1
    logical_not();          // [c1]

    // c2 flag: lhs2 = x1*x3 - x2*x4 - 5*x5; c2 = !(256 < lhs2)
    prod(1, 3);                 // [.., x2x4]
    prod(0, 2);                 // [.., x2x4, x1x3]
    sub_second_from_top();      // [.., x1x3 - x2x4]
    push(code, 5);
    input(code, 4);
    op(code, Opcode::MUL);      // [.., t, 5x5]
    minus_top();                // [.., lhs2]
    push(code, 256);
    signed_lt();                // 256 < lhs2
    logical_not();              // [c1, c2]

    // c3 flag: x2 < 2*x5
    push(code, 2);
    input(code, 4);
    op(code, Opcode::MUL);      // [.., 2x5]  (rhs first)
    input(code, 1);             // [.., 2x5, x2]
    signed_lt();                // [c1, c2, c3]

    // c4 flag: lhs4 = x1*x2 + x3 + x4^2 - x5; c4 = 1024 < lhs4
    prod(0, 1);
    input(code, 2);
    op(code, Opcode::ADD);
    input(code, 3);
    square_top();
    op(code, Opcode::ADD);      // [.., s]
    input(code, 4);             // [.., s, x5]
    minus_top();                // [.., lhs4]
    push(code, 1024);           // [.., lhs4, 1024]: lhs=1024, rhs=lhs4
    signed_lt();                // [c1, c2, c3, c4]

    // objective flag: obj >= T  <=>  !(obj < T)
    prod(0, 0);
    push(code, 7);
    op(code, Opcode::MUL);      // [.., 7x1^2]
    input(code, 1);
    cube_top(code);
    push(code, 8);
    op(code, Opcode::MUL);      // [.., 7x1^2, 8x2^3]
    minus_top();
    prod(0, 1);
    push(code, 9);
    op(code, Opcode::MUL);
    op(code, Opcode::ADD);      // + 9x1x2
    prod(0, 1);
    push(code, 3);
    op(code, Opcode::MUL);
    minus_top();                // - 3x1x2
    push(code, 5);
    input(code, 3);
    op(code, Opcode::MUL);
    op(code, Opcode::ADD);      // + 5x4
    input(code, 4);
    square_top();
    minus_top();                // [.., obj]
    push(code, thr);
    op(code, Opcode::SWAP1);    // [.., T, obj]: lhs=obj, rhs=T
    signed_lt();                // obj < T
    logical_not();              // [c1, c2, c3, c4, objok]

    // all five flags must hold
    op(code, Opcode::AND);
    op(code, Opcode::AND);
    op(code, Opcode::AND);
    op(code, Opcode::AND);
    op(code, Opcode::RETURN_BOOL);
    return finish(c);
}

/// Chain-filter (token airdrop) problem: the solution is an account index
/// whose on-chain balance meets the threshold.
inline ProblemContract chain_filter(std::uint64_t account_count, std::uint64_t threshold,
                                    std::uint64_t deposit = 1000) {
    using namespace detail;
    ProblemContract c;
    c.tip = 0;
    c.deposit = deposit;
    c.times = 1;
    c.space.dims = {dim_i64(0, (std::int64_t)account_count - 1)};

    Bytecode& code = c.solve_code;
    input(code, 0);
    op(code, Opcode::CHAINREAD);  // [balance]
    push(code, threshold);
    op(code, Opcode::SWAP1);      // [threshold, balance]
    op(code, Opcode::LT);         // balance < threshold
    push(code, 0);
    op(code, Opcode::EQ);         // balance >= threshold
    op(code, Opcode::RETURN_BOOL);
    return finish(c);
}

/// Always-true problem (Issue 1's trivial contract): solve returns true
/// for every input.
inline ProblemContract always_true(std::uint64_t deposit = 1000,
                                   std::uint64_t times = 1000000) {
    using namespace detail;
    ProblemContract c;
    c.tip = 0;
    c.deposit = deposit;
    c.times = times;
    c.space.dims = {dim_i64(0, 255)};
    push(c.solve_code, 1);
    op(c.solve_code, Opcode::RETURN_BOOL);
    return finish(c);
}

// ---- the six digest-experiment modes ------------------------------------------

enum class TestMode { Add, Sub, Mul, Div, Mod, Constant };

inline const char* to_string(TestMode m) {
    switch (m) {
        case TestMode::Add: return "add";
        case TestMode::Sub: return "sub";
        case TestMode::Mul: return "mul";
        case TestMode::Div: return "div";
        case TestMode::Mod: return "mod";
        case TestMode::Constant: return "constant";
    }
    return "?";
}

inline constexpr TestMode kAllModes[6] = {TestMode::Add, TestMode::Sub,
                                          TestMode::Mul, TestMode::Div,
                                          TestMode::Mod, TestMode::Constant};

/// The digest-experiment test function: k unsigned-64-bit inputs, n
/// operation rounds of result <- Op(result, x_{(j mod k)+1}), returning
/// result < r0. r0 = 0 keeps it unsolvable (the experiment studied digests,
/// not solutions). Constant mode performs the same number of rounds on
/// fixed operands so the stack never depends on the input.
inline ProblemContract test_function(TestMode mode, unsigned k = 12, unsigned n = 100,
                                     std::uint64_t r0 = 0, std::uint64_t deposit = 1000) {
    using namespace detail;
    ProblemContract c;
    c.tip = 0;
    c.deposit = deposit;
    c.times = 1;
    // k dimensions, each the full unsigned-64 range [0, 2^64-1]
    c.space.dims.assign(k, SpaceDim{Word256(0), Word256(~0ull)});

    Bytecode& code = c.solve_code;
    push(code, 0);  // result
    for (unsigned j = 0; j < n; ++j) {
        unsigned idx = j % k;
        switch (mode) {
            case TestMode::Add: fold(code, idx, Opcode::ADD); break;
            case TestMode::Sub: fold(code, idx, Opcode::SUB); break;
            case TestMode::Mul: fold(code, idx, Opcode::MUL); break;
            case TestMode::Div: fold(code, idx, Opcode::DIV); break;
            case TestMode::Mod: fold(code, idx, Opcode::MOD); break;
            case TestMode::Constant:
                // same shape and cost class, input-free
                push(code, 0x9e3779b97f4a7c15ull + idx);
                op(code, Opcode::SWAP1);
                op(code, Opcode::ADD);
                break;
        }
    }
    push(code, r0);
    op(code, Opcode::SWAP1);  // [r0, result]
    op(code, Opcode::LT);     // result < r0
    op(code, Opcode::RETURN_BOOL);
    return finish(c);
}

/// Input-free contract consuming exactly the requested gas, then returning
/// false. Used by the constant-stack attacker scenario: since it never
/// reads INPUT, its whole boundary trace is the same for every H.
/// Total gas must satisfy total >= 3 and total % 3 in {0, 2} via one JUMP,
/// or any residue using two; the builder handles all residues >= 19.
inline ProblemContract constant_gas(std::uint64_t total_gas, std::uint64_t deposit = 1000) {
    using namespace detail;
    ProblemContract c;
    c.tip = 0;
    c.deposit = deposit;
    c.times = 1;
    c.space.dims = {dim_i64(0, 255)};

    Bytecode& code = c.solve_code;
    std::uint64_t jumps = (3 - total_gas % 3) % 3;  // 8 = 2 mod 3
    std::uint64_t rest = total_gas - jumps * 8;
    std::uint64_t pushes = rest / 3;  // >= 1 needed for the final return
    // PUSH 0 x pushes, then `jumps` forward JUMPs, then RETURN_BOOL
    for (std::uint64_t i = 0; i < pushes; ++i) push(code, 0);
    for (std::uint64_t i = 0; i < jumps; ++i)
        code.emplace_back(Opcode::JUMP, Word256(pushes + i + 1));
    op(code, Opcode::RETURN_BOOL);
    return finish(c);
}

/// The built-in default problem that keeps the queue nonempty: busy but
/// never solved, and funded by no one (block rewards against it are minted).
inline ProblemContract default_problem() {
    return test_function(TestMode::Add, 4, 20, 0, 1);
}

}  // namespace corpus
}  // namespace axe
