#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "axe/u256.hpp"
#include "axe/view.hpp"

namespace axe {

// Stack-based, gas-metered, 256-bit-word problem VM.
//
// Binary operators follow EVM order: the result combines the popped top
// with the popped second, e.g. SUB yields top - second. Jump targets are
// instruction indices carried as immediates so they validate statically.

enum class Opcode : std::uint8_t {
    STOP = 0x00,
    PUSH = 0x01,   // imm: value
    POP = 0x02,
    DUP1 = 0x03,
    DUP2 = 0x04,
    DUP3 = 0x05,
    DUP4 = 0x06,
    SWAP1 = 0x07,
    SWAP2 = 0x08,
    SWAP3 = 0x09,
    SWAP4 = 0x0a,
    ADD = 0x10,
    SUB = 0x11,
    MUL = 0x12,
    DIV = 0x13,
    MOD = 0x14,
    LT = 0x20,
    GT = 0x21,
    EQ = 0x22,
    AND = 0x23,
    OR = 0x24,
    XOR = 0x25,
    NOT = 0x26,
    JUMP = 0x30,   // imm: target instruction index
    JUMPI = 0x31,  // imm: target; pops condition, jumps if nonzero
    INPUT = 0x40,  // imm: solution-vector component index
    CHAINREAD = 0x41,
    RETURN_BOOL = 0x50,
};

struct Instr {
    std::uint8_t op = 0;  // raw so unknown opcodes survive deserialization
    std::optional<Word256> imm;

    Instr() = default;
    Instr(Opcode o) : op((std::uint8_t)o) {}
    Instr(Opcode o, Word256 v) : op((std::uint8_t)o), imm(v) {}

    friend bool operator==(const Instr& a, const Instr& b) {
        return a.op == b.op && a.imm == b.imm;
    }
};

using Bytecode = std::vector<Instr>;

inline constexpr std::size_t kStackLimit = 1024;
inline constexpr std::uint64_t kDefaultGasLimit = 100000;

inline bool opcode_known(std::uint8_t op) {
    switch ((Opcode)op) {
        case Opcode::STOP:
        case Opcode::PUSH:
        case Opcode::POP:
        case Opcode::DUP1:
        case Opcode::DUP2:
        case Opcode::DUP3:
        case Opcode::DUP4:
        case Opcode::SWAP1:
        case Opcode::SWAP2:
        case Opcode::SWAP3:
        case Opcode::SWAP4:
        case Opcode::ADD:
        case Opcode::SUB:
        case Opcode::MUL:
        case Opcode::DIV:
        case Opcode::MOD:
        case Opcode::LT:
        case Opcode::GT:
        case Opcode::EQ:
        case Opcode::AND:
        case Opcode::OR:
        case Opcode::XOR:
        case Opcode::NOT:
        case Opcode::JUMP:
        case Opcode::JUMPI:
        case Opcode::INPUT:
        case Opcode::CHAINREAD:
        case Opcode::RETURN_BOOL:
            return true;
    }
    return false;
}

inline bool opcode_has_imm(Opcode op) {
    return op == Opcode::PUSH || op == Opcode::JUMP || op == Opcode::JUMPI ||
           op == Opcode::INPUT;
}

/// Static gas cost per instruction. Only the ratios matter for the
/// utilization analysis; these mirror coarse Ethereum proportions.
inline std::uint64_t gas_cost(Opcode op) {
    switch (op) {
        case Opcode::MUL:
        case Opcode::DIV:
        case Opcode::MOD:
            return 5;
        case Opcode::JUMP:
        case Opcode::JUMPI:
            return 8;
        case Opcode::CHAINREAD:
            return 20;
        case Opcode::STOP:
        case Opcode::RETURN_BOOL:
            return 0;
        default:
            return 3;
    }
}

enum class CodeError {
    None,
    UnknownOpcode,
    BadJumpTarget,
    MissingImmediate,
};

struct CodeCheck {
    CodeError err = CodeError::None;
    std::size_t at = 0;  // offending instruction index

    bool ok() const { return err == CodeError::None; }
};

inline CodeCheck validate_bytecode(const Bytecode& code) {
    for (std::size_t i = 0; i < code.size(); ++i) {
        const Instr& ins = code[i];
        if (!opcode_known(ins.op)) return {CodeError::UnknownOpcode, i};
        Opcode op = (Opcode)ins.op;
        if (opcode_has_imm(op) && !ins.imm) return {CodeError::MissingImmediate, i};
        if (op == Opcode::JUMP || op == Opcode::JUMPI) {
            const Word256& t = *ins.imm;
            if (!t.fits_u64() || t.low64() >= code.size())
                return {CodeError::BadJumpTarget, i};
        }
        if (op == Opcode::INPUT && !ins.imm->fits_u64())
            return {CodeError::MissingImmediate, i};
    }
    return {};
}

enum class HaltReason { Returned, OutOfGas, Trap };

struct ExecOutcome {
    bool solved = false;
    std::uint64_t gas_used = 0;
    HaltReason halt_reason = HaltReason::Trap;
};

inline const char* to_string(HaltReason r) {
    switch (r) {
        case HaltReason::Returned: return "returned";
        case HaltReason::OutOfGas: return "out-of-gas";
        case HaltReason::Trap: return "trap";
    }
    return "?";
}

/// Top-of-stack view handed to the sampling hook. Slots beyond the live
/// stack depth are flagged padded; the proof layer substitutes H for them.
struct StackTop4 {
    std::array<Word256, 4> w{};
    std::array<bool, 4> padded{true, true, true, true};
};

/// Called at scheduled gas offsets, before the instruction at that offset
/// executes. gas_used is the exact offset observed.
using SamplingHook = std::function<void(std::uint64_t gas_used, const StackTop4&)>;

/// Optional tracer: observes every instruction boundary (pre-execution),
/// in gas order. Used by replay attackers and tests, not by consensus.
using BoundaryTrace = std::function<void(std::uint64_t gas_used, const StackTop4&)>;

struct ExecParams {
    std::uint64_t gas_limit = kDefaultGasLimit;
    const ChainView* view = nullptr;
    const SamplingHook* hook = nullptr;        // fires per sampling schedule
    const std::uint64_t* next_sample_gas = nullptr;  // owned by the proof layer
    const BoundaryTrace* trace = nullptr;
    StackTop4* halt_top4 = nullptr;  // stack view at the moment of halt
};

namespace detail {

inline StackTop4 top4_of(const std::vector<Word256>& stack) {
    StackTop4 out;
    std::size_t d = stack.size();
    for (std::size_t i = 0; i < 4 && i < d; ++i) {
        out.w[i] = stack[d - 1 - i];
        out.padded[i] = false;
    }
    return out;
}

}  // namespace detail

/// Executes validated bytecode against a solution vector.
///
/// Deterministic for fixed (code, input, view). A trapped or out-of-gas run
/// reports solved = false; out-of-gas burns the full gas limit. Falling off
/// the end of code is a trap, so the empty program traps immediately.
inline ExecOutcome execute(const Bytecode& code,
                           const std::vector<Word256>& input,
                           const ExecParams& params) {
    ExecOutcome out;
    std::vector<Word256> stack;
    stack.reserve(64);
    std::size_t pc = 0;
    std::uint64_t gas = 0;
    const std::uint64_t gas_limit = params.gas_limit;
    const ChainView empty_view;
    const ChainView& view = params.view ? *params.view : empty_view;

    auto at_halt = [&]() {
        if (params.halt_top4) *params.halt_top4 = detail::top4_of(stack);
    };
    auto trap = [&]() {
        at_halt();
        out.gas_used = gas;
        out.halt_reason = HaltReason::Trap;
        out.solved = false;
        return out;
    };

    for (;;) {
        // boundary checks happen before each fetch, never after the halt
        if (params.hook && params.next_sample_gas) {
            while (gas >= *params.next_sample_gas)
                (*params.hook)(gas, detail::top4_of(stack));
        }
        if (params.trace) (*params.trace)(gas, detail::top4_of(stack));

        if (pc >= code.size()) return trap();
        const Instr& ins = code[pc];
        Opcode op = (Opcode)ins.op;
        std::uint64_t cost = gas_cost(op);
        if (gas + cost > gas_limit) {
            at_halt();
            out.gas_used = gas_limit;
            out.halt_reason = HaltReason::OutOfGas;
            out.solved = false;
            return out;
        }
        gas += cost;
        ++pc;

        auto need = [&](std::size_t n) { return stack.size() >= n; };
        auto pop = [&]() {
            Word256 v = stack.back();
            stack.pop_back();
            return v;
        };
        auto push = [&](const Word256& v) { stack.push_back(v); };

        switch (op) {
            case Opcode::STOP:
                at_halt();
                out.gas_used = gas;
                out.halt_reason = HaltReason::Returned;
                out.solved = false;
                return out;
            case Opcode::PUSH:
                if (stack.size() >= kStackLimit) return trap();
                push(*ins.imm);
                break;
            case Opcode::POP:
                if (!need(1)) return trap();
                pop();
                break;
            case Opcode::DUP1:
            case Opcode::DUP2:
            case Opcode::DUP3:
            case Opcode::DUP4: {
                std::size_t n = (std::size_t)ins.op - (std::size_t)Opcode::DUP1 + 1;
                if (!need(n) || stack.size() >= kStackLimit) return trap();
                push(stack[stack.size() - n]);
                break;
            }
            case Opcode::SWAP1:
            case Opcode::SWAP2:
            case Opcode::SWAP3:
            case Opcode::SWAP4: {
                std::size_t n = (std::size_t)ins.op - (std::size_t)Opcode::SWAP1 + 1;
                if (!need(n + 1)) return trap();
                std::swap(stack[stack.size() - 1], stack[stack.size() - 1 - n]);
                break;
            }
            case Opcode::ADD:
            case Opcode::SUB:
            case Opcode::MUL:
            case Opcode::DIV:
            case Opcode::MOD:
            case Opcode::LT:
            case Opcode::GT:
            case Opcode::EQ:
            case Opcode::AND:
            case Opcode::OR:
            case Opcode::XOR: {
                if (!need(2)) return trap();
                Word256 a = pop();  // top
                Word256 b = pop();  // second
                Word256 r;
                switch (op) {
                    case Opcode::ADD: r = add(a, b); break;
                    case Opcode::SUB: r = sub(a, b); break;
                    case Opcode::MUL: r = mul(a, b); break;
                    // division semantics: x/0 = 0 and x%0 = 0, never a trap
                    case Opcode::DIV: r = divmod(a, b).quot; break;
                    case Opcode::MOD: r = divmod(a, b).rem; break;
                    case Opcode::LT: r = Word256(cmp(a, b) < 0 ? 1 : 0); break;
                    case Opcode::GT: r = Word256(cmp(a, b) > 0 ? 1 : 0); break;
                    case Opcode::EQ: r = Word256(a == b ? 1 : 0); break;
                    case Opcode::AND: r = and_(a, b); break;
                    case Opcode::OR: r = or_(a, b); break;
                    case Opcode::XOR: r = xor_(a, b); break;
                    default: break;
                }
                push(r);
                break;
            }
            case Opcode::NOT: {
                if (!need(1)) return trap();
                Word256 a = pop();
                push(not_(a));
                break;
            }
            case Opcode::JUMP:
                pc = (std::size_t)ins.imm->low64();
                break;
            case Opcode::JUMPI: {
                if (!need(1)) return trap();
                Word256 c = pop();
                if (!c.is_zero()) pc = (std::size_t)ins.imm->low64();
                break;
            }
            case Opcode::INPUT: {
                std::uint64_t idx = ins.imm->low64();
                if (idx >= input.size() || stack.size() >= kStackLimit) return trap();
                push(input[idx]);
                break;
            }
            case Opcode::CHAINREAD: {
                if (!need(1)) return trap();
                Word256 key = pop();
                push(view.get(key));
                break;
            }
            case Opcode::RETURN_BOOL: {
                if (!need(1)) return trap();
                Word256 v = pop();
                at_halt();
                out.gas_used = gas;
                out.halt_reason = HaltReason::Returned;
                out.solved = !v.is_zero();
                return out;
            }
            default:
                return trap();  // unknown opcode slipped past validation
        }
    }
}

}  // namespace axe
