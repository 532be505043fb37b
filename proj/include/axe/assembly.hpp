#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "axe/vm.hpp"

namespace axe {

// Textual bytecode: one instruction per line, '#' starts a comment,
// immediates are decimal or 0x-hex (decimal may be negative, meaning the
// two's-complement word). Canonical output is upper-case mnemonics with
// decimal immediates; canonical text round-trips exactly.

inline const char* mnemonic(Opcode op) {
    switch (op) {
        case Opcode::STOP: return "STOP";
        case Opcode::PUSH: return "PUSH";
        case Opcode::POP: return "POP";
        case Opcode::DUP1: return "DUP1";
        case Opcode::DUP2: return "DUP2";
        case Opcode::DUP3: return "DUP3";
        case Opcode::DUP4: return "DUP4";
        case Opcode::SWAP1: return "SWAP1";
        case Opcode::SWAP2: return "SWAP2";
        case Opcode::SWAP3: return "SWAP3";
        case Opcode::SWAP4: return "SWAP4";
        case Opcode::ADD: return "ADD";
        case Opcode::SUB: return "SUB";
        case Opcode::MUL: return "MUL";
        case Opcode::DIV: return "DIV";
        case Opcode::MOD: return "MOD";
        case Opcode::LT: return "LT";
        case Opcode::GT: return "GT";
        case Opcode::EQ: return "EQ";
        case Opcode::AND: return "AND";
        case Opcode::OR: return "OR";
        case Opcode::XOR: return "XOR";
        case Opcode::NOT: return "NOT";
        case Opcode::JUMP: return "JUMP";
        case Opcode::JUMPI: return "JUMPI";
        case Opcode::INPUT: return "INPUT";
        case Opcode::CHAINREAD: return "CHAINREAD";
        case Opcode::RETURN_BOOL: return "RETURN_BOOL";
    }
    return nullptr;
}

inline std::optional<Opcode> opcode_from_mnemonic(std::string_view name) {
    static const Opcode all[] = {
        Opcode::STOP,  Opcode::PUSH,  Opcode::POP,   Opcode::DUP1,
        Opcode::DUP2,  Opcode::DUP3,  Opcode::DUP4,  Opcode::SWAP1,
        Opcode::SWAP2, Opcode::SWAP3, Opcode::SWAP4, Opcode::ADD,
        Opcode::SUB,   Opcode::MUL,   Opcode::DIV,   Opcode::MOD,
        Opcode::LT,    Opcode::GT,    Opcode::EQ,    Opcode::AND,
        Opcode::OR,    Opcode::XOR,   Opcode::NOT,   Opcode::JUMP,
        Opcode::JUMPI, Opcode::INPUT, Opcode::CHAINREAD,
        Opcode::RETURN_BOOL};
    for (Opcode op : all)
        if (name == mnemonic(op)) return op;
    return std::nullopt;
}

struct AsmError {
    std::size_t line = 0;  // 1-based source line
    std::string message;
};

struct AsmResult {
    Bytecode code;
    std::optional<AsmError> error;

    bool ok() const { return !error.has_value(); }
};

inline AsmResult assemble(std::string_view text) {
    AsmResult out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
        while (!line.empty() && is_space(line.front())) line.remove_prefix(1);
        while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
        if (line.empty()) continue;

        std::size_t sp = 0;
        while (sp < line.size() && !is_space(line[sp])) ++sp;
        std::string_view name = line.substr(0, sp);
        std::string_view rest = line.substr(sp);
        while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);

        auto op = opcode_from_mnemonic(name);
        if (!op) {
            out.error = {line_no, "unknown mnemonic '" + std::string(name) + "'"};
            return out;
        }
        if (opcode_has_imm(*op)) {
            if (rest.empty()) {
                out.error = {line_no, std::string(name) + " needs an immediate"};
                return out;
            }
            auto imm = parse_word(rest);
            if (!imm) {
                out.error = {line_no, "bad immediate '" + std::string(rest) + "'"};
                return out;
            }
            out.code.emplace_back(*op, *imm);
        } else {
            if (!rest.empty()) {
                out.error = {line_no, std::string(name) + " takes no operand"};
                return out;
            }
            out.code.emplace_back(*op);
        }
    }
    return out;
}

inline std::string disassemble(const Bytecode& code) {
    std::ostringstream os;
    for (const Instr& ins : code) {
        const char* name = opcode_known(ins.op) ? mnemonic((Opcode)ins.op) : nullptr;
        if (!name) {
            os << "# <unknown opcode " << (unsigned)ins.op << ">\n";
            continue;
        }
        os << name;
        if (opcode_has_imm((Opcode)ins.op) && ins.imm) os << ' ' << to_dec(*ins.imm);
        os << '\n';
    }
    return os.str();
}

}  // namespace axe
