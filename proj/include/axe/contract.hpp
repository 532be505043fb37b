#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "axe/assembly.hpp"
#include "axe/hash.hpp"
#include "axe/u256.hpp"
#include "axe/vm.hpp"

namespace axe {

/// Per-dimension signed bounds of the solution space, inclusive.
struct SpaceDim {
    Word256 lo;  // two's complement
    Word256 hi;

    /// Range size hi - lo + 1 as an unsigned word. Valid dims keep this
    /// nonzero (the full 2^256 span is rejected at validation).
    Word256 extent() const { return add(sub(hi, lo), Word256::one()); }
};

struct SolutionSpace {
    std::vector<SpaceDim> dims;

    std::size_t dim_count() const { return dims.size(); }
};

inline constexpr std::size_t kMaxSpaceDims = 32;

inline bool space_valid(const SolutionSpace& s) {
    if (s.dims.empty() || s.dims.size() > kMaxSpaceDims) return false;
    for (const auto& d : s.dims) {
        if (cmp_signed(d.lo, d.hi) > 0) return false;
        if (d.extent().is_zero()) return false;
    }
    return true;
}

using SolutionVector = std::vector<Word256>;

inline bool solution_in_space(const SolutionSpace& sp, const SolutionVector& s) {
    if (s.size() != sp.dims.size()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (cmp_signed(s[i], sp.dims[i].lo) < 0 || cmp_signed(s[i], sp.dims[i].hi) > 0)
            return false;
    return true;
}

/// A user-submitted problem: economics in the manifest, logic as bytecode.
struct ProblemContract {
    std::uint64_t tip = 0;
    std::uint64_t deposit = 0;
    std::uint64_t times = 1;  // solutions requested
    SolutionSpace space;
    Bytecode solve_code;
    Hash256 id;  // over the canonical package text
};

enum class PackageError {
    None,
    ParseError,
    InvalidSpace,
    InvalidBytecode,
};

struct PackageResult {
    std::optional<ProblemContract> contract;
    PackageError err = PackageError::None;
    std::string message;

    bool ok() const { return contract.has_value(); }
    const ProblemContract& operator*() const { return *contract; }
};

/// Canonical package text; hashing it yields the content address, so any
/// two byte-identical packages share an id and reformatting does not
/// change identity after a parse/serialize round trip.
inline std::string serialize_package(const ProblemContract& c) {
    std::ostringstream os;
    os << "[problem]\n";
    os << "tip = " << c.tip << "\n";
    os << "deposit = " << c.deposit << "\n";
    os << "times = " << c.times << "\n";
    os << "space = ";
    for (std::size_t i = 0; i < c.space.dims.size(); ++i) {
        if (i) os << ";";
        const auto& d = c.space.dims[i];
        auto fmt = [](const Word256& w) {
            if (w.is_negative()) return "-" + to_dec(negate(w));
            return to_dec(w);
        };
        os << "(" << fmt(d.lo) << "," << fmt(d.hi) << ")";
    }
    os << "\n[code]\n";
    os << disassemble(c.solve_code);
    return os.str();
}

inline Hash256 package_id(const ProblemContract& c) {
    return sha3(serialize_package(c));
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

inline std::optional<std::uint64_t> parse_u64(std::string_view s) {
    auto w = parse_word(s);
    if (!w || !w->fits_u64()) return std::nullopt;
    return w->low64();
}

inline std::optional<SolutionSpace> parse_space(std::string_view s) {
    SolutionSpace out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(';', pos);
        std::string_view part = trim(
            s.substr(pos, next == std::string_view::npos ? s.size() - pos : next - pos));
        pos = next == std::string_view::npos ? s.size() : next + 1;
        if (part.empty()) continue;
        if (part.front() != '(' || part.back() != ')') return std::nullopt;
        part = part.substr(1, part.size() - 2);
        std::size_t comma = part.find(',');
        if (comma == std::string_view::npos) return std::nullopt;
        auto lo = parse_word(trim(part.substr(0, comma)));
        auto hi = parse_word(trim(part.substr(comma + 1)));
        if (!lo || !hi) return std::nullopt;
        out.dims.push_back({*lo, *hi});
    }
    return out;
}

}  // namespace detail

/// Parses and validates a package document:
///
///   [problem]
///   tip = <uint>
///   deposit = <uint>
///   times = <uint>
///   space = (a1,b1);(a2,b2);...
///   [code]
///   <assembly lines>
inline PackageResult load_package(std::string_view text) {
    PackageResult out;
    auto fail = [&](PackageError e, std::string msg) {
        out.err = e;
        out.message = std::move(msg);
        return out;
    };

    std::size_t code_at = text.find("[code]");
    std::size_t problem_at = text.find("[problem]");
    if (problem_at == std::string_view::npos || code_at == std::string_view::npos ||
        code_at < problem_at)
        return fail(PackageError::ParseError, "expected [problem] then [code] sections");

    std::string_view manifest = text.substr(problem_at + 9, code_at - problem_at - 9);
    std::string_view code_text = text.substr(code_at + 6);
    if (!code_text.empty() && code_text.front() == '\n') code_text.remove_prefix(1);

    ProblemContract c;
    bool have_deposit = false;
    std::size_t pos = 0;
    while (pos < manifest.size()) {
        std::size_t eol = manifest.find('\n', pos);
        std::string_view line = manifest.substr(
            pos, eol == std::string_view::npos ? manifest.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? manifest.size() : eol + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            return fail(PackageError::ParseError, "manifest line without '='");
        std::string_view key = detail::trim(line.substr(0, eq));
        std::string_view val = detail::trim(line.substr(eq + 1));
        if (key == "tip") {
            auto v = detail::parse_u64(val);
            if (!v) return fail(PackageError::ParseError, "bad tip");
            c.tip = *v;
        } else if (key == "deposit") {
            auto v = detail::parse_u64(val);
            if (!v) return fail(PackageError::ParseError, "bad deposit");
            c.deposit = *v;
            have_deposit = true;
        } else if (key == "times") {
            auto v = detail::parse_u64(val);
            if (!v) return fail(PackageError::ParseError, "bad times");
            c.times = *v;
        } else if (key == "space") {
            auto sp = detail::parse_space(val);
            if (!sp) return fail(PackageError::ParseError, "bad space");
            c.space = *sp;
        } else {
            return fail(PackageError::ParseError, "unknown key '" + std::string(key) + "'");
        }
    }

    if (!have_deposit || c.deposit == 0)
        return fail(PackageError::ParseError, "deposit must be positive");
    if (c.times < 1) return fail(PackageError::ParseError, "times must be >= 1");
    if (!space_valid(c.space))
        return fail(PackageError::InvalidSpace, "solution space is malformed");

    AsmResult assembled = assemble(code_text);
    if (!assembled.ok())
        return fail(PackageError::InvalidBytecode,
                    "line " + std::to_string(assembled.error->line) + ": " +
                        assembled.error->message);
    CodeCheck check = validate_bytecode(assembled.code);
    if (!check.ok())
        return fail(PackageError::InvalidBytecode,
                    "bytecode invalid at instruction " + std::to_string(check.at));

    c.solve_code = std::move(assembled.code);
    c.id = package_id(c);
    out.contract = std::move(c);
    return out;
}

/// Runs the contract's solve logic on a candidate. The caller keeps the
/// candidate inside the declared space.
inline ExecOutcome run_solve(const ProblemContract& c, const SolutionVector& s,
                             const ChainView& view,
                             std::uint64_t gas_limit = kDefaultGasLimit,
                             const SamplingHook* hook = nullptr,
                             const std::uint64_t* next_sample_gas = nullptr) {
    ExecParams params;
    params.gas_limit = gas_limit;
    params.view = &view;
    params.hook = hook;
    params.next_sample_gas = next_sample_gas;
    return execute(c.solve_code, s, params);
}

}  // namespace axe
