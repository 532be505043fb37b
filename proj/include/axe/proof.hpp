#pragma once

#include <cstdint>
#include <vector>

#include "axe/contract.hpp"
#include "axe/hash.hpp"
#include "axe/header.hpp"
#include "axe/vm.hpp"
#include "axe/work.hpp"

namespace axe {

// Virtual-machine stack sampling proof. The final workload is derived from
// a digest of stack samples taken while the problem contract runs, so a
// miner cannot produce a comparable workload without doing the problem's
// work (or at least the sampling walk, which is what the utilization ratio
// eta prices in).

struct SamplingSchedule {
    std::uint64_t v = 100;       // gas per sampling window
    std::uint64_t k_ratio = 16;  // gas of one SHA-3 in FNV units

    bool valid() const { return v >= 1 && k_ratio >= 1; }
};

/// FNV cost of one workload: SHA-3 at both ends, the initial snapshot,
/// and 32*4+3+1 folds per sample.
inline constexpr std::uint64_t kFnvPerSample = 32 * 4 + 3 + 1;  // 132

inline constexpr std::uint64_t n_fnv_for(std::uint64_t k_ratio, std::uint64_t n_sample) {
    return 2 * k_ratio + 3 + kFnvPerSample * n_sample;
}

/// snapshot_0 = FNV(FNV(H[0],H[1]), FNV(H[2],H[3])); exactly 3 FNVs.
inline std::uint64_t initial_snapshot(const Hash256& h) {
    auto w = hash_words(h);
    return fnv64(fnv64(w[0], w[1]), fnv64(w[2], w[3]));
}

/// One sampling round over the four top-of-stack words (already padded).
/// The accumulator starts from the previous snapshot and runs through all
/// 128 bytes big-endian-first; per-word intermediates merge pairwise and
/// fold the previous snapshot once more: 132 FNVs total.
inline std::uint64_t update_snapshot(const std::array<Word256, 4>& words,
                                     std::uint64_t prev) {
    std::uint64_t acc = prev;
    std::uint64_t t[4];
    for (int wi = 0; wi < 4; ++wi) {
        auto bytes = to_be_bytes(words[wi]);
        for (int j = 0; j < 32; ++j) acc = fnv64(acc, bytes[j]);
        t[wi] = acc;
    }
    std::uint64_t snap = fnv64(fnv64(t[0], t[1]), fnv64(t[2], t[3]));
    return fnv64(snap, prev);
}

/// Gas offset of the i-th sample (i >= 1): (i-1)*v + prev mod v.
inline std::uint64_t next_location(std::uint64_t i, std::uint64_t v,
                                   std::uint64_t prev) {
    return (i - 1) * v + prev % v;
}

/// Eq. 3 solution mapping: treat H as one 256-bit integer and peel one
/// dimension at a time; s_i = a_i + H_i mod extent_i, H_{i+1} = H_i / extent_i.
inline SolutionVector map_solution(const Hash256& h, const SolutionSpace& space) {
    SolutionVector s;
    s.reserve(space.dims.size());
    Word256 cur = h.to_word();
    for (const auto& d : space.dims) {
        auto dm = divmod(cur, d.extent());
        s.push_back(add(d.lo, dm.rem));
        cur = dm.quot;
    }
    return s;
}

struct ProofResult {
    WorkValue work_final;
    Hash256 work0;
    std::uint64_t state_digest = 0;
    std::uint64_t n_sample = 0;
    bool solved = false;
    // execution facts, used for time accounting and metrics
    std::uint64_t gas_used = 0;
    HaltReason halt_reason = HaltReason::Trap;
    Hash256 hash;  // H for this (header, nonce)
};

namespace detail {

inline std::array<Word256, 4> pad_with_hash(const StackTop4& top, const Hash256& h) {
    std::array<Word256, 4> words;
    Word256 hw = h.to_word();
    for (int i = 0; i < 4; ++i) words[i] = top.padded[i] ? hw : top.w[i];
    return words;
}

}  // namespace detail

/// The proof core: runs solve on the H-mapped candidate while sampling the
/// stack per schedule, then binds the digest into the workload. Exposed
/// separately from the header/nonce wrapper so experiments can feed
/// synthetic uniformly-distributed H values directly.
inline ProofResult proof_from_hash(const Hash256& h, const ProblemContract& problem,
                                   const ChainView& view, const SamplingSchedule& sched,
                                   std::uint64_t gas_limit = kDefaultGasLimit) {
    ProofResult res;
    res.hash = h;

    SolutionVector input = map_solution(h, problem.space);
    std::uint64_t snap = initial_snapshot(h);
    std::uint64_t n_sample = 0;
    std::uint64_t next_gas = next_location(1, sched.v, snap);

    SamplingHook hook = [&](std::uint64_t, const StackTop4& top) {
        snap = update_snapshot(detail::pad_with_hash(top, h), snap);
        ++n_sample;
        next_gas = next_location(n_sample + 1, sched.v, snap);
    };

    ExecParams params;
    params.gas_limit = gas_limit;
    params.view = &view;
    params.hook = &hook;
    params.next_sample_gas = &next_gas;
    StackTop4 halt_top;
    params.halt_top4 = &halt_top;

    ExecOutcome outcome = execute(problem.solve_code, input, params);

    if (n_sample == 0) {
        // contract halted before the first window closed; sample the halt
        // state once so every workload is backed by at least one sample
        snap = update_snapshot(detail::pad_with_hash(halt_top, h), snap);
        n_sample = 1;
    }

    res.state_digest = snap;
    res.n_sample = n_sample;
    res.solved = outcome.solved;
    res.gas_used = outcome.gas_used;
    res.halt_reason = outcome.halt_reason;

    // work_0 = SHA3(H || state_digest), digest appended as 8 BE bytes
    std::vector<std::uint8_t> buf(h.bytes.begin(), h.bytes.end());
    put_be64(buf, snap);
    res.work0 = sha3(buf);
    res.work_final = {res.work0.to_word(), n_fnv_for(sched.k_ratio, n_sample)};
    return res;
}

/// Algorithm 1's stack_proof(header, nonce, problem).
inline ProofResult stack_proof(const HeaderPreimage& header, std::uint64_t nonce,
                               const ProblemContract& problem, const ChainView& view,
                               const SamplingSchedule& sched,
                               std::uint64_t gas_limit = kDefaultGasLimit) {
    return proof_from_hash(mining_hash(header, nonce), problem, view, sched, gas_limit);
}

/// Simulated cost of one nonce attempt, in gas units: the proof overhead
/// (n_fnv FNVs at g_fnv each) plus the metered contract execution.
inline std::uint64_t attempt_gas(const ProofResult& r, const SamplingSchedule& sched,
                                 std::uint64_t g_fnv) {
    return n_fnv_for(sched.k_ratio, r.n_sample) * g_fnv + r.gas_used;
}

}  // namespace axe
