#pragma once

#include <cstdint>
#include <map>

#include "axe/hash.hpp"
#include "axe/u256.hpp"

namespace axe {

/// Read-only snapshot of chain state visible to problem bytecode.
/// CHAINREAD resolves missing keys to zero.
struct ChainView {
    std::map<Word256, Word256> accounts;
    std::uint64_t height = 0;
    Hash256 tip;

    Word256 get(const Word256& key) const {
        auto it = accounts.find(key);
        return it == accounts.end() ? Word256::zero() : it->second;
    }
};

}  // namespace axe
