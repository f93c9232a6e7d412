#pragma once

// Test-only helpers. Nothing here calls into the library's XOR/hash code paths
// it is used to check.

#include <cstdint>
#include <string>
#include <vector>

#include "wangauth/primitives/block.hpp"
#include "wangauth/primitives/random.hpp"

namespace wangauth::testing {

/// Inverse of encode_timestamp for blocks of at least 8 bytes.
inline std::uint64_t decode_timestamp(const Block& b)
{
    std::uint64_t v = 0;
    for (std::size_t i = b.size() - 8; i < b.size(); ++i)
        v = (v << 8) | b[i];
    return v;
}

/// Distinct passwords; entry k starts with "w<k>-" so no two collide.
inline std::vector<std::string> make_dictionary(Rng& rng, std::size_t size)
{
    std::vector<std::string> words;
    words.reserve(size);
    for (std::size_t k = 0; k < size; ++k)
        words.push_back("w" + std::to_string(k) + "-" + rng.alphanumeric(6));
    return words;
}

/// Bytewise XOR computed independently of Block::operator^.
inline Block xor_reference(const Block& a, const Block& b)
{
    std::vector<std::uint8_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = static_cast<std::uint8_t>(a.bytes()[i] ^ b.bytes()[i]);
    return Block(std::move(out));
}

} // namespace wangauth::testing
