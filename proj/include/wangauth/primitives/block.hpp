#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wangauth {

/// Fixed-length byte string. Every XOR operand in the scheme is a Block whose
/// length equals the output length of the deployment's hash function.
///
/// Combining blocks of different lengths throws std::invalid_argument; nothing
/// is ever truncated or padded implicitly.
class Block {
public:
    explicit Block(std::vector<std::uint8_t> bytes);

    static Block zero(std::size_t length);
    /// Parses lowercase or uppercase hex without a prefix.
    static Block from_hex(std::string_view hex);

    std::size_t size() const noexcept { return bytes_.size(); }
    std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
    std::uint8_t operator[](std::size_t i) const { return bytes_.at(i); }

    /// Canonical textual form: lowercase hex, no prefix.
    std::string to_hex() const;

    /// Copy with bit `bit` (0 = MSB of byte 0) inverted.
    Block with_bit_flipped(std::size_t bit) const;

    Block& operator^=(const Block& other);

    friend bool operator==(const Block&, const Block&) = default;

private:
    std::vector<std::uint8_t> bytes_;
};

inline Block operator^(Block a, const Block& b)
{
    a ^= b;
    return a;
}

} // namespace wangauth
