#include "wangauth/primitives/block.hpp"

#include <stdexcept>

namespace wangauth {

namespace {

int hex_value(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

} // namespace

Block::Block(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes))
{
    if (bytes_.empty())
        throw std::invalid_argument("Block: length must be at least one byte");
}

Block Block::zero(std::size_t length)
{
    return Block(std::vector<std::uint8_t>(length, 0));
}

Block Block::from_hex(std::string_view hex)
{
    if (hex.size() % 2 != 0)
        throw std::invalid_argument("Block: odd number of hex digits");
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = hex_value(hex[2 * i]);
        const int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0)
            throw std::invalid_argument("Block: invalid hex digit");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return Block(std::move(out));
}

std::string Block::to_hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (std::uint8_t b : bytes_) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0x0f]);
    }
    return out;
}

Block Block::with_bit_flipped(std::size_t bit) const
{
    if (bit >= bytes_.size() * 8)
        throw std::out_of_range("Block: bit index out of range");
    Block copy = *this;
    copy.bytes_[bit / 8] ^= static_cast<std::uint8_t>(0x80u >> (bit % 8));
    return copy;
}

Block& Block::operator^=(const Block& other)
{
    if (other.size() != size())
        throw std::invalid_argument("Block: XOR of blocks with different lengths (" +
                                    std::to_string(size()) + " vs " +
                                    std::to_string(other.size()) + ")");
    for (std::size_t i = 0; i < bytes_.size(); ++i)
        bytes_[i] ^= other.bytes_[i];
    return *this;
}

} // namespace wangauth
