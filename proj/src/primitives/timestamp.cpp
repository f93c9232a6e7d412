#include "wangauth/primitives/timestamp.hpp"

#include <stdexcept>
#include <vector>

namespace wangauth {

Block encode_timestamp(Timestamp t, std::size_t length)
{
    std::vector<std::uint8_t> bytes(length, 0);
    std::uint64_t v = t.seconds;
    for (std::size_t i = 0; i < length && i < 8; ++i) {
        bytes[length - 1 - i] = static_cast<std::uint8_t>(v & 0xff);
        v >>= 8;
    }
    return Block(std::move(bytes));
}

Block encode_identity(const HashFn& h, std::string_view id)
{
    if (id.empty())
        throw std::invalid_argument("encode_identity: identity must be non-empty");
    std::vector<std::uint8_t> msg;
    msg.reserve(id.size() + 1);
    msg.push_back(kIdentityDomainTag);
    msg.insert(msg.end(), id.begin(), id.end());
    return hash_bytes(h, std::span<const std::uint8_t>(msg));
}

} // namespace wangauth
