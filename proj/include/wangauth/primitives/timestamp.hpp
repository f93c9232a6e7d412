#pragma once

#include <compare>
#include <cstdint>
#include <string_view>

#include "wangauth/primitives/block.hpp"
#include "wangauth/primitives/hash.hpp"

namespace wangauth {

/// Whole seconds since the simulation epoch.
struct Timestamp {
    std::uint64_t seconds = 0;

    friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

inline Timestamp operator+(Timestamp t, std::uint64_t seconds)
{
    return Timestamp{t.seconds + seconds};
}

/// True iff 0 <= received - sent <= window.
inline bool within_window(Timestamp sent, Timestamp received, std::uint64_t window) noexcept
{
    return received >= sent && received.seconds - sent.seconds <= window;
}

/// Big-endian 64-bit integer right-aligned in a `length`-byte block, left-padded
/// with zeros. For length < 8 only the low-order `length` bytes survive.
Block encode_timestamp(Timestamp t, std::size_t length);

inline constexpr std::uint8_t kIdentityDomainTag = 0x01;

/// hash(0x01 || id). Throws std::invalid_argument on an empty identity.
Block encode_identity(const HashFn& h, std::string_view id);

} // namespace wangauth
