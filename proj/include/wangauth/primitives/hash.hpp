#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "wangauth/primitives/block.hpp"

namespace wangauth {

/// A named, deterministic map from byte strings to Blocks of a fixed length.
class HashFn {
public:
    using Digest = std::function<std::vector<std::uint8_t>(std::span<const std::uint8_t>)>;

    HashFn(std::string name, std::size_t output_len, Digest digest);

    const std::string& name() const noexcept { return name_; }
    std::size_t output_len() const noexcept { return output_len_; }

    Block apply(std::span<const std::uint8_t> msg) const;

    /// Two hash functions are interchangeable when name and length agree.
    friend bool operator==(const HashFn& a, const HashFn& b)
    {
        return a.name_ == b.name_ && a.output_len_ == b.output_len_;
    }

private:
    std::string name_;
    std::size_t output_len_;
    Digest digest_;
};

enum class HashBackend { standard, toy16, zero };

/// SHA-256, L = 32. The default backend.
HashFn sha256_hash();
/// First two bytes of SHA-256, L = 2. Small enough to enumerate.
HashFn toy16_hash();
/// Constant all-zero output, L = 32. Test-only.
HashFn zero_hash();

HashFn make_hash(HashBackend backend);

/// "default" | "toy16" | "zero"
std::optional<HashBackend> parse_hash_backend(std::string_view name);
std::string_view to_string(HashBackend backend);

Block hash_bytes(const HashFn& h, std::span<const std::uint8_t> msg);
Block hash_bytes(const HashFn& h, std::string_view msg);
Block hash_bytes(const HashFn& h, const Block& msg);

} // namespace wangauth
