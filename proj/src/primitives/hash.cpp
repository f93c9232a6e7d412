#include "wangauth/primitives/hash.hpp"

#include <openssl/sha.h>

#include <stdexcept>

namespace wangauth {

namespace {

std::vector<std::uint8_t> sha256_digest(std::span<const std::uint8_t> msg)
{
    std::vector<std::uint8_t> out(SHA256_DIGEST_LENGTH);
    SHA256(msg.data(), msg.size(), out.data());
    return out;
}

} // namespace

HashFn::HashFn(std::string name, std::size_t output_len, Digest digest)
    : name_(std::move(name)), output_len_(output_len), digest_(std::move(digest))
{
    if (output_len_ == 0)
        throw std::invalid_argument("HashFn: output length must be positive");
    if (!digest_)
        throw std::invalid_argument("HashFn: missing digest function");
}

Block HashFn::apply(std::span<const std::uint8_t> msg) const
{
    auto out = digest_(msg);
    if (out.size() != output_len_)
        throw std::logic_error("HashFn '" + name_ + "' produced " + std::to_string(out.size()) +
                               " bytes, expected " + std::to_string(output_len_));
    return Block(std::move(out));
}

HashFn sha256_hash()
{
    return HashFn("sha256", SHA256_DIGEST_LENGTH, sha256_digest);
}

HashFn toy16_hash()
{
    return HashFn("toy16", 2, [](std::span<const std::uint8_t> msg) {
        auto full = sha256_digest(msg);
        full.resize(2);
        return full;
    });
}

HashFn zero_hash()
{
    return HashFn("zero", SHA256_DIGEST_LENGTH, [](std::span<const std::uint8_t>) {
        return std::vector<std::uint8_t>(SHA256_DIGEST_LENGTH, 0);
    });
}

HashFn make_hash(HashBackend backend)
{
    switch (backend) {
    case HashBackend::standard:
        return sha256_hash();
    case HashBackend::toy16:
        return toy16_hash();
    case HashBackend::zero:
        return zero_hash();
    }
    throw std::invalid_argument("unknown hash backend");
}

std::optional<HashBackend> parse_hash_backend(std::string_view name)
{
    if (name == "default")
        return HashBackend::standard;
    if (name == "toy16")
        return HashBackend::toy16;
    if (name == "zero")
        return HashBackend::zero;
    return std::nullopt;
}

std::string_view to_string(HashBackend backend)
{
    switch (backend) {
    case HashBackend::standard:
        return "default";
    case HashBackend::toy16:
        return "toy16";
    case HashBackend::zero:
        return "zero";
    }
    return "?";
}

Block hash_bytes(const HashFn& h, std::span<const std::uint8_t> msg)
{
    return h.apply(msg);
}

Block hash_bytes(const HashFn& h, std::string_view msg)
{
    return h.apply({reinterpret_cast<const std::uint8_t*>(msg.data()), msg.size()});
}

Block hash_bytes(const HashFn& h, const Block& msg)
{
    return h.apply(msg.bytes());
}

} // namespace wangauth
