#include "wangauth/primitives/random.hpp"

#include <limits>
#include <stdexcept>

namespace wangauth {

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0)
        throw std::invalid_argument("Rng::below: bound must be positive");
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % bound;
}

std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi)
{
    if (lo > hi)
        throw std::invalid_argument("Rng::between: empty range");
    if (lo == 0 && hi == std::numeric_limits<std::uint64_t>::max())
        return engine_();
    return lo + below(hi - lo + 1);
}

std::vector<std::uint8_t> Rng::bytes(std::size_t n)
{
    std::vector<std::uint8_t> out(n);
    std::size_t i = 0;
    while (i < n) {
        std::uint64_t v = engine_();
        for (int k = 0; k < 8 && i < n; ++k, ++i) {
            out[i] = static_cast<std::uint8_t>(v & 0xff);
            v >>= 8;
        }
    }
    return out;
}

std::string Rng::alphanumeric(std::size_t length)
{
    static constexpr std::string_view alphabet =
        "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
    std::string out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i)
        out.push_back(alphabet[below(alphabet.size())]);
    return out;
}

} // namespace wangauth
