#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wangauth/primitives/block.hpp"

namespace wangauth {

/// Seeded generator for every random choice in a scenario.
///
/// Only the raw mt19937_64 stream is used (its output is fixed by the
/// standard); bounded draws use rejection sampling rather than
/// std::uniform_int_distribution, whose algorithm differs between standard
/// libraries. The same seed therefore yields the same values everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

    std::vector<std::uint8_t> bytes(std::size_t n);
    Block block(std::size_t length) { return Block(bytes(length)); }

    /// Random string over [0-9A-Za-z].
    std::string alphanumeric(std::size_t length);

private:
    std::mt19937_64 engine_;
};

} // namespace wangauth
