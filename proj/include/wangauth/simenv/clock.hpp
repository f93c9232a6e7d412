#pragma once

#include <cstdint>

#include "wangauth/primitives/timestamp.hpp"

namespace wangauth::simenv {

/// Logical, scenario-driven clock. Never moves backwards.
class SimClock {
public:
    explicit SimClock(Timestamp start = {}) : now_(start) {}

    Timestamp now() const noexcept { return now_; }
    void advance(std::uint64_t seconds);
    /// Throws std::invalid_argument if `t` is in the past.
    void advance_to(Timestamp t);

private:
    Timestamp now_;
};

} // namespace wangauth::simenv
