#include "wangauth/simenv/clock.hpp"

#include <limits>
#include <stdexcept>

namespace wangauth::simenv {

void SimClock::advance(std::uint64_t seconds)
{
    if (seconds > std::numeric_limits<std::uint64_t>::max() - now_.seconds)
        throw std::overflow_error("SimClock: timestamp overflow");
    now_.seconds += seconds;
}

void SimClock::advance_to(Timestamp t)
{
    if (t < now_)
        throw std::invalid_argument("SimClock: cannot move backwards");
    now_ = t;
}

} // namespace wangauth::simenv
