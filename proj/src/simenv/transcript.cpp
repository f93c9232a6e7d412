#include "wangauth/simenv/transcript.hpp"

#include <stdexcept>

namespace wangauth::simenv {

std::string_view to_string(Direction d)
{
    return d == Direction::user_to_server ? "user->server" : "server->user";
}

const ChannelEvent& Transcript::record(Direction direction, Payload payload, Timestamp sent_at,
                                       bool tampered)
{
    const std::uint64_t seq = events_.empty() ? 0 : events_.back().seq + 1;
    events_.push_back(ChannelEvent{seq, direction, std::move(payload), sent_at, tampered});
    return events_.back();
}

void Transcript::append(ChannelEvent event)
{
    if (!events_.empty() && event.seq <= events_.back().seq)
        throw std::invalid_argument("Transcript: seq must be strictly increasing");
    events_.push_back(std::move(event));
}

} // namespace wangauth::simenv
