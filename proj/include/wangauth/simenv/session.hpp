#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "wangauth/scheme/card.hpp"
#include "wangauth/scheme/server.hpp"
#include "wangauth/simenv/clock.hpp"
#include "wangauth/simenv/transcript.hpp"

namespace wangauth::simenv {

/// Per-leg channel delay in seconds.
struct Latency {
    std::uint64_t up = 0;
    std::uint64_t down = 0;
};

/// Login, verification and the user's check of the reply, end to end.
///
/// T = clock.now() at send, T' = T + up, T* = T' + down; the clock is left at
/// the last time used. The request is always recorded; the reply only when the
/// server accepts, in which case the user decision is present.
SessionOutcome run_honest_session(const scheme::ServerState& server, const scheme::SmartCard& card,
                                  std::string_view id, std::string_view pw, SimClock& clock,
                                  Latency latency, Transcript& transcript);

std::pair<Transcript, SessionOutcome> run_honest_session(const scheme::ServerState& server,
                                                         const scheme::SmartCard& card,
                                                         std::string_view id, std::string_view pw,
                                                         SimClock& clock, Latency latency = {});

class NotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using EventSelector = std::function<bool(const ChannelEvent&)>;

/// Selects events travelling in `direction`.
EventSelector travelling(Direction direction);

/// Passive eavesdropping: returns a copy of the first event matching
/// `selector`. Throws NotFound if none matches.
ChannelEvent intercept(const Transcript& transcript, const EventSelector& selector);

/// Convenience: payload of the first intercepted login request / reply.
scheme::LoginRequest intercept_login_request(const Transcript& transcript);
scheme::ServerReply intercept_server_reply(const Transcript& transcript);

struct InjectResult {
    ChannelEvent event;
    scheme::Verdict verdict;
};

/// Delivers an adversary-built request to the server at clock.now(). The
/// request is recorded as tampered; an accepting reply is recorded as well.
InjectResult inject(const scheme::ServerState& server, const scheme::LoginRequest& forged,
                    const SimClock& clock, Transcript& transcript);

/// Sends an adversary-built reply at clock.now() (recorded as tampered); the
/// user receives it `latency_down` seconds later. Returns the user's decision.
bool inject_reply(const scheme::SmartCard& card, std::string_view pw,
                  const scheme::ServerReply& forged, SimClock& clock, std::uint64_t latency_down,
                  std::uint64_t delta_t, Transcript& transcript);

} // namespace wangauth::simenv
