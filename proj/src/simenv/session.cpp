#include "wangauth/simenv/session.hpp"

namespace wangauth::simenv {

using scheme::LoginRequest;
using scheme::ServerReply;

SessionOutcome run_honest_session(const scheme::ServerState& server, const scheme::SmartCard& card,
                                  std::string_view id, std::string_view pw, SimClock& clock,
                                  Latency latency, Transcript& transcript)
{
    SessionOutcome outcome;
    outcome.t = clock.now();
    LoginRequest req = scheme::card_login(card, id, pw, outcome.t);
    transcript.record(Direction::user_to_server, req, outcome.t);

    clock.advance(latency.up);
    outcome.t_server = clock.now();
    const scheme::Verdict verdict = scheme::server_verify(server, req, outcome.t_server);
    outcome.server = ServerDecision::from(verdict);

    if (const auto* ok = std::get_if<scheme::Accept>(&verdict)) {
        transcript.record(Direction::server_to_user, ok->reply, outcome.t_server);
        clock.advance(latency.down);
        outcome.t_user = clock.now();
        outcome.user =
            scheme::card_verify_server(card, pw, ok->reply, *outcome.t_user, server.delta_t());
    }
    return outcome;
}

std::pair<Transcript, SessionOutcome> run_honest_session(const scheme::ServerState& server,
                                                         const scheme::SmartCard& card,
                                                         std::string_view id, std::string_view pw,
                                                         SimClock& clock, Latency latency)
{
    Transcript transcript;
    SessionOutcome outcome = run_honest_session(server, card, id, pw, clock, latency, transcript);
    transcript.outcome().sessions.push_back(outcome);
    return {std::move(transcript), std::move(outcome)};
}

EventSelector travelling(Direction direction)
{
    return [direction](const ChannelEvent& ev) { return ev.direction == direction; };
}

ChannelEvent intercept(const Transcript& transcript, const EventSelector& selector)
{
    for (const auto& ev : transcript.events())
        if (selector(ev))
            return ev;
    throw NotFound("intercept: no channel event matches the selector");
}

LoginRequest intercept_login_request(const Transcript& transcript)
{
    return std::get<LoginRequest>(
        intercept(transcript, [](const ChannelEvent& ev) {
            return std::holds_alternative<LoginRequest>(ev.payload);
        }).payload);
}

ServerReply intercept_server_reply(const Transcript& transcript)
{
    return std::get<ServerReply>(
        intercept(transcript, [](const ChannelEvent& ev) {
            return std::holds_alternative<ServerReply>(ev.payload);
        }).payload);
}

InjectResult inject(const scheme::ServerState& server, const LoginRequest& forged,
                    const SimClock& clock, Transcript& transcript)
{
    const Timestamp now = clock.now();
    ChannelEvent event = transcript.record(Direction::user_to_server, forged, now, true);
    scheme::Verdict verdict = scheme::server_verify(server, forged, now);
    if (const auto* ok = std::get_if<scheme::Accept>(&verdict))
        transcript.record(Direction::server_to_user, ok->reply, now);
    return InjectResult{std::move(event), std::move(verdict)};
}

bool inject_reply(const scheme::SmartCard& card, std::string_view pw, const ServerReply& forged,
                  SimClock& clock, std::uint64_t latency_down, std::uint64_t delta_t,
                  Transcript& transcript)
{
    transcript.record(Direction::server_to_user, forged, clock.now(), true);
    clock.advance(latency_down);
    return scheme::card_verify_server(card, pw, forged, clock.now(), delta_t);
}

} // namespace wangauth::simenv
