#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wangauth/primitives/timestamp.hpp"
#include "wangauth/scheme/messages.hpp"

namespace wangauth::simenv {

enum class Direction { user_to_server, server_to_user };

std::string_view to_string(Direction d);

using Payload = std::variant<scheme::LoginRequest, scheme::ServerReply>;

struct ChannelEvent {
    std::uint64_t seq = 0;
    Direction direction = Direction::user_to_server;
    Payload payload;
    Timestamp sent_at;
    bool tampered = false;

    friend bool operator==(const ChannelEvent&, const ChannelEvent&) = default;
};

/// Server decision as recorded: nullopt reason means Accept.
struct ServerDecision {
    std::optional<scheme::RejectReason> reject_reason;

    bool accepted() const noexcept { return !reject_reason.has_value(); }
    static ServerDecision from(const scheme::Verdict& v) { return {scheme::reject_reason(v)}; }

    friend bool operator==(const ServerDecision&, const ServerDecision&) = default;
};

/// One login attempt: the server's decision (absent when the request never
/// reached the server), the user's (absent when no reply reached the user),
/// and the timestamps T, T', T*.
struct SessionOutcome {
    std::optional<ServerDecision> server;
    std::optional<bool> user;
    Timestamp t;
    Timestamp t_server;
    std::optional<Timestamp> t_user;

    friend bool operator==(const SessionOutcome&, const SessionOutcome&) = default;
};

struct AttackSummary {
    std::string attack;
    bool success = false;
    /// Values the adversary derived, in derivation order (blocks as hex).
    std::vector<std::pair<std::string, std::string>> derived;

    friend bool operator==(const AttackSummary&, const AttackSummary&) = default;
};

struct TranscriptOutcome {
    std::vector<SessionOutcome> sessions;
    std::optional<AttackSummary> attack;

    friend bool operator==(const TranscriptOutcome&, const TranscriptOutcome&) = default;
};

/// Ordered record of everything that crossed the channel.
class Transcript {
public:
    const ChannelEvent& record(Direction direction, Payload payload, Timestamp sent_at,
                               bool tampered = false);

    const std::vector<ChannelEvent>& events() const noexcept { return events_; }
    bool empty() const noexcept { return events_.empty(); }

    TranscriptOutcome& outcome() noexcept { return outcome_; }
    const TranscriptOutcome& outcome() const noexcept { return outcome_; }

    /// Used when reading a transcript back; seq must continue the sequence.
    void append(ChannelEvent event);

    friend bool operator==(const Transcript&, const Transcript&) = default;

private:
    std::vector<ChannelEvent> events_;
    TranscriptOutcome outcome_;
};

} // namespace wangauth::simenv
