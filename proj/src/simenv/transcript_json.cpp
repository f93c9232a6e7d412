#include "wangauth/simenv/transcript_json.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wangauth::simenv {

namespace {

using json = nlohmann::ordered_json;
using scheme::LoginRequest;
using scheme::ServerReply;

json optional_timestamp(const std::optional<Timestamp>& t)
{
    return t ? json(t->seconds) : json(nullptr);
}

json event_to_json(const ChannelEvent& ev)
{
    json j;
    j["seq"] = ev.seq;
    j["direction"] = std::string(to_string(ev.direction));
    if (const auto* req = std::get_if<LoginRequest>(&ev.payload)) {
        j["type"] = "login_request";
        j["sent_at"] = ev.sent_at.seconds;
        j["tampered"] = ev.tampered;
        j["id"] = req->id.to_hex();
        j["cid"] = req->cid.to_hex();
        j["n"] = req->n.to_hex();
        j["t"] = req->t.seconds;
    } else {
        const auto& reply = std::get<ServerReply>(ev.payload);
        j["type"] = "server_reply";
        j["sent_at"] = ev.sent_at.seconds;
        j["tampered"] = ev.tampered;
        j["a"] = reply.a.to_hex();
        j["t_server"] = reply.t_server.seconds;
    }
    return j;
}

json session_to_json(const SessionOutcome& s)
{
    json j;
    if (!s.server)
        j["server_decision"] = nullptr;
    else
        j["server_decision"] = s.server->accepted() ? "accept" : "reject";
    j["reason"] = s.server && s.server->reject_reason
                      ? json(std::string(to_string(*s.server->reject_reason)))
                      : json(nullptr);
    j["user_decision"] = s.user ? json(*s.user) : json(nullptr);
    j["t"] = s.t.seconds;
    j["t_server"] = s.t_server.seconds;
    j["t_user"] = optional_timestamp(s.t_user);
    return j;
}

json outcome_to_json(const TranscriptOutcome& outcome)
{
    json j;
    j["type"] = "outcome";
    j["sessions"] = json::array();
    for (const auto& s : outcome.sessions)
        j["sessions"].push_back(session_to_json(s));
    if (outcome.attack) {
        j["attack"] = outcome.attack->attack;
        j["result"] = outcome.attack->success ? "success" : "failure";
        json derived = json::object();
        for (const auto& [key, value] : outcome.attack->derived)
            derived[key] = value;
        j["derived"] = std::move(derived);
    }
    return j;
}

Timestamp timestamp_field(const json& j, const char* key)
{
    return Timestamp{j.at(key).get<std::uint64_t>()};
}

Block block_field(const json& j, const char* key)
{
    return Block::from_hex(j.at(key).get<std::string>());
}

Direction parse_direction(const std::string& text)
{
    if (text == "user->server")
        return Direction::user_to_server;
    if (text == "server->user")
        return Direction::server_to_user;
    throw std::invalid_argument("transcript: unknown direction '" + text + "'");
}

ChannelEvent event_from_json(const json& j)
{
    ChannelEvent ev{.seq = j.at("seq").get<std::uint64_t>(),
                    .direction = parse_direction(j.at("direction").get<std::string>()),
                    .payload = ServerReply{Block::zero(1), Timestamp{}},
                    .sent_at = timestamp_field(j, "sent_at"),
                    .tampered = j.at("tampered").get<bool>()};
    const auto type = j.at("type").get<std::string>();
    if (type == "login_request") {
        ev.payload = LoginRequest{block_field(j, "id"), block_field(j, "cid"), block_field(j, "n"),
                                  timestamp_field(j, "t")};
    } else if (type == "server_reply") {
        ev.payload = ServerReply{block_field(j, "a"), timestamp_field(j, "t_server")};
    } else {
        throw std::invalid_argument("transcript: unknown event type '" + type + "'");
    }
    return ev;
}

SessionOutcome session_from_json(const json& j)
{
    SessionOutcome s;
    if (!j.at("server_decision").is_null()) {
        const auto decision = j.at("server_decision").get<std::string>();
        s.server = ServerDecision{};
        if (decision == "reject") {
            auto reason = scheme::parse_reject_reason(j.at("reason").get<std::string>());
            if (!reason)
                throw std::invalid_argument("transcript: unknown reject reason");
            s.server->reject_reason = reason;
        } else if (decision != "accept") {
            throw std::invalid_argument("transcript: unknown server decision '" + decision + "'");
        }
    }
    if (!j.at("user_decision").is_null())
        s.user = j.at("user_decision").get<bool>();
    s.t = timestamp_field(j, "t");
    s.t_server = timestamp_field(j, "t_server");
    if (!j.at("t_user").is_null())
        s.t_user = timestamp_field(j, "t_user");
    return s;
}

TranscriptOutcome outcome_from_json(const json& j)
{
    TranscriptOutcome outcome;
    for (const auto& s : j.at("sessions"))
        outcome.sessions.push_back(session_from_json(s));
    if (j.contains("attack")) {
        AttackSummary summary;
        summary.attack = j.at("attack").get<std::string>();
        summary.success = j.at("result").get<std::string>() == "success";
        for (const auto& [key, value] : j.at("derived").items())
            summary.derived.emplace_back(key, value.get<std::string>());
        outcome.attack = std::move(summary);
    }
    return outcome;
}

} // namespace

void write_jsonl(std::ostream& out, const Transcript& transcript)
{
    for (const auto& ev : transcript.events())
        out << event_to_json(ev).dump() << '\n';
    out << outcome_to_json(transcript.outcome()).dump() << '\n';
}

std::string to_jsonl(const Transcript& transcript)
{
    std::ostringstream out;
    write_jsonl(out, transcript);
    return out.str();
}

Transcript read_jsonl(std::istream& in)
{
    Transcript transcript;
    bool saw_outcome = false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (saw_outcome)
            throw std::invalid_argument("transcript: data after the outcome line");
        json j;
        try {
            j = json::parse(line);
            if (j.value("type", "") == "outcome") {
                transcript.outcome() = outcome_from_json(j);
                saw_outcome = true;
            } else {
                transcript.append(event_from_json(j));
            }
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("transcript: ") + e.what());
        }
    }
    if (!saw_outcome)
        throw std::invalid_argument("transcript: missing outcome line");
    return transcript;
}

Transcript from_jsonl(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return read_jsonl(in);
}

} // namespace wangauth::simenv
