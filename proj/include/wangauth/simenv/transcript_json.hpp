#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "wangauth/simenv/transcript.hpp"

namespace wangauth::simenv {

/// JSON-lines transcript format.
///
/// One object per channel event, in seq order, followed by one outcome object:
///
///   {"seq":0,"direction":"user->server","type":"login_request","sent_at":T,
///    "tampered":false,"id":"<hex>","cid":"<hex>","n":"<hex>","t":T}
///   {"seq":1,"direction":"server->user","type":"server_reply","sent_at":T',
///    "tampered":false,"a":"<hex>","t_server":T'}
///   {"type":"outcome","sessions":[{"server_decision":"accept","reason":null,
///    "user_decision":true,"t":T,"t_server":T',"t_user":T*}],
///    "attack":"dos","result":"success","derived":{...}}
///
/// server_decision is null when the request never reached the server.
/// Blocks are lowercase hex, timestamps integers. The attack/result/derived
/// keys appear only on attack transcripts. Key order is fixed so equal
/// transcripts serialize to identical bytes.
void write_jsonl(std::ostream& out, const Transcript& transcript);
std::string to_jsonl(const Transcript& transcript);

/// Throws std::invalid_argument on malformed input.
Transcript read_jsonl(std::istream& in);
Transcript from_jsonl(std::string_view text);

} // namespace wangauth::simenv
