#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "wangauth/primitives/block.hpp"
#include "wangauth/primitives/timestamp.hpp"

namespace wangauth::scheme {

/// User -> server: (ID_i, CID_i, N_i, T).
struct LoginRequest {
    Block id;
    Block cid;
    Block n;
    Timestamp t;

    friend bool operator==(const LoginRequest&, const LoginRequest&) = default;
};

/// Server -> user: (a', T'). T' is the server's receive time.
struct ServerReply {
    Block a;
    Timestamp t_server;

    friend bool operator==(const ServerReply&, const ServerReply&) = default;
};

enum class RejectReason { stale, id_mismatch };

std::string_view to_string(RejectReason reason);
std::optional<RejectReason> parse_reject_reason(std::string_view text);

struct Accept {
    ServerReply reply;
};

struct Reject {
    RejectReason reason;
};

using Verdict = std::variant<Accept, Reject>;

inline bool accepted(const Verdict& v) noexcept { return std::holds_alternative<Accept>(v); }

/// Reason of a rejection, or nullopt when the verdict is Accept.
inline std::optional<RejectReason> reject_reason(const Verdict& v)
{
    if (const auto* r = std::get_if<Reject>(&v))
        return r->reason;
    return std::nullopt;
}

} // namespace wangauth::scheme
