#include "wangauth/scheme/messages.hpp"

namespace wangauth::scheme {

std::string_view to_string(RejectReason reason)
{
    switch (reason) {
    case RejectReason::stale:
        return "stale";
    case RejectReason::id_mismatch:
        return "id-mismatch";
    }
    return "?";
}

std::optional<RejectReason> parse_reject_reason(std::string_view text)
{
    if (text == "stale")
        return RejectReason::stale;
    if (text == "id-mismatch")
        return RejectReason::id_mismatch;
    return std::nullopt;
}

} // namespace wangauth::scheme
