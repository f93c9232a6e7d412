#include "wangauth/attacks/attacks.hpp"

namespace wangauth::attacks {

using scheme::LoginRequest;
using scheme::ServerReply;

CardSecrets extract_card_secrets(const scheme::SmartCard& card)
{
    return CardSecrets{card.y(), card.n_i()};
}

Block recover_password_hash(const Block& y, const LoginRequest& req, const HashFn& h)
{
    return req.cid ^ hash_bytes(h, req.n ^ y ^ encode_timestamp(req.t, h.output_len())) ^ req.id;
}

std::optional<std::string> guess_password(const Block& hpw, std::span<const std::string> dictionary,
                                          const HashFn& h)
{
    for (const auto& candidate : dictionary)
        if (hash_bytes(h, candidate) == hpw)
            return candidate;
    return std::nullopt;
}

Block recover_hx(const Block& hpw, const Block& n, const Block& id)
{
    return hpw ^ n ^ id;
}

LoginRequest forge_login(const Block& hx, const Block& y, const Block& id,
                         std::string_view chosen_pw, Timestamp t, const HashFn& h)
{
    const Block chosen_hpw = hash_bytes(h, chosen_pw);
    Block n = chosen_hpw ^ hx ^ id;
    Block cid = chosen_hpw ^ hash_bytes(h, n ^ y ^ encode_timestamp(t, h.output_len())) ^ id;
    return LoginRequest{id, std::move(cid), std::move(n), t};
}

ServerReply forge_server_reply(const Block& hpw, const Block& y, Timestamp t, const HashFn& h)
{
    return ServerReply{hash_bytes(h, hpw ^ y ^ encode_timestamp(t, h.output_len())), t};
}

void dos_corrupt_card(scheme::SmartCard& card, std::string_view arbitrary_pw,
                      std::string_view new_pw)
{
    scheme::card_change_password(card, arbitrary_pw, new_pw);
}

} // namespace wangauth::attacks
