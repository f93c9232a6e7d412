#include "wangauth/scheme/card.hpp"

#include <stdexcept>

namespace wangauth::scheme {

SmartCard::SmartCard(Block n_i, Block y, HashFn h)
    : n_i_(std::move(n_i)), y_(std::move(y)), h_(std::move(h))
{
    if (n_i_.size() != h_.output_len() || y_.size() != h_.output_len())
        throw std::invalid_argument("SmartCard: N_i and y must match the hash output length");
}

LoginRequest card_login(const SmartCard& card, std::string_view id, std::string_view pw,
                        Timestamp t)
{
    const HashFn& h = card.hash();
    const std::size_t len = h.output_len();
    const Block id_block = encode_identity(h, id);
    const Block masked = hash_bytes(h, card.n_i() ^ card.y() ^ encode_timestamp(t, len));
    Block cid = hash_bytes(h, pw) ^ masked ^ id_block;
    return LoginRequest{id_block, std::move(cid), card.n_i(), t};
}

bool card_verify_server(const SmartCard& card, std::string_view pw, const ServerReply& reply,
                        Timestamp t_user_recv, std::uint64_t delta_t)
{
    if (!within_window(reply.t_server, t_user_recv, delta_t))
        return false;
    const HashFn& h = card.hash();
    if (reply.a.size() != h.output_len())
        return false;
    const Block expected = hash_bytes(
        h, hash_bytes(h, pw) ^ card.y() ^ encode_timestamp(reply.t_server, h.output_len()));
    return expected == reply.a;
}

void card_change_password(SmartCard& card, std::string_view old_pw, std::string_view new_pw)
{
    card.n_i_ ^= hash_bytes(card.h_, old_pw) ^ hash_bytes(card.h_, new_pw);
}

} // namespace wangauth::scheme
