#pragma once

#include <cstdint>
#include <string_view>

#include "wangauth/primitives/block.hpp"
#include "wangauth/primitives/hash.hpp"
#include "wangauth/primitives/timestamp.hpp"
#include "wangauth/scheme/messages.hpp"

namespace wangauth::scheme {

/// Card personalized with [h, N_i, y]. Not thread-safe; one owner at a time.
///
/// N_i changes only through card_change_password. y never changes.
class SmartCard {
public:
    SmartCard(Block n_i, Block y, HashFn h);

    const Block& n_i() const noexcept { return n_i_; }
    const Block& y() const noexcept { return y_; }
    const HashFn& hash() const noexcept { return h_; }

private:
    friend void card_change_password(SmartCard& card, std::string_view old_pw,
                                     std::string_view new_pw);

    Block n_i_;
    Block y_;
    HashFn h_;
};

/// CID_i = h(PW) ^ h(N_i ^ y ^ T) ^ ID_i. The card does not check `pw`.
LoginRequest card_login(const SmartCard& card, std::string_view id, std::string_view pw,
                        Timestamp t);

/// Mutual-authentication check run by the user on (a', T'):
/// 0 <= T* - T' <= delta_t and h(h(PW) ^ y ^ T') == a'.
bool card_verify_server(const SmartCard& card, std::string_view pw, const ServerReply& reply,
                        Timestamp t_user_recv, std::uint64_t delta_t);

/// N_i <- N_i ^ h(old_pw) ^ h(new_pw). old_pw is not verified.
void card_change_password(SmartCard& card, std::string_view old_pw, std::string_view new_pw);

} // namespace wangauth::scheme
