#pragma once

// Adversary derivations against the dynamic-ID smartcard scheme.
//
// Inputs are restricted to what an outsider can legitimately obtain: the
// contents of a card in hand (its own, or a stolen one), messages seen on the
// channel, and a password dictionary. Nothing here can see the server's x or
// a user's password, and nothing here takes server state.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wangauth/primitives/block.hpp"
#include "wangauth/primitives/hash.hpp"
#include "wangauth/primitives/timestamp.hpp"
#include "wangauth/scheme/card.hpp"
#include "wangauth/scheme/messages.hpp"

namespace wangauth::attacks {

struct CardSecrets {
    Block y;
    Block n_i;
};

/// Reads y and N_i off a card in the adversary's hands. Stands in for
/// side-channel extraction; the card is not modified. Every card issued by a
/// server carries the same y, so the adversary's own card suffices for y.
CardSecrets extract_card_secrets(const scheme::SmartCard& card);

/// h(PW_i) = CID_i ^ h(N_i ^ y ^ T) ^ ID_i, from one intercepted request.
Block recover_password_hash(const Block& y, const scheme::LoginRequest& req, const HashFn& h);

/// First entry p (in list order) with h(p) == hpw.
std::optional<std::string> guess_password(const Block& hpw, std::span<const std::string> dictionary,
                                          const HashFn& h);

/// h(x) = h(PW_i) ^ N_i ^ ID_i.
Block recover_hx(const Block& hpw, const Block& n, const Block& id);

/// Builds a login request for identity `id` under a password of the
/// adversary's choosing:
///   N* = h(PW*) ^ h(x) ^ ID_i,  CID* = h(PW*) ^ h(N* ^ y ^ T*) ^ ID_i.
scheme::LoginRequest forge_login(const Block& hx, const Block& y, const Block& id,
                                 std::string_view chosen_pw, Timestamp t, const HashFn& h);

/// a* = h(h(PW_i) ^ y ^ T*), sent as (a*, T*).
scheme::ServerReply forge_server_reply(const Block& hpw, const Block& y, Timestamp t,
                                       const HashFn& h);

/// Runs the card's password change with a wrong old password, leaving N_i
/// inconsistent with the victim's real password.
void dos_corrupt_card(scheme::SmartCard& card, std::string_view arbitrary_pw,
                      std::string_view new_pw);

/// Newline-delimited candidates, order preserved. A trailing '\r' is stripped
/// and empty lines are skipped.
std::vector<std::string> parse_dictionary(std::istream& in);
/// Throws std::runtime_error if the file cannot be opened.
std::vector<std::string> load_dictionary(const std::filesystem::path& path);

/// What the adversary has collected so far. Derived values appear only after
/// the corresponding recovery step has run on collected material.
class AdversaryKnowledge {
public:
    explicit AdversaryKnowledge(HashFn h, std::vector<std::string> dictionary = {});

    /// Extracts y (and remembers N_i) from a card in hand.
    void learn_card(const scheme::SmartCard& card);
    void observe(const scheme::LoginRequest& req);

    /// Runs recover_password_hash on the most recent observed request.
    /// Throws std::logic_error if y or an observed request is missing.
    const Block& derive_password_hash();
    /// Runs recover_hx on the derived h(PW_i) and the most recent request.
    const Block& derive_hx();
    /// Dictionary search against the derived h(PW_i).
    std::optional<std::string> guess() const;

    const HashFn& hash() const noexcept { return h_; }
    const std::optional<Block>& y() const noexcept { return y_; }
    const std::vector<scheme::LoginRequest>& observed() const noexcept { return observed_; }
    const std::optional<Block>& hpw() const noexcept { return hpw_; }
    const std::optional<Block>& hx() const noexcept { return hx_; }
    const std::vector<std::string>& dictionary() const noexcept { return dictionary_; }

private:
    HashFn h_;
    std::optional<Block> y_;
    std::vector<scheme::LoginRequest> observed_;
    std::optional<Block> hpw_;
    std::optional<Block> hx_;
    std::vector<std::string> dictionary_;
};

} // namespace wangauth::attacks
