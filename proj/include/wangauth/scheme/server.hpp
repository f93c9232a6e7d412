#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wangauth/primitives/block.hpp"
#include "wangauth/primitives/hash.hpp"
#include "wangauth/primitives/random.hpp"
#include "wangauth/primitives/timestamp.hpp"
#include "wangauth/scheme/card.hpp"
#include "wangauth/scheme/messages.hpp"

namespace wangauth::scheme {

inline constexpr std::uint64_t kDefaultDeltaT = 60;

/// Server secrets x and y plus the freshness window. There is no per-user
/// table: verification uses only these values. Immutable after construction.
class ServerState {
public:
    ServerState(HashFn h, std::vector<std::uint8_t> x, Block y,
                std::uint64_t delta_t = kDefaultDeltaT);

    /// Draws x (32 bytes) and y (one block) from `rng`.
    static ServerState generate(HashFn h, Rng& rng, std::uint64_t delta_t = kDefaultDeltaT);

    const HashFn& hash() const noexcept { return h_; }
    const std::vector<std::uint8_t>& x() const noexcept { return x_; }
    const Block& y() const noexcept { return y_; }
    const Block& hx() const noexcept { return hx_; }
    std::uint64_t delta_t() const noexcept { return delta_t_; }

    friend bool operator==(const ServerState&, const ServerState&) = default;

private:
    HashFn h_;
    std::vector<std::uint8_t> x_;
    Block y_;
    Block hx_;
    std::uint64_t delta_t_;
};

/// How the server picks PW_i at registration.
class PasswordSource {
public:
    /// Uniform choice from a non-empty list.
    static PasswordSource from_list(std::vector<std::string> candidates);
    /// Uniform string over [0-9A-Za-z] of the given length.
    static PasswordSource random_alphanumeric(std::size_t length = 12);

    std::string draw(Rng& rng) const;

private:
    PasswordSource(std::vector<std::string> candidates, std::size_t length)
        : candidates_(std::move(candidates)), length_(length)
    {}

    std::vector<std::string> candidates_;
    std::size_t length_;
};

struct RegistrationOutput {
    SmartCard card;
    std::string password;
    Block id_block;
};

/// N_i = h(PW_i) ^ h(x) ^ ID_i with PW_i chosen by the server.
RegistrationOutput register_user(const ServerState& server, std::string_view id,
                                 const PasswordSource& passwords, Rng& rng);

/// Verification phase. Rejects stale requests (outside [0, delta_t]) and
/// requests whose recomputed ID'_i differs from the transmitted ID_i.
Verdict server_verify(const ServerState& server, const LoginRequest& req, Timestamp t_recv);

} // namespace wangauth::scheme
