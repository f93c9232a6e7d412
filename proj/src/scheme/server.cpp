#include "wangauth/scheme/server.hpp"

#include <stdexcept>

namespace wangauth::scheme {

namespace {

constexpr std::size_t kServerSecretBytes = 32;

bool has_block_length(const LoginRequest& req, std::size_t len)
{
    return req.id.size() == len && req.cid.size() == len && req.n.size() == len;
}

} // namespace

ServerState::ServerState(HashFn h, std::vector<std::uint8_t> x, Block y, std::uint64_t delta_t)
    : h_(std::move(h)),
      x_(std::move(x)),
      y_(std::move(y)),
      hx_(hash_bytes(h_, std::span<const std::uint8_t>(x_))),
      delta_t_(delta_t)
{
    if (y_.size() != h_.output_len())
        throw std::invalid_argument("ServerState: y must match the hash output length");
}

ServerState ServerState::generate(HashFn h, Rng& rng, std::uint64_t delta_t)
{
    auto x = rng.bytes(kServerSecretBytes);
    Block y = rng.block(h.output_len());
    return ServerState(std::move(h), std::move(x), std::move(y), delta_t);
}

PasswordSource PasswordSource::from_list(std::vector<std::string> candidates)
{
    if (candidates.empty())
        throw std::invalid_argument("PasswordSource: candidate list is empty");
    return PasswordSource(std::move(candidates), 0);
}

PasswordSource PasswordSource::random_alphanumeric(std::size_t length)
{
    if (length == 0)
        throw std::invalid_argument("PasswordSource: length must be positive");
    return PasswordSource({}, length);
}

std::string PasswordSource::draw(Rng& rng) const
{
    if (!candidates_.empty())
        return candidates_[rng.below(candidates_.size())];
    return rng.alphanumeric(length_);
}

RegistrationOutput register_user(const ServerState& server, std::string_view id,
                                 const PasswordSource& passwords, Rng& rng)
{
    if (id.empty())
        throw std::invalid_argument("register_user: identity must be non-empty");
    const HashFn& h = server.hash();
    Block id_block = encode_identity(h, id);
    std::string pw = passwords.draw(rng);
    Block n_i = hash_bytes(h, pw) ^ server.hx() ^ id_block;
    return RegistrationOutput{SmartCard(std::move(n_i), server.y(), h), std::move(pw),
                              std::move(id_block)};
}

Verdict server_verify(const ServerState& server, const LoginRequest& req, Timestamp t_recv)
{
    if (!within_window(req.t, t_recv, server.delta_t()))
        return Reject{RejectReason::stale};

    const HashFn& h = server.hash();
    const std::size_t len = h.output_len();
    // A malformed request cannot reproduce ID_i.
    if (!has_block_length(req, len))
        return Reject{RejectReason::id_mismatch};

    const Block hpw = req.cid ^ hash_bytes(h, req.n ^ server.y() ^ encode_timestamp(req.t, len)) ^ req.id;
    const Block recomputed_id = req.n ^ hpw ^ server.hx();
    if (recomputed_id != req.id)
        return Reject{RejectReason::id_mismatch};

    Block a = hash_bytes(h, hpw ^ server.y() ^ encode_timestamp(t_recv, len));
    return Accept{ServerReply{std::move(a), t_recv}};
}

} // namespace wangauth::scheme
