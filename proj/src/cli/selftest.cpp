#include "wangauth/cli/selftest.hpp"

#include <functional>

#include "wangauth/attacks/attacks.hpp"
#include "wangauth/scheme/server.hpp"
#include "wangauth/simenv/session.hpp"

namespace wangauth::cli {

namespace {

using scheme::LoginRequest;
using scheme::RejectReason;
using scheme::ServerState;
using scheme::SmartCard;

constexpr int kTrials = 50;
constexpr int kGuessScenarios = 10;
constexpr std::size_t kGuessDictionarySize = 500;

using LoginFn = std::function<LoginRequest(const SmartCard&, std::string_view, std::string_view,
                                           Timestamp)>;

LoginRequest login_without_identity(const SmartCard& card, std::string_view id,
                                    std::string_view pw, Timestamp t)
{
    LoginRequest req = scheme::card_login(card, id, pw, t);
    req.cid ^= req.id;
    return req;
}

struct Context {
    ScenarioConfig config;
    HashFn h;
    LoginFn login;
    Rng rng;

    std::string random_id() { return "user-" + rng.alphanumeric(6); }
    Timestamp random_time() { return Timestamp{rng.between(1, 1ull << 40)}; }
    ServerState fresh_server(const HashFn& hash)
    {
        return ServerState::generate(hash, rng, config.delta_t);
    }
};

struct Property {
    std::string name;
    std::function<bool(Context&)> check;
};

bool xor_algebra(Context& c)
{
    const std::size_t len = c.h.output_len();
    for (int i = 0; i < 1000; ++i) {
        const Block a = c.rng.block(len), b = c.rng.block(len), k = c.rng.block(len);
        const Block zero = Block::zero(len);
        if ((a ^ b) != (b ^ a) || ((a ^ b) ^ k) != (a ^ (b ^ k)) || (a ^ a) != zero ||
            (a ^ zero) != a)
            return false;
    }
    return true;
}

bool timestamp_encoding(Context& c)
{
    for (int i = 0; i < 1000; ++i) {
        const Timestamp t{c.rng.next()};
        const Block b = encode_timestamp(t, 32);
        std::uint64_t decoded = 0;
        for (std::size_t k = 24; k < 32; ++k)
            decoded = (decoded << 8) | b[k];
        if (decoded != t.seconds)
            return false;
        for (std::size_t k = 0; k < 24; ++k)
            if (b[k] != 0)
                return false;
    }
    return true;
}

bool round_trip(Context& c)
{
    for (int i = 0; i < kTrials; ++i) {
        const ServerState server = c.fresh_server(c.h);
        const std::string id = c.random_id();
        auto reg = scheme::register_user(server, id,
                                         scheme::PasswordSource::random_alphanumeric(), c.rng);
        const Timestamp t = c.random_time();
        const Timestamp t_recv = t + c.rng.between(0, c.config.delta_t);
        const auto verdict = scheme::server_verify(server, c.login(reg.card, id, reg.password, t),
                                                   t_recv);
        const auto* ok = std::get_if<scheme::Accept>(&verdict);
        if (!ok)
            return false;
        const Timestamp t_user = t_recv + c.rng.between(0, c.config.delta_t);
        if (!scheme::card_verify_server(reg.card, reg.password, ok->reply, t_user,
                                        c.config.delta_t))
            return false;
    }
    return true;
}

bool registration_identity(Context& c)
{
    for (int i = 0; i < kTrials; ++i) {
        const ServerState server = c.fresh_server(c.h);
        const std::string id = c.random_id();
        auto reg = scheme::register_user(server, id,
                                         scheme::PasswordSource::random_alphanumeric(), c.rng);
        if ((reg.card.n_i() ^ hash_bytes(c.h, reg.password) ^ server.hx()) !=
            encode_identity(c.h, id))
            return false;
    }
    return true;
}

bool freshness_boundary(Context& c)
{
    for (int i = 0; i < kTrials; ++i) {
        const ServerState server = c.fresh_server(c.h);
        const std::string id = c.random_id();
        auto reg = scheme::register_user(server, id,
                                         scheme::PasswordSource::random_alphanumeric(), c.rng);
        const Timestamp t = c.random_time();
        const LoginRequest req = c.login(reg.card, id, reg.password, t);
        if (!scheme::accepted(scheme::server_verify(server, req, t + c.config.delta_t)))
            return false;
        if (scheme::reject_reason(scheme::server_verify(server, req, t + (c.config.delta_t + 1))) !=
            RejectReason::stale)
            return false;
        if (scheme::reject_reason(scheme::server_verify(server, req, Timestamp{t.seconds - 1})) !=
            RejectReason::stale)
            return false;
    }
    return true;
}

bool server_stateless(Context& c)
{
    const ServerState server = c.fresh_server(c.h);
    const ServerState snapshot = server;
    auto reg = scheme::register_user(server, "alice",
                                     scheme::PasswordSource::random_alphanumeric(), c.rng);
    for (int i = 0; i < kTrials; ++i) {
        const Timestamp t = c.random_time();
        const LoginRequest req = c.login(reg.card, "alice", reg.password, t);
        (void)scheme::server_verify(server, req, t + c.rng.between(0, 2 * c.config.delta_t + 2));
    }
    return server == snapshot;
}

bool change_password_involution(Context& c)
{
    const ServerState server = c.fresh_server(c.h);
    auto reg = scheme::register_user(server, "alice",
                                     scheme::PasswordSource::random_alphanumeric(), c.rng);
    for (int i = 0; i < kTrials; ++i) {
        const Block original = reg.card.n_i();
        const std::string p = c.rng.alphanumeric(10), q = c.rng.alphanumeric(10);
        scheme::card_change_password(reg.card, p, q);
        scheme::card_change_password(reg.card, q, p);
        if (reg.card.n_i() != original)
            return false;
    }
    return true;
}

bool password_guessing(Context& c)
{
    const HashFn h = sha256_hash();
    for (int i = 0; i < kGuessScenarios; ++i) {
        std::vector<std::string> dictionary;
        for (std::size_t k = 0; k < kGuessDictionarySize; ++k)
            dictionary.push_back("pw" + std::to_string(k) + "-" + c.rng.alphanumeric(6));
        const ServerState server = c.fresh_server(h);
        const std::string id = c.random_id();
        auto victim = scheme::register_user(server, id,
                                            scheme::PasswordSource::from_list(dictionary), c.rng);
        auto own = scheme::register_user(server, "mallory",
                                         scheme::PasswordSource::random_alphanumeric(), c.rng);
        const LoginRequest req = c.login(victim.card, id, victim.password, c.random_time());
        const Block y = attacks::extract_card_secrets(own.card).y;
        const auto found =
            attacks::guess_password(attacks::recover_password_hash(y, req, h), dictionary, h);
        if (found != victim.password)
            return false;
    }
    return true;
}

bool hx_recovery(Context& c)
{
    for (int i = 0; i < kTrials; ++i) {
        const ServerState server = c.fresh_server(c.h);
        const std::string id = c.random_id();
        auto victim = scheme::register_user(server, id,
                                            scheme::PasswordSource::random_alphanumeric(), c.rng);
        const LoginRequest req = c.login(victim.card, id, victim.password, c.random_time());
        const Block hpw = attacks::recover_password_hash(victim.card.y(), req, c.h);
        if (attacks::recover_hx(hpw, req.n, req.id) != server.hx())
            return false;
    }
    return true;
}

bool user_masquerade(Context& c)
{
    for (int i = 0; i < kTrials; ++i) {
        const ServerState server = c.fresh_server(c.h);
        const std::string id = c.random_id();
        auto victim = scheme::register_user(server, id,
                                            scheme::PasswordSource::random_alphanumeric(), c.rng);
        auto own = scheme::register_user(server, "mallory",
                                         scheme::PasswordSource::random_alphanumeric(), c.rng);
        const Timestamp t = c.random_time();
        const LoginRequest req = c.login(victim.card, id, victim.password, t);
        const Block y = attacks::extract_card_secrets(own.card).y;
        const Block hpw = attacks::recover_password_hash(y, req, c.h);
        const Block hx = attacks::recover_hx(hpw, req.n, req.id);
        const Timestamp later = t + c.rng.between(1, 1u << 20);
        const LoginRequest forged =
            attacks::forge_login(hx, y, req.id, c.rng.alphanumeric(10), later, c.h);
        if (!scheme::accepted(scheme::server_verify(server, forged, later)))
            return false;
    }
    return true;
}

bool server_masquerade(Context& c)
{
    for (int i = 0; i < kTrials; ++i) {
        const ServerState server = c.fresh_server(c.h);
        const std::string id = c.random_id();
        auto victim = scheme::register_user(server, id,
                                            scheme::PasswordSource::random_alphanumeric(), c.rng);
        auto own = scheme::register_user(server, "mallory",
                                         scheme::PasswordSource::random_alphanumeric(), c.rng);
        const Timestamp t = c.random_time();
        const LoginRequest req = c.login(victim.card, id, victim.password, t);
        const Block y = attacks::extract_card_secrets(own.card).y;
        const Block hpw = attacks::recover_password_hash(y, req, c.h);
        const auto reply = attacks::forge_server_reply(hpw, y, t, c.h);
        if (!scheme::card_verify_server(victim.card, victim.password, reply,
                                        t + c.rng.between(0, c.config.delta_t), c.config.delta_t))
            return false;
        if (scheme::card_verify_server(victim.card, victim.password, reply,
                                       t + (c.config.delta_t + 1), c.config.delta_t))
            return false;
    }
    return true;
}

bool denial_of_service(Context& c)
{
    const HashFn h = sha256_hash();
    for (int i = 0; i < kTrials; ++i) {
        const ServerState server = c.fresh_server(h);
        const std::string id = c.random_id();
        auto victim = scheme::register_user(server, id,
                                            scheme::PasswordSource::random_alphanumeric(), c.rng);
        const Timestamp t = c.random_time();
        if (!scheme::accepted(
                scheme::server_verify(server, c.login(victim.card, id, victim.password, t), t)))
            return false;
        const std::string arbitrary = "not-" + victim.password;
        const std::string replacement = c.rng.alphanumeric(10);
        attacks::dos_corrupt_card(victim.card, arbitrary, replacement);
        const auto after =
            scheme::server_verify(server, c.login(victim.card, id, victim.password, t), t);
        if (scheme::reject_reason(after) != RejectReason::id_mismatch)
            return false;
        scheme::card_change_password(victim.card, replacement, arbitrary);
        if (!scheme::accepted(
                scheme::server_verify(server, c.login(victim.card, id, victim.password, t), t)))
            return false;
    }
    return true;
}

// FNV-1a; std::hash is implementation-defined and would break cross-platform runs.
std::uint64_t name_hash(std::string_view name)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

const std::vector<Property>& properties()
{
    static const std::vector<Property> all{
        {"xor-algebra", xor_algebra},
        {"timestamp-encoding", timestamp_encoding},
        {"round-trip", round_trip},
        {"registration-identity", registration_identity},
        {"freshness-boundary", freshness_boundary},
        {"server-stateless", server_stateless},
        {"change-password-involution", change_password_involution},
        {"password-guessing", password_guessing},
        {"hx-recovery", hx_recovery},
        {"user-masquerade", user_masquerade},
        {"server-masquerade", server_masquerade},
        {"denial-of-service", denial_of_service},
    };
    return all;
}

} // namespace

std::vector<PropertyResult> run_selftest(const ScenarioConfig& config,
                                         const SelftestOptions& options)
{
    std::vector<PropertyResult> results;
    for (const auto& property : properties()) {
        // Each property gets its own stream so adding one does not shift the others.
        Context context{config, make_hash(config.hash),
                        options.mutate_login ? LoginFn(login_without_identity)
                                             : LoginFn(scheme::card_login),
                        Rng(config.seed ^ name_hash(property.name))};
        PropertyResult result{property.name, false, {}};
        try {
            result.passed = property.check(context);
        } catch (const std::exception& e) {
            result.detail = e.what();
        }
        results.push_back(std::move(result));
    }
    return results;
}

} // namespace wangauth::cli
