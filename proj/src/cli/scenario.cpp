#include "wangauth/cli/scenario.hpp"

#include "wangauth/attacks/attacks.hpp"

namespace wangauth::cli {

namespace {

using scheme::LoginRequest;
using simenv::SessionOutcome;
using simenv::ServerDecision;

constexpr std::size_t kGeneratedPasswordLength = 12;

scheme::PasswordSource password_source(const std::vector<std::string>& dictionary)
{
    if (dictionary.empty())
        return scheme::PasswordSource::random_alphanumeric(kGeneratedPasswordLength);
    return scheme::PasswordSource::from_list(dictionary);
}

std::string describe(const SessionOutcome& s)
{
    std::string line = "server=";
    if (!s.server)
        line += "(not reached)";
    else if (s.server->accepted())
        line += "accept";
    else
        line += std::string("reject(") + std::string(to_string(*s.server->reject_reason)) + ")";
    line += " user=";
    line += s.user ? (*s.user ? "true" : "false") : "(no reply)";
    return line;
}

bool fully_accepted(const SessionOutcome& s)
{
    return s.server && s.server->accepted() && s.user.value_or(false);
}

void finish(ScenarioResult& result, AttackKind kind,
            std::vector<std::pair<std::string, std::string>> derived)
{
    result.transcript.outcome().attack =
        simenv::AttackSummary{std::string(to_string(kind)), result.success, std::move(derived)};
    result.notes.push_back("ATTACK=" + std::string(to_string(kind)) +
                           " RESULT=" + (result.success ? "success" : "failure"));
}

std::string different_password(Rng& rng, std::string_view avoid)
{
    std::string pw;
    do {
        pw = rng.alphanumeric(kGeneratedPasswordLength);
    } while (pw == avoid);
    return pw;
}

ScenarioResult attack_guess(Deployment& d)
{
    if (d.dictionary.empty())
        throw ConfigError("attack guess requires --dictionary");

    ScenarioResult result;
    const std::string& victim_id = d.config.users.front();
    auto victim = d.enroll(victim_id);
    auto own = d.enroll(kAdversaryIdentity);

    auto honest = simenv::run_honest_session(d.server, victim.card, victim_id, victim.password,
                                             d.clock, d.latency(), result.transcript);
    result.transcript.outcome().sessions.push_back(honest);
    result.notes.push_back("honest login by " + victim_id + ": " + describe(honest));

    attacks::AdversaryKnowledge adversary(d.h, d.dictionary);
    adversary.learn_card(own.card);
    const LoginRequest req = simenv::intercept_login_request(result.transcript);
    adversary.observe(req);
    const Block& hpw = adversary.derive_password_hash();
    const auto found = adversary.guess();

    std::vector<std::pair<std::string, std::string>> derived{
        {"y", adversary.y()->to_hex()},
        {"hpw", hpw.to_hex()},
        {"password", found.value_or("")},
        {"matches_registered", found && *found == victim.password ? "true" : "false"},
    };
    result.notes.push_back("recovered h(PW) = " + hpw.to_hex());
    result.notes.push_back(found ? "dictionary match: " + *found
                                 : std::string("no dictionary entry matches"));
    result.success = found.has_value();

    if (found && d.config.confirm_by_login) {
        // A card clone from intercepted N_i and extracted y, driven with the guess.
        const scheme::SmartCard clone(req.n, *adversary.y(), d.h);
        d.clock.advance(1);
        const LoginRequest probe = scheme::card_login(clone, victim_id, *found, d.clock.now());
        auto injected = simenv::inject(d.server, probe, d.clock, result.transcript);
        SessionOutcome confirm{ServerDecision::from(injected.verdict), std::nullopt, probe.t,
                               d.clock.now(), std::nullopt};
        result.transcript.outcome().sessions.push_back(confirm);
        result.notes.push_back("confirmation login: " + describe(confirm));
        derived.emplace_back("confirmed", confirm.server->accepted() ? "true" : "false");
        result.success = confirm.server->accepted();
    }
    finish(result, AttackKind::guess, std::move(derived));
    return result;
}

ScenarioResult attack_masquerade_user(Deployment& d)
{
    ScenarioResult result;
    const std::string& victim_id = d.config.users.front();
    auto victim = d.enroll(victim_id);
    auto own = d.enroll(kAdversaryIdentity);

    auto honest = simenv::run_honest_session(d.server, victim.card, victim_id, victim.password,
                                             d.clock, d.latency(), result.transcript);
    result.transcript.outcome().sessions.push_back(honest);
    result.notes.push_back("honest login by " + victim_id + ": " + describe(honest));

    attacks::AdversaryKnowledge adversary(d.h);
    adversary.learn_card(own.card);
    adversary.observe(simenv::intercept_login_request(result.transcript));
    const Block hpw = adversary.derive_password_hash();
    const Block hx = adversary.derive_hx();

    // Well past the window of the intercepted request: only a fresh forgery can pass.
    d.clock.advance(d.config.delta_t + 1);
    const std::string chosen = d.rng.alphanumeric(kGeneratedPasswordLength);
    const LoginRequest forged = attacks::forge_login(hx, *adversary.y(),
                                                     adversary.observed().back().id, chosen,
                                                     d.clock.now(), d.h);
    auto injected = simenv::inject(d.server, forged, d.clock, result.transcript);
    SessionOutcome forged_session{ServerDecision::from(injected.verdict), std::nullopt, forged.t,
                                  d.clock.now(), std::nullopt};
    result.transcript.outcome().sessions.push_back(forged_session);
    result.notes.push_back("recovered h(x) = " + hx.to_hex());
    result.notes.push_back("forged login as " + victim_id + " with password '" + chosen +
                           "': " + describe(forged_session));

    result.success = scheme::accepted(injected.verdict);
    finish(result, AttackKind::masquerade_user,
           {{"y", adversary.y()->to_hex()},
            {"hpw", hpw.to_hex()},
            {"hx", hx.to_hex()},
            {"chosen_password", chosen},
            {"forged_n", forged.n.to_hex()},
            {"forged_cid", forged.cid.to_hex()}});
    return result;
}

ScenarioResult attack_masquerade_server(Deployment& d)
{
    ScenarioResult result;
    const std::string& victim_id = d.config.users.front();
    auto victim = d.enroll(victim_id);
    auto own = d.enroll(kAdversaryIdentity);

    // The victim's request is captured and never reaches the server.
    const Timestamp t = d.clock.now();
    const LoginRequest req = scheme::card_login(victim.card, victim_id, victim.password, t);
    result.transcript.record(simenv::Direction::user_to_server, req, t);

    attacks::AdversaryKnowledge adversary(d.h);
    adversary.learn_card(own.card);
    adversary.observe(simenv::intercept_login_request(result.transcript));
    const Block hpw = adversary.derive_password_hash();

    d.clock.advance(d.config.latency_up);
    const Timestamp t_forged = d.clock.now();
    const auto reply = attacks::forge_server_reply(hpw, *adversary.y(), t_forged, d.h);
    const bool user_accepts =
        simenv::inject_reply(victim.card, victim.password, reply, d.clock, d.config.latency_down,
                             d.config.delta_t, result.transcript);

    SessionOutcome session{std::nullopt, user_accepts, t, t_forged, d.clock.now()};
    result.transcript.outcome().sessions.push_back(session);
    result.notes.push_back("forged reply to " + victim_id + ": " + describe(session));

    result.success = user_accepts;
    finish(result, AttackKind::masquerade_server,
           {{"y", adversary.y()->to_hex()},
            {"hpw", hpw.to_hex()},
            {"forged_a", reply.a.to_hex()},
            {"forged_t", std::to_string(reply.t_server.seconds)}});
    return result;
}

ScenarioResult attack_dos(Deployment& d)
{
    ScenarioResult result;
    const std::string& victim_id = d.config.users.front();
    auto victim = d.enroll(victim_id);

    auto before = simenv::run_honest_session(d.server, victim.card, victim_id, victim.password,
                                             d.clock, d.latency(), result.transcript);
    result.transcript.outcome().sessions.push_back(before);
    result.notes.push_back("login before corruption: " + describe(before));

    const Block n_before = victim.card.n_i();
    const std::string arbitrary = different_password(d.rng, victim.password);
    const std::string replacement = d.rng.alphanumeric(kGeneratedPasswordLength);
    attacks::dos_corrupt_card(victim.card, arbitrary, replacement);

    d.clock.advance(1);
    auto after = simenv::run_honest_session(d.server, victim.card, victim_id, victim.password,
                                            d.clock, d.latency(), result.transcript);
    result.transcript.outcome().sessions.push_back(after);
    result.notes.push_back("login with the true password after corruption: " + describe(after));

    result.success = fully_accepted(before) && after.server &&
                     after.server->reject_reason == scheme::RejectReason::id_mismatch;
    finish(result, AttackKind::dos,
           {{"arbitrary_password", arbitrary},
            {"new_password", replacement},
            {"n_before", n_before.to_hex()},
            {"n_after", victim.card.n_i().to_hex()}});
    return result;
}

} // namespace

Deployment::Deployment(const ScenarioConfig& cfg, std::vector<std::string> dict)
    : config(cfg),
      h(make_hash(cfg.hash)),
      rng(cfg.seed),
      server(scheme::ServerState::generate(h, rng, cfg.delta_t)),
      clock(kScenarioStart),
      dictionary(std::move(dict)),
      passwords(password_source(dictionary))
{}

scheme::RegistrationOutput Deployment::enroll(std::string_view id)
{
    return scheme::register_user(server, id, passwords, rng);
}

ScenarioResult run_honest(const ScenarioConfig& config, std::vector<std::string> dictionary)
{
    validate(config);
    Deployment d(config, std::move(dictionary));
    ScenarioResult result;
    result.success = true;
    for (const auto& id : config.users) {
        auto reg = d.enroll(id);
        auto outcome = simenv::run_honest_session(d.server, reg.card, id, reg.password, d.clock,
                                                  d.latency(), result.transcript);
        result.transcript.outcome().sessions.push_back(outcome);
        result.notes.push_back("honest login by " + id + ": " + describe(outcome));
        result.success = result.success && fully_accepted(outcome);
        d.clock.advance(1);
    }
    return result;
}

ScenarioResult run_attack(const ScenarioConfig& config, AttackKind kind,
                          std::vector<std::string> dictionary)
{
    validate(config);
    Deployment d(config, std::move(dictionary));
    switch (kind) {
    case AttackKind::guess:
        return attack_guess(d);
    case AttackKind::masquerade_user:
        return attack_masquerade_user(d);
    case AttackKind::masquerade_server:
        return attack_masquerade_server(d);
    case AttackKind::dos:
        return attack_dos(d);
    }
    throw ConfigError("unknown attack");
}

} // namespace wangauth::cli
