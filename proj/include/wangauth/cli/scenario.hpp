#pragma once

#include <string>
#include <vector>

#include "wangauth/cli/config.hpp"
#include "wangauth/primitives/hash.hpp"
#include "wangauth/primitives/random.hpp"
#include "wangauth/scheme/server.hpp"
#include "wangauth/simenv/clock.hpp"
#include "wangauth/simenv/session.hpp"
#include "wangauth/simenv/transcript.hpp"

namespace wangauth::cli {

/// Identity under which the adversary registers its own card.
inline constexpr std::string_view kAdversaryIdentity = "mallory";

/// Server, clock and randomness for one scenario, all derived from the config.
struct Deployment {
    Deployment(const ScenarioConfig& config, std::vector<std::string> dictionary);

    scheme::RegistrationOutput enroll(std::string_view id);

    ScenarioConfig config;
    HashFn h;
    Rng rng;
    scheme::ServerState server;
    simenv::SimClock clock;
    std::vector<std::string> dictionary;
    scheme::PasswordSource passwords;

    simenv::Latency latency() const { return {config.latency_up, config.latency_down}; }
};

struct ScenarioResult {
    simenv::Transcript transcript;
    bool success = false;
    /// Human-readable summary lines.
    std::vector<std::string> notes;
};

/// One honest session per configured user. Success iff every session ends
/// with server Accept and user acceptance.
ScenarioResult run_honest(const ScenarioConfig& config, std::vector<std::string> dictionary = {});

/// Drives one attack end to end. Success means the attack worked. `guess`
/// requires a non-empty dictionary (ConfigError otherwise).
ScenarioResult run_attack(const ScenarioConfig& config, AttackKind kind,
                          std::vector<std::string> dictionary = {});

} // namespace wangauth::cli
