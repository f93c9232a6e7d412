#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wangauth/primitives/hash.hpp"
#include "wangauth/primitives/timestamp.hpp"

namespace wangauth::cli {

enum class AttackKind { guess, masquerade_user, masquerade_server, dos };

std::string_view to_string(AttackKind kind);
std::optional<AttackKind> parse_attack_kind(std::string_view name);

/// Everything a scenario depends on. `seed` determines all randomness.
struct ScenarioConfig {
    HashBackend hash = HashBackend::standard;
    std::uint64_t delta_t = 60;
    std::uint64_t seed = 1;
    std::optional<std::filesystem::path> dictionary_path;
    /// The first user is the victim in attack scenarios.
    std::vector<std::string> users{"alice"};
    std::uint64_t latency_up = 0;
    std::uint64_t latency_down = 0;
    bool confirm_by_login = false;
};

/// Logical time at which every scenario starts.
inline constexpr Timestamp kScenarioStart{1'700'000'000};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws ConfigError on an unusable configuration.
void validate(const ScenarioConfig& config);

} // namespace wangauth::cli
