#include "wangauth/cli/config.hpp"

namespace wangauth::cli {

std::string_view to_string(AttackKind kind)
{
    switch (kind) {
    case AttackKind::guess:
        return "guess";
    case AttackKind::masquerade_user:
        return "masquerade-user";
    case AttackKind::masquerade_server:
        return "masquerade-server";
    case AttackKind::dos:
        return "dos";
    }
    return "?";
}

std::optional<AttackKind> parse_attack_kind(std::string_view name)
{
    for (auto kind : {AttackKind::guess, AttackKind::masquerade_user, AttackKind::masquerade_server,
                      AttackKind::dos})
        if (to_string(kind) == name)
            return kind;
    return std::nullopt;
}

void validate(const ScenarioConfig& config)
{
    if (config.users.empty())
        throw ConfigError("at least one user is required");
    for (const auto& user : config.users)
        if (user.empty())
            throw ConfigError("user identities must be non-empty");
}

} // namespace wangauth::cli
