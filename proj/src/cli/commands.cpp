#include "wangauth/cli/commands.hpp"

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wangauth/attacks/attacks.hpp"
#include "wangauth/cli/scenario.hpp"
#include "wangauth/simenv/transcript_json.hpp"

namespace wangauth::cli {

namespace {

std::vector<std::string> dictionary_for(const ScenarioConfig& config)
{
    if (!config.dictionary_path)
        return {};
    auto words = attacks::load_dictionary(*config.dictionary_path);
    if (words.empty())
        throw ConfigError("dictionary '" + config.dictionary_path->string() + "' is empty");
    return words;
}

void report(const ScenarioResult& result, std::ostream& out, std::ostream& err)
{
    simenv::write_jsonl(out, result.transcript);
    for (const auto& line : result.notes)
        err << line << '\n';
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn)
{
    try {
        return fn();
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        // Unreadable dictionary and similar environment problems.
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace

int cmd_honest(const ScenarioConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        auto result = run_honest(config, dictionary_for(config));
        report(result, out, err);
        return result.success ? kExitSuccess : kExitFailure;
    });
}

int cmd_attack(const ScenarioConfig& config, AttackKind which, std::ostream& out,
               std::ostream& err)
{
    return guarded(err, [&] {
        auto result = run_attack(config, which, dictionary_for(config));
        report(result, out, err);
        return result.success ? kExitSuccess : kExitFailure;
    });
}

int cmd_selftest(const ScenarioConfig& config, std::ostream& out, std::ostream& err,
                 const SelftestOptions& options)
{
    return guarded(err, [&] {
        validate(config);
        std::vector<std::string> failed;
        for (const auto& r : run_selftest(config, options)) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name;
            if (!r.detail.empty())
                out << " (" << r.detail << ")";
            out << '\n';
            if (!r.passed)
                failed.push_back(r.name);
        }
        if (failed.empty()) {
            err << "selftest: all properties hold\n";
            return kExitSuccess;
        }
        err << "selftest: failed properties:";
        for (const auto& name : failed)
            err << ' ' << name;
        err << '\n';
        return kExitFailure;
    });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Dynamic-ID smartcard authentication lab: honest runs and attacks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML/INI file with flag defaults; flags on the command line win");

    ScenarioConfig config;
    std::string hash_name = "default";
    std::int64_t delta_t = static_cast<std::int64_t>(config.delta_t);
    std::int64_t latency_up = 0;
    std::int64_t latency_down = 0;
    std::string dictionary;
    std::string output;

    app.add_option("--hash", hash_name, "Hash backend")
        ->check(CLI::IsMember({"default", "toy16", "zero"}))
        ->capture_default_str();
    app.add_option("--delta-t", delta_t, "Freshness window in seconds")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--seed", config.seed, "Seed for all randomness")->capture_default_str();
    app.add_option("--dictionary", dictionary, "Password list, one per line");
    app.add_option("--users", config.users, "Identities to register (first is the victim)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--latency-up", latency_up, "User->server delay in seconds")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--latency-down", latency_down, "Server->user delay in seconds")
        ->check(CLI::NonNegativeNumber);
    app.add_flag("--confirm-by-login", config.confirm_by_login,
                 "guess: confirm the recovered password with a login");
    app.add_option("--output", output, "Write the transcript here instead of stdout");

    auto* honest = app.add_subcommand("honest", "Run one honest session per user");
    auto* attack = app.add_subcommand("attack", "Run one attack end to end");
    std::string which;
    attack->add_option("which", which, "guess | masquerade-user | masquerade-server | dos")
        ->required()
        ->check(CLI::IsMember({"guess", "masquerade-user", "masquerade-server", "dos"}));
    auto* selftest = app.add_subcommand("selftest", "Check the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    config.hash = *parse_hash_backend(hash_name);
    config.delta_t = static_cast<std::uint64_t>(delta_t);
    config.latency_up = static_cast<std::uint64_t>(latency_up);
    config.latency_down = static_cast<std::uint64_t>(latency_down);
    if (!dictionary.empty())
        config.dictionary_path = dictionary;

    std::ofstream file;
    std::ostream* sink = &out;
    if (!output.empty()) {
        file.open(output, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open output file '" << output << "'\n";
            return kExitUsage;
        }
        sink = &file;
    }

    if (honest->parsed())
        return cmd_honest(config, *sink, err);
    if (attack->parsed())
        return cmd_attack(config, *parse_attack_kind(which), *sink, err);
    if (selftest->parsed())
        return cmd_selftest(config, *sink, err);
    return kExitUsage;
}

} // namespace wangauth::cli
