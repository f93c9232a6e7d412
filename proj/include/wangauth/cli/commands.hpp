#pragma once

#include <iosfwd>

#include "wangauth/cli/config.hpp"
#include "wangauth/cli/selftest.hpp"

namespace wangauth::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
    kExitSuccess = 0,
    kExitFailure = 1,
    kExitUsage = 2,
};

// Transcripts (JSON lines) go to `out`; the human summary goes to `err`.

/// 0 iff every honest session is accepted by both sides.
int cmd_honest(const ScenarioConfig& config, std::ostream& out, std::ostream& err);

/// 0 iff the attack SUCCEEDED. The summary ends with
/// `ATTACK=<name> RESULT=<success|failure>`.
int cmd_attack(const ScenarioConfig& config, AttackKind which, std::ostream& out,
               std::ostream& err);

/// One `PASS <name>` / `FAIL <name>` line per property on `out`.
int cmd_selftest(const ScenarioConfig& config, std::ostream& out, std::ostream& err,
                 const SelftestOptions& options = {});

/// Full command line: `honest`, `attack <which>`, `selftest` plus flags.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace wangauth::cli
