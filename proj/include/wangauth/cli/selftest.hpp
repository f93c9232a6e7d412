#pragma once

#include <string>
#include <vector>

#include "wangauth/cli/config.hpp"

namespace wangauth::cli {

struct SelftestOptions {
    /// Test hook: run the suite against a card whose login omits the ID_i
    /// term of CID_i. A sensitive suite must fail.
    bool mutate_login = false;
};

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Algebra, round-trip, freshness and all four attacks at reduced trial
/// counts. Hash-agnostic properties use the configured backend; password
/// recovery and card corruption are checked with the default hash, since
/// they only hold when the hash is collision-resistant.
std::vector<PropertyResult> run_selftest(const ScenarioConfig& config,
                                         const SelftestOptions& options = {});

} // namespace wangauth::cli
