#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "norm/kernel.hpp"
#include "norm/parser.hpp"

namespace norm {

// Loads and concatenates rulebase files in the given order.
Rulebase load_rulebase(const std::vector<std::string>& paths);

// The shipped road-accident rulebase: accidents.rules + capacity.rules from
// the given directory. Stratifies without cycles and lints clean.
Rulebase load_default_rulebase(const std::string& rulebase_dir);

// A scenario with its expectations, read from <name>.facts and
// <name>.expected.json.
struct ScenarioFixture {
    std::string name;
    std::vector<Literal> facts;
    std::vector<std::pair<Literal, bool>> expected_literals;  // literal -> expected query truth
    nlohmann::json expected_report;  // anomalies + cause skeleton, explanation substrings
};

ScenarioFixture load_fixture(const std::string& fixtures_dir, const std::string& name);

// The shipped scenarios, golden rear-end collision first.
std::vector<ScenarioFixture> golden_scenarios(const std::string& fixtures_dir);

}  // namespace norm
