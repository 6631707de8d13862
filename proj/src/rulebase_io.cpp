#include "norm/rulebase_io.hpp"

#include <fstream>

namespace norm {

Rulebase load_rulebase(const std::vector<std::string>& paths) {
    Rulebase rb;
    for (const auto& p : paths) rb.merge(parse_rules_file(p));
    return rb;
}

Rulebase load_default_rulebase(const std::string& rulebase_dir) {
    return load_rulebase({rulebase_dir + "/accidents.rules", rulebase_dir + "/capacity.rules"});
}

ScenarioFixture load_fixture(const std::string& fixtures_dir, const std::string& name) {
    ScenarioFixture fx;
    fx.name = name;
    fx.facts = parse_facts_file(fixtures_dir + "/" + name + ".facts");

    std::ifstream in(fixtures_dir + "/" + name + ".expected.json");
    if (!in) throw EngineError("cannot open expectations for fixture " + name);
    nlohmann::json j = nlohmann::json::parse(in);
    for (const auto& item : j.at("literals"))
        fx.expected_literals.emplace_back(parse_literal(item.at("literal").get<std::string>()),
                                          item.at("value").get<bool>());
    fx.expected_report = j.at("report");
    return fx;
}

std::vector<ScenarioFixture> golden_scenarios(const std::string& fixtures_dir) {
    std::vector<ScenarioFixture> out;
    for (const char* name : {"rearend", "brake_failure", "no_collision", "perturbation"})
        out.push_back(load_fixture(fixtures_dir, name));
    return out;
}

}  // namespace norm
