#pragma once

#include <json.hpp>

#include "norm/kernel.hpp"
#include "norm/oracle.hpp"
#include "norm/stratify.hpp"

namespace norm {

nlohmann::json to_json(const Literal& lit);
nlohmann::json to_json(const WorldStore& store);
nlohmann::json to_json(const Trace& trace);
nlohmann::json to_json(const Anomaly& a);
nlohmann::json to_json(const AnomalyReport& report);
nlohmann::json to_json(const Stratification& strat);
nlohmann::json to_json(const std::vector<Violation>& violations);
nlohmann::json to_json(const std::vector<Warning>& warnings);
nlohmann::json to_json(const std::vector<Cycle>& cycles);
nlohmann::json to_json(const OracleResult& result);

}  // namespace norm
