#pragma once

#include <optional>
#include <string>
#include <vector>

#include "norm/engine.hpp"

namespace norm {

// Property head through which abnormal-perturbation anomalies are expressed.
inline constexpr const char* kPerturbationSymbol = "CausePerturbAnormale";

// Static capacity tables: the declared actions and the (effect, action)
// potential-cause pairs. Availability is not a table: Disponible literals
// are ordinary facts, derived or blocked by rulebase rules.
struct CapacityTables {
    std::set<std::string> actions;
    std::set<std::pair<std::string, std::string>> cause_pot;
};

CapacityTables capacity_tables(const Rulebase& rb);

// The availability literal for (action, effect, agent, t): a Fact literal on
// Combine(Combine(Disponible, action), effect).
Literal disponible_literal(const std::string& action, const Property& effect, const Term& agent,
                           int time);

struct CapacityEval {
    bool able = false;
    std::optional<std::string> witness_action;
};

// Closed-world capacity biconditional: the agent can reach the property iff
// some declared action is a potential cause of its head symbol and the
// matching availability literal is established.
CapacityEval eval_capacity(const WorldStore& store, const CapacityTables& tables,
                           const Property& duty_property, const Term& agent, int time);

// Writes one EnMesure literal per ground duty in the store, with polarity
// given by eval_capacity; runs after rule saturation as its own stage.
void materialize_capacities(WorldStore& store, Trace& trace, const CapacityTables& tables,
                            int capacity_stratum);

enum class AnomalyForm { DutyViolation, Perturbation };
const char* anomaly_form_name(AnomalyForm f);

struct Anomaly {
    bool is_true = false;  // true anomaly (had the capacity) vs false anomaly
    AnomalyForm form = AnomalyForm::DutyViolation;
    Property duty;            // duty property; for Perturbation, the perturbation property
    Term agent;
    int time = 0;             // duty time (fact time for Perturbation)
    Literal violated_by;      // incompatible fact at time+1, or the perturbation literal
    std::optional<Term> perturbation_source;
    std::optional<std::string> capacity_witness;
};

// Scans the saturated store for both anomaly forms. For every established
// duty violated by an incompatible fact at the next instant, exactly one of
// a true or a false anomaly is emitted, decided by eval_capacity; every
// established perturbation fact yields a true anomaly.
std::vector<Anomaly> detect_anomalies(const WorldStore& store, const CapacityTables& tables,
                                      const IncompatibilityTable& incompat);

// The true anomaly with the smallest time; ties broken by agent name, then
// duty name. Empty when there is no true anomaly.
std::optional<Anomaly> designate_cause(const std::vector<Anomaly>& anomalies);

// One-sentence verdict followed by the firing chain that established the
// duty, the capacity witness and the violating fact.
std::string explain(const Anomaly& anomaly, const Rulebase& rb, const WorldStore& store,
                    const Trace& trace);

struct AnomalyReport {
    std::vector<Anomaly> anomalies;
    std::optional<Anomaly> cause;
    std::string explanation;
};

struct Analysis {
    Stratification strat;
    SaturationResult sat;
    AnomalyReport report;
};

// Full pipeline: stratify, saturate, materialize capacities, detect, and
// explain the designated cause.
Analysis analyze(const Rulebase& rb, const std::vector<Literal>& facts);

}  // namespace norm
