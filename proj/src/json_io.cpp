#include "norm/json_io.hpp"

namespace norm {

using nlohmann::json;

json to_json(const Literal& lit) {
    return json{{"modality", modality_name(lit.modality)},
                {"property", sexpr(lit.property)},
                {"agent", to_string(lit.agent)},
                {"time", lit.time.value()},
                {"polarity", lit.positive ? "positive" : "negative"},
                {"text", to_string(lit)}};
}

json to_json(const WorldStore& store) {
    json entries = json::array();
    for (const auto& [atom, e] : store.entries()) {
        json j = to_json(Literal(e.value, atom.modality, atom.property, atom.agent, atom.time));
        j["provenance"] = e.provenance.str();
        entries.push_back(std::move(j));
    }
    return json{{"entries", std::move(entries)}};
}

json to_json(const Trace& trace) {
    json events = json::array();
    for (const auto& ev : trace.events) {
        json subst = json::object();
        for (const auto& [v, t] : ev.subst.terms) subst[v] = to_string(t);
        for (const auto& [v, t] : ev.subst.times) subst[v] = t;
        events.push_back(json{{"stratum", ev.stratum},
                              {"rule", ev.rule_id},
                              {"substitution", std::move(subst)},
                              {"literal", to_string(ev.produced)}});
    }
    return json{{"events", std::move(events)}};
}

json to_json(const Anomaly& a) {
    json j{{"kind", a.is_true ? "true" : "false"},
           {"form", anomaly_form_name(a.form)},
           {"duty", to_string(a.duty)},
           {"agent", to_string(a.agent)},
           {"time", a.time},
           {"violatedBy", to_string(a.violated_by)}};
    if (a.perturbation_source) j["source"] = to_string(*a.perturbation_source);
    if (a.capacity_witness) j["capacityWitness"] = *a.capacity_witness;
    return j;
}

json to_json(const AnomalyReport& report) {
    json anomalies = json::array();
    for (const auto& a : report.anomalies) anomalies.push_back(to_json(a));
    return json{{"anomalies", std::move(anomalies)},
                {"cause", report.cause ? to_json(*report.cause) : json(nullptr)},
                {"explanation", report.explanation}};
}

json to_json(const Stratification& strat) {
    json keys = json::array();
    for (const auto& [k, s] : strat.stratum_of)
        keys.push_back(json{{"key", to_string(k)},
                            {"stratum", s},
                            {"layer", strat.max_stratum - s + 1}});
    json rules = json::object();
    for (const auto& [id, s] : strat.rule_stratum) rules[id] = s;
    return json{{"maxStratum", strat.max_stratum},
                {"keys", std::move(keys)},
                {"ruleStrata", std::move(rules)}};
}

namespace {

json strata_map(const std::map<PredicateKey, int>& m) {
    json j = json::object();
    for (const auto& [k, s] : m) j[to_string(k)] = s;
    return j;
}

}  // namespace

json to_json(const std::vector<Violation>& violations) {
    json arr = json::array();
    for (const auto& v : violations)
        arr.push_back(json{{"ruleId", v.rule_id}, {"message", v.message},
                           {"strata", strata_map(v.strata)}});
    return arr;
}

json to_json(const std::vector<Warning>& warnings) {
    json arr = json::array();
    for (const auto& w : warnings)
        arr.push_back(json{{"ruleId", nullptr}, {"message", w.message},
                           {"strata", strata_map(w.strata)}});
    return arr;
}

json to_json(const std::vector<Cycle>& cycles) {
    json arr = json::array();
    for (const auto& c : cycles) {
        json nodes = json::array();
        for (const auto& k : c) nodes.push_back(to_string(k));
        arr.push_back(std::move(nodes));
    }
    return arr;
}

json to_json(const OracleResult& result) {
    json exts = json::array();
    for (const auto& e : result.extensions) {
        json lits = json::array();
        for (const auto& l : e) lits.push_back(to_string(l));
        exts.push_back(std::move(lits));
    }
    return json{{"extensions", std::move(exts)},
                {"inconsistentBase", result.inconsistent_base}};
}

}  // namespace norm
