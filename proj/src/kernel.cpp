#include "norm/kernel.hpp"

#include <algorithm>
#include <sstream>

namespace norm {

const char* anomaly_form_name(AnomalyForm f) {
    switch (f) {
        case AnomalyForm::DutyViolation: return "duty_violation";
        case AnomalyForm::Perturbation: return "perturbation";
    }
    return "?";
}

CapacityTables capacity_tables(const Rulebase& rb) {
    return CapacityTables{rb.actions, rb.cause_pot};
}

Literal disponible_literal(const std::string& action, const Property& effect, const Term& agent,
                           int time) {
    Term effect_arg = effect.kind() == Property::Kind::Simple ? Term::symbol(effect.symbol())
                                                              : Term::prop(effect);
    Property prop = Property::combine(
        Property::combine(Property::simple("Disponible"), Term::symbol(action)),
        std::move(effect_arg));
    return Literal(true, Modality::Fact, std::move(prop), agent, TimeExpr::constant(time));
}

CapacityEval eval_capacity(const WorldStore& store, const CapacityTables& tables,
                           const Property& duty_property, const Term& agent, int time) {
    const std::string& head = duty_property.head_symbol();
    for (const auto& action : tables.actions) {
        if (!tables.cause_pot.count({head, action})) continue;
        if (store.query(disponible_literal(action, duty_property, agent, time)) == Truth::True)
            return CapacityEval{true, action};
    }
    return CapacityEval{false, std::nullopt};
}

namespace {

// Duty property with the entry's polarity folded back in: a False duty entry
// stands for a duty to reach the negated property.
Property duty_property_of(const WorldStore::Entry& e) {
    return e.value ? e.atom.property : Property::neg(e.atom.property);
}

}  // namespace

void materialize_capacities(WorldStore& store, Trace& trace, const CapacityTables& tables,
                            int capacity_stratum) {
    std::vector<const WorldStore::Entry*> duties;
    for (const auto& [atom, e] : store.entries())
        if (atom.modality == Modality::Duty) duties.push_back(&e);

    for (const auto* e : duties) {
        CapacityEval c =
            eval_capacity(store, tables, duty_property_of(*e), e->atom.agent, e->atom.time.value());
        Literal cap(c.able, Modality::Capacity, e->atom.property, e->atom.agent, e->atom.time);
        std::string source = c.witness_action ? "capacity:" + *c.witness_action : "capacity";
        if (store.insert(cap, Provenance{Provenance::Kind::Capacity, source, {}}))
            trace.events.push_back(TraceEvent{capacity_stratum, source, {}, cap});
    }
}

std::vector<Anomaly> detect_anomalies(const WorldStore& store, const CapacityTables& tables,
                                      const IncompatibilityTable& incompat) {
    std::vector<Anomaly> out;
    for (const auto& [datom, dentry] : store.entries()) {
        if (datom.modality != Modality::Duty) continue;
        Property duty = duty_property_of(dentry);
        int t = datom.time.value();
        for (const auto& [fatom, fentry] : store.entries()) {
            if (fatom.modality != Modality::Fact) continue;
            if (fatom.agent != datom.agent || fatom.time.value() != t + 1) continue;
            Property holds = fentry.value ? fatom.property : Property::neg(fatom.property);
            if (!incompatible(duty, holds, incompat)) continue;
            CapacityEval c = eval_capacity(store, tables, duty, datom.agent, t);
            Anomaly a{c.able,
                      AnomalyForm::DutyViolation,
                      duty,
                      datom.agent,
                      t,
                      Literal(fentry.value, Modality::Fact, fatom.property, fatom.agent, fatom.time),
                      std::nullopt,
                      c.witness_action};
            out.push_back(std::move(a));
        }
    }
    for (const auto& [atom, e] : store.entries()) {
        if (atom.modality != Modality::Fact || !e.value) continue;
        if (atom.property.kind() != Property::Kind::Combine) continue;
        if (atom.property.head_symbol() != kPerturbationSymbol) continue;
        Anomaly a{true,
                  AnomalyForm::Perturbation,
                  atom.property,
                  atom.agent,
                  atom.time.value(),
                  Literal(true, Modality::Fact, atom.property, atom.agent, atom.time),
                  atom.property.arg(),
                  std::nullopt};
        out.push_back(std::move(a));
    }
    return out;
}

namespace {

std::string anomaly_sort_key(const Anomaly& a) {
    std::string duty_name = a.form == AnomalyForm::Perturbation && a.perturbation_source
                                ? to_string(*a.perturbation_source)
                                : to_string(a.duty);
    return to_string(a.agent) + "/" + duty_name;
}

}  // namespace

std::optional<Anomaly> designate_cause(const std::vector<Anomaly>& anomalies) {
    const Anomaly* best = nullptr;
    for (const auto& a : anomalies) {
        if (!a.is_true) continue;
        if (!best || a.time < best->time ||
            (a.time == best->time && anomaly_sort_key(a) < anomaly_sort_key(*best)))
            best = &a;
    }
    if (!best) return std::nullopt;
    return *best;
}

namespace {

// Renders the derivation of one literal, facts first.
void chain(const Literal& lit, const Rulebase& rb, const WorldStore& store,
           std::set<Literal>& visited, std::ostringstream& os) {
    auto entry = store.lookup(lit);
    if (!entry) return;
    Literal established(entry->value, lit.modality, entry->atom.property, entry->atom.agent,
                        entry->atom.time);
    if (!visited.insert(established).second) return;
    const Provenance& prov = entry->provenance;
    if (prov.kind == Provenance::Kind::Rule) {
        for (const auto& r : rb.rules) {
            if (r.id != prov.source) continue;
            for (const auto& p : r.premises)
                chain(substitute(p, prov.subst.terms, prov.subst.times), rb, store, visited, os);
            break;
        }
        os << "  " << to_string(established) << "   by " << prov.source << " " << prov.subst.str()
           << "\n";
    } else if (prov.kind == Provenance::Kind::Fact) {
        os << "  " << to_string(established) << "   (" << prov.str() << ")\n";
    } else {
        os << "  " << to_string(established) << "   (" << prov.source << ")\n";
    }
}

}  // namespace

std::string explain(const Anomaly& anomaly, const Rulebase& rb, const WorldStore& store,
                    const Trace&) {
    std::ostringstream os;
    if (anomaly.form == AnomalyForm::Perturbation) {
        std::string src =
            anomaly.perturbation_source ? to_string(*anomaly.perturbation_source) : "something";
        os << src << " abnormally perturbed " << to_string(anomaly.agent) << " at time "
           << anomaly.time << ".\n";
    } else {
        os << "Agent " << to_string(anomaly.agent) << " failed to achieve "
           << to_string(anomaly.duty) << " at time " << anomaly.time << " although obliged "
           << (anomaly.is_true ? "and able" : "but unable") << ".\n";
    }

    std::set<Literal> visited;
    if (anomaly.form == AnomalyForm::DutyViolation) {
        os << "Duty derivation:\n";
        Property stored = anomaly.duty;
        bool positive = true;
        while (stored.kind() == Property::Kind::Neg) {
            stored = stored.inner();
            positive = !positive;
        }
        chain(Literal(positive, Modality::Duty, stored, anomaly.agent,
                      TimeExpr::constant(anomaly.time)),
              rb, store, visited, os);
        if (anomaly.is_true && anomaly.capacity_witness) {
            os << "Capacity: action " << *anomaly.capacity_witness << " is a potential cause of "
               << anomaly.duty.head_symbol() << " and is available:\n";
            chain(disponible_literal(*anomaly.capacity_witness, anomaly.duty, anomaly.agent,
                                     anomaly.time),
                  rb, store, visited, os);
        } else if (!anomaly.is_true) {
            os << "Capacity: no declared action was both a potential cause of "
               << anomaly.duty.head_symbol() << " and available at time " << anomaly.time << ".\n";
        }
        os << "Violated by:\n";
        chain(anomaly.violated_by, rb, store, visited, os);
    } else {
        os << "Perturbation fact:\n";
        chain(anomaly.violated_by, rb, store, visited, os);
    }
    return os.str();
}

Analysis analyze(const Rulebase& rb, const std::vector<Literal>& facts) {
    Analysis a{stratify(rb), {}, {}};
    a.sat = saturate(rb, facts, a.strat);
    CapacityTables tables = capacity_tables(rb);
    materialize_capacities(a.sat.store, a.sat.trace, tables, a.strat.max_stratum + 1);
    a.report.anomalies = detect_anomalies(a.sat.store, tables, rb.incompatibilities);
    a.report.cause = designate_cause(a.report.anomalies);
    if (a.report.cause)
        a.report.explanation = explain(*a.report.cause, rb, a.sat.store, a.sat.trace);
    return a;
}

}  // namespace norm
