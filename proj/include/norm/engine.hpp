#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "norm/errors.hpp"
#include "norm/rules.hpp"
#include "norm/stratify.hpp"

namespace norm {

struct Substitution {
    std::map<std::string, Term> terms;
    std::map<std::string, int> times;

    auto operator<=>(const Substitution&) const = default;
    std::string str() const;
};

// A rule schema instantiated over the scenario's agents and horizon; every
// literal is ground and every time value lies within the horizon.
struct GroundInstance {
    std::size_t rule_index = 0;
    std::string rule_id;
    RuleKind kind = RuleKind::Strict;
    Substitution subst;
    std::vector<Literal> premises;
    std::vector<Literal> conclusions;
    std::vector<Literal> justifications;
};

// Enumerates all ground instances. Agent-slot variables range over the agent
// constants of the facts and rulebase; other term variables additionally
// range over the symbol constants; time variables over [1, Tmax] with Tmax
// the largest fact time. Instances with any time outside the horizon are
// dropped. Throws EmptyScenario when there are no facts.
std::vector<GroundInstance> ground(const Rulebase& rb, const std::vector<Literal>& facts);

struct Provenance {
    enum class Kind { Fact, Rule, Capacity };
    Kind kind = Kind::Fact;
    std::string source;  // rule id, fact origin, or the capacity stage
    Substitution subst;

    bool operator==(const Provenance&) const = default;
    std::string str() const;
};

enum class Truth { True, False, Unknown };
const char* truth_name(Truth t);

// Two complementary ground literals were both established; the stratified
// theory has no unique extension (or its strict part is inconsistent).
class ConflictError : public EngineError {
public:
    ConflictError(const Literal& a, const Provenance& pa, const Literal& b, const Provenance& pb);
    const Literal& first() const { return a_; }
    const Literal& second() const { return b_; }
    const Provenance& first_provenance() const { return pa_; }
    const Provenance& second_provenance() const { return pb_; }

private:
    Literal a_, b_;
    Provenance pa_, pb_;
};

// Three-valued ground-literal store. An entry maps the positive form of an
// atom to a truth value plus provenance; absent atoms are Unknown. Entries
// are only ever added, never retracted.
class WorldStore {
public:
    struct Entry {
        Literal atom;  // positive form
        bool value;    // true: atom holds; false: its complement holds
        Provenance provenance;
    };

    Truth query(const Literal& lit) const;

    // Inserts the literal; returns false when it was already present.
    // Throws ConflictError when the complement is already established.
    bool insert(const Literal& lit, Provenance prov);

    std::optional<Entry> lookup(const Literal& lit) const;
    const std::map<Literal, Entry>& entries() const { return entries_; }

    // All established literals, polarity folded in.
    std::vector<Literal> literals() const;

    // Same literal -> truth mapping, provenance ignored.
    bool same_valuation(const WorldStore& other) const;

    bool operator==(const WorldStore& other) const;

private:
    std::map<Literal, Entry> entries_;  // keyed by the positive form
};

struct TraceEvent {
    int stratum = 0;
    std::string rule_id;
    Substitution subst;
    Literal produced;

    bool operator==(const TraceEvent&) const = default;
};

struct Trace {
    std::vector<TraceEvent> events;
};

struct SaturationResult {
    WorldStore store;
    Trace trace;
};

// Layered saturation: strata are processed in ascending order; strict
// instances fire first, then defaults are evaluated against the end-of-
// strict-phase snapshot and committed together, with complementary pending
// conclusions reported as a ConflictError. The result is the unique
// extension of the stratified theory.
SaturationResult saturate(const Rulebase& rb, const std::vector<Literal>& facts,
                          const Stratification& strat);

Truth query(const WorldStore& store, const Literal& lit);

// Replays a trace over the initial facts; reproduces the saturation store
// exactly (values and provenance).
WorldStore replay(const std::vector<Literal>& facts, const Trace& trace);

}  // namespace norm
