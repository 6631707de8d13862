#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "norm/errors.hpp"
#include "norm/rules.hpp"

namespace norm {

// Predicate dependency graph: one node per predicate key appearing in the
// rulebase, one arc from every premise and justification key to every
// conclusion key, with the contributing rule ids attached.
struct DependencyGraph {
    std::set<PredicateKey> nodes;
    std::map<std::pair<PredicateKey, PredicateKey>, std::vector<std::string>> arcs;

    void add_arc(const PredicateKey& from, const PredicateKey& to, const std::string& rule_id);
};

DependencyGraph build_graph(const Rulebase& rb);

using Cycle = std::vector<PredicateKey>;  // [a, b, c] stands for a -> b -> c -> a
std::string to_string(const Cycle& c, const DependencyGraph* graph = nullptr);

// Elementary cycles, shortest first, capped. Empty iff the graph is acyclic.
std::vector<Cycle> find_cycles(const DependencyGraph& graph, std::size_t max_cycles = 10);

class CycleError : public EngineError {
public:
    explicit CycleError(std::vector<Cycle> cycles, const DependencyGraph& graph);
    const std::vector<Cycle>& cycles() const { return cycles_; }

private:
    std::vector<Cycle> cycles_;
};

// Strata are numbered in evaluation order: sources (fact-level keys) get 0
// and every arc goes from a lower stratum to a strictly higher one, so
// saturation is a plain ascending sweep. The outside-in layer numbering used
// in reports is max_stratum - stratum + 1.
struct Stratification {
    std::map<PredicateKey, int> stratum_of;
    std::map<std::string, int> rule_stratum;  // conclusion stratum (max for strict rules)
    int max_stratum = 0;

    // Keys never mentioned by the rulebase (scenario-only facts) sit at 0.
    int stratum(const PredicateKey& k) const;
};

// Longest-path leveling of an acyclic graph; throws CycleError otherwise.
Stratification assign_strata(const DependencyGraph& graph);

// build_graph + assign_strata + per-rule strata.
Stratification stratify(const Rulebase& rb);

// A rule whose premises or justifications do not sit strictly below its
// conclusions under the given strata.
struct Violation {
    std::string rule_id;
    std::string message;
    std::map<PredicateKey, int> strata;  // offending keys with their strata
};

std::vector<Violation> validate(const Rulebase& rb, const Stratification& strat);

// Warns when the global modality ordering (facts before duties before
// capacities) is broken by some key's stratum.
struct Warning {
    std::string message;
    std::map<PredicateKey, int> strata;
};

std::vector<Warning> modality_lint(const Stratification& strat);

// DOT rendering; works on cyclic graphs (pass strat = nullptr then).
std::string export_dot(const DependencyGraph& graph, const Stratification* strat = nullptr);

}  // namespace norm
