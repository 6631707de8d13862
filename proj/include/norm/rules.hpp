#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "norm/model.hpp"

namespace norm {

enum class RuleKind { Strict, NormalDefault, SemiNormalDefault };

const char* rule_kind_name(RuleKind k);

// A rule schema. Strict rules may conclude a conjunction; defaults conclude
// exactly one literal. Justifications are only present on semi-normal
// defaults: a bare justification literal L requires complement(L) to stay
// underivable, so a '!'-prefixed one requires the positive form to stay out.
struct Rule {
    std::string id;  // file:line
    RuleKind kind = RuleKind::Strict;
    std::vector<Literal> premises;
    std::vector<Literal> conclusions;
    std::vector<Literal> justifications;
};

struct Rulebase {
    std::vector<Rule> rules;
    std::vector<Literal> facts;  // ground literals declared in rulebase files
    std::set<std::string> actions;
    std::set<std::pair<std::string, std::string>> cause_pot;  // (property symbol, action)
    IncompatibilityTable incompatibilities;

    // Appends other's rules, facts and tables; used to concatenate files.
    void merge(Rulebase other);
};

// Structural equality, ignoring rule ids and source positions.
bool structurally_equal(const Rule& a, const Rule& b);
bool structurally_equal(const Rulebase& a, const Rulebase& b);

}  // namespace norm
