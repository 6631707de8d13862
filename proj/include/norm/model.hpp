#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace norm {

// Modality of a literal. Fact is the plain truth predicate (Vrai), Duty the
// obligation modality (Doit), Capacity the ability modality (EnMesure).
enum class Modality { Fact, Duty, Capacity };

const char* modality_name(Modality m);  // "Vrai" / "Doit" / "EnMesure"

class Property;

// A term fills the agent slot of a literal or the argument slot of Combine.
// Agent constants are written quoted ("V"); bare identifiers that are not
// variables are symbol constants (arriere, Rouge); a property may itself be
// used as an argument (e.g. the effect slot of a Disponible literal).
class Term {
public:
    enum class Kind { Agent, Symbol, Var, Prop };

    static Term agent(std::string name);
    static Term symbol(std::string name);
    static Term var(std::string name);
    static Term prop(Property p);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; }  // Agent/Symbol/Var only
    const Property& property() const;                  // Prop only

    bool is_ground() const;

private:
    Term(Kind k, std::string name) : kind_(k), name_(std::move(name)) {}
    explicit Term(std::shared_ptr<const Property> p);

    Kind kind_;
    std::string name_;
    std::shared_ptr<const Property> prop_;
};

int compare(const Term& a, const Term& b);
bool operator==(const Term& a, const Term& b);
bool operator!=(const Term& a, const Term& b);
bool operator<(const Term& a, const Term& b);

// A property term: simple symbol, negated property, or Combine-composed
// property. Construction is normalizing: neg(neg(p)) collapses to p, so a
// normalized property never contains a double negation.
class Property {
public:
    enum class Kind { Simple, Neg, Combine };

    static Property simple(std::string symbol);
    static Property neg(Property inner);
    static Property combine(Property head, Term arg);

    Kind kind() const;
    const std::string& symbol() const;   // Simple only
    Property inner() const;              // Neg only
    Property head() const;               // Combine only
    const Term& arg() const;             // Combine only

    // Total: the symbol reached by skipping Neg and following Combine heads.
    const std::string& head_symbol() const;

    bool is_ground() const;

private:
    struct Node;
    explicit Property(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

int compare(const Property& a, const Property& b);
bool operator==(const Property& a, const Property& b);
bool operator!=(const Property& a, const Property& b);
bool operator<(const Property& a, const Property& b);

// Re-canonicalizes a property bottom-up. Construction already maintains the
// normal form, so this is idempotent and mostly useful as documentation.
Property normalize(const Property& p);

// A time expression: an integer instant, or a time variable with a signed
// offset (T, T-1, T+2). Instants are positive integers; grounding drops
// instances whose evaluated time falls outside the scenario horizon.
struct TimeExpr {
    std::string var;  // empty for a constant
    int offset = 0;

    static TimeExpr constant(int t) { return TimeExpr{"", t}; }
    static TimeExpr variable(std::string v, int off = 0) { return TimeExpr{std::move(v), off}; }

    bool is_ground() const { return var.empty(); }
    int value() const;  // ground only
};

int compare(const TimeExpr& a, const TimeExpr& b);
bool operator==(const TimeExpr& a, const TimeExpr& b);
bool operator<(const TimeExpr& a, const TimeExpr& b);

// The atomic unit of facts and rule bodies. Construction normalizes per the
// neg axiom: a positive literal on neg(p) is stored as the negative literal
// on p, and vice versa, so the two encodings are indistinguishable.
struct Literal {
    Literal(bool positive, Modality modality, Property property, Term agent, TimeExpr time);

    bool positive;
    Modality modality;
    Property property;  // never Neg at top level
    Term agent;
    TimeExpr time;

    bool is_ground() const;
};

int compare(const Literal& a, const Literal& b);
bool operator==(const Literal& a, const Literal& b);
bool operator!=(const Literal& a, const Literal& b);
bool operator<(const Literal& a, const Literal& b);

// Canonical opposite: same atom, flipped polarity.
Literal complement(const Literal& lit);

// Stratification identity of a literal: modality plus head symbol. Combine
// arguments, negation and time are deliberately abstracted away.
struct PredicateKey {
    Modality modality;
    std::string symbol;

    auto operator<=>(const PredicateKey&) const = default;
};

PredicateKey predicate_key(const Literal& lit);
PredicateKey predicate_key(Modality m, const Property& p);
std::string to_string(const PredicateKey& k);

// Declared incompatibilities beyond the built-in (p, neg(p)) pairs. Entries
// are property patterns; variables inside a pair bind consistently.
struct IncompatibilityTable {
    std::vector<std::pair<Property, Property>> extra;

    void add(Property a, Property b) { extra.emplace_back(std::move(a), std::move(b)); }
};

// True iff q is the negation of p or the pair matches a declared entry (in
// either order). p and q are expected ground and normalized.
bool incompatible(const Property& p, const Property& q, const IncompatibilityTable& table);

// Substitution application. Term variables map to ground terms, time
// variables to instants; unmapped variables are left in place.
Term substitute(const Term& t, const std::map<std::string, Term>& terms);
Property substitute(const Property& p, const std::map<std::string, Term>& terms);
TimeExpr substitute(const TimeExpr& t, const std::map<std::string, int>& times);
Literal substitute(const Literal& lit, const std::map<std::string, Term>& terms,
                   const std::map<std::string, int>& times);

// Variable occurrences of a literal. Variables seen in the agent slot are
// also reported separately: they range over agents only when grounding.
struct VarOccurrences {
    std::set<std::string> term_vars;
    std::set<std::string> agent_slot_vars;
    std::set<std::string> time_vars;
};
void collect_vars(const Literal& lit, VarOccurrences& out);

// Ground constants of a literal, used to build grounding domains.
void collect_constants(const Literal& lit, std::set<std::string>& agents,
                       std::set<std::string>& symbols);

// Concrete-syntax rendering (the .rules / .facts form).
std::string to_string(const Term& t);
std::string to_string(const Property& p);
std::string to_string(const TimeExpr& t);
std::string to_string(const Literal& lit);

// S-expression rendering of a property, used in JSON output.
std::string sexpr(const Property& p);

}  // namespace norm
