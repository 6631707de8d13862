#include "norm/model.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace norm {

const char* modality_name(Modality m) {
    switch (m) {
        case Modality::Fact: return "Vrai";
        case Modality::Duty: return "Doit";
        case Modality::Capacity: return "EnMesure";
    }
    return "?";
}

// ---------------------------------------------------------------- Term

Term Term::agent(std::string name) { return Term(Kind::Agent, std::move(name)); }
Term Term::symbol(std::string name) { return Term(Kind::Symbol, std::move(name)); }
Term Term::var(std::string name) { return Term(Kind::Var, std::move(name)); }

Term::Term(std::shared_ptr<const Property> p) : kind_(Kind::Prop), prop_(std::move(p)) {}

Term Term::prop(Property p) {
    return Term(std::make_shared<const Property>(std::move(p)));
}

const Property& Term::property() const {
    assert(kind_ == Kind::Prop);
    return *prop_;
}

bool Term::is_ground() const {
    switch (kind_) {
        case Kind::Var: return false;
        case Kind::Prop: return prop_->is_ground();
        default: return true;
    }
}

int compare(const Term& a, const Term& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    if (a.kind() == Term::Kind::Prop) return compare(a.property(), b.property());
    return a.name().compare(b.name());
}

bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
bool operator!=(const Term& a, const Term& b) { return compare(a, b) != 0; }
bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

// ------------------------------------------------------------ Property

struct Property::Node {
    Kind kind;
    std::string symbol;                    // Simple
    std::shared_ptr<const Node> child;     // Neg inner / Combine head
    std::optional<Term> arg;               // Combine
};

Property Property::simple(std::string symbol) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Simple;
    n->symbol = std::move(symbol);
    return Property(std::move(n));
}

Property Property::neg(Property inner) {
    if (inner.kind() == Kind::Neg) return inner.inner();  // neg(neg(p)) = p
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->child = inner.node_;
    return Property(std::move(n));
}

Property Property::combine(Property head, Term arg) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Combine;
    n->child = head.node_;
    n->arg = std::move(arg);
    return Property(std::move(n));
}

Property::Kind Property::kind() const { return node_->kind; }

const std::string& Property::symbol() const {
    assert(kind() == Kind::Simple);
    return node_->symbol;
}

Property Property::inner() const {
    assert(kind() == Kind::Neg);
    return Property(node_->child);
}

Property Property::head() const {
    assert(kind() == Kind::Combine);
    return Property(node_->child);
}

const Term& Property::arg() const {
    assert(kind() == Kind::Combine);
    return *node_->arg;
}

const std::string& Property::head_symbol() const {
    const Node* n = node_.get();
    while (n->kind != Kind::Simple) n = n->child.get();
    return n->symbol;
}

bool Property::is_ground() const {
    switch (kind()) {
        case Kind::Simple: return true;
        case Kind::Neg: return inner().is_ground();
        case Kind::Combine: return head().is_ground() && arg().is_ground();
    }
    return true;
}

int compare(const Property& a, const Property& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case Property::Kind::Simple:
            return a.symbol().compare(b.symbol());
        case Property::Kind::Neg:
            return compare(a.inner(), b.inner());
        case Property::Kind::Combine: {
            int c = compare(a.head(), b.head());
            if (c != 0) return c;
            return compare(a.arg(), b.arg());
        }
    }
    return 0;
}

bool operator==(const Property& a, const Property& b) { return compare(a, b) == 0; }
bool operator!=(const Property& a, const Property& b) { return compare(a, b) != 0; }
bool operator<(const Property& a, const Property& b) { return compare(a, b) < 0; }

Property normalize(const Property& p) {
    switch (p.kind()) {
        case Property::Kind::Simple: return p;
        case Property::Kind::Neg: return Property::neg(normalize(p.inner()));
        case Property::Kind::Combine: {
            const Term& a = p.arg();
            Term arg = a.kind() == Term::Kind::Prop ? Term::prop(normalize(a.property())) : a;
            return Property::combine(normalize(p.head()), std::move(arg));
        }
    }
    return p;
}

// ------------------------------------------------------------ TimeExpr

int TimeExpr::value() const {
    assert(is_ground());
    return offset;
}

int compare(const TimeExpr& a, const TimeExpr& b) {
    int c = a.var.compare(b.var);
    if (c != 0) return c < 0 ? -1 : 1;
    if (a.offset != b.offset) return a.offset < b.offset ? -1 : 1;
    return 0;
}

bool operator==(const TimeExpr& a, const TimeExpr& b) { return compare(a, b) == 0; }
bool operator<(const TimeExpr& a, const TimeExpr& b) { return compare(a, b) < 0; }

// ------------------------------------------------------------- Literal

Literal::Literal(bool pos, Modality m, Property prop, Term ag, TimeExpr t)
    : positive(pos), modality(m), property(std::move(prop)), agent(std::move(ag)), time(std::move(t)) {
    while (property.kind() == Property::Kind::Neg) {
        positive = !positive;
        property = property.inner();
    }
}

bool Literal::is_ground() const {
    return property.is_ground() && agent.is_ground() && time.is_ground();
}

int compare(const Literal& a, const Literal& b) {
    if (a.modality != b.modality) return a.modality < b.modality ? -1 : 1;
    int c = compare(a.property, b.property);
    if (c != 0) return c;
    c = compare(a.agent, b.agent);
    if (c != 0) return c;
    c = compare(a.time, b.time);
    if (c != 0) return c;
    if (a.positive != b.positive) return a.positive ? 1 : -1;
    return 0;
}

bool operator==(const Literal& a, const Literal& b) { return compare(a, b) == 0; }
bool operator!=(const Literal& a, const Literal& b) { return compare(a, b) != 0; }
bool operator<(const Literal& a, const Literal& b) { return compare(a, b) < 0; }

Literal complement(const Literal& lit) {
    Literal out = lit;
    out.positive = !out.positive;
    return out;
}

PredicateKey predicate_key(const Literal& lit) {
    return PredicateKey{lit.modality, lit.property.head_symbol()};
}

PredicateKey predicate_key(Modality m, const Property& p) {
    return PredicateKey{m, p.head_symbol()};
}

std::string to_string(const PredicateKey& k) {
    return std::string(modality_name(k.modality)) + ":" + k.symbol;
}

// ----------------------------------------------------- incompatibility

namespace {

using Bindings = std::map<std::string, Term>;

bool match_term(const Term& pat, const Term& ground, Bindings& b);

bool match_property(const Property& pat, const Property& ground, Bindings& b) {
    if (pat.kind() != ground.kind()) return false;
    switch (pat.kind()) {
        case Property::Kind::Simple:
            return pat.symbol() == ground.symbol();
        case Property::Kind::Neg:
            return match_property(pat.inner(), ground.inner(), b);
        case Property::Kind::Combine:
            return match_property(pat.head(), ground.head(), b) &&
                   match_term(pat.arg(), ground.arg(), b);
    }
    return false;
}

bool match_term(const Term& pat, const Term& ground, Bindings& b) {
    if (pat.kind() == Term::Kind::Var) {
        auto it = b.find(pat.name());
        if (it != b.end()) return it->second == ground;
        b.emplace(pat.name(), ground);
        return true;
    }
    if (pat.kind() != ground.kind()) return false;
    if (pat.kind() == Term::Kind::Prop) {
        Bindings saved = b;
        if (match_property(pat.property(), ground.property(), b)) return true;
        b = saved;
        return false;
    }
    return pat.name() == ground.name();
}

bool match_pair(const Property& p1, const Property& p2, const Property& g1, const Property& g2) {
    Bindings b;
    return match_property(p1, g1, b) && match_property(p2, g2, b);
}

}  // namespace

bool incompatible(const Property& p, const Property& q, const IncompatibilityTable& table) {
    if (Property::neg(p) == q) return true;  // covers q = neg(p) and p = neg(q)
    for (const auto& [a, b] : table.extra) {
        if (match_pair(a, b, p, q) || match_pair(a, b, q, p)) return true;
    }
    return false;
}

// --------------------------------------------------------- substitution

Term substitute(const Term& t, const std::map<std::string, Term>& terms) {
    switch (t.kind()) {
        case Term::Kind::Var: {
            auto it = terms.find(t.name());
            return it == terms.end() ? t : it->second;
        }
        case Term::Kind::Prop:
            return Term::prop(substitute(t.property(), terms));
        default:
            return t;
    }
}

Property substitute(const Property& p, const std::map<std::string, Term>& terms) {
    switch (p.kind()) {
        case Property::Kind::Simple: return p;
        case Property::Kind::Neg: return Property::neg(substitute(p.inner(), terms));
        case Property::Kind::Combine:
            return Property::combine(substitute(p.head(), terms), substitute(p.arg(), terms));
    }
    return p;
}

TimeExpr substitute(const TimeExpr& t, const std::map<std::string, int>& times) {
    if (t.is_ground()) return t;
    auto it = times.find(t.var);
    if (it == times.end()) return t;
    return TimeExpr::constant(it->second + t.offset);
}

Literal substitute(const Literal& lit, const std::map<std::string, Term>& terms,
                   const std::map<std::string, int>& times) {
    return Literal(lit.positive, lit.modality, substitute(lit.property, terms),
                   substitute(lit.agent, terms), substitute(lit.time, times));
}

// ------------------------------------------------------ var collection

namespace {

void collect_term_vars(const Term& t, std::set<std::string>& vars);

void collect_prop_vars(const Property& p, std::set<std::string>& vars) {
    switch (p.kind()) {
        case Property::Kind::Simple: return;
        case Property::Kind::Neg: collect_prop_vars(p.inner(), vars); return;
        case Property::Kind::Combine:
            collect_prop_vars(p.head(), vars);
            collect_term_vars(p.arg(), vars);
            return;
    }
}

void collect_term_vars(const Term& t, std::set<std::string>& vars) {
    if (t.kind() == Term::Kind::Var) vars.insert(t.name());
    else if (t.kind() == Term::Kind::Prop) collect_prop_vars(t.property(), vars);
}

void collect_term_consts(const Term& t, std::set<std::string>& agents, std::set<std::string>& symbols);

void collect_prop_consts(const Property& p, std::set<std::string>& agents, std::set<std::string>& symbols) {
    switch (p.kind()) {
        case Property::Kind::Simple: return;
        case Property::Kind::Neg: collect_prop_consts(p.inner(), agents, symbols); return;
        case Property::Kind::Combine:
            collect_prop_consts(p.head(), agents, symbols);
            collect_term_consts(p.arg(), agents, symbols);
            return;
    }
}

void collect_term_consts(const Term& t, std::set<std::string>& agents, std::set<std::string>& symbols) {
    switch (t.kind()) {
        case Term::Kind::Agent: agents.insert(t.name()); return;
        case Term::Kind::Symbol: symbols.insert(t.name()); return;
        case Term::Kind::Prop: collect_prop_consts(t.property(), agents, symbols); return;
        case Term::Kind::Var: return;
    }
}

}  // namespace

void collect_vars(const Literal& lit, VarOccurrences& out) {
    collect_prop_vars(lit.property, out.term_vars);
    collect_term_vars(lit.agent, out.term_vars);
    if (lit.agent.kind() == Term::Kind::Var) out.agent_slot_vars.insert(lit.agent.name());
    if (!lit.time.is_ground()) out.time_vars.insert(lit.time.var);
}

void collect_constants(const Literal& lit, std::set<std::string>& agents,
                       std::set<std::string>& symbols) {
    collect_prop_consts(lit.property, agents, symbols);
    collect_term_consts(lit.agent, agents, symbols);
}

// ------------------------------------------------------------ rendering

std::string to_string(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Agent: return "\"" + t.name() + "\"";
        case Term::Kind::Prop: return to_string(t.property());
        default: return t.name();
    }
}

std::string to_string(const Property& p) {
    switch (p.kind()) {
        case Property::Kind::Simple: return p.symbol();
        case Property::Kind::Neg: return "neg(" + to_string(p.inner()) + ")";
        case Property::Kind::Combine:
            return "Combine(" + to_string(p.head()) + "," + to_string(p.arg()) + ")";
    }
    return "?";
}

std::string to_string(const TimeExpr& t) {
    if (t.is_ground()) return std::to_string(t.offset);
    if (t.offset == 0) return t.var;
    std::ostringstream os;
    os << t.var << (t.offset > 0 ? "+" : "-") << std::abs(t.offset);
    return os.str();
}

std::string to_string(const Literal& lit) {
    std::string s = lit.positive ? "" : "!";
    s += modality_name(lit.modality);
    s += "(" + to_string(lit.property) + "," + to_string(lit.agent) + "," + to_string(lit.time) + ")";
    return s;
}

std::string sexpr(const Property& p) {
    switch (p.kind()) {
        case Property::Kind::Simple: return p.symbol();
        case Property::Kind::Neg: return "(neg " + sexpr(p.inner()) + ")";
        case Property::Kind::Combine: {
            const Term& a = p.arg();
            std::string arg = a.kind() == Term::Kind::Prop ? sexpr(a.property()) : to_string(a);
            return "(Combine " + sexpr(p.head()) + " " + arg + ")";
        }
    }
    return "?";
}

}  // namespace norm
