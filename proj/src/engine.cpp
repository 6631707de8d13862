#include "norm/engine.hpp"

#include <algorithm>
#include <sstream>

namespace norm {

std::string Substitution::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [v, t] : terms) {
        os << (first ? "" : ", ") << v << "=" << to_string(t);
        first = false;
    }
    for (const auto& [v, t] : times) {
        os << (first ? "" : ", ") << v << "=" << t;
        first = false;
    }
    os << "}";
    return os.str();
}

std::string Provenance::str() const {
    switch (kind) {
        case Kind::Fact: return "fact " + source;
        case Kind::Rule: return "rule " + source + " " + subst.str();
        case Kind::Capacity: return source;
    }
    return "?";
}

const char* truth_name(Truth t) {
    switch (t) {
        case Truth::True: return "true";
        case Truth::False: return "false";
        case Truth::Unknown: return "unknown";
    }
    return "?";
}

// ------------------------------------------------------------- grounding

namespace {

Literal atom_of(const Literal& lit) {
    Literal a = lit;
    a.positive = true;
    return a;
}

struct RuleVars {
    std::vector<std::string> agent_vars;  // range over agents only
    std::vector<std::string> term_vars;   // range over agents and symbols
    std::vector<std::string> time_vars;
};

RuleVars rule_vars(const Rule& r) {
    VarOccurrences occ;
    for (const auto& l : r.premises) collect_vars(l, occ);
    for (const auto& l : r.conclusions) collect_vars(l, occ);
    for (const auto& l : r.justifications) collect_vars(l, occ);
    RuleVars rv;
    for (const auto& v : occ.term_vars) {
        if (occ.agent_slot_vars.count(v)) rv.agent_vars.push_back(v);
        else rv.term_vars.push_back(v);
    }
    rv.time_vars.assign(occ.time_vars.begin(), occ.time_vars.end());
    return rv;
}

bool times_within(const GroundInstance& gi, int tmax) {
    auto ok = [&](const std::vector<Literal>& lits) {
        for (const auto& l : lits) {
            int t = l.time.value();
            if (t < 1 || t > tmax) return false;
        }
        return true;
    };
    return ok(gi.premises) && ok(gi.conclusions) && ok(gi.justifications);
}

}  // namespace

std::vector<GroundInstance> ground(const Rulebase& rb, const std::vector<Literal>& facts) {
    std::vector<Literal> all_facts = rb.facts;
    all_facts.insert(all_facts.end(), facts.begin(), facts.end());
    if (all_facts.empty()) throw EmptyScenario("no facts: the scenario horizon is undefined");

    int tmax = 1;
    std::set<std::string> agents, symbols;
    for (const auto& f : all_facts) {
        tmax = std::max(tmax, f.time.value());
        collect_constants(f, agents, symbols);
    }
    for (const auto& r : rb.rules) {
        for (const auto& l : r.premises) collect_constants(l, agents, symbols);
        for (const auto& l : r.conclusions) collect_constants(l, agents, symbols);
        for (const auto& l : r.justifications) collect_constants(l, agents, symbols);
    }

    std::vector<Term> agent_domain, term_domain;
    for (const auto& a : agents) {
        agent_domain.push_back(Term::agent(a));
        term_domain.push_back(Term::agent(a));
    }
    for (const auto& s : symbols) term_domain.push_back(Term::symbol(s));

    std::vector<GroundInstance> out;
    for (std::size_t ri = 0; ri < rb.rules.size(); ++ri) {
        const Rule& r = rb.rules[ri];
        RuleVars rv = rule_vars(r);

        Substitution subst;
        std::function<void(std::size_t, std::size_t, std::size_t)> enumerate =
            [&](std::size_t ai, std::size_t ti, std::size_t hi) {
                if (ai < rv.agent_vars.size()) {
                    for (const auto& t : agent_domain) {
                        subst.terms.insert_or_assign(rv.agent_vars[ai], t);
                        enumerate(ai + 1, ti, hi);
                    }
                    return;
                }
                if (ti < rv.term_vars.size()) {
                    for (const auto& t : term_domain) {
                        subst.terms.insert_or_assign(rv.term_vars[ti], t);
                        enumerate(ai, ti + 1, hi);
                    }
                    return;
                }
                if (hi < rv.time_vars.size()) {
                    for (int t = 1; t <= tmax; ++t) {
                        subst.times.insert_or_assign(rv.time_vars[hi], t);
                        enumerate(ai, ti, hi + 1);
                    }
                    return;
                }
                GroundInstance gi;
                gi.rule_index = ri;
                gi.rule_id = r.id;
                gi.kind = r.kind;
                gi.subst = subst;
                for (const auto& l : r.premises)
                    gi.premises.push_back(substitute(l, subst.terms, subst.times));
                for (const auto& l : r.conclusions)
                    gi.conclusions.push_back(substitute(l, subst.terms, subst.times));
                for (const auto& l : r.justifications)
                    gi.justifications.push_back(substitute(l, subst.terms, subst.times));
                if (times_within(gi, tmax)) out.push_back(std::move(gi));
            };
        enumerate(0, 0, 0);
    }
    return out;
}

// ------------------------------------------------------------ WorldStore

ConflictError::ConflictError(const Literal& a, const Provenance& pa, const Literal& b,
                             const Provenance& pb)
    : EngineError("conflict: " + to_string(a) + " (" + pa.str() + ") contradicts " + to_string(b) +
                  " (" + pb.str() + "); the theory has no unique extension"),
      a_(a), b_(b), pa_(pa), pb_(pb) {}

Truth WorldStore::query(const Literal& lit) const {
    auto it = entries_.find(atom_of(lit));
    if (it == entries_.end()) return Truth::Unknown;
    return it->second.value == lit.positive ? Truth::True : Truth::False;
}

std::optional<WorldStore::Entry> WorldStore::lookup(const Literal& lit) const {
    auto it = entries_.find(atom_of(lit));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

bool WorldStore::insert(const Literal& lit, Provenance prov) {
    Literal atom = atom_of(lit);
    auto it = entries_.find(atom);
    if (it != entries_.end()) {
        if (it->second.value != lit.positive)
            throw ConflictError(lit, prov, it->second.value ? atom : complement(atom),
                                it->second.provenance);
        return false;
    }
    entries_.emplace(atom, Entry{atom, lit.positive, std::move(prov)});
    return true;
}

std::vector<Literal> WorldStore::literals() const {
    std::vector<Literal> out;
    out.reserve(entries_.size());
    for (const auto& [atom, e] : entries_) out.push_back(e.value ? atom : complement(atom));
    return out;
}

bool WorldStore::same_valuation(const WorldStore& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    auto it = other.entries_.begin();
    for (const auto& [atom, e] : entries_) {
        if (it->first != atom || it->second.value != e.value) return false;
        ++it;
    }
    return true;
}

bool WorldStore::operator==(const WorldStore& other) const {
    if (entries_.size() != other.entries_.size()) return false;
    auto it = other.entries_.begin();
    for (const auto& [atom, e] : entries_) {
        if (it->first != atom || it->second.value != e.value ||
            !(it->second.provenance == e.provenance))
            return false;
        ++it;
    }
    return true;
}

// ------------------------------------------------------------ saturation

namespace {

bool premises_hold(const WorldStore& store, const GroundInstance& gi) {
    for (const auto& p : gi.premises)
        if (store.query(p) != Truth::True) return false;
    return true;
}

// A default is applicable when its premises hold and its conclusion plus
// every justification literal is consistent with the store: none of their
// complements may be established.
bool default_applicable(const WorldStore& store, const GroundInstance& gi) {
    if (!premises_hold(store, gi)) return false;
    if (store.query(complement(gi.conclusions.front())) == Truth::True) return false;
    for (const auto& j : gi.justifications)
        if (store.query(complement(j)) == Truth::True) return false;
    return true;
}

}  // namespace

SaturationResult saturate(const Rulebase& rb, const std::vector<Literal>& facts,
                          const Stratification& strat) {
    SaturationResult res;

    std::vector<Literal> all_facts = rb.facts;
    all_facts.insert(all_facts.end(), facts.begin(), facts.end());
    for (std::size_t i = 0; i < all_facts.size(); ++i)
        res.store.insert(all_facts[i], Provenance{Provenance::Kind::Fact,
                                                  "#" + std::to_string(i + 1), {}});

    std::vector<GroundInstance> instances = ground(rb, facts);

    // Work items: strict instances contribute one item per conclusion so that
    // each literal is deposited while its own stratum is processed; defaults
    // contribute a single item at their conclusion's stratum.
    struct Item {
        const GroundInstance* gi;
        std::size_t conclusion;
        bool fired = false;
    };
    std::map<int, std::vector<Item>> strict_items, default_items;
    int max_stratum = strat.max_stratum;
    for (const auto& gi : instances) {
        if (gi.kind == RuleKind::Strict) {
            for (std::size_t c = 0; c < gi.conclusions.size(); ++c) {
                int s = strat.stratum(predicate_key(gi.conclusions[c]));
                strict_items[s].push_back(Item{&gi, c});
                max_stratum = std::max(max_stratum, s);
            }
        } else {
            int s = strat.stratum(predicate_key(gi.conclusions.front()));
            default_items[s].push_back(Item{&gi, 0});
            max_stratum = std::max(max_stratum, s);
        }
    }

    auto guard_stratum = [&](const Literal& lit, int s) {
        if (strat.stratum(predicate_key(lit)) != s)
            throw EngineError("internal: literal " + to_string(lit) +
                              " written outside its stratum");
    };

    for (int s = 0; s <= max_stratum; ++s) {
        auto& stricts = strict_items[s];
        for (auto& item : stricts) {
            if (!premises_hold(res.store, *item.gi)) continue;
            item.fired = true;
            const Literal& concl = item.gi->conclusions[item.conclusion];
            guard_stratum(concl, s);
            res.store.insert(concl, Provenance{Provenance::Kind::Rule, item.gi->rule_id,
                                               item.gi->subst});
            res.trace.events.push_back(TraceEvent{s, item.gi->rule_id, item.gi->subst, concl});
        }
        // Premises live strictly below the conclusion stratum, so nothing
        // fired here may enable a sibling; verify.
        for (const auto& item : stricts)
            if (!item.fired && premises_hold(res.store, *item.gi))
                throw EngineError("internal: intra-stratum enablement by rule " +
                                  item.gi->rule_id);

        // Defaults are decided against the end-of-strict-phase snapshot and
        // committed together; complementary pending conclusions mean the
        // theory has several extensions.
        std::vector<const GroundInstance*> pending;
        for (const auto& item : default_items[s])
            if (default_applicable(res.store, *item.gi)) pending.push_back(item.gi);
        for (std::size_t i = 0; i < pending.size(); ++i) {
            for (std::size_t j = i + 1; j < pending.size(); ++j) {
                const Literal& a = pending[i]->conclusions.front();
                const Literal& b = pending[j]->conclusions.front();
                if (a == complement(b))
                    throw ConflictError(
                        a, Provenance{Provenance::Kind::Rule, pending[i]->rule_id, pending[i]->subst},
                        b, Provenance{Provenance::Kind::Rule, pending[j]->rule_id, pending[j]->subst});
            }
        }
        for (const GroundInstance* gi : pending) {
            const Literal& concl = gi->conclusions.front();
            guard_stratum(concl, s);
            res.store.insert(concl, Provenance{Provenance::Kind::Rule, gi->rule_id, gi->subst});
            res.trace.events.push_back(TraceEvent{s, gi->rule_id, gi->subst, concl});
        }
    }
    return res;
}

Truth query(const WorldStore& store, const Literal& lit) { return store.query(lit); }

WorldStore replay(const std::vector<Literal>& facts, const Trace& trace) {
    WorldStore store;
    for (std::size_t i = 0; i < facts.size(); ++i)
        store.insert(facts[i], Provenance{Provenance::Kind::Fact, "#" + std::to_string(i + 1), {}});
    for (const auto& ev : trace.events) {
        Provenance prov;
        if (ev.rule_id.rfind("capacity", 0) == 0)
            prov = Provenance{Provenance::Kind::Capacity, ev.rule_id, ev.subst};
        else
            prov = Provenance{Provenance::Kind::Rule, ev.rule_id, ev.subst};
        store.insert(ev.produced, std::move(prov));
    }
    return store;
}

}  // namespace norm
