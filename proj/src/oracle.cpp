#include "norm/oracle.hpp"

#include <algorithm>

namespace norm {

namespace {

using LitSet = std::set<Literal>;

bool contains(const LitSet& s, const Literal& l) { return s.count(l) != 0; }

bool consistent(const LitSet& s) {
    for (const auto& l : s)
        if (l.positive && contains(s, complement(l))) return false;
    return true;
}

// Forward closure under the strict ground instances. Rule-style reading: a
// strict instance adds its conclusions once all premises are in the set.
LitSet strict_closure(LitSet base, const std::vector<const GroundInstance*>& stricts) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto* gi : stricts) {
            bool ok = true;
            for (const auto& p : gi->premises)
                if (!contains(base, p)) { ok = false; break; }
            if (!ok) continue;
            for (const auto& c : gi->conclusions)
                if (base.insert(c).second) changed = true;
        }
    }
    return base;
}

// The justifications a default requires to be consistent with the extension:
// its conclusion plus, for semi-normal defaults, the listed literals.
bool justifications_consistent(const GroundInstance& d, const LitSet& extension) {
    if (contains(extension, complement(d.conclusions.front()))) return false;
    for (const auto& j : d.justifications)
        if (contains(extension, complement(j))) return false;
    return true;
}

}  // namespace

OracleResult reiter_extensions(const Rulebase& rb, const std::vector<Literal>& facts,
                               const OracleOptions& opts) {
    std::vector<GroundInstance> instances = ground(rb, facts);
    if (instances.size() > opts.instance_cap)
        throw CapExceeded("oracle: " + std::to_string(instances.size()) +
                          " ground instances exceed the cap of " +
                          std::to_string(opts.instance_cap));

    std::vector<const GroundInstance*> stricts, defaults;
    for (const auto& gi : instances)
        (gi.kind == RuleKind::Strict ? stricts : defaults).push_back(&gi);

    LitSet world = [&] {
        LitSet w;
        for (const auto& f : rb.facts) w.insert(f);
        for (const auto& f : facts) w.insert(f);
        return w;
    }();

    OracleResult res;
    LitSet base = strict_closure(world, stricts);
    if (!consistent(base)) {
        res.inconsistent_base = true;
        res.extensions.push_back(std::move(base));
        return res;
    }

    // Optimistic closure: fire every default whose premises become derivable,
    // ignoring consistency. Any extension is a subset, so only defaults whose
    // premises fall inside it can ever be generating.
    LitSet optimistic = base;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto* d : defaults) {
            bool ok = true;
            for (const auto& p : d->premises)
                if (!contains(optimistic, p)) { ok = false; break; }
            if (!ok) continue;
            if (optimistic.insert(d->conclusions.front()).second) changed = true;
        }
        if (changed) optimistic = strict_closure(std::move(optimistic), stricts);
    }
    std::vector<const GroundInstance*> relevant;
    for (const auto* d : defaults) {
        bool ok = true;
        for (const auto& p : d->premises)
            if (!contains(optimistic, p)) { ok = false; break; }
        if (ok) relevant.push_back(d);
    }
    if (relevant.size() > opts.candidate_cap)
        throw CapExceeded("oracle: " + std::to_string(relevant.size()) +
                          " candidate defaults exceed the enumeration cap of " +
                          std::to_string(opts.candidate_cap));

    std::set<LitSet> seen;
    const std::size_t n = relevant.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        LitSet candidate = world;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) candidate.insert(relevant[i]->conclusions.front());
        candidate = strict_closure(std::move(candidate), stricts);
        if (!consistent(candidate)) continue;

        // Gamma(candidate): least set closed under the strict rules and the
        // defaults applicable with justifications checked against candidate.
        LitSet gamma = base;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < n; ++i) {
                const GroundInstance* d = relevant[i];
                if (!justifications_consistent(*d, candidate)) continue;
                bool ok = true;
                for (const auto& p : d->premises)
                    if (!contains(gamma, p)) { ok = false; break; }
                if (!ok) continue;
                if (gamma.insert(d->conclusions.front()).second) {
                    gamma = strict_closure(std::move(gamma), stricts);
                    grew = true;
                }
            }
        }
        if (gamma == candidate && seen.insert(candidate).second)
            res.extensions.push_back(std::move(candidate));
    }
    return res;
}

}  // namespace norm
