#pragma once

#include <set>
#include <vector>

#include "norm/engine.hpp"

namespace norm {

struct OracleOptions {
    std::size_t instance_cap = 2000;  // ground instances
    std::size_t candidate_cap = 22;   // defaults surviving the optimistic filter
};

struct OracleResult {
    // Every extension, as a sorted set of ground literals.
    std::vector<std::set<Literal>> extensions;
    // The strict part alone is contradictory; the single returned extension
    // is the inconsistent closure.
    bool inconsistent_base = false;
};

// Desk-scale brute-force enumeration of the Reiter extensions of the ground
// default theory: candidate generating sets are enumerated over the defaults
// whose premises survive an optimistic closure, and each candidate extension
// E is kept iff it reproduces itself through the generating-default fixed
// point (premises forward-derivable, conclusion and justifications
// consistent with E). Exponential by design; throws CapExceeded beyond the
// configured budgets.
OracleResult reiter_extensions(const Rulebase& rb, const std::vector<Literal>& facts,
                               const OracleOptions& opts = {});

}  // namespace norm
