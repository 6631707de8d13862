#include "norm/stratify.hpp"

#include <algorithm>
#include <sstream>

namespace norm {

void DependencyGraph::add_arc(const PredicateKey& from, const PredicateKey& to,
                              const std::string& rule_id) {
    nodes.insert(from);
    nodes.insert(to);
    auto& prov = arcs[{from, to}];
    if (std::find(prov.begin(), prov.end(), rule_id) == prov.end()) prov.push_back(rule_id);
}

DependencyGraph build_graph(const Rulebase& rb) {
    DependencyGraph g;
    for (const auto& f : rb.facts) g.nodes.insert(predicate_key(f));
    for (const auto& r : rb.rules) {
        for (const auto& c : r.conclusions) {
            PredicateKey to = predicate_key(c);
            g.nodes.insert(to);
            for (const auto& p : r.premises) g.add_arc(predicate_key(p), to, r.id);
            for (const auto& j : r.justifications) g.add_arc(predicate_key(j), to, r.id);
        }
    }
    return g;
}

std::string to_string(const Cycle& c, const DependencyGraph* graph) {
    std::ostringstream os;
    for (std::size_t i = 0; i <= c.size(); ++i) {
        const PredicateKey& k = c[i % c.size()];
        if (i) os << " -> ";
        os << to_string(k);
        if (graph && i < c.size()) {
            auto it = graph->arcs.find({c[i], c[(i + 1) % c.size()]});
            if (it != graph->arcs.end() && !it->second.empty()) {
                os << " [";
                for (std::size_t j = 0; j < it->second.size(); ++j)
                    os << (j ? ", " : "") << it->second[j];
                os << "]";
            }
        }
    }
    return os.str();
}

namespace {

// Elementary-cycle enumeration: for each start node (in key order) walk only
// through nodes >= start, so every cycle is found once, anchored at its
// smallest node. Graphs here are small; a visit budget guards pathological
// inputs.
struct CycleSearch {
    const std::map<PredicateKey, std::vector<PredicateKey>>& adj;
    std::vector<Cycle>& out;
    std::size_t budget = 200000;
    std::size_t max_collect;
    PredicateKey start;
    std::vector<PredicateKey> path;
    std::set<PredicateKey> on_path;

    bool dfs(const PredicateKey& node) {
        if (budget-- == 0 || out.size() >= max_collect) return false;
        auto it = adj.find(node);
        if (it == adj.end()) return true;
        for (const auto& next : it->second) {
            if (next < start) continue;
            if (next == start) {
                out.push_back(path);
            } else if (!on_path.count(next)) {
                path.push_back(next);
                on_path.insert(next);
                bool ok = dfs(next);
                on_path.erase(next);
                path.pop_back();
                if (!ok) return false;
            }
        }
        return true;
    }
};

}  // namespace

std::vector<Cycle> find_cycles(const DependencyGraph& graph, std::size_t max_cycles) {
    std::map<PredicateKey, std::vector<PredicateKey>> adj;
    for (const auto& [arc, _] : graph.arcs) adj[arc.first].push_back(arc.second);

    std::vector<Cycle> found;
    for (const auto& node : graph.nodes) {
        CycleSearch search{adj, found, 200000, 4 * max_cycles, node, {node}, {node}};
        search.dfs(node);
        if (found.size() >= 4 * max_cycles) break;
    }
    std::sort(found.begin(), found.end(), [](const Cycle& a, const Cycle& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    if (found.size() > max_cycles) found.resize(max_cycles);
    return found;
}

CycleError::CycleError(std::vector<Cycle> cycles, const DependencyGraph& graph)
    : EngineError([&] {
          std::ostringstream os;
          os << "theory is not stratified; dependency cycle";
          if (cycles.size() > 1) os << "s";
          os << ":";
          for (const auto& c : cycles) os << "\n  " << to_string(c, &graph);
          return os.str();
      }()),
      cycles_(std::move(cycles)) {}

int Stratification::stratum(const PredicateKey& k) const {
    auto it = stratum_of.find(k);
    return it == stratum_of.end() ? 0 : it->second;
}

Stratification assign_strata(const DependencyGraph& graph) {
    std::map<PredicateKey, std::vector<PredicateKey>> adj;
    std::map<PredicateKey, int> indegree;
    for (const auto& n : graph.nodes) indegree[n] = 0;
    for (const auto& [arc, _] : graph.arcs) {
        adj[arc.first].push_back(arc.second);
        ++indegree[arc.second];
    }

    Stratification strat;
    std::vector<PredicateKey> ready;
    for (const auto& [n, deg] : indegree)
        if (deg == 0) {
            ready.push_back(n);
            strat.stratum_of[n] = 0;
        }

    std::size_t processed = 0;
    while (!ready.empty()) {
        PredicateKey n = ready.back();
        ready.pop_back();
        ++processed;
        int s = strat.stratum_of[n];
        strat.max_stratum = std::max(strat.max_stratum, s);
        for (const auto& succ : adj[n]) {
            auto [it, inserted] = strat.stratum_of.emplace(succ, s + 1);
            if (!inserted) it->second = std::max(it->second, s + 1);
            if (--indegree[succ] == 0) ready.push_back(succ);
        }
    }
    if (processed != graph.nodes.size()) {
        auto cycles = find_cycles(graph);
        throw CycleError(std::move(cycles), graph);
    }
    return strat;
}

Stratification stratify(const Rulebase& rb) {
    DependencyGraph g = build_graph(rb);
    Stratification strat = assign_strata(g);
    for (const auto& r : rb.rules) {
        int s = 0;
        for (const auto& c : r.conclusions) s = std::max(s, strat.stratum(predicate_key(c)));
        strat.rule_stratum[r.id] = s;
    }
    return strat;
}

std::vector<Violation> validate(const Rulebase& rb, const Stratification& strat) {
    std::vector<Violation> out;
    for (const auto& r : rb.rules) {
        Violation v{r.id, "", {}};
        auto check = [&](const Literal& body, const char* what) {
            PredicateKey bk = predicate_key(body);
            int bs = strat.stratum(bk);
            for (const auto& c : r.conclusions) {
                PredicateKey ck = predicate_key(c);
                int cs = strat.stratum(ck);
                if (bs >= cs) {
                    if (!v.message.empty()) v.message += "; ";
                    v.message += std::string(what) + " " + to_string(bk) + " (stratum " +
                                 std::to_string(bs) + ") does not precede conclusion " +
                                 to_string(ck) + " (stratum " + std::to_string(cs) + ")";
                    v.strata[bk] = bs;
                    v.strata[ck] = cs;
                }
            }
        };
        for (const auto& p : r.premises) check(p, "premise");
        for (const auto& j : r.justifications) check(j, "justification");
        if (!v.message.empty()) out.push_back(std::move(v));
    }
    return out;
}

std::vector<Warning> modality_lint(const Stratification& strat) {
    std::vector<Warning> out;
    auto extremes = [&](Modality m) {
        std::pair<const PredicateKey*, const PredicateKey*> minmax{nullptr, nullptr};
        for (const auto& [k, s] : strat.stratum_of) {
            if (k.modality != m) continue;
            if (!minmax.first || s < strat.stratum(*minmax.first)) minmax.first = &k;
            if (!minmax.second || s > strat.stratum(*minmax.second)) minmax.second = &k;
        }
        return minmax;
    };
    auto [fact_min, fact_max] = extremes(Modality::Fact);
    auto [duty_min, duty_max] = extremes(Modality::Duty);
    auto [cap_min, cap_max] = extremes(Modality::Capacity);

    auto report = [&](const PredicateKey& hi, const PredicateKey& lo, const char* msg) {
        Warning w{msg, {}};
        w.message += ": " + to_string(hi) + " (stratum " + std::to_string(strat.stratum(hi)) +
                     ") >= " + to_string(lo) + " (stratum " + std::to_string(strat.stratum(lo)) + ")";
        w.strata[hi] = strat.stratum(hi);
        w.strata[lo] = strat.stratum(lo);
        out.push_back(std::move(w));
    };
    if (fact_max && duty_min && strat.stratum(*fact_max) >= strat.stratum(*duty_min))
        report(*fact_max, *duty_min, "fact layer reaches into the duty layer");
    if (duty_max && cap_min && strat.stratum(*duty_max) >= strat.stratum(*cap_min))
        report(*duty_max, *cap_min, "duty layer reaches into the capacity layer");
    return out;
}

std::string export_dot(const DependencyGraph& graph, const Stratification* strat) {
    std::ostringstream os;
    os << "digraph dependencies {\n";
    os << "  rankdir=LR;\n";
    for (const auto& n : graph.nodes) {
        os << "  \"" << to_string(n) << "\"";
        if (strat) os << " [label=\"" << to_string(n) << "\\ns" << strat->stratum(n) << "\"]";
        os << ";\n";
    }
    for (const auto& [arc, rules] : graph.arcs) {
        os << "  \"" << to_string(arc.first) << "\" -> \"" << to_string(arc.second) << "\"";
        os << " [label=\"";
        for (std::size_t i = 0; i < rules.size(); ++i) os << (i ? "\\n" : "") << rules[i];
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace norm
