#include "dlapprox/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "dlapprox/approx.hpp"
#include "dlapprox/errors.hpp"

#include "json.hpp"

namespace dla {

namespace {

struct Node {
    Bits types;
    // edges: role -> successor node ids (subset-minimal choices)
    std::map<std::string, std::vector<int>> edges;
};

struct Graph {
    std::vector<Node> nodes;
    std::map<std::string, int> byKey;

    int intern(const Bits& b) {
        std::string key;
        b.forEach([&](std::size_t i) { key += std::to_string(i) + ","; });
        auto it = byKey.find(key);
        if (it != byKey.end()) return it->second;
        int id = static_cast<int>(nodes.size());
        nodes.push_back({b, {}});
        byKey.emplace(key, id);
        return id;
    }
};

// All subset-minimal unions of one witness set per type of X (per role).
std::vector<Bits> successorSets(Reasoner& R, const Bits& x, const std::string& role,
                                std::size_t cap) {
    std::vector<std::size_t> members;
    x.forEach([&](std::size_t t) { members.push_back(t); });
    // every member must claim an existential on this role
    for (auto t : members)
        if (!R.typeClaims(t, role)) return {};
    std::vector<Bits> acc{Bits(R.typeCount())};
    for (auto t : members) {
        std::vector<Bits> options;
        for (int e : R.existClaimsOf(t, role)) {
            Bits w = R.witnessesFor(t, role, e);
            if (w.none()) return {}; // cannot happen for surviving types
            options.push_back(std::move(w));
        }
        std::vector<Bits> next;
        std::set<std::string> seen;
        for (auto& a : acc)
            for (auto& o : options) {
                Bits u = a;
                u |= o;
                std::string key;
                u.forEach([&](std::size_t i) { key += std::to_string(i) + ","; });
                if (seen.insert(key).second) next.push_back(std::move(u));
                if (next.size() > cap)
                    throw ResourceError("type-set choice budget exceeded");
            }
        acc = std::move(next);
    }
    // subset-minimal only: smaller successor sets dominate larger ones
    std::sort(acc.begin(), acc.end(),
              [](const Bits& a, const Bits& b) { return a.count() < b.count(); });
    std::vector<Bits> minimal;
    for (auto& u : acc) {
        bool dominated = false;
        for (auto& m : minimal)
            if (m.subsetOf(u)) { dominated = true; break; }
        if (!dominated) minimal.push_back(u);
    }
    return minimal;
}

struct FoundCycle {
    std::vector<std::string> prefix;
    std::vector<std::string> cycle;
};

struct Search {
    Reasoner& R;
    Graph g;
    const AnalysisCaps& caps;
    std::vector<int> state;       // 0 unseen, 1 on stack, 2 done
    std::vector<int> longest;     // longest path from node (when acyclic)
    std::vector<std::pair<std::string, int>> stackEdges; // edge role + target node
    std::optional<FoundCycle> foundCycle;

    explicit Search(Reasoner& r, const AnalysisCaps& c) : R(r), caps(c) {}

    void ensure(std::size_t n) {
        if (state.size() < n) {
            state.resize(n, 0);
            longest.resize(n, 0);
        }
    }

    void expand(int id) {
        if (!g.nodes[id].edges.empty()) return;
        for (auto& role : R.roles()) {
            std::vector<Bits> succs = successorSets(R, g.nodes[id].types, role,
                                                    caps.maxChoiceSets);
            for (auto& s : succs) {
                if (s.none()) continue;
                int sid = g.intern(s);
                if (g.nodes.size() > caps.maxNodes)
                    throw ResourceError("type-set node budget exceeded");
                g.nodes[id].edges[role].push_back(sid);
            }
        }
    }

    void recordCycle(int id) {
        // stackEdges ends with the edge back into id. The cycle starts right
        // after the first time id was entered (or at the path start when id
        // is the DFS root).
        FoundCycle fc;
        std::size_t cycleFrom = 0;
        for (std::size_t i = 0; i + 1 < stackEdges.size(); ++i)
            if (stackEdges[i].second == id) { cycleFrom = i + 1; break; }
        for (std::size_t i = 0; i < stackEdges.size(); ++i) {
            if (i < cycleFrom)
                fc.prefix.push_back(stackEdges[i].first);
            else
                fc.cycle.push_back(stackEdges[i].first);
        }
        foundCycle = fc;
    }

    // Longest path length from id; stops when a reachable cycle is found.
    int dfs(int id) {
        if (foundCycle) return 0;
        ensure(g.nodes.size());
        if (state[id] == 2) return longest[id];
        if (state[id] == 1) {
            recordCycle(id);
            return 0;
        }
        state[id] = 1;
        expand(id);
        ensure(g.nodes.size());
        int best = 0;
        for (auto& [role, succs] : g.nodes[id].edges) {
            for (int s : succs) {
                stackEdges.push_back({role, s});
                int len = 1 + dfs(s);
                stackEdges.pop_back();
                if (foundCycle) return 0;
                best = std::max(best, len);
            }
        }
        state[id] = 2;
        longest[id] = best;
        return best;
    }
};

} // namespace

GeneratingVerdict finitelyGenerating(const Ontology& o, const AnalysisCaps& caps) {
    if (!fragmentLeq(o.fragment(), Fragment::ELUbot))
        throw ContractError("finitelyGenerating expects an ELU(bot) ontology");
    GeneratingVerdict v;
    auto R = sharedReasoner(o, caps.reasonerCaps);

    ConceptSet rhsEx = rhsExistentials(o);
    if (rhsEx.empty()) return v; // bound 0, no chains possible

    Search search(*R, caps);
    int best = 0;
    for (auto& ex : rhsEx) {
        // start set: all types of the existential's argument
        Bits start = R->typesContaining(ex->kids[0]);
        if (start.none()) continue;
        int id = search.g.intern(start);
        search.state.assign(search.g.nodes.size(), 0);
        search.longest.assign(search.g.nodes.size(), 0);
        search.stackEdges.clear();
        int len = search.dfs(id);
        if (search.foundCycle) {
            CycleWitness w;
            w.startExistential = ex;
            w.prefix = search.foundCycle->prefix;
            w.cycle = search.foundCycle->cycle;
            v.finite = false;
            v.cycle = w;
            return v;
        }
        best = std::max(best, len);
    }
    v.finite = true;
    v.bound = best;
    return v;
}

std::optional<int> generatableDepthBound(const Ontology& o, const AnalysisCaps& caps) {
    auto v = finitelyGenerating(o, caps);
    if (!v.finite) return std::nullopt;
    return v.bound;
}

std::vector<std::string> witnessWord(const CycleWitness& w, int n) {
    std::vector<std::string> word = w.prefix;
    while (static_cast<int>(word.size()) < n) {
        for (auto& r : w.cycle) {
            word.push_back(r);
            if (static_cast<int>(word.size()) >= n) break;
        }
    }
    word.resize(n);
    return word;
}

std::string analyzeReportJson(const Ontology& o, const AnalysisCaps& caps) {
    nlohmann::ordered_json j;
    j["fragment"] = fragmentName(o.fragment());
    auto ac = isAcyclic(o);
    j["acyclic"] = ac.acyclic;
    if (!ac.acyclic) {
        if (!ac.shapeViolation.empty()) j["acyclicity_violation"] = ac.shapeViolation;
        if (!ac.cycle.empty()) j["definitorial_cycle"] = ac.cycle;
    }
    auto sig = o.signature();
    j["counts"] = {{"axioms", o.axioms().size()},
                   {"sub_minus", subMinus(o).size()},
                   {"names", sig.conceptNames.size()},
                   {"roles", sig.roleNames.size()}};
    j["size"] = o.size();

    nlohmann::ordered_json fg;
    try {
        auto v = finitelyGenerating(o, caps);
        if (v.finite) {
            fg["verdict"] = "finite";
            fg["bound"] = v.bound;
        } else {
            fg["verdict"] = "infinite";
            nlohmann::ordered_json cyc;
            cyc["start"] = render(v.cycle->startExistential);
            cyc["prefix"] = v.cycle->prefix;
            cyc["cycle"] = v.cycle->cycle;
            fg["cycle"] = cyc;
        }
    } catch (const ResourceError& e) {
        fg["verdict"] = "unknown";
        fg["error"] = e.what();
    }
    j["finitely_generating"] = fg;

    nlohmann::ordered_json census = nlohmann::ordered_json::array();
    try {
        auto v = finitelyGenerating(o, caps);
        int depthCap = v.finite ? std::min(v.bound, 3) : 3;
        UniverseCaps ucaps;
        ucaps.maxDepth = depthCap;
        ucaps.maxSize = 9;
        ucaps.maxCount = 5000;
        auto g = enumerateGeneratable(o, depthCap, ucaps, caps.reasonerCaps);
        for (auto& c : g.representatives) census.push_back(render(c));
        if (g.truncated) j["generatable_census_truncated"] = true;
        if (!v.finite) j["generatable_census_note"] = "infinite family; census capped at depth 3";
    } catch (const ResourceError& e) {
        j["generatable_census_error"] = e.what();
    }
    j["generatable_census"] = census;
    return j.dump(2);
}

} // namespace dla
