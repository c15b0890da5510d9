#include "dlapprox/ontology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace dla {

bool operator==(const Axiom& a, const Axiom& b) {
    return a.kind == b.kind && compare(a.lhs, b.lhs) == 0 && compare(a.rhs, b.rhs) == 0;
}

Ontology::Ontology(std::vector<Axiom> axioms) {
    for (auto& ax : axioms) add(std::move(ax));
}

void Ontology::add(Axiom ax) {
    for (auto& e : axioms_)
        if (e == ax) return;
    fragment_ = fragmentJoin(fragment_, conceptFragment(ax.lhs));
    fragment_ = fragmentJoin(fragment_, conceptFragment(ax.rhs));
    axioms_.push_back(std::move(ax));
}

std::vector<Axiom> Ontology::inclusions() const {
    std::vector<Axiom> out;
    for (auto& ax : axioms_) {
        out.push_back({AxiomKind::Inclusion, ax.lhs, ax.rhs});
        if (ax.kind == AxiomKind::Equivalence)
            out.push_back({AxiomKind::Inclusion, ax.rhs, ax.lhs});
    }
    return out;
}

Signature Ontology::signature() const {
    Signature s;
    for (auto& ax : axioms_) {
        s.merge(conceptSignature(ax.lhs));
        s.merge(conceptSignature(ax.rhs));
    }
    return s;
}

long long Ontology::size() const {
    long long n = 0;
    for (auto& ax : axioms_)
        n += conceptSize(ax.lhs) + 1 + conceptSize(ax.rhs);
    return n;
}

bool Ontology::operator==(const Ontology& o) const {
    if (axioms_.size() != o.axioms_.size()) return false;
    // Order-insensitive comparison on canonical renderings.
    std::multiset<std::string> a, b;
    for (auto& ax : axioms_)
        a.insert(render(ax.lhs) + (ax.kind == AxiomKind::Equivalence ? " == " : " <= ") + render(ax.rhs));
    for (auto& ax : o.axioms_)
        b.insert(render(ax.lhs) + (ax.kind == AxiomKind::Equivalence ? " == " : " <= ") + render(ax.rhs));
    return a == b;
}

ConceptSet subconcepts(const Ontology& o) {
    ConceptSet out;
    for (auto& ax : o.axioms()) {
        collectSubconcepts(ax.lhs, out);
        collectSubconcepts(ax.rhs, out);
    }
    return out;
}

ConceptSet subMinus(const Ontology& o) {
    ConceptSet out;
    for (auto& c : subconcepts(o))
        if (c->kind == Kind::Name || c->kind == Kind::Exists) out.insert(c);
    out.insert(Concept::top());
    return out;
}

ConceptSet rhsExistentials(const Ontology& o) {
    ConceptSet out;
    auto grab = [&](const ConceptPtr& c) {
        ConceptSet subs;
        collectSubconcepts(c, subs);
        for (auto& s : subs)
            if (s->kind == Kind::Exists) out.insert(s);
    };
    for (auto& ax : o.axioms()) {
        grab(ax.rhs);
        if (ax.kind == AxiomKind::Equivalence) grab(ax.lhs);
    }
    return out;
}

AcyclicityResult isAcyclic(const Ontology& o) {
    AcyclicityResult res;
    std::map<std::string, ConceptPtr> def;
    for (auto& ax : o.axioms()) {
        if (ax.lhs->kind != Kind::Name) {
            res.shapeViolation = "left-hand side is not a concept name: " + render(ax.lhs);
            return res;
        }
        if (def.count(ax.lhs->name)) {
            res.shapeViolation = "duplicate left-hand side: " + ax.lhs->name;
            return res;
        }
        def[ax.lhs->name] = ax.rhs;
    }
    // DFS over the defined-by graph.
    std::map<std::string, int> state; // 0 unseen, 1 on stack, 2 done
    std::vector<std::string> stack;
    std::vector<std::string> cycleOut;

    auto deps = [&](const std::string& a) {
        std::vector<std::string> out;
        auto it = def.find(a);
        if (it == def.end()) return out;
        for (auto& n : conceptSignature(it->second).conceptNames)
            if (def.count(n)) out.push_back(n);
        return out;
    };

    std::function<bool(const std::string&)> dfs = [&](const std::string& a) -> bool {
        state[a] = 1;
        stack.push_back(a);
        for (auto& b : deps(a)) {
            if (state[b] == 1) {
                auto it = std::find(stack.begin(), stack.end(), b);
                cycleOut.assign(it, stack.end());
                cycleOut.push_back(b);
                return false;
            }
            if (state[b] == 0 && !dfs(b)) return false;
        }
        stack.pop_back();
        state[a] = 2;
        return true;
    };

    for (auto& [a, _] : def) {
        if (state[a] == 0 && !dfs(a)) {
            res.cycle = cycleOut;
            return res;
        }
    }
    res.acyclic = true;
    return res;
}

std::string render(const Ontology& o) {
    std::string out;
    for (auto& ax : o.axioms()) {
        out += render(ax.lhs);
        out += ax.kind == AxiomKind::Equivalence ? " EquivalentTo " : " SubClassOf ";
        out += render(ax.rhs);
        out += '\n';
    }
    return out;
}

} // namespace dla
