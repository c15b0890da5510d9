#include "dlapprox/normalize.hpp"

#include <algorithm>
#include <deque>

#include "dlapprox/errors.hpp"

namespace dla {

namespace {

// Outermost disjunction subterms of c (not nested inside another one).
void outermostDisjunctions(const ConceptPtr& c, std::vector<ConceptPtr>& out) {
    if (c->kind == Kind::Or) {
        out.push_back(c);
        return;
    }
    for (auto& k : c->kids) outermostDisjunctions(k, out);
}

} // namespace

Ontology eliminateLhsDisjunctions(const Ontology& o, FreshNameRegistry& reg) {
    reg.reserve(o.signature().conceptNames);
    reg.reserve(o.signature().roleNames);
    Ontology out;
    std::deque<Axiom> work;
    for (auto& ax : o.inclusions()) work.push_back(ax);
    while (!work.empty()) {
        Axiom ax = work.front();
        work.pop_front();
        std::vector<ConceptPtr> ds;
        outermostDisjunctions(ax.lhs, ds);
        if (ds.empty()) {
            out.add(ax);
            continue;
        }
        ConceptPtr lhs = ax.lhs;
        for (auto& d : ds) {
            auto x = Concept::named(reg.mint('X', d));
            lhs = replaceSubconcept(lhs, d, x);
            for (auto& disjunct : d->kids)
                work.push_back({AxiomKind::Inclusion, disjunct, x});
        }
        work.push_back({AxiomKind::Inclusion, lhs, ax.rhs});
    }
    return out;
}

namespace {

ConceptPtr removeForall(const ConceptPtr& c) {
    std::vector<ConceptPtr> kids;
    for (auto& k : c->kids) kids.push_back(removeForall(k));
    switch (c->kind) {
        case Kind::Forall:
            return Concept::negation(Concept::exists(c->name, Concept::negation(kids[0])));
        case Kind::Not: return Concept::negation(kids[0]);
        case Kind::Exists: return Concept::exists(c->name, kids[0]);
        case Kind::And: return Concept::conj(std::move(kids));
        case Kind::Or: return Concept::disj(std::move(kids));
        default: return c;
    }
}

bool negationFree(const ConceptPtr& c) {
    if (c->kind == Kind::Not) return false;
    for (auto& k : c->kids)
        if (!negationFree(k)) return false;
    return true;
}

// Innermost negations not-C with C negation-free, canonically ordered.
void innermostNegations(const ConceptPtr& c, ConceptSet& out) {
    if (c->kind == Kind::Not && negationFree(c->kids[0])) {
        out.insert(c);
        return;
    }
    for (auto& k : c->kids) innermostNegations(k, out);
}

} // namespace

Ontology alcToEluBot(const Ontology& o, FreshNameRegistry& reg) {
    reg.reserve(o.signature().conceptNames);
    reg.reserve(o.signature().roleNames);
    std::vector<Axiom> axioms;
    for (auto& ax : o.inclusions())
        axioms.push_back({AxiomKind::Inclusion, removeForall(ax.lhs), removeForall(ax.rhs)});

    for (;;) {
        ConceptSet negs;
        for (auto& ax : axioms) {
            innermostNegations(ax.lhs, negs);
            innermostNegations(ax.rhs, negs);
        }
        if (negs.empty()) break;
        ConceptPtr neg = *negs.begin(); // canonically least; deterministic
        ConceptPtr body = neg->kids[0];
        auto a = Concept::named(reg.mint('N', neg));
        for (auto& ax : axioms) {
            ax.lhs = replaceSubconcept(ax.lhs, neg, a);
            ax.rhs = replaceSubconcept(ax.rhs, neg, a);
        }
        axioms.push_back({AxiomKind::Inclusion, Concept::top(), Concept::disj({body, a})});
        axioms.push_back({AxiomKind::Inclusion, Concept::conj({body, a}), Concept::bot()});
    }
    Ontology out;
    for (auto& ax : axioms) out.add(ax);
    if (!fragmentLeq(out.fragment(), Fragment::ELUbot))
        throw ContractError("reduction failed to reach ELUbot");
    return out;
}

namespace {

// DNF branch lists: each branch is a list of atoms (names/existentials/Bot).
std::vector<std::vector<ConceptPtr>> dnfBranches(const ConceptPtr& c, bool dropBot,
                                                 std::size_t nodeCap) {
    switch (c->kind) {
        case Kind::Or: {
            std::vector<std::vector<ConceptPtr>> out;
            for (auto& k : c->kids) {
                auto sub = dnfBranches(k, dropBot, nodeCap);
                out.insert(out.end(), sub.begin(), sub.end());
                if (out.size() > nodeCap) throw ResourceError("dnf branch cap exceeded");
            }
            return out;
        }
        case Kind::And: {
            std::vector<std::vector<ConceptPtr>> out{{}};
            for (auto& k : c->kids) {
                auto sub = dnfBranches(k, dropBot, nodeCap);
                std::vector<std::vector<ConceptPtr>> next;
                for (auto& a : out)
                    for (auto& b : sub) {
                        auto merged = a;
                        merged.insert(merged.end(), b.begin(), b.end());
                        next.push_back(std::move(merged));
                        if (next.size() > nodeCap)
                            throw ResourceError("dnf branch cap exceeded");
                    }
                out = std::move(next);
            }
            return out;
        }
        default:
            return {{c}};
    }
}

} // namespace

ConceptPtr dnf(const ConceptPtr& c, bool dropBot, std::size_t nodeCap) {
    if (!fragmentLeq(conceptFragment(c), Fragment::ELUbot))
        throw ContractError("dnf expects an ELUbot concept");
    auto branches = dnfBranches(c, dropBot, nodeCap);
    std::vector<ConceptPtr> disjuncts;
    for (auto& b : branches) {
        bool hasBot = std::any_of(b.begin(), b.end(),
                                  [](const ConceptPtr& a) { return a->kind == Kind::Bot; });
        if (hasBot && dropBot) continue;
        disjuncts.push_back(Concept::conj(std::vector<ConceptPtr>(b.begin(), b.end())));
    }
    if (disjuncts.empty()) return Concept::bot();
    // Rebuild without re-distributing: canonical Or of conjunctions.
    return Concept::disj(std::move(disjuncts));
}

namespace {

void checkAtoms(const Disjunction& d, const ConceptSet* allowed) {
    if (!allowed) return;
    for (auto& a : d.atoms())
        if (a->kind != Kind::Top && !allowed->count(a))
            throw ContractError("disjunction outside Dis(O_S): atom " + render(a));
}

} // namespace

ConceptPtr uparrow(const ConceptPtr& c, FreshNameRegistry& reg, const ConceptSet* allowedAtoms,
                   bool dropBot) {
    switch (c->kind) {
        case Kind::Top:
        case Kind::Bot:
        case Kind::Name:
            return c;
        case Kind::Exists:
            return Concept::exists(c->name, uparrow(c->kids[0], reg, allowedAtoms, dropBot));
        case Kind::And: {
            std::vector<ConceptPtr> kids;
            for (auto& k : c->kids) kids.push_back(uparrow(k, reg, allowedAtoms, dropBot));
            return Concept::conj(std::move(kids));
        }
        case Kind::Or: {
            Disjunction d = Disjunction::fromConcept(dnf(c, dropBot), dropBot);
            return uparrow(d, reg, allowedAtoms, dropBot);
        }
        default:
            throw ContractError("uparrow expects an ELUbot concept");
    }
}

ConceptPtr uparrow(const Disjunction& d, FreshNameRegistry& reg, const ConceptSet* allowedAtoms,
                   bool dropBot) {
    if (d.isBottom()) return Concept::bot();
    if (d.arity() == 1) {
        std::vector<ConceptPtr> atoms;
        for (auto& a : d.disjuncts()[0])
            atoms.push_back(uparrow(a, reg, allowedAtoms, dropBot));
        return Concept::conj(std::move(atoms));
    }
    checkAtoms(d, allowedAtoms);
    return Concept::named(reg.mint('X', d.asConcept()));
}

ConceptPtr downarrow(const ConceptPtr& c, const FreshNameRegistry& reg) {
    switch (c->kind) {
        case Kind::Name: {
            auto def = reg.definitionOf(c->name);
            if (!def) return c;
            return downarrow(def, reg);
        }
        case Kind::Not: return Concept::negation(downarrow(c->kids[0], reg));
        case Kind::Exists: return Concept::exists(c->name, downarrow(c->kids[0], reg));
        case Kind::Forall: return Concept::forall(c->name, downarrow(c->kids[0], reg));
        case Kind::And: {
            std::vector<ConceptPtr> kids;
            for (auto& k : c->kids) kids.push_back(downarrow(k, reg));
            return Concept::conj(std::move(kids));
        }
        case Kind::Or: {
            std::vector<ConceptPtr> kids;
            for (auto& k : c->kids) kids.push_back(downarrow(k, reg));
            return Concept::disj(std::move(kids));
        }
        default:
            return c;
    }
}

namespace {

struct DecorateState {
    const std::vector<Disjunction>* dis;
    std::size_t budget;
    std::size_t emitted = 0;
    bool truncated = false;
    const std::function<void(const ConceptPtr&)>* emit;
};

// Enumerate decorated variants of c; calls sink for each.
void decorateRec(const ConceptPtr& c, DecorateState& st,
                 const std::function<void(const ConceptPtr&)>& sink) {
    if (c->depth() == 0) {
        sink(c);
        return;
    }
    if (c->kind == Kind::Exists) {
        auto arg = c->kids[0];
        if (arg->depth() == 0) {
            sink(Concept::exists(c->name, arg));
            for (auto& d : *st.dis) {
                if (st.truncated) return;
                sink(Concept::exists(c->name, Concept::conj({arg, d.asConcept()})));
            }
        } else {
            decorateRec(arg, st, [&](const ConceptPtr& a) {
                sink(Concept::exists(c->name, a));
            });
        }
        return;
    }
    if (c->kind == Kind::And) {
        // Cross product over conjuncts, left to right.
        std::function<void(std::size_t, std::vector<ConceptPtr>&)> walk =
            [&](std::size_t i, std::vector<ConceptPtr>& acc) {
                if (st.truncated) return;
                if (i == c->kids.size()) {
                    sink(Concept::conj(std::vector<ConceptPtr>(acc)));
                    return;
                }
                decorateRec(c->kids[i], st, [&](const ConceptPtr& k) {
                    acc.push_back(k);
                    walk(i + 1, acc);
                    acc.pop_back();
                });
            };
        std::vector<ConceptPtr> acc;
        walk(0, acc);
        return;
    }
    sink(c);
}

} // namespace

bool decorate(const ConceptPtr& c, const std::vector<Disjunction>& dis, std::size_t budget,
              const std::function<void(const ConceptPtr&)>& emit) {
    if (!fragmentLeq(conceptFragment(c), Fragment::EL))
        throw ContractError("decorate expects an EL concept");
    DecorateState st;
    st.dis = &dis;
    st.budget = budget;
    auto sink = [&](const ConceptPtr& out) {
        if (st.truncated) return;
        if (st.emitted >= st.budget) {
            st.truncated = true;
            return;
        }
        ++st.emitted;
        emit(out);
    };
    if (c->depth() == 0) {
        // Special case: a depth-0 concept may itself be decorated.
        sink(c);
        for (auto& d : dis) {
            if (st.truncated) break;
            sink(Concept::conj({c, d.asConcept()}));
        }
        return st.truncated;
    }
    decorateRec(c, st, sink);
    return st.truncated;
}

std::vector<Disjunction> cnfClauses(const Disjunction& d, std::size_t cap) {
    // Distribute: one atom from each disjunct forms a clause.
    std::vector<std::vector<ConceptPtr>> clauses{{}};
    for (auto& disjunct : d.disjuncts()) {
        std::vector<std::vector<ConceptPtr>> next;
        for (auto& clause : clauses)
            for (auto& atom : disjunct) {
                auto merged = clause;
                merged.push_back(atom);
                std::sort(merged.begin(), merged.end(), ConceptLess{});
                merged.erase(std::unique(merged.begin(), merged.end(), ConceptEq{}),
                             merged.end());
                next.push_back(std::move(merged));
                if (next.size() > cap) throw ResourceError("cnf clause cap exceeded");
            }
        clauses = std::move(next);
    }
    // Subset-minimize (absorption) and deduplicate.
    std::sort(clauses.begin(), clauses.end(),
              [](const std::vector<ConceptPtr>& a, const std::vector<ConceptPtr>& b) {
                  return a.size() < b.size();
              });
    std::vector<std::vector<ConceptPtr>> kept;
    auto subset = [](const std::vector<ConceptPtr>& a, const std::vector<ConceptPtr>& b) {
        for (auto& x : a) {
            bool found = false;
            for (auto& y : b)
                if (compare(x, y) == 0) { found = true; break; }
            if (!found) return false;
        }
        return true;
    };
    for (auto& c : clauses) {
        bool dominated = false;
        for (auto& k : kept)
            if (subset(k, c)) { dominated = true; break; }
        if (!dominated) kept.push_back(c);
    }
    std::vector<Disjunction> out;
    std::set<std::string> seen;
    for (auto& k : kept) {
        std::vector<std::vector<ConceptPtr>> singletons;
        for (auto& atom : k) singletons.push_back({atom});
        Disjunction clause(std::move(singletons));
        if (seen.insert(clause.key()).second) out.push_back(std::move(clause));
    }
    return out;
}

Ontology cnfCompress(const Ontology& o, FreshNameRegistry& reg) {
    // Collect X names used in the ontology.
    std::map<std::string, ConceptPtr> xNames;
    for (auto& c : subconcepts(o))
        if (c->kind == Kind::Name && !c->name.empty() && c->name[0] == 'X') {
            auto def = reg.definitionOf(c->name);
            if (def) xNames.emplace(c->name, def);
        }
    Ontology out;
    std::vector<Axiom> axioms(o.axioms().begin(), o.axioms().end());
    for (auto& [name, def] : xNames) {
        Disjunction d = Disjunction::fromConcept(def, false);
        std::vector<ConceptPtr> ys;
        for (auto& clause : cnfClauses(d))
            ys.push_back(Concept::named(reg.mint('Y', clause.asConcept())));
        auto replacement = Concept::conj(std::move(ys));
        auto from = Concept::named(name);
        for (auto& ax : axioms) {
            ax.lhs = replaceSubconcept(ax.lhs, from, replacement);
            ax.rhs = replaceSubconcept(ax.rhs, from, replacement);
        }
    }
    for (auto& ax : axioms) out.add(ax);
    return out;
}

} // namespace dla
