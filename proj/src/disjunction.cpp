#include "dlapprox/disjunction.hpp"

#include <algorithm>

namespace dla {

namespace {

std::vector<ConceptPtr> normalizeConjunction(std::vector<ConceptPtr> atoms) {
    std::sort(atoms.begin(), atoms.end(), ConceptLess{});
    atoms.erase(std::unique(atoms.begin(), atoms.end(), ConceptEq{}), atoms.end());
    if (atoms.size() > 1) {
        auto top = Concept::top();
        atoms.erase(std::remove_if(atoms.begin(), atoms.end(),
                                   [&](const ConceptPtr& a) { return a->kind == Kind::Top; }),
                    atoms.end());
        if (atoms.empty()) atoms.push_back(top);
    }
    return atoms;
}

bool conjLess(const std::vector<ConceptPtr>& a, const std::vector<ConceptPtr>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a[i], b[i]); c != 0) return c < 0;
    return a.size() < b.size();
}

bool conjEq(const std::vector<ConceptPtr>& a, const std::vector<ConceptPtr>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (compare(a[i], b[i]) != 0) return false;
    return true;
}

// a subset-of b (both sorted)
bool conjSubset(const std::vector<ConceptPtr>& a, const std::vector<ConceptPtr>& b) {
    std::size_t j = 0;
    for (auto& x : a) {
        while (j < b.size() && compare(b[j], x) < 0) ++j;
        if (x->kind == Kind::Top) continue; // Top is implicit in every conjunction
        if (j == b.size() || compare(b[j], x) != 0) return false;
    }
    return true;
}

} // namespace

Disjunction::Disjunction(std::vector<std::vector<ConceptPtr>> disjuncts) {
    for (auto& d : disjuncts) disjuncts_.push_back(normalizeConjunction(std::move(d)));
    std::sort(disjuncts_.begin(), disjuncts_.end(), conjLess);
    disjuncts_.erase(std::unique(disjuncts_.begin(), disjuncts_.end(), conjEq), disjuncts_.end());
}

Disjunction Disjunction::fromConcept(const ConceptPtr& c, bool dropBot) {
    std::vector<std::vector<ConceptPtr>> out;
    auto addConj = [&](const ConceptPtr& k) {
        std::vector<ConceptPtr> atoms;
        bool hasBot = false;
        if (k->kind == Kind::And) {
            for (auto& a : k->kids) {
                if (a->kind == Kind::Bot) hasBot = true;
                atoms.push_back(a);
            }
        } else if (k->kind == Kind::Bot) {
            hasBot = true;
            atoms.push_back(k);
        } else {
            atoms.push_back(k);
        }
        if (hasBot && dropBot) return;
        out.push_back(std::move(atoms));
    };
    if (c->kind == Kind::Or) {
        for (auto& k : c->kids) addConj(k);
    } else {
        addConj(c);
    }
    return Disjunction(std::move(out));
}

ConceptPtr Disjunction::asConcept() const {
    if (disjuncts_.empty()) return Concept::bot();
    std::vector<ConceptPtr> ds;
    for (auto& d : disjuncts_) {
        std::vector<ConceptPtr> atoms(d.begin(), d.end());
        ds.push_back(Concept::conj(std::move(atoms)));
    }
    return Concept::disj(std::move(ds));
}

std::vector<ConceptPtr> Disjunction::commonAtoms() const {
    if (disjuncts_.empty()) return {};
    std::vector<ConceptPtr> common = disjuncts_[0];
    for (std::size_t i = 1; i < disjuncts_.size() && !common.empty(); ++i) {
        std::vector<ConceptPtr> next;
        for (auto& a : common)
            if (std::any_of(disjuncts_[i].begin(), disjuncts_[i].end(),
                            [&](const ConceptPtr& b) { return compare(a, b) == 0; }))
                next.push_back(a);
        common = std::move(next);
    }
    return common;
}

ConceptSet Disjunction::atoms() const {
    ConceptSet out;
    for (auto& d : disjuncts_)
        for (auto& a : d) out.insert(a);
    return out;
}

bool Disjunction::operator==(const Disjunction& o) const {
    if (disjuncts_.size() != o.disjuncts_.size()) return false;
    for (std::size_t i = 0; i < disjuncts_.size(); ++i)
        if (!conjEq(disjuncts_[i], o.disjuncts_[i])) return false;
    return true;
}

bool Disjunction::operator<(const Disjunction& o) const {
    std::size_t n = std::min(disjuncts_.size(), o.disjuncts_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (conjLess(disjuncts_[i], o.disjuncts_[i])) return true;
        if (conjLess(o.disjuncts_[i], disjuncts_[i])) return false;
    }
    return disjuncts_.size() < o.disjuncts_.size();
}

bool Disjunction::pointwiseStrongerThan(const Disjunction& o) const {
    for (auto& mine : disjuncts_) {
        bool covered = false;
        for (auto& theirs : o.disjuncts_) {
            if (conjSubset(theirs, mine)) { covered = true; break; }
        }
        if (!covered) return false;
    }
    return true;
}

} // namespace dla
