#include "dlapprox/concepts.hpp"

#include <algorithm>
#include <cassert>

namespace dla {

bool fragmentLeq(Fragment a, Fragment b) {
    if (a == b || b == Fragment::ALC) return true;
    switch (a) {
        case Fragment::EL: return true;
        case Fragment::ELbot: return b == Fragment::ELUbot;
        case Fragment::ELU: return b == Fragment::ELUbot;
        default: return false;
    }
}

Fragment fragmentJoin(Fragment a, Fragment b) {
    if (fragmentLeq(a, b)) return b;
    if (fragmentLeq(b, a)) return a;
    // {ELbot, ELU} join to ELUbot; anything involving ALC was handled above.
    if ((a == Fragment::ELbot && b == Fragment::ELU) ||
        (a == Fragment::ELU && b == Fragment::ELbot))
        return Fragment::ELUbot;
    return Fragment::ALC;
}

const char* fragmentName(Fragment f) {
    switch (f) {
        case Fragment::EL: return "EL";
        case Fragment::ELbot: return "ELbot";
        case Fragment::ELU: return "ELU";
        case Fragment::ELUbot: return "ELUbot";
        case Fragment::ALC: return "ALC";
    }
    return "?";
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::uint64_t strHash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) { h ^= ch; h *= 1099511628211ull; }
    return h;
}

} // namespace

Concept::Concept(Kind k, std::string n, std::vector<ConceptPtr> c)
    : kind(k), name(std::move(n)), kids(std::move(c)) {
    switch (kind) {
        case Kind::Top:
        case Kind::Bot:
        case Kind::Name:
            depth_ = 0;
            break;
        case Kind::Not:
            depth_ = kids[0]->depth();
            break;
        case Kind::Exists:
        case Kind::Forall:
            depth_ = 1 + kids[0]->depth();
            break;
        case Kind::And:
        case Kind::Or:
            depth_ = 0;
            for (auto& k2 : kids) depth_ = std::max(depth_, k2->depth());
            break;
    }
    hash_ = mix(static_cast<std::uint64_t>(kind) * 0x100000001b3ull, strHash(name));
    for (auto& k2 : kids) hash_ = mix(hash_, k2->hash());
}

int compare(const ConceptPtr& a, const ConceptPtr& b) {
    if (a.get() == b.get()) return 0;
    if (a->kind != b->kind)
        return static_cast<int>(a->kind) < static_cast<int>(b->kind) ? -1 : 1;
    if (int c = a->name.compare(b->name); c != 0) return c < 0 ? -1 : 1;
    std::size_t n = std::min(a->kids.size(), b->kids.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a->kids[i], b->kids[i]); c != 0) return c;
    if (a->kids.size() != b->kids.size())
        return a->kids.size() < b->kids.size() ? -1 : 1;
    return 0;
}

ConceptPtr Concept::top() {
    static ConceptPtr t = std::make_shared<Concept>(Kind::Top, "", std::vector<ConceptPtr>{});
    return t;
}

ConceptPtr Concept::bot() {
    static ConceptPtr b = std::make_shared<Concept>(Kind::Bot, "", std::vector<ConceptPtr>{});
    return b;
}

ConceptPtr Concept::named(const std::string& n) {
    return std::make_shared<Concept>(Kind::Name, n, std::vector<ConceptPtr>{});
}

ConceptPtr Concept::negation(ConceptPtr c) {
    if (c->kind == Kind::Top) return bot();
    if (c->kind == Kind::Bot) return top();
    if (c->kind == Kind::Not) return c->kids[0];
    return std::make_shared<Concept>(Kind::Not, "", std::vector<ConceptPtr>{std::move(c)});
}

ConceptPtr Concept::exists(const std::string& role, ConceptPtr arg) {
    if (arg->kind == Kind::Bot) return bot();
    return std::make_shared<Concept>(Kind::Exists, role, std::vector<ConceptPtr>{std::move(arg)});
}

ConceptPtr Concept::forall(const std::string& role, ConceptPtr arg) {
    if (arg->kind == Kind::Top) return top();
    return std::make_shared<Concept>(Kind::Forall, role, std::vector<ConceptPtr>{std::move(arg)});
}

namespace {

ConceptPtr buildNary(Kind kind, std::vector<ConceptPtr> kids) {
    const bool isAnd = kind == Kind::And;
    const Kind absorb = isAnd ? Kind::Bot : Kind::Top;  // result collapses to it
    const Kind unit = isAnd ? Kind::Top : Kind::Bot;    // dropped from the list
    std::vector<ConceptPtr> flat;
    flat.reserve(kids.size());
    for (auto& k : kids) {
        if (k->kind == kind) {
            for (auto& kk : k->kids) flat.push_back(kk);
        } else {
            flat.push_back(k);
        }
    }
    std::sort(flat.begin(), flat.end(), ConceptLess{});
    flat.erase(std::unique(flat.begin(), flat.end(), ConceptEq{}), flat.end());
    for (auto& k : flat)
        if (k->kind == absorb) return isAnd ? Concept::bot() : Concept::top();
    flat.erase(std::remove_if(flat.begin(), flat.end(),
                              [&](const ConceptPtr& k) { return k->kind == unit; }),
               flat.end());
    if (flat.empty()) return isAnd ? Concept::top() : Concept::bot();
    if (flat.size() == 1) return flat[0];
    return std::make_shared<Concept>(kind, "", std::move(flat));
}

} // namespace

ConceptPtr Concept::conj(std::vector<ConceptPtr> kids) { return buildNary(Kind::And, std::move(kids)); }
ConceptPtr Concept::disj(std::vector<ConceptPtr> kids) { return buildNary(Kind::Or, std::move(kids)); }

long long conceptSize(const ConceptPtr& c) {
    switch (c->kind) {
        case Kind::Top:
        case Kind::Bot:
        case Kind::Name:
            return 1;
        case Kind::Not:
            return 1 + conceptSize(c->kids[0]);
        case Kind::Exists:
        case Kind::Forall:
            return 2 + conceptSize(c->kids[0]);
        case Kind::And:
        case Kind::Or: {
            long long s = static_cast<long long>(c->kids.size()) - 1;
            for (auto& k : c->kids) s += conceptSize(k);
            return s;
        }
    }
    return 0;
}

int conceptDepth(const ConceptPtr& c) { return c->depth(); }

Fragment conceptFragment(const ConceptPtr& c) {
    switch (c->kind) {
        case Kind::Top: return Fragment::EL;
        case Kind::Bot: return Fragment::ELbot;
        case Kind::Name: return Fragment::EL;
        case Kind::Not:
        case Kind::Forall: return Fragment::ALC;
        case Kind::Or: {
            Fragment f = Fragment::ELU;
            for (auto& k : c->kids) f = fragmentJoin(f, conceptFragment(k));
            return f;
        }
        case Kind::Exists:
            return conceptFragment(c->kids[0]);
        case Kind::And: {
            Fragment f = Fragment::EL;
            for (auto& k : c->kids) f = fragmentJoin(f, conceptFragment(k));
            return f;
        }
    }
    return Fragment::ALC;
}

void collectSubconcepts(const ConceptPtr& c, ConceptSet& out) {
    if (!out.insert(c).second) return;
    for (auto& k : c->kids) collectSubconcepts(k, out);
}

void Signature::merge(const Signature& o) {
    conceptNames.insert(o.conceptNames.begin(), o.conceptNames.end());
    roleNames.insert(o.roleNames.begin(), o.roleNames.end());
}

namespace {
void sigRec(const ConceptPtr& c, Signature& s) {
    if (c->kind == Kind::Name) s.conceptNames.insert(c->name);
    if (c->kind == Kind::Exists || c->kind == Kind::Forall) s.roleNames.insert(c->name);
    for (auto& k : c->kids) sigRec(k, s);
}
} // namespace

Signature conceptSignature(const ConceptPtr& c) {
    Signature s;
    sigRec(c, s);
    return s;
}

namespace {

// Precedence levels for rendering: or(0) < and(1) < not/some/only(2) < atom(3).
int level(const ConceptPtr& c) {
    switch (c->kind) {
        case Kind::Or: return 0;
        case Kind::And: return 1;
        case Kind::Not:
        case Kind::Exists:
        case Kind::Forall: return 2;
        default: return 3;
    }
}

void renderRec(const ConceptPtr& c, int minLevel, std::string& out) {
    const bool paren = level(c) < minLevel;
    if (paren) out += '(';
    switch (c->kind) {
        case Kind::Top: out += "Top"; break;
        case Kind::Bot: out += "Bottom"; break;
        case Kind::Name: out += c->name; break;
        case Kind::Not:
            out += "not ";
            renderRec(c->kids[0], 2, out);
            break;
        case Kind::Exists:
            out += c->name;
            out += " some ";
            renderRec(c->kids[0], 2, out);
            break;
        case Kind::Forall:
            out += c->name;
            out += " only ";
            renderRec(c->kids[0], 2, out);
            break;
        case Kind::And:
            for (std::size_t i = 0; i < c->kids.size(); ++i) {
                if (i) out += " and ";
                renderRec(c->kids[i], 2, out);
            }
            break;
        case Kind::Or:
            for (std::size_t i = 0; i < c->kids.size(); ++i) {
                if (i) out += " or ";
                renderRec(c->kids[i], 1, out);
            }
            break;
    }
    if (paren) out += ')';
}

} // namespace

std::string render(const ConceptPtr& c) {
    std::string out;
    renderRec(c, 0, out);
    return out;
}

bool containsSubconcept(const ConceptPtr& c, const ConceptPtr& d) {
    if (compare(c, d) == 0) return true;
    for (auto& k : c->kids)
        if (containsSubconcept(k, d)) return true;
    return false;
}

ConceptPtr replaceSubconcept(const ConceptPtr& c, const ConceptPtr& from, const ConceptPtr& to) {
    if (compare(c, from) == 0) return to;
    if (c->kids.empty()) return c;
    std::vector<ConceptPtr> kids;
    kids.reserve(c->kids.size());
    bool changed = false;
    for (auto& k : c->kids) {
        auto nk = replaceSubconcept(k, from, to);
        changed = changed || nk.get() != k.get();
        kids.push_back(std::move(nk));
    }
    if (!changed) return c;
    switch (c->kind) {
        case Kind::Not: return Concept::negation(kids[0]);
        case Kind::Exists: return Concept::exists(c->name, kids[0]);
        case Kind::Forall: return Concept::forall(c->name, kids[0]);
        case Kind::And: return Concept::conj(std::move(kids));
        case Kind::Or: return Concept::disj(std::move(kids));
        default: return c;
    }
}

bool structuralSubsumes(const ConceptPtr& c, const ConceptPtr& d) {
    // {} |= c [= d via the simulation characterization of EL subsumption.
    if (d->kind == Kind::Top) return true;
    if (c->kind == Kind::Bot) return true;
    if (d->kind == Kind::Bot) return c->kind == Kind::Bot;
    auto holdsAt = [&](const ConceptPtr& atom) -> bool {
        if (atom->kind == Kind::Top) return true;
        if (compare(c, atom) == 0) return true;
        if (c->kind == Kind::And) {
            for (auto& k : c->kids) {
                if (atom->kind == Kind::Name && compare(k, atom) == 0) return true;
                if (atom->kind == Kind::Exists && k->kind == Kind::Exists &&
                    k->name == atom->name && structuralSubsumes(k->kids[0], atom->kids[0]))
                    return true;
            }
            return false;
        }
        if (atom->kind == Kind::Exists && c->kind == Kind::Exists)
            return c->name == atom->name && structuralSubsumes(c->kids[0], atom->kids[0]);
        return false;
    };
    if (d->kind == Kind::And) {
        for (auto& k : d->kids)
            if (!holdsAt(k)) return false;
        return true;
    }
    return holdsAt(d);
}

} // namespace dla
