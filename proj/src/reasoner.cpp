#include "dlapprox/reasoner.hpp"

#include <algorithm>
#include <functional>

#include "dlapprox/errors.hpp"

namespace dla {

Reasoner::Reasoner(const Ontology& o, std::vector<ConceptPtr> seeds, ReasonerCaps caps)
    : onto_(o), caps_(caps), inclusions_(o.inclusions()) {
    buildClosure(seeds);
    enumerateTypes();
    buildEdges();
    eliminate();

    // Surviving-type columns.
    cols_.assign(closure_.size(), Bits(types_.size()));
    for (std::size_t t = 0; t < types_.size(); ++t)
        for (std::size_t i = 0; i < closure_.size(); ++i)
            if (types_[t].test(i)) cols_[i].set(t);

    // sub^- projection table.
    ConceptSet sm = subMinus(onto_);
    for (auto& c : sm) {
        auto it = closureIdx_.find(c);
        if (it == closureIdx_.end()) continue;
        subMinusIdx_.push_back(it->second);
        subMinusIsEl_.push_back(conceptFragment(c) == Fragment::EL);
        subMinusList_.push_back(c);
    }
}

void Reasoner::buildClosure(const std::vector<ConceptPtr>& seeds) {
    ConceptSet set;
    set.insert(Concept::top());
    set.insert(Concept::bot());
    for (auto& ax : inclusions_) {
        collectSubconcepts(ax.lhs, set);
        collectSubconcepts(ax.rhs, set);
    }
    for (auto& n : onto_.signature().conceptNames) set.insert(Concept::named(n));
    for (auto& s : seeds) collectSubconcepts(s, set);
    if (set.size() > caps_.maxClosure)
        throw ResourceError("closure size cap exceeded: " + std::to_string(set.size()));

    closure_.assign(set.begin(), set.end());
    std::stable_sort(closure_.begin(), closure_.end(),
                     [](const ConceptPtr& a, const ConceptPtr& b) {
                         long long sa = conceptSize(a), sb = conceptSize(b);
                         if (sa != sb) return sa < sb;
                         return compare(a, b) < 0;
                     });
    for (std::size_t i = 0; i < closure_.size(); ++i)
        closureIdx_.emplace(closure_[i], static_cast<int>(i));

    std::set<std::string> roles;
    for (std::size_t i = 0; i < closure_.size(); ++i) {
        auto& c = closure_[i];
        if (c->kind == Kind::Name || c->kind == Kind::Exists || c->kind == Kind::Forall)
            atomIdx_.push_back(static_cast<int>(i));
        if (c->kind == Kind::Exists || c->kind == Kind::Forall) roles.insert(c->name);
    }
    for (auto& s : onto_.signature().roleNames) roles.insert(s);
    roleNames_.assign(roles.begin(), roles.end());
    for (std::size_t i = 0; i < roleNames_.size(); ++i)
        roleIdx_[roleNames_[i]] = static_cast<int>(i);

    if (atomIdx_.size() > caps_.maxAtoms)
        throw ResourceError("type-atom cap exceeded: " + std::to_string(atomIdx_.size()) +
                            " atoms (cap " + std::to_string(caps_.maxAtoms) + ")");
}

void Reasoner::enumerateTypes() {
    const std::size_t k = atomIdx_.size();
    const std::size_t n = closure_.size();
    std::vector<char> val(n);
    std::vector<std::pair<int, int>> cons;
    for (auto& ax : inclusions_)
        cons.push_back({closureIdx_.at(ax.lhs), closureIdx_.at(ax.rhs)});

    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        for (std::size_t a = 0; a < k; ++a)
            val[atomIdx_[a]] = (mask >> a) & 1;
        // closure_ is ordered children-before-parents (by size), so one pass
        // evaluates every compound.
        for (std::size_t i = 0; i < n; ++i) {
            auto& c = closure_[i];
            switch (c->kind) {
                case Kind::Top: val[i] = 1; break;
                case Kind::Bot: val[i] = 0; break;
                case Kind::Name:
                case Kind::Exists:
                case Kind::Forall:
                    break;
                case Kind::Not:
                    val[i] = !val[closureIdx_.at(c->kids[0])];
                    break;
                case Kind::And: {
                    char v = 1;
                    for (auto& kd : c->kids) v = v && val[closureIdx_.at(kd)];
                    val[i] = v;
                    break;
                }
                case Kind::Or: {
                    char v = 0;
                    for (auto& kd : c->kids) v = v || val[closureIdx_.at(kd)];
                    val[i] = v;
                    break;
                }
            }
        }
        bool ok = true;
        for (auto& [l, r] : cons)
            if (val[l] && !val[r]) { ok = false; break; }
        if (!ok) continue;
        Bits t(n);
        for (std::size_t i = 0; i < n; ++i)
            if (val[i]) t.set(i);
        types_.push_back(std::move(t));
        if (types_.size() > caps_.maxTypes)
            throw ResourceError("type count cap exceeded");
    }
}

void Reasoner::buildEdges() {
    const std::size_t nt = types_.size();
    const std::size_t nr = roleNames_.size();
    succ_.assign(nr, std::vector<Bits>(nt, Bits(nt)));
    claims_.assign(nr, std::vector<std::vector<int>>(nt));
    antiClaims_.assign(nr, std::vector<std::vector<int>>(nt));

    struct Restriction { int self; int arg; bool isExists; };
    std::vector<std::vector<Restriction>> byRole(nr);
    for (std::size_t i = 0; i < closure_.size(); ++i) {
        auto& c = closure_[i];
        if (c->kind == Kind::Exists || c->kind == Kind::Forall)
            byRole[roleIdx_.at(c->name)].push_back(
                {static_cast<int>(i), closureIdx_.at(c->kids[0]), c->kind == Kind::Exists});
    }

    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t t = 0; t < nt; ++t) {
            Bits req(closure_.size()), forb(closure_.size());
            for (auto& rs : byRole[r]) {
                if (rs.isExists) {
                    if (types_[t].test(rs.self))
                        claims_[r][t].push_back(rs.arg);
                    else
                        forb.set(rs.arg);
                } else {
                    if (types_[t].test(rs.self))
                        req.set(rs.arg);
                    else
                        antiClaims_[r][t].push_back(rs.arg);
                }
            }
            for (std::size_t u = 0; u < nt; ++u)
                if (req.subsetOf(types_[u]) && !types_[u].intersects(forb))
                    succ_[r][t].set(u);
        }
    }
}

void Reasoner::eliminate() {
    const std::size_t nt = types_.size();
    std::vector<char> alive(nt, 1);
    Bits aliveBits(nt, true);
    std::vector<Bits> col(closure_.size(), Bits(nt));
    for (std::size_t t = 0; t < nt; ++t)
        for (std::size_t i = 0; i < closure_.size(); ++i)
            if (types_[t].test(i)) col[i].set(t);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t < nt; ++t) {
            if (!alive[t]) continue;
            bool ok = true;
            for (std::size_t r = 0; r < roleNames_.size() && ok; ++r) {
                for (int e : claims_[r][t]) {
                    Bits w = succ_[r][t];
                    w &= aliveBits;
                    w &= col[e];
                    if (w.none()) { ok = false; break; }
                }
                if (!ok) break;
                for (int d : antiClaims_[r][t]) {
                    Bits w = succ_[r][t];
                    w &= aliveBits;
                    w.andNot(col[d]);
                    if (w.none()) { ok = false; break; }
                }
            }
            if (!ok) {
                alive[t] = 0;
                aliveBits.reset(t);
                changed = true;
            }
        }
    }

    std::vector<int> remap(nt, -1);
    std::vector<Bits> kept;
    for (std::size_t t = 0; t < nt; ++t)
        if (alive[t]) {
            remap[t] = static_cast<int>(kept.size());
            kept.push_back(types_[t]);
        }
    const std::size_t ns = kept.size();
    std::vector<std::vector<Bits>> succ2(roleNames_.size(), std::vector<Bits>(ns, Bits(ns)));
    std::vector<std::vector<std::vector<int>>> claims2(roleNames_.size(),
                                                       std::vector<std::vector<int>>(ns));
    std::vector<std::vector<std::vector<int>>> anti2(roleNames_.size(),
                                                     std::vector<std::vector<int>>(ns));
    for (std::size_t r = 0; r < roleNames_.size(); ++r)
        for (std::size_t t = 0; t < nt; ++t) {
            if (remap[t] < 0) continue;
            claims2[r][remap[t]] = claims_[r][t];
            anti2[r][remap[t]] = antiClaims_[r][t];
            succ_[r][t].forEach([&](std::size_t u) {
                if (remap[u] >= 0) succ2[r][remap[t]].set(remap[u]);
            });
        }
    types_ = std::move(kept);
    succ_ = std::move(succ2);
    claims_ = std::move(claims2);
    antiClaims_ = std::move(anti2);
}

int Reasoner::closureIndex(const ConceptPtr& c) const {
    auto it = closureIdx_.find(c);
    return it == closureIdx_.end() ? -1 : it->second;
}

bool Reasoner::inClosure(const ConceptPtr& c) const { return closureIndex(c) >= 0; }

Bits Reasoner::typesContaining(const ConceptPtr& c) const {
    int i = closureIndex(c);
    if (i < 0) throw ContractError("concept not in closure: " + render(c));
    return cols_[i];
}

bool Reasoner::satisfiableInClosure(const ConceptPtr& c) const {
    return typesContaining(c).any();
}

bool Reasoner::subsumesInClosure(const ConceptPtr& c, const ConceptPtr& d) const {
    int ic = closureIndex(c), id = closureIndex(d);
    if (ic < 0 || id < 0) throw ContractError("concept not in closure");
    Bits bad = cols_[ic];
    bad.andNot(cols_[id]);
    return bad.none();
}

bool Reasoner::typeClaims(std::size_t type, const std::string& role) const {
    auto it = roleIdx_.find(role);
    if (it == roleIdx_.end()) return false;
    return !claims_[it->second][type].empty();
}

std::vector<int> Reasoner::existClaimsOf(std::size_t type, const std::string& role) const {
    auto it = roleIdx_.find(role);
    if (it == roleIdx_.end()) return {};
    return claims_[it->second][type];
}

Bits Reasoner::witnessesFor(std::size_t type, const std::string& role, int claimIdx) const {
    auto it = roleIdx_.find(role);
    if (it == roleIdx_.end()) return Bits(types_.size());
    Bits w = succ_[it->second][type];
    w &= cols_[claimIdx];
    return w;
}

Bits Reasoner::succOf(std::size_t type, const std::string& role) const {
    auto it = roleIdx_.find(role);
    if (it == roleIdx_.end()) return Bits(types_.size(), true);
    return succ_[it->second][type];
}

Bits Reasoner::witnessSuccessors(std::size_t type, const std::string& role) const {
    Bits out(types_.size());
    auto it = roleIdx_.find(role);
    if (it == roleIdx_.end()) return out;
    for (int e : claims_[it->second][type]) {
        Bits w = succ_[it->second][type];
        w &= cols_[e];
        out |= w;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Probe evaluation.

namespace {

std::string avoidKey(const std::vector<ConceptPtr>& ds) {
    std::string k;
    for (auto& d : ds) {
        k += render(d);
        k += '|';
    }
    return k;
}

bool normalizeAvoid(const std::vector<ConceptPtr>& in, std::vector<ConceptPtr>& out) {
    for (auto& d : in) {
        switch (d->kind) {
            case Kind::Bot: break;
            case Kind::Top: return false;
            case Kind::Or: {
                std::vector<ConceptPtr> kids(d->kids.begin(), d->kids.end());
                if (!normalizeAvoid(kids, out)) return false;
                break;
            }
            case Kind::Not:
            case Kind::Forall:
                throw Reasoner::FastPathMiss{};
            default:
                out.push_back(d);
        }
    }
    std::sort(out.begin(), out.end(), ConceptLess{});
    out.erase(std::unique(out.begin(), out.end(), ConceptEq{}), out.end());
    return true;
}

} // namespace

// One way of violating the avoided concepts at a point: closure bits that
// must be off, conjunctions over closure bits of which at least one member
// must be off, plus, per role, concepts every successor must avoid.
struct Reasoner::AvoidSpec {
    std::vector<int> missIdx;
    std::vector<std::vector<int>> missConjs;
    std::map<std::string, std::vector<ConceptPtr>> oblig;
};

namespace {

void mergeSpec(Reasoner::AvoidSpec& into, const Reasoner::AvoidSpec& from) {
    into.missIdx.insert(into.missIdx.end(), from.missIdx.begin(), from.missIdx.end());
    into.missConjs.insert(into.missConjs.end(), from.missConjs.begin(),
                          from.missConjs.end());
    for (auto& [r, v] : from.oblig) {
        auto& dst = into.oblig[r];
        dst.insert(dst.end(), v.begin(), v.end());
    }
}

} // namespace

Bits Reasoner::satTypes(const ConceptPtr& c) { return satTypesAvoiding(c, {}); }

Bits Reasoner::satTypesAvoiding(const ConceptPtr& c, const std::vector<ConceptPtr>& avoid) {
    std::vector<ConceptPtr> ds;
    if (!normalizeAvoid(avoid, ds)) return Bits(types_.size());
    return stAvoidImpl(c, avoidKey(ds), ds);
}

Bits Reasoner::stAvoidImpl(const ConceptPtr& c, const std::string& dsKey,
                           const std::vector<ConceptPtr>& ds) {
    const std::string memoKey = render(c) + "\n" + dsKey;
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = stMemo_.find(memoKey);
        if (it != stMemo_.end()) return it->second;
    }

    Bits result(types_.size());
    if (c->kind == Kind::Or) {
        for (auto& k : c->kids) result |= stAvoidImpl(k, dsKey, ds);
    } else if (c->kind == Kind::Bot) {
        // empty
    } else if (c->kind == Kind::Not || c->kind == Kind::Forall) {
        throw FastPathMiss{};
    } else {
        std::vector<ConceptPtr> parts =
            c->kind == Kind::And ? std::vector<ConceptPtr>(c->kids.begin(), c->kids.end())
                                 : std::vector<ConceptPtr>{c};
        // Distribute over a disjunctive conjunct, if any.
        ConceptPtr orPart;
        for (auto& p : parts)
            if (p->kind == Kind::Or) { orPart = p; break; }
        if (orPart) {
            for (auto& branch : orPart->kids) {
                std::vector<ConceptPtr> kids;
                for (auto& p : parts)
                    kids.push_back(p.get() == orPart.get() ? branch : p);
                result |= stAvoidImpl(Concept::conj(std::move(kids)), dsKey, ds);
            }
        } else {
            std::vector<ConceptPtr> names;
            std::vector<std::pair<std::string, ConceptPtr>> children;
            bool isBot = false;
            for (auto& p : parts) {
                switch (p->kind) {
                    case Kind::Top: break;
                    case Kind::Bot: isBot = true; break;
                    case Kind::Name: names.push_back(p); break;
                    case Kind::Exists: children.push_back({p->name, p->kids[0]}); break;
                    case Kind::Not:
                    case Kind::Forall: throw FastPathMiss{};
                    default: break;
                }
            }
            if (!isBot) {
                Bits base(types_.size(), true);
                for (auto& n : names) {
                    int i = closureIndex(n);
                    if (i < 0) throw FastPathMiss{};
                    base &= cols_[i];
                }

                // Ways to violate one concept at this point.
                std::function<std::vector<AvoidSpec>(const ConceptPtr&)> alternatives =
                    [&](const ConceptPtr& m) -> std::vector<AvoidSpec> {
                    std::vector<AvoidSpec> out;
                    if (m->kind == Kind::Top) return out; // unavoidable
                    if (m->kind == Kind::Bot) {
                        out.push_back({});
                        return out;
                    }
                    int ci = closureIndex(m);
                    if (ci >= 0) {
                        AvoidSpec s;
                        s.missIdx.push_back(ci);
                        out.push_back(std::move(s));
                        return out;
                    }
                    switch (m->kind) {
                        case Kind::Exists: {
                            AvoidSpec s;
                            s.oblig[m->name].push_back(m->kids[0]);
                            out.push_back(std::move(s));
                            return out;
                        }
                        case Kind::And: {
                            // all conjuncts indexed: a single mask test
                            // ("some member is off") avoids the conjunction
                            std::vector<int> idx;
                            bool allIndexed = true;
                            for (auto& k : m->kids) {
                                int ki = closureIndex(k);
                                if (ki < 0) { allIndexed = false; break; }
                                idx.push_back(ki);
                            }
                            if (allIndexed) {
                                AvoidSpec s;
                                s.missConjs.push_back(std::move(idx));
                                out.push_back(std::move(s));
                                return out;
                            }
                            for (auto& k : m->kids)
                                for (auto& s : alternatives(k)) out.push_back(s);
                            return out;
                        }
                        case Kind::Or: {
                            // avoid every disjunct: product of alternatives
                            std::vector<AvoidSpec> acc{AvoidSpec{}};
                            for (auto& k : m->kids) {
                                auto alts = alternatives(k);
                                std::vector<AvoidSpec> next;
                                for (auto& a : acc)
                                    for (auto& b : alts) {
                                        AvoidSpec merged = a;
                                        mergeSpec(merged, b);
                                        next.push_back(std::move(merged));
                                    }
                                acc = std::move(next);
                                if (acc.size() > 256)
                                    throw ResourceError("avoid expansion cap exceeded");
                            }
                            return acc;
                        }
                        case Kind::Name:
                        default:
                            throw FastPathMiss{};
                    }
                };

                std::vector<AvoidSpec> tuples{AvoidSpec{}};
                for (auto& m : ds) {
                    auto alts = alternatives(m);
                    std::vector<AvoidSpec> next;
                    for (auto& a : tuples)
                        for (auto& b : alts) {
                            AvoidSpec merged = a;
                            mergeSpec(merged, b);
                            next.push_back(std::move(merged));
                        }
                    tuples = std::move(next);
                    if (tuples.size() > 1024)
                        throw ResourceError("avoid expansion cap exceeded");
                }

                for (auto& tup : tuples) {
                    Bits cand = base;
                    for (int mi : tup.missIdx) cand.andNot(cols_[mi]);
                    for (auto& conj : tup.missConjs) {
                        Bits all(types_.size(), true);
                        for (int mi : conj) all &= cols_[mi];
                        cand.andNot(all);
                    }
                    if (cand.none()) continue;

                    bool dead = false;
                    std::vector<std::pair<std::string, Bits>> childSets;
                    for (auto& [role, arg] : children) {
                        auto it = tup.oblig.find(role);
                        std::vector<ConceptPtr> sub =
                            it == tup.oblig.end() ? std::vector<ConceptPtr>{} : it->second;
                        std::vector<ConceptPtr> norm;
                        Bits childBits(types_.size());
                        if (normalizeAvoid(sub, norm))
                            childBits = stAvoidImpl(arg, avoidKey(norm), norm);
                        if (childBits.none()) { dead = true; break; }
                        childSets.push_back({role, std::move(childBits)});
                    }
                    if (dead) continue;

                    std::map<std::string, Bits> badSets;
                    for (auto& [role, sub] : tup.oblig) {
                        std::vector<ConceptPtr> norm;
                        if (!normalizeAvoid(sub, norm))
                            badSets[role] = Bits(types_.size());
                        else
                            badSets[role] = stAvoidImpl(Concept::top(), avoidKey(norm), norm);
                    }

                    Bits pass(types_.size());
                    // resolve role ids once; unknown roles have free edges
                    std::vector<std::pair<int, const Bits*>> childById;
                    bool childFree = false;
                    for (auto& [role, bits] : childSets) {
                        auto rit = roleIdx_.find(role);
                        if (rit == roleIdx_.end()) {
                            if (bits.none()) childFree = true; // unattachable
                            continue; // free edges: attachable iff bits.any()
                        }
                        childById.push_back({rit->second, &bits});
                    }
                    std::vector<std::pair<int, const Bits*>> badById;
                    for (auto& [role, bad] : badSets) {
                        auto rit = roleIdx_.find(role);
                        if (rit == roleIdx_.end()) continue;
                        badById.push_back({rit->second, &bad});
                    }
                    if (!childFree) cand.forEach([&](std::size_t t) {
                        for (auto& [r, bits] : childById)
                            if (!Bits::anyAnd3(succ_[r][t], *bits, *bits)) return;
                        for (auto& [r, bad] : badById) {
                            for (int e : claims_[r][t])
                                if (!Bits::anyAnd3(succ_[r][t], cols_[e], *bad)) return;
                            for (int d : antiClaims_[r][t])
                                if (!Bits::anyAndAndNot(succ_[r][t], *bad, cols_[d]))
                                    return;
                        }
                        pass.set(t);
                    });
                    result |= pass;
                }
            }
        }
    }

    std::lock_guard<std::mutex> lk(mu_);
    if (stMemo_.size() >= caps_.memoCap) stMemo_.clear();
    stMemo_.emplace(memoKey, result);
    return result;
}

Disjunction Reasoner::semanticDisjunction(const ConceptPtr& c, bool elOnly) {
    const std::string key = std::string(elOnly ? "E|" : "F|") + render(c);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = disMemo_.find(key);
        if (it != disMemo_.end()) return it->second;
    }
    Bits ts = satTypes(c);
    std::set<std::vector<int>> projections;
    ts.forEach([&](std::size_t t) {
        std::vector<int> p;
        for (std::size_t j = 0; j < subMinusIdx_.size(); ++j) {
            if (elOnly && !subMinusIsEl_[j]) continue;
            if (types_[t].test(subMinusIdx_[j])) p.push_back(subMinusIdx_[j]);
        }
        projections.insert(std::move(p));
    });
    std::vector<std::vector<int>> minimal;
    for (auto& p : projections) {
        bool dominated = false;
        for (auto& q : projections) {
            if (&q == &p) continue;
            if (q.size() < p.size() && std::includes(p.begin(), p.end(), q.begin(), q.end())) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(p);
    }
    std::vector<std::vector<ConceptPtr>> disjuncts;
    for (auto& p : minimal) {
        std::vector<ConceptPtr> atoms;
        for (int i : p) atoms.push_back(closure_[i]);
        if (atoms.empty()) atoms.push_back(Concept::top());
        disjuncts.push_back(std::move(atoms));
    }
    Disjunction d(std::move(disjuncts));
    std::lock_guard<std::mutex> lk(mu_);
    disMemo_.emplace(key, d);
    return d;
}

// ---------------------------------------------------------------------------
// Shared entry points.

namespace {

struct CacheEntry {
    std::string key;
    std::shared_ptr<Reasoner> engine;
};

std::mutex g_cacheMu;
std::vector<CacheEntry> g_cache;

std::string ontologyKey(const Ontology& o) {
    std::string k;
    for (auto& ax : o.axioms()) {
        k += render(ax.lhs);
        k += ax.kind == AxiomKind::Equivalence ? '=' : '<';
        k += render(ax.rhs);
        k += '\n';
    }
    return k;
}

} // namespace

std::shared_ptr<Reasoner> sharedReasoner(const Ontology& o, ReasonerCaps caps) {
    const std::string key = ontologyKey(o);
    {
        std::lock_guard<std::mutex> lk(g_cacheMu);
        for (auto& e : g_cache)
            if (e.key == key) return e.engine;
    }
    auto engine = std::make_shared<Reasoner>(o, std::vector<ConceptPtr>{}, caps);
    std::lock_guard<std::mutex> lk(g_cacheMu);
    g_cache.push_back({key, engine});
    if (g_cache.size() > 16) g_cache.erase(g_cache.begin());
    return engine;
}

void clearReasonerCache() {
    std::lock_guard<std::mutex> lk(g_cacheMu);
    g_cache.clear();
}

bool alcSatisfiable(const Ontology& o, const ConceptPtr& c, ReasonerCaps caps) {
    auto engine = sharedReasoner(o, caps);
    try {
        return engine->satTypes(c).any();
    } catch (const Reasoner::FastPathMiss&) {
        Reasoner seeded(o, {c}, caps);
        return seeded.satisfiableInClosure(c);
    }
}

bool alcSubsumes(const Ontology& o, const ConceptPtr& c, const ConceptPtr& d, ReasonerCaps caps) {
    auto engine = sharedReasoner(o, caps);
    try {
        return engine->satTypesAvoiding(c, {d}).none();
    } catch (const Reasoner::FastPathMiss&) {
        auto lhs = Concept::conj({c, Concept::negation(d)});
        Reasoner seeded(o, {lhs, c, d}, caps);
        return !seeded.satisfiableInClosure(lhs);
    }
}

bool alcEquivalent(const Ontology& o, const ConceptPtr& c, const ConceptPtr& d, ReasonerCaps caps) {
    return alcSubsumes(o, c, d, caps) && alcSubsumes(o, d, c, caps);
}

Disjunction semanticDisjunction(const Ontology& o, const ConceptPtr& c, bool elOnly,
                                ReasonerCaps caps) {
    return sharedReasoner(o, caps)->semanticDisjunction(c, elOnly);
}

} // namespace dla
