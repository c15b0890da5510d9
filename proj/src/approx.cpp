#include "dlapprox/approx.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "dlapprox/analysis.hpp"
#include "dlapprox/errors.hpp"

#include "json.hpp"

namespace dla {

const char* schemeName(Scheme s) {
    switch (s) {
        case Scheme::Fig1: return "fig1";
        case Scheme::Fig2: return "fig2";
        case Scheme::Fig3: return "fig3";
        case Scheme::Fig4: return "fig4";
        case Scheme::Minus: return "minus";
        case Scheme::Acyclic: return "acyclic";
        case Scheme::Cnf: return "cnf";
    }
    return "?";
}

std::optional<Scheme> schemeFromName(const std::string& s) {
    if (s == "fig1") return Scheme::Fig1;
    if (s == "fig2") return Scheme::Fig2;
    if (s == "fig3") return Scheme::Fig3;
    if (s == "fig4") return Scheme::Fig4;
    if (s == "minus") return Scheme::Minus;
    if (s == "acyclic") return Scheme::Acyclic;
    if (s == "cnf") return Scheme::Cnf;
    return std::nullopt;
}

bool isGeneratable(const Ontology& o, const ConceptPtr& c, ReasonerCaps caps) {
    if (!fragmentLeq(conceptFragment(c), Fragment::EL))
        throw ContractError("generatable test expects an EL concept");
    for (auto& ex : rhsExistentials(o))
        if (alcSubsumes(o, ex->kids[0], c, caps)) return true;
    return false;
}

GeneratableCensus enumerateGeneratable(const Ontology& o, int depthCap,
                                       const UniverseCaps& caps, ReasonerCaps rcaps) {
    UniverseCaps uc = caps;
    uc.maxDepth = depthCap;
    uc.includeBot = false;
    auto sig = o.signature();
    Universe u = enumerateConcepts({sig.conceptNames.begin(), sig.conceptNames.end()},
                                   {sig.roleNames.begin(), sig.roleNames.end()}, uc);
    GeneratableCensus out;
    out.truncated = u.truncated;
    ConceptSet rhsEx = rhsExistentials(o);
    if (rhsEx.empty()) return out;
    for (auto& c : u.concepts) {
        bool gen = false;
        for (auto& ex : rhsEx)
            if (alcSubsumes(o, ex->kids[0], c, rcaps)) { gen = true; break; }
        if (gen) out.representatives.push_back(c);
    }
    return out;
}

namespace {

struct Emitter {
    const Ontology& src; // left-hand sides already disjunction free
    const ApproxConfig& cfg;
    FreshNameRegistry& reg;
    std::shared_ptr<Reasoner> R;
    bool bot = false;

    ConceptSet subMinusSet;
    std::vector<ConceptPtr> subMinusNoTop;
    std::vector<std::string> roles;

    std::vector<std::pair<Axiom, std::string>> out;
    std::set<std::string> axiomKeys;
    std::vector<std::string> truncation;

    std::map<std::string, Disjunction> active;
    std::deque<Disjunction> pending;
    std::set<std::string> known;

    std::vector<ConceptPtr> contexts;     // conjunction contexts (concepts)
    std::set<std::string> contextKeys;
    std::set<std::string> pairsDone;      // dKey + "#" + ctxKey
    std::set<std::string> line3Done;      // dKey + "#" + role
    std::set<std::string> extractDone;

    Emitter(const Ontology& s, const ApproxConfig& c, FreshNameRegistry& r)
        : src(s), cfg(c), reg(r) {
        R = sharedReasoner(src, cfg.reasonerCaps);
        subMinusSet = subMinus(src);
        for (auto& m : subMinusSet)
            if (m->kind != Kind::Top) subMinusNoTop.push_back(m);
        auto sig = src.signature();
        roles.assign(sig.roleNames.begin(), sig.roleNames.end());
    }

    ConceptPtr up(const ConceptPtr& c) { return uparrow(c, reg, &subMinusSet, bot); }
    ConceptPtr up(const Disjunction& d) { return uparrow(d, reg, &subMinusSet, bot); }

    void note(const std::string& t) {
        for (auto& e : truncation)
            if (e == t) return;
        truncation.push_back(t);
    }

    bool sideHolds(const ConceptPtr& lhs, const ConceptPtr& rhs) {
        return alcSubsumes(src, downarrow(lhs, reg), downarrow(rhs, reg), cfg.reasonerCaps);
    }

    void emit(ConceptPtr lhs, ConceptPtr rhs, const std::string& tag) {
        if (rhs->kind == Kind::Top) return;
        if (compare(lhs, rhs) == 0) return;
        Axiom ax{AxiomKind::Inclusion, lhs, rhs};
        std::string key = render(lhs) + "<" + render(rhs);
        if (!axiomKeys.insert(key).second) return;
        if (!sideHolds(lhs, rhs))
            throw ContractError("unsound candidate axiom: " + key);
        out.push_back({std::move(ax), tag});
    }

    void collectNewX(const ConceptPtr& c) {
        if (c->kind == Kind::Name) {
            if (!c->name.empty() && c->name[0] == 'X') {
                auto def = reg.definitionOf(c->name);
                if (def) addActive(Disjunction::fromConcept(def, bot));
            }
            return;
        }
        for (auto& k : c->kids) collectNewX(k);
    }

    void addActive(const Disjunction& d) {
        if (!d.inDisMinus()) return;
        std::string key = d.key();
        if (!known.insert(key).second) return;
        pending.push_back(d);
    }

    void addContext(const ConceptPtr& c) {
        if (c->kind == Kind::Top) return;
        std::string key = render(c);
        if (!contextKeys.insert(key).second) return;
        contexts.push_back(c);
    }

    void seedContexts() {
        // Top first: the (D, Top) pair emits X_D [= Dis_O(D)^.
        contextKeys.insert(render(Concept::top()));
        contexts.push_back(Concept::top());
        // sub^- conjunctions
        std::size_t n = subMinusNoTop.size();
        if (n <= cfg.ctxBits) {
            for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
                std::vector<ConceptPtr> conj;
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (1ull << i)) conj.push_back(subMinusNoTop[i]);
                addContext(Concept::conj(std::move(conj)));
            }
        } else {
            note("context powerset truncated to pairs (|sub^-| = " + std::to_string(n) + ")");
            for (std::size_t i = 0; i < n; ++i) {
                addContext(subMinusNoTop[i]);
                for (std::size_t j = i + 1; j < n; ++j)
                    addContext(Concept::conj({subMinusNoTop[i], subMinusNoTop[j]}));
            }
        }
        // existential arguments of the source
        for (auto& s : subconcepts(src))
            if (s->kind == Kind::Exists) addContext(s->kids[0]);
    }

    void argContextsOf(const Disjunction& d) {
        for (auto& atom : d.atoms())
            if (atom->kind == Kind::Exists) addContext(atom->kids[0]);
    }

    // Atoms the left-hand side guarantees syntactically (context atoms plus
    // the named disjunction's common atoms, which flow through extraction).
    static void guaranteedAtoms(const ConceptPtr& ctx, ConceptSet& out) {
        switch (ctx->kind) {
            case Kind::Name:
            case Kind::Exists:
                out.insert(ctx);
                return;
            case Kind::And:
                for (auto& k : ctx->kids)
                    if (k->kind == Kind::Name || k->kind == Kind::Exists) out.insert(k);
                return;
            case Kind::Or: {
                Disjunction d = Disjunction::fromConcept(ctx, false);
                for (auto& a : d.commonAtoms()) out.insert(a);
                return;
            }
            default:
                return;
        }
    }

    // Canonical right-hand side for a semantic-disjunction target: atoms the
    // left-hand side already guarantees are stripped, common atoms of the
    // target come out as plain conjuncts, and only the reduced disjunction
    // gets a name. Cuts the minted-name space down to a small quotient.
    ConceptPtr reducedTarget(const Disjunction& tgt, const ConceptSet& guaranteed) {
        if (tgt.isBottom()) return Concept::bot();
        ConceptSet commons;
        for (auto& a : tgt.commonAtoms())
            if (a->kind != Kind::Top) commons.insert(a);
        std::vector<ConceptPtr> rhsParts;
        for (auto& a : commons)
            if (!guaranteed.count(a)) rhsParts.push_back(up(a));
        bool trivial = false;
        std::vector<std::vector<ConceptPtr>> red;
        for (auto& disjunct : tgt.disjuncts()) {
            std::vector<ConceptPtr> rest;
            for (auto& a : disjunct)
                if (a->kind != Kind::Top && !commons.count(a) && !guaranteed.count(a))
                    rest.push_back(a);
            if (rest.empty()) { trivial = true; break; }
            red.push_back(std::move(rest));
        }
        if (!trivial) {
            Disjunction reduced(std::move(red));
            rhsParts.push_back(up(reduced));
        }
        return Concept::conj(std::move(rhsParts));
    }

    // line 2 instance: X_D and ctx^ [= Dis_O(D and ctx)^
    void pairLine2(const Disjunction& d, const ConceptPtr& ctx) {
        std::string pk = d.key() + "#" + render(ctx);
        if (!pairsDone.insert(pk).second) return;
        ConceptPtr lhsProbe = Concept::conj({d.asConcept(), ctx});
        Disjunction tgt = R->semanticDisjunction(lhsProbe, false);
        ConceptPtr xD = Concept::named(reg.mint('X', d.asConcept()));
        ConceptPtr ctxUp = up(ctx);
        collectNewX(ctxUp);
        ConceptPtr lhs = Concept::conj({xD, ctxUp});
        if (tgt.isBottom()) {
            emit(lhs, Concept::bot(), "line2");
            return;
        }
        ConceptSet guaranteed;
        guaranteedAtoms(ctx, guaranteed);
        for (auto& a : d.commonAtoms())
            if (a->kind != Kind::Top) guaranteed.insert(a);
        ConceptPtr rhs = reducedTarget(tgt, guaranteed);
        if (rhs->kind == Kind::Top) return;
        collectNewX(rhs);
        emit(lhs, rhs, "line2");
    }

    void line3(const Disjunction& d, const std::string& role) {
        std::string k = d.key() + "#" + role;
        if (!line3Done.insert(k).second) return;
        ConceptPtr probe = Concept::exists(role, d.asConcept());
        Disjunction tgt = R->semanticDisjunction(probe, false);
        ConceptPtr xD = Concept::named(reg.mint('X', d.asConcept()));
        ConceptPtr lhs = Concept::exists(role, xD);
        if (tgt.isBottom()) {
            emit(lhs, Concept::bot(), "line3");
            return;
        }
        ConceptPtr rhs = reducedTarget(tgt, {});
        if (rhs->kind == Kind::Top) return;
        collectNewX(rhs);
        emit(lhs, rhs, "line3");
    }

    void extraction(const Disjunction& d) {
        if (!extractDone.insert(d.key()).second) return;
        ConceptPtr xD = Concept::named(reg.mint('X', d.asConcept()));
        for (auto& atom : d.commonAtoms()) {
            if (atom->kind == Kind::Top) continue;
            ConceptPtr rhs = up(atom);
            collectNewX(rhs);
            emit(xD, rhs, "line2");
        }
    }

    void saturate() {
        for (;;) {
            if (pending.empty()) {
                // pair any unpaired (active, context) combinations
                bool fired = false;
                for (auto& [k, d] : active) {
                    for (std::size_t ci = 0; ci < contexts.size(); ++ci) {
                        std::string pk = k + "#" + render(contexts[ci]);
                        if (pairsDone.count(pk)) continue;
                        pairLine2(d, contexts[ci]);
                        fired = true;
                    }
                    if (!pending.empty()) break;
                }
                if (pending.empty() && !fired) break;
                continue;
            }
            if (active.size() >= cfg.disCap) {
                note("named-disjunction cap reached (" + std::to_string(active.size()) + ")");
                pending.clear();
                break;
            }
            Disjunction d = pending.front();
            pending.pop_front();
            active.emplace(d.key(), d);
            argContextsOf(d);
            addContext(d.asConcept()); // pairs with other X's flow through contexts
            extraction(d);
            for (auto& r : roles) line3(d, r);
            for (std::size_t ci = 0; ci < contexts.size(); ++ci) pairLine2(d, contexts[ci]);
        }
    }

    // Optimized scheme extra line: X_D [= exists r. D1^ when src |= D [= er.D1.
    void line4Optimized() {
        std::vector<ConceptPtr> candidates;
        candidates.push_back(Concept::top());
        for (auto& ctx : contexts) candidates.push_back(ctx);
        for (auto& [k, d] : active) {
            ConceptPtr dc = d.asConcept();
            ConceptPtr xD = Concept::named(reg.mint('X', dc));
            for (auto& role : roles) {
                for (auto& cand : candidates) {
                    if (!alcSubsumes(src, dc, Concept::exists(role, cand), cfg.reasonerCaps))
                        continue;
                    ConceptPtr rhs = Concept::exists(role, up(cand));
                    collectNewX(rhs);
                    emit(xD, rhs, "line4");
                }
            }
        }
    }

    // All concepts obtained by dropping one atom (anywhere) from c.
    static std::vector<ConceptPtr> oneStepWeakenings(const ConceptPtr& c) {
        std::vector<ConceptPtr> out;
        switch (c->kind) {
            case Kind::Name:
            case Kind::Or: // decorations: dropping the decoration entirely
                out.push_back(Concept::top());
                return out;
            case Kind::Exists: {
                for (auto& w : oneStepWeakenings(c->kids[0]))
                    out.push_back(Concept::exists(c->name, w));
                out.push_back(Concept::top());
                return out;
            }
            case Kind::And: {
                for (std::size_t i = 0; i < c->kids.size(); ++i) {
                    std::vector<ConceptPtr> rest;
                    for (std::size_t k = 0; k < c->kids.size(); ++k)
                        if (k != i) rest.push_back(c->kids[k]);
                    out.push_back(Concept::conj(std::vector<ConceptPtr>(rest)));
                    for (auto& w : oneStepWeakenings(c->kids[i])) {
                        if (w->kind == Kind::Top) continue;
                        auto kids = rest;
                        kids.push_back(w);
                        out.push_back(Concept::conj(std::move(kids)));
                    }
                }
                return out;
            }
            default:
                return out;
        }
    }

    // Decorations at a leaf E are useful only when E does not already entail
    // the disjunction (otherwise the undecorated instance is strictly more
    // applicable) and the combination is satisfiable.
    std::vector<ConceptPtr> leafChoices(const ConceptPtr& leaf,
                                        const std::vector<Disjunction>& decorations) {
        std::vector<ConceptPtr> out{leaf};
        int used = 0;
        for (auto& d : decorations) {
            ConceptPtr dc = d.asConcept();
            if (alcSubsumes(src, leaf, dc, cfg.reasonerCaps)) continue;
            ConceptPtr both = Concept::conj({leaf, dc});
            if (bot && !alcSatisfiable(src, both, cfg.reasonerCaps)) continue;
            out.push_back(both);
            if (++used >= cfg.decorPerLeafCap) {
                note("decoration choices truncated");
                break;
            }
        }
        return out;
    }

    void decoratedRec(const ConceptPtr& c, const std::vector<Disjunction>& decorations,
                      std::vector<ConceptPtr>& out,
                      const std::function<void(const ConceptPtr&)>& sink) {
        (void)out;
        if (c->kind == Kind::Exists) {
            auto arg = c->kids[0];
            if (arg->depth() == 0) {
                for (auto& choice : leafChoices(arg, decorations))
                    sink(Concept::exists(c->name, choice));
            } else {
                decoratedRec(arg, decorations, out, [&](const ConceptPtr& a) {
                    sink(Concept::exists(c->name, a));
                });
            }
            return;
        }
        if (c->kind == Kind::And) {
            std::function<void(std::size_t, std::vector<ConceptPtr>&)> walk =
                [&](std::size_t i, std::vector<ConceptPtr>& acc) {
                    if (i == c->kids.size()) {
                        sink(Concept::conj(std::vector<ConceptPtr>(acc)));
                        return;
                    }
                    decoratedRec(c->kids[i], decorations, out, [&](const ConceptPtr& k) {
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

    // F-universe entry: base concept with optional leaf decorations drawn
    // from the named disjunctions (depth-0 bases may be decorated whole).
    void decoratedVariants(const ConceptPtr& base,
                           const std::vector<Disjunction>& decorations,
                           std::vector<ConceptPtr>& out) {
        if (base->depth() == 0) {
            for (auto& choice : leafChoices(base, decorations)) out.push_back(choice);
            return;
        }
        decoratedRec(base, decorations, out,
                     [&](const ConceptPtr& f) { out.push_back(f); });
    }

    void emitFG(int ell, bool omega, bool generatableOnly, bool namesOnlyF, bool cond1,
                bool cond2) {
        auto sig = src.signature();
        std::vector<std::string> names(sig.conceptNames.begin(), sig.conceptNames.end());
        std::vector<std::string> roleList(sig.roleNames.begin(), sig.roleNames.end());

        // target side: G candidates
        std::vector<ConceptPtr> gs;
        int gDepthCap = omega ? ell : ell - 1; // omega callers pass the bound in ell
        if (gDepthCap < 0) return;
        if (generatableOnly) {
            UniverseCaps uc;
            uc.maxDepth = gDepthCap;
            uc.maxSize = cfg.gSizeCap;
            uc.maxCount = cfg.universeCap;
            auto census = enumerateGeneratable(src, gDepthCap, uc, cfg.reasonerCaps);
            if (census.truncated) note("generatable universe truncated");
            gs = census.representatives;
        } else {
            UniverseCaps uc;
            uc.maxDepth = gDepthCap;
            uc.maxSize = cfg.gSizeCap;
            uc.maxCount = cfg.universeCap;
            Universe u = enumerateConcepts(names, roleList, uc);
            if (u.truncated) note("G universe truncated");
            for (auto& g : u.concepts) {
                if (!alcSatisfiable(src, g, cfg.reasonerCaps)) continue;
                gs.push_back(g);
            }
        }
        if (gs.empty()) return;
        int maxGdepth = 0;
        for (auto& g : gs) maxGdepth = std::max(maxGdepth, g->depth());
        // structurally strongest first (larger concepts subsume more), so the
        // per-(F,r) minimal-G prune keeps only undominated targets
        std::stable_sort(gs.begin(), gs.end(), [](const ConceptPtr& a, const ConceptPtr& b) {
            long long sa = conceptSize(a), sb = conceptSize(b);
            if (sa != sb) return sa > sb;
            return compare(a, b) < 0;
        });

        // source side: F candidates
        std::vector<ConceptPtr> fs;
        if (namesOnlyF) {
            for (auto& n : names) fs.push_back(Concept::named(n));
        } else {
            UniverseCaps uc;
            uc.maxDepth = std::min(omega ? maxGdepth + 1 : ell, maxGdepth + 1);
            uc.maxSize = cfg.fSizeCap;
            uc.maxCount = cfg.universeCap;
            uc.maxConjNames = 2;
            uc.maxConjExists = 2;
            Universe u = enumerateConcepts(names, roleList, uc);
            if (u.truncated) note("F universe truncated");
            std::vector<Disjunction> decorations;
            for (auto& [k, d] : active) decorations.push_back(d);
            for (auto& base : u.concepts) decoratedVariants(base, decorations, fs);
        }

        auto entailsTarget = [&](const ConceptPtr& f, const ConceptPtr& target) {
            try {
                return R->satTypesAvoiding(f, {target}).none();
            } catch (const Reasoner::FastPathMiss&) {
                return alcSubsumes(src, f, target, cfg.reasonerCaps);
            }
        };

        // --- pass A: per (F, role), decide exactly which name-only targets
        // are forced. Pure bitset work; a compound G can only be valid when
        // its name portion is. ---
        std::vector<std::string> nameKeys; // distinct name portions of gs
        std::map<std::string, int> nameKeyIdx;
        std::vector<std::vector<int>> nameIdxLists;
        std::vector<int> gNamePortion(gs.size(), -1);
        auto namePortionOf = [&](const ConceptPtr& g) {
            std::vector<int> idx;
            std::vector<ConceptPtr> parts =
                g->kind == Kind::And ? std::vector<ConceptPtr>(g->kids.begin(), g->kids.end())
                                     : std::vector<ConceptPtr>{g};
            for (auto& p : parts)
                if (p->kind == Kind::Name) idx.push_back(R->closureIndex(p));
            std::sort(idx.begin(), idx.end());
            return idx;
        };
        for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            auto idx = namePortionOf(gs[gi]);
            std::string key;
            for (int i : idx) key += std::to_string(i) + ",";
            auto [it, fresh] = nameKeyIdx.try_emplace(key, static_cast<int>(nameKeys.size()));
            if (fresh) {
                nameKeys.push_back(key);
                nameIdxLists.push_back(idx);
            }
            gNamePortion[gi] = it->second;
        }
        // avoidance column per name portion: types missing some portion name
        std::vector<Bits> portionAvoid;
        for (auto& idx : nameIdxLists) {
            Bits all(R->typeCount(), true);
            for (int i : idx) {
                if (i < 0) { all = Bits(R->typeCount()); break; }
                Bits col = R->typesContaining(R->closure()[i]);
                all &= col;
            }
            Bits avoid(R->typeCount(), true);
            avoid.andNot(all);
            portionAvoid.push_back(std::move(avoid));
        }

        struct FInfo {
            bool generic = false; // fall back to the full check
            Bits st;
            std::vector<ConceptPtr> conjuncts;
            std::vector<std::pair<std::string, Bits>> childSt; // role, ST(arg)
        };
        std::vector<FInfo> finfo(fs.size());
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            FInfo& info = finfo[fi];
            auto& f = fs[fi];
            info.conjuncts =
                f->kind == Kind::And ? std::vector<ConceptPtr>(f->kids.begin(), f->kids.end())
                                     : std::vector<ConceptPtr>{f};
            try {
                info.st = R->satTypes(f);
                for (auto& p : info.conjuncts) {
                    if (p->kind == Kind::Or) { info.generic = true; break; }
                    if (p->kind == Kind::Exists)
                        info.childSt.push_back({p->name, R->satTypes(p->kids[0])});
                }
            } catch (const Reasoner::FastPathMiss&) {
                info.generic = true;
            }
        }

        // forcedNames[fi][role concat key] = bitset over name portions
        auto passA = [&](std::size_t fi, const std::string& role, int portion) -> bool {
            FInfo& info = finfo[fi];
            if (info.generic) return true;
            const Bits& avoid = portionAvoid[portion];
            bool avoidable = false;
            info.st.forEach([&](std::size_t t) {
                if (avoidable) return;
                // forced children on this role must be avoid-realizable
                for (auto& [r2, st2] : info.childSt) {
                    if (r2 != role) continue;
                    Bits succ = R->succOf(t, r2);
                    if (!Bits::anyAnd3(succ, st2, avoid)) return;
                }
                for (int e : R->existClaimsOf(t, role)) {
                    Bits w = R->witnessesFor(t, role, e);
                    if (!w.intersects(avoid)) return;
                }
                avoidable = true;
            });
            return !avoidable; // not avoidable -> target forced
        };

        std::size_t checks = 0;
        bool capped = false;
        for (std::size_t fi = 0; fi < fs.size(); ++fi) {
            if (capped) break;
            auto& f = fs[fi];
            std::vector<ConceptPtr>& conjuncts = finfo[fi].conjuncts;
            bool fSat = true;
            if (bot) {
                if (finfo[fi].generic)
                    fSat = alcSatisfiable(src, f, cfg.reasonerCaps);
                else
                    fSat = finfo[fi].st.any();
            }
            if (!fSat) continue; // unsatisfiable sources flow through the Bottom axioms
            for (auto& role : roleList) {
                if (capped) break;
                std::vector<char> portionOk(nameKeys.size(), 2); // 2 = unknown
                std::vector<ConceptPtr> emittedG;
                for (std::size_t gi = 0; gi < gs.size(); ++gi) {
                    auto& g = gs[gi];
                    if (f->depth() > g->depth() + 1) continue;
                    if (!omega && g->depth() >= ell) continue;
                    int portion = gNamePortion[gi];
                    if (portionOk[portion] == 2)
                        portionOk[portion] = passA(fi, role, portion) ? 1 : 0;
                    if (!portionOk[portion]) continue;
                    if (++checks > cfg.candidateCap) {
                        note("candidate cap reached in F/G enumeration");
                        capped = true;
                        break;
                    }
                    // minimal-G: a stronger already-emitted target covers g
                    bool covered = false;
                    for (auto& g2 : emittedG)
                        if (structuralSubsumes(g2, g)) { covered = true; break; }
                    if (covered) continue;
                    if (cond1) {
                        bool blocked = false;
                        for (auto& tc : conjuncts) {
                            if (tc->kind != Kind::Exists || tc->name != role) continue;
                            if (alcSubsumes(src, tc->kids[0], g, cfg.reasonerCaps)) {
                                blocked = true;
                                break;
                            }
                        }
                        if (blocked) continue;
                    }
                    ConceptPtr target = Concept::exists(role, g);
                    if (!entailsTarget(f, target)) continue;
                    // minimal-F: any one-step structural weakening that still
                    // entails the target dominates this instance (its axiom
                    // fires wherever this one would)
                    bool dominated = false;
                    for (auto& weak : oneStepWeakenings(f)) {
                        if (entailsTarget(weak, target)) { dominated = true; break; }
                    }
                    if (dominated) continue;
                    if (cond2) {
                        Disjunction disF = R->semanticDisjunction(f, false);
                        if (disF.inDisMinus() &&
                            alcSubsumes(src, disF.asConcept(), target, cfg.reasonerCaps))
                            continue;
                    }
                    ConceptPtr lhs = up(f);
                    collectNewX(lhs);
                    emit(lhs, target, generatableOnly ? "line4" : "line5");
                    emittedG.push_back(g);
                }
            }
        }
    }

    void line1() {
        for (auto& ax : src.inclusions()) {
            ConceptPtr rhs = up(dnf(ax.rhs, bot));
            collectNewX(rhs);
            ConceptPtr lhs = ax.lhs;
            if (rhs->kind == Kind::Bot) {
                emit(lhs, Concept::bot(), "line1");
                continue;
            }
            emit(lhs, rhs, "line1");
        }
    }
};

ApproxResult assemble(Emitter& em, const ApproxConfig& cfg, FreshNameRegistry& reg,
                      std::optional<int> effectiveDepth) {
    ApproxResult res;
    // Deterministic order: provenance rank, then canonical text.
    auto rank = [](const std::string& tag) {
        if (tag == "line1") return 0;
        if (tag == "line2") return 1;
        if (tag == "line3") return 2;
        if (tag == "line4") return 3;
        if (tag == "line5") return 4;
        return 5;
    };
    std::stable_sort(em.out.begin(), em.out.end(),
                     [&](const auto& a, const auto& b) {
                         int ra = rank(a.second), rb = rank(b.second);
                         if (ra != rb) return ra < rb;
                         std::string ka = render(a.first.lhs) + "<" + render(a.first.rhs);
                         std::string kb = render(b.first.lhs) + "<" + render(b.first.rhs);
                         return ka < kb;
                     });
    for (auto& [ax, tag] : em.out) {
        res.ontology.add(ax);
        res.provenance.push_back(tag);
    }
    res.nameTable = reg.table();
    res.truncation = em.truncation;
    res.effectiveDepth = effectiveDepth;
    (void)cfg;
    return res;
}

// Candidate scheme of the first figure: everything is named, all six lines
// instantiated over a canonical slice of Dis(O).
ApproxResult candidateFig1(const Ontology& src, const ApproxConfig& cfg,
                           FreshNameRegistry& reg) {
    Emitter em(src, cfg, reg);
    em.bot = false;

    std::vector<Disjunction> slice;
    std::set<std::string> seen;
    auto add = [&](const Disjunction& d) {
        if (d.isBottom()) return;
        if (seen.insert(d.key()).second) slice.push_back(d);
    };
    // units over sub^-
    for (auto& m : em.subMinusSet) add(Disjunction({{m}}));
    // Con-forms of subconcepts
    ConceptSet subs = subconcepts(src);
    std::vector<Disjunction> conForms;
    for (auto& c : subs) {
        Disjunction d = Disjunction::fromConcept(dnf(c, false), false);
        add(d);
        conForms.push_back(d);
    }
    // pairwise disjunctions of units, canonical order, up to the cap
    std::size_t sliceCap = std::min<std::size_t>(cfg.disCap, 64);
    std::vector<Disjunction> units(slice);
    for (std::size_t i = 0; i < units.size() && slice.size() < sliceCap; ++i)
        for (std::size_t j = i + 1; j < units.size() && slice.size() < sliceCap; ++j) {
            std::vector<std::vector<ConceptPtr>> ds;
            for (auto& dj : units[i].disjuncts()) ds.push_back(dj);
            for (auto& dj : units[j].disjuncts()) ds.push_back(dj);
            add(Disjunction(std::move(ds)));
        }
    if (slice.size() > sliceCap) {
        slice.resize(sliceCap);
        em.note("Dis(O) slice truncated at " + std::to_string(sliceCap));
    }

    auto X = [&](const Disjunction& d) {
        return Concept::named(reg.mint('X', d.asConcept()));
    };
    auto taut = [&](const Disjunction& d) {
        return alcSubsumes(src, Concept::top(), d.asConcept(), cfg.reasonerCaps);
    };

    std::vector<ConceptPtr> elSubs;
    for (auto& c : subs)
        if (fragmentLeq(conceptFragment(c), Fragment::EL)) elSubs.push_back(c);

    // line 1: C [= X_C
    for (auto& c : elSubs)
        em.emit(c, X(Disjunction::fromConcept(dnf(c, false), false)), "line1");
    // line 2: X_D1 and C [= X_D2
    for (auto& d1 : slice)
        for (auto& c : elSubs)
            for (auto& d2 : slice) {
                if (taut(d2)) continue;
                if (alcSubsumes(src, Concept::conj({d1.asConcept(), c}), d2.asConcept(),
                                cfg.reasonerCaps))
                    em.emit(Concept::conj({X(d1), c}), X(d2), "line2");
            }
    // line 3: X_D1 and X_D2 [= X_D3
    for (auto& d1 : slice)
        for (auto& d2 : slice)
            for (auto& d3 : slice) {
                if (taut(d3)) continue;
                if (alcSubsumes(src, Concept::conj({d1.asConcept(), d2.asConcept()}),
                                d3.asConcept(), cfg.reasonerCaps))
                    em.emit(Concept::conj({X(d1), X(d2)}), X(d3), "line3");
            }
    // line 4: exists r.X_D1 [= X_D2
    for (auto& role : em.roles)
        for (auto& d1 : slice)
            for (auto& d2 : slice) {
                if (taut(d2)) continue;
                if (alcSubsumes(src, Concept::exists(role, d1.asConcept()), d2.asConcept(),
                                cfg.reasonerCaps))
                    em.emit(Concept::exists(role, X(d1)), X(d2), "line4");
            }
    // line 5: X_D1 [= exists r.X_D2
    for (auto& role : em.roles)
        for (auto& d1 : slice)
            for (auto& d2 : slice)
                if (alcSubsumes(src, d1.asConcept(), Concept::exists(role, d2.asConcept()),
                                cfg.reasonerCaps))
                    em.emit(X(d1), Concept::exists(role, X(d2)), "line5");
    // line 6: X_D1 [= C
    for (auto& d1 : slice)
        for (auto& c : elSubs) {
            if (alcSubsumes(src, Concept::top(), c, cfg.reasonerCaps)) continue;
            if (alcSubsumes(src, d1.asConcept(), c, cfg.reasonerCaps))
                em.emit(X(d1), c, "line6");
        }

    return assemble(em, cfg, reg, std::nullopt);
}

} // namespace

ApproxResult approximate(const Ontology& o, const ApproxConfig& cfg, FreshNameRegistry& reg) {
    auto sig = o.signature();
    reg.reserve(sig.conceptNames);
    reg.reserve(sig.roleNames);

    const bool botScheme = cfg.scheme == Scheme::Fig3 || cfg.scheme == Scheme::Fig4 ||
                           (cfg.scheme == Scheme::Minus &&
                            !fragmentLeq(o.fragment(), Fragment::ELU));

    switch (cfg.scheme) {
        case Scheme::Fig1:
        case Scheme::Fig2:
        case Scheme::Cnf:
        case Scheme::Acyclic:
            if (!fragmentLeq(o.fragment(), Fragment::ELU))
                throw ContractError(std::string(schemeName(cfg.scheme)) +
                                    " requires an ELU ontology, got " +
                                    fragmentName(o.fragment()));
            break;
        case Scheme::Fig3:
        case Scheme::Fig4:
        case Scheme::Minus:
            if (!fragmentLeq(o.fragment(), Fragment::ELUbot))
                throw ContractError(std::string(schemeName(cfg.scheme)) +
                                    " requires an ELUbot ontology, got " +
                                    fragmentName(o.fragment()));
            break;
    }
    if (cfg.scheme == Scheme::Acyclic) {
        auto ac = isAcyclic(o);
        if (!ac.acyclic)
            throw ContractError("acyclic scheme requires an acyclic ontology: " +
                                (ac.shapeViolation.empty() ? "definitorial cycle found"
                                                           : ac.shapeViolation));
    }
    if ((cfg.scheme == Scheme::Fig3 || cfg.scheme == Scheme::Fig4) && !cfg.depth)
        throw UnsupportedModeError(
            "omega-bounded construction is not supported for the ELbot schemes; "
            "request a finite depth");

    Ontology src = eliminateLhsDisjunctions(o, reg);

    if (cfg.scheme == Scheme::Fig1) return candidateFig1(src, cfg, reg);

    std::optional<int> effectiveDepth;
    bool omega = !cfg.depth.has_value();
    int ell = cfg.depth.value_or(0);
    int omegaGBound = 0;
    std::vector<std::string> preNotes;

    if (omega && (cfg.scheme == Scheme::Fig2 || cfg.scheme == Scheme::Cnf ||
                  cfg.scheme == Scheme::Acyclic)) {
        AnalysisCaps ac;
        ac.reasonerCaps = cfg.reasonerCaps;
        auto verdict = finitelyGenerating(o, ac);
        if (!verdict.finite) {
            omega = false;
            ell = cfg.fallbackDepth;
            effectiveDepth = ell;
            preNotes.push_back(
                "not finitely generating; omega run degraded to depth " +
                std::to_string(ell));
        } else {
            omegaGBound = verdict.bound;
        }
    }

    Emitter em(src, cfg, reg);
    em.bot = botScheme;
    for (auto& n : preNotes) em.note(n);

    em.line1();
    em.seedContexts();
    em.saturate();

    switch (cfg.scheme) {
        case Scheme::Minus:
            break;
        case Scheme::Fig2:
        case Scheme::Cnf:
            em.emitFG(omega ? omegaGBound : ell, omega, /*generatableOnly=*/true,
                      /*namesOnlyF=*/false, /*cond1=*/false, /*cond2=*/false);
            break;
        case Scheme::Acyclic:
            em.emitFG(omega ? omegaGBound : ell, omega, /*generatableOnly=*/true,
                      /*namesOnlyF=*/true, /*cond1=*/false, /*cond2=*/false);
            break;
        case Scheme::Fig3:
            em.emitFG(ell, false, /*generatableOnly=*/false, /*namesOnlyF=*/false,
                      /*cond1=*/true, /*cond2=*/false);
            break;
        case Scheme::Fig4:
            em.line4Optimized();
            em.emitFG(ell, false, /*generatableOnly=*/false, /*namesOnlyF=*/false,
                      /*cond1=*/true, /*cond2=*/true);
            break;
        default:
            break;
    }

    ApproxResult res = assemble(em, cfg, reg, effectiveDepth);

    if (cfg.scheme == Scheme::Cnf) {
        Ontology compressed;
        std::vector<std::string> prov;
        for (std::size_t i = 0; i < res.ontology.axioms().size(); ++i) {
            const Axiom& ax = res.ontology.axioms()[i];
            Ontology one;
            one.add(ax);
            Ontology tr = cnfCompress(one, reg);
            for (auto& nax : tr.axioms()) {
                compressed.add(nax);
                prov.push_back(res.provenance[i]);
            }
        }
        res.ontology = compressed;
        res.provenance = prov;
        res.nameTable = reg.table();
    }
    return res;
}

std::string renderApproxResult(const ApproxResult& r) {
    std::string out;
    for (auto& ax : r.ontology.axioms()) {
        out += render(ax.lhs);
        out += " SubClassOf ";
        out += render(ax.rhs);
        out += '\n';
    }
    out += "# name-table\n";
    for (auto& [name, def] : r.nameTable) {
        out += "#   ";
        out += name;
        out += " := ";
        out += def;
        out += '\n';
    }
    out += "# provenance\n";
    for (std::size_t i = 0; i < r.provenance.size(); ++i) {
        out += "#   ";
        out += r.provenance[i];
        out += '\n';
    }
    if (!r.truncation.empty()) {
        out += "# truncation\n";
        for (auto& t : r.truncation) {
            out += "#   ";
            out += t;
            out += '\n';
        }
    }
    return out;
}

std::string approxSidecarJson(const ApproxResult& r) {
    nlohmann::ordered_json j;
    j["axioms"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.ontology.axioms().size(); ++i) {
        const Axiom& ax = r.ontology.axioms()[i];
        j["axioms"].push_back({{"lhs", render(ax.lhs)},
                               {"rhs", render(ax.rhs)},
                               {"provenance", r.provenance[i]}});
    }
    j["name_table"] = r.nameTable;
    j["truncation"] = r.truncation;
    j["complete"] = r.complete();
    if (r.effectiveDepth) j["effective_depth"] = *r.effectiveDepth;
    return j.dump(2);
}

} // namespace dla
