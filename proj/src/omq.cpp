#include "dlapprox/omq.hpp"

#include <algorithm>
#include <sstream>

#include "dlapprox/approx.hpp"
#include "dlapprox/elreasoner.hpp"
#include "dlapprox/enumerate.hpp"
#include "dlapprox/errors.hpp"
#include "dlapprox/normalize.hpp"
#include "dlapprox/parse.hpp"

namespace dla {

std::set<std::string> ABox::individuals() const {
    std::set<std::string> out;
    for (auto& [c, a] : conceptAsserts) out.insert(a);
    for (auto& [r, a, b] : roleAsserts) {
        out.insert(a);
        out.insert(b);
    }
    return out;
}

Signature ABox::signature() const {
    Signature s;
    for (auto& [c, a] : conceptAsserts) s.conceptNames.insert(c);
    for (auto& [r, a, b] : roleAsserts) s.roleNames.insert(r);
    return s;
}

std::string ABox::renderText() const {
    std::string out;
    for (auto& [c, a] : conceptAsserts) out += c + "(" + a + ")\n";
    for (auto& [r, a, b] : roleAsserts) out += r + "(" + a + "," + b + ")\n";
    return out;
}

ABox parsePlainABox(const std::string& text) {
    ExtendedABox ext = parseABoxText(text);
    ABox out;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        for (auto& c : ext.assertionsOf(static_cast<int>(i))) {
            if (c->kind != Kind::Name)
                throw ContractError("plain ABox permits concept-name assertions only");
            out.conceptAsserts.insert({c->name, ext.individuals()[i]});
        }
        for (auto& [r, t] : ext.successorsOf(static_cast<int>(i)))
            out.roleAsserts.insert({r, ext.individuals()[i], ext.individuals()[t]});
    }
    return out;
}

namespace {

void checkSigma(const OMQ& q, const ABox& a) {
    auto sig = a.signature();
    for (auto& n : sig.conceptNames)
        if (!q.sigma.conceptNames.count(n))
            throw ContractError("assertion outside the ABox signature: " + n);
    for (auto& r : sig.roleNames)
        if (!q.sigma.roleNames.count(r))
            throw ContractError("assertion outside the ABox signature: " + r);
}

std::set<std::string> answersEl(const Ontology& o, const ABox& a, const ConceptPtr& query) {
    ElCompletion comp(o);
    std::map<std::string, int> indId;
    for (auto& ind : a.individuals())
        indId[ind] = comp.probe(Concept::named("@ind:" + ind));
    for (auto& [c, ind] : a.conceptAsserts)
        comp.imply(indId[ind], comp.probe(Concept::named(c)));
    for (auto& [r, x, y] : a.roleAsserts) comp.link(indId[x], r, indId[y]);
    int q = comp.probe(query);
    comp.saturate();
    std::set<std::string> out;
    bool inconsistent = false;
    for (auto& [ind, id] : indId)
        if (comp.inconsistentId(id)) inconsistent = true;
    for (auto& [ind, id] : indId)
        if (inconsistent || comp.subsumesIds(id, q)) out.insert(ind);
    return out;
}

} // namespace

std::set<std::string> certainAnswers(const OMQ& q, const ABox& a, ReasonerCaps caps) {
    checkSigma(q, a);
    if (!fragmentLeq(conceptFragment(q.query), Fragment::EL))
        throw ContractError("queries are atomic or EL concepts");
    if (a.individuals().empty()) return {};
    if (fragmentLeq(q.ontology.fragment(), Fragment::ELbot))
        return answersEl(q.ontology, a, q.query);

    // Type-assignment evaluation for the disjunctive fragments.
    std::vector<ConceptPtr> seeds{q.query};
    for (auto& [c, ind] : a.conceptAsserts) seeds.push_back(Concept::named(c));
    Reasoner R(q.ontology, seeds, caps);

    std::vector<std::string> inds(a.individuals().begin(), a.individuals().end());
    std::map<std::string, int> indIdx;
    for (std::size_t i = 0; i < inds.size(); ++i) indIdx[inds[i]] = static_cast<int>(i);

    // initial domains
    std::vector<Bits> dom(inds.size(), Bits(R.typeCount(), true));
    for (auto& [c, ind] : a.conceptAsserts)
        dom[indIdx[ind]] &= R.typesContaining(Concept::named(c));

    std::vector<std::tuple<int, std::string, int>> edges;
    for (auto& [r, x, y] : a.roleAsserts) edges.push_back({indIdx[x], r, indIdx[y]});

    auto propagate = [&](std::vector<Bits>& d) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& [x, r, y] : edges) {
                Bits nx(R.typeCount());
                d[x].forEach([&](std::size_t t) {
                    Bits w = R.succOf(t, r);
                    w &= d[y];
                    if (w.any()) nx.set(t);
                });
                if (!(nx == d[x])) { d[x] = nx; changed = true; }
                Bits ny(R.typeCount());
                d[y].forEach([&](std::size_t t2) {
                    bool ok = false;
                    d[x].forEach([&](std::size_t t) {
                        if (!ok && R.succOf(t, r).test(t2)) ok = true;
                    });
                    if (ok) ny.set(t2);
                });
                if (!(ny == d[y])) { d[y] = ny; changed = true; }
            }
        }
    };

    std::function<bool(std::size_t, std::vector<int>&, const std::vector<Bits>&)> assign =
        [&](std::size_t i, std::vector<int>& tau, const std::vector<Bits>& d) -> bool {
        if (i == inds.size()) return true;
        bool found = false;
        d[i].forEach([&](std::size_t t) {
            if (found) return;
            // consistency with already-assigned neighbours
            for (auto& [x, r, y] : edges) {
                if (static_cast<std::size_t>(x) == i && static_cast<std::size_t>(y) < i)
                    if (!R.succOf(t, r).test(tau[y])) return;
                if (static_cast<std::size_t>(y) == i && static_cast<std::size_t>(x) < i)
                    if (!R.succOf(tau[x], r).test(t)) return;
                if (static_cast<std::size_t>(x) == i && static_cast<std::size_t>(y) == i)
                    if (!R.succOf(t, r).test(t)) return;
            }
            tau[i] = static_cast<int>(t);
            if (assign(i + 1, tau, d)) found = true;
        });
        return found;
    };

    auto satisfiableWith = [&](std::optional<std::pair<int, ConceptPtr>> avoidAt) -> bool {
        std::vector<Bits> d = dom;
        if (avoidAt) {
            Bits col = R.typesContaining(avoidAt->second);
            d[avoidAt->first].andNot(col);
        }
        propagate(d);
        for (auto& b : d)
            if (b.none()) return false;
        std::vector<int> tau(inds.size(), -1);
        return assign(0, tau, d);
    };

    std::set<std::string> out;
    if (!satisfiableWith(std::nullopt)) {
        // inconsistent data: every individual is an answer
        for (auto& ind : inds) out.insert(ind);
        return out;
    }
    for (std::size_t i = 0; i < inds.size(); ++i)
        if (!satisfiableWith(std::make_pair(static_cast<int>(i), q.query)))
            out.insert(inds[i]);
    return out;
}

ABox unfold(const ABox& a, const std::string& ind, int depthCap) {
    ABox out;
    struct Node { std::string word; std::string orig; int depth; };
    std::vector<Node> frontier{{ind, ind, 0}};
    auto copyAsserts = [&](const Node& n) {
        for (auto& [c, x] : a.conceptAsserts)
            if (x == n.orig) out.conceptAsserts.insert({c, n.word});
    };
    while (!frontier.empty()) {
        Node n = frontier.back();
        frontier.pop_back();
        copyAsserts(n);
        if (n.depth >= depthCap) continue;
        for (auto& [r, x, y] : a.roleAsserts) {
            if (x != n.orig) continue;
            Node child{n.word + "." + r + "." + y, y, n.depth + 1};
            out.roleAsserts.insert({r, n.word, child.word});
            frontier.push_back(child);
        }
    }
    return out;
}

std::vector<ABox> enumerateSigmaABoxes(const Signature& sigma, const OmqBudgets& budgets) {
    std::vector<std::string> inds;
    for (int i = 0; i < budgets.individuals; ++i)
        inds.push_back(std::string(1, static_cast<char>('a' + i)));
    struct Assertion { bool isRole; std::string p, x, y; };
    std::vector<Assertion> pool;
    for (auto& c : sigma.conceptNames)
        for (auto& x : inds) pool.push_back({false, c, x, ""});
    for (auto& r : sigma.roleNames)
        for (auto& x : inds)
            for (auto& y : inds) pool.push_back({true, r, x, y});

    std::vector<ABox> out;
    std::vector<int> sel;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (out.size() >= budgets.maxAboxes) return;
        if (!sel.empty()) {
            ABox a;
            for (int s : sel) {
                auto& as = pool[s];
                if (as.isRole)
                    a.roleAsserts.insert({as.p, as.x, as.y});
                else
                    a.conceptAsserts.insert({as.p, as.x});
            }
            out.push_back(std::move(a));
        }
        if (static_cast<int>(sel.size()) >= budgets.aboxSize) return;
        for (std::size_t j = i; j < pool.size(); ++j) {
            sel.push_back(static_cast<int>(j));
            rec(j + 1);
            sel.pop_back();
        }
    };
    rec(0);
    return out;
}

namespace {

std::vector<ConceptPtr> enumerateQueries(const Signature& sigma, bool elq,
                                         const OmqBudgets& budgets) {
    std::vector<ConceptPtr> out;
    if (!elq) {
        for (auto& n : sigma.conceptNames) out.push_back(Concept::named(n));
        return out;
    }
    UniverseCaps uc;
    uc.maxDepth = budgets.queryDepth;
    uc.maxSize = budgets.querySize;
    uc.maxCount = budgets.maxQueries;
    Universe u = enumerateConcepts(
        {sigma.conceptNames.begin(), sigma.conceptNames.end()},
        {sigma.roleNames.begin(), sigma.roleNames.end()}, uc);
    for (auto& c : u.concepts)
        if (c->kind != Kind::Top) out.push_back(c);
    return out;
}

} // namespace

ApproxQueryReport checkQueryApproximation(const Ontology& oS, const Ontology& oT, bool elq,
                                          const Signature& sigma,
                                          const std::vector<Ontology>& competitors,
                                          const OmqBudgets& budgets) {
    ApproxQueryReport rep;
    rep.notes.push_back(
        "Condition 2 tested against supplied competitors only (bounded refutation "
        "search; the definition quantifies over all ELbot ontologies)");
    auto aboxes = enumerateSigmaABoxes(sigma, budgets);
    auto queries = enumerateQueries(sigma, elq, budgets);

    OMQ qs{oS, sigma, nullptr};
    OMQ qt{oT, sigma, nullptr};

    for (auto& a : aboxes) {
        ++rep.aboxesChecked;
        for (auto& q : queries) {
            ++rep.pairsChecked;
            qt.query = q;
            auto ansT = certainAnswers(qt, a, budgets.reasonerCaps);
            if (ansT.empty()) continue;
            qs.query = q;
            auto ansS = certainAnswers(qs, a, budgets.reasonerCaps);
            for (auto& ind : ansT)
                if (!ansS.count(ind)) {
                    rep.violationFound = true;
                    rep.condition = "1";
                    rep.abox = a.renderText();
                    rep.query = render(q);
                    rep.individual = ind;
                    return rep;
                }
        }
    }

    for (auto& comp : competitors) {
        // premise: comp-answers contained in oS-answers everywhere sampled
        bool premise = true;
        for (auto& a : aboxes) {
            if (!premise) break;
            for (auto& q : queries) {
                OMQ qc{comp, sigma, q};
                auto ansC = certainAnswers(qc, a, budgets.reasonerCaps);
                if (ansC.empty()) continue;
                qs.query = q;
                auto ansS = certainAnswers(qs, a, budgets.reasonerCaps);
                for (auto& ind : ansC)
                    if (!ansS.count(ind)) { premise = false; break; }
                if (!premise) break;
            }
        }
        if (!premise) continue;
        for (auto& a : aboxes)
            for (auto& q : queries) {
                OMQ qc{comp, sigma, q};
                auto ansC = certainAnswers(qc, a, budgets.reasonerCaps);
                if (ansC.empty()) continue;
                qt.query = q;
                auto ansT = certainAnswers(qt, a, budgets.reasonerCaps);
                for (auto& ind : ansC)
                    if (!ansT.count(ind)) {
                        rep.violationFound = true;
                        rep.condition = "2";
                        rep.abox = a.renderText();
                        rep.query = render(q);
                        rep.individual = ind;
                        return rep;
                    }
            }
    }
    return rep;
}

RewritabilityVerdict aqRewritabilityProbe(const Ontology& o, const Signature& sigma,
                                          const std::string& queryName,
                                          const OmqBudgets& budgets) {
    auto sig = o.signature();
    if (!sig.conceptNames.count(queryName))
        throw ContractError("query name not in the ontology signature: " + queryName);

    FreshNameRegistry reg;
    Ontology reduced = fragmentLeq(o.fragment(), Fragment::ELUbot) ? o : alcToEluBot(o, reg);
    ApproxConfig cfg;
    cfg.scheme = Scheme::Minus;
    cfg.reasonerCaps = budgets.reasonerCaps;
    ApproxResult minus = approximate(reduced, cfg, reg);

    RewritabilityVerdict v;
    v.minusOntology = render(minus.ontology);

    ConceptPtr q = Concept::named(queryName);
    OMQ qs{o, sigma, q};
    OMQ qm{minus.ontology, sigma, q};
    for (auto& a : enumerateSigmaABoxes(sigma, budgets)) {
        ++v.aboxesChecked;
        auto ansS = certainAnswers(qs, a, budgets.reasonerCaps);
        auto ansM = certainAnswers(qm, a, budgets.reasonerCaps);
        if (ansS != ansM) {
            v.counterexample = true;
            v.abox = a.renderText();
            for (auto& ind : ansS)
                if (!ansM.count(ind)) { v.individual = ind; break; }
            if (v.individual.empty() && !ansM.empty()) v.individual = *ansM.begin();
            return v;
        }
    }
    return v;
}

} // namespace dla
