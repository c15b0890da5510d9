#include "dlapprox/chase.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "dlapprox/errors.hpp"
#include "dlapprox/normalize.hpp"
#include "dlapprox/parse.hpp"

namespace dla {

int ExtendedABox::addIndividual(const std::string& name, bool original,
                                ConceptPtr introducedFor) {
    auto it = byName_.find(name);
    if (it != byName_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    byName_.emplace(name, id);
    asserts_.emplace_back();
    succ_.emplace_back();
    pred_.emplace_back();
    meta_.push_back({original, introducedFor, false});
    return id;
}

int ExtendedABox::indexOf(const std::string& name) const {
    auto it = byName_.find(name);
    return it == byName_.end() ? -1 : it->second;
}

bool ExtendedABox::assertConcept(int ind, const ConceptPtr& c) {
    if (c->kind == Kind::Top) return false;
    return asserts_[ind].insert(c).second;
}

bool ExtendedABox::assertRole(const std::string& role, int from, int to) {
    for (auto& [r, t] : succ_[from])
        if (r == role && t == to) return false;
    succ_[from].push_back({role, to});
    pred_[to].push_back({role, from});
    return true;
}

std::size_t ExtendedABox::assertionCount() const {
    std::size_t n = 0;
    for (auto& a : asserts_) n += a.size();
    for (auto& s : succ_) n += s.size();
    return n;
}

std::vector<std::string> ExtendedABox::renderLines() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (auto& c : asserts_[i]) {
            if (c->kind == Kind::Name)
                out.push_back(c->name + "(" + names_[i] + ")");
            else
                out.push_back("{" + render(c) + "}(" + names_[i] + ")");
        }
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (auto& [r, t] : succ_[i])
            out.push_back(r + "(" + names_[i] + "," + names_[t] + ")");
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void buildTree(ExtendedABox& a, int root, const ConceptPtr& c, int& counter) {
    switch (c->kind) {
        case Kind::Top:
            return;
        case Kind::Bot:
        case Kind::Name:
            a.assertConcept(root, c);
            return;
        case Kind::And:
            for (auto& k : c->kids) buildTree(a, root, k, counter);
            return;
        case Kind::Exists: {
            int child = a.addIndividual("a" + std::to_string(++counter), true);
            a.assertRole(c->name, root, child);
            buildTree(a, child, c->kids[0], counter);
            return;
        }
        default:
            throw ContractError("concept_to_abox expects an EL(bot) concept: " + render(c));
    }
}

} // namespace

ExtendedABox ExtendedABox::fromConcept(const ConceptPtr& c) {
    if (!fragmentLeq(conceptFragment(c), Fragment::ELbot))
        throw ContractError("concept_to_abox expects an EL(bot) concept");
    ExtendedABox a;
    int root = a.addIndividual("a0", true);
    int counter = 0;
    buildTree(a, root, c, counter);
    return a;
}

ConceptPtr ExtendedABox::subtreeConcept(int ind) const {
    std::vector<ConceptPtr> parts;
    for (auto& c : asserts_[ind])
        if (c->kind == Kind::Name || c->kind == Kind::Bot) parts.push_back(c);
    for (auto& [r, t] : succ_[ind])
        parts.push_back(Concept::exists(r, subtreeConcept(t)));
    return Concept::conj(std::move(parts));
}

bool entails(const ExtendedABox& a, const ConceptPtr& c, int ind, bool primeMode) {
    switch (c->kind) {
        case Kind::Top:
            return true;
        case Kind::Bot: {
            for (std::size_t i = 0; i < a.size(); ++i)
                for (auto& x : a.assertionsOf(static_cast<int>(i)))
                    if (x->kind == Kind::Bot) return true;
            return false;
        }
        case Kind::Name:
            return a.assertionsOf(ind).count(c) != 0;
        case Kind::And:
            for (auto& k : c->kids)
                if (!entails(a, k, ind, primeMode)) return false;
            return true;
        case Kind::Or: {
            if (a.assertionsOf(ind).count(c)) return true;
            if (primeMode) {
                for (auto& k : c->kids)
                    if (entails(a, k, ind, primeMode)) return true;
            }
            return false;
        }
        case Kind::Exists: {
            for (auto& [r, t] : a.successorsOf(ind))
                if (r == c->name && entails(a, c->kids[0], t, primeMode)) return true;
            return false;
        }
        default:
            throw ContractError("entails expects an ELUbot concept");
    }
}

bool entails(const ExtendedABox& a, const ConceptPtr& c, const std::string& ind,
             bool primeMode) {
    int i = a.indexOf(ind);
    if (i < 0) throw ContractError("unknown individual: " + ind);
    return entails(a, c, i, primeMode);
}

std::string ChaseTrace::renderText() const {
    std::ostringstream os;
    for (auto& s : steps) {
        os << s.id << "\t" << s.rule << "\t";
        for (std::size_t i = 0; i < s.focus.size(); ++i)
            os << (i ? "," : "") << s.focus[i];
        os << "\t";
        if (s.noop && s.added.empty()) os << "(noop)";
        for (std::size_t i = 0; i < s.added.size(); ++i)
            os << (i ? " " : "") << "+" << s.added[i];
        if (!s.trigger.empty()) os << "\t[" << s.trigger << "]";
        os << "\n";
    }
    if (truncated) os << "# truncated\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Standard ELbot chase.

ChaseResult elChase(const Ontology& o, const ExtendedABox& start, std::size_t stepCap) {
    if (!fragmentLeq(o.fragment(), Fragment::ELbot))
        throw ContractError("el_chase expects an ELbot ontology");
    ChaseResult res;
    res.abox = start;
    auto incs = o.inclusions();

    int anonCounter = 0;
    std::deque<std::pair<int, int>> queue; // (axiom, individual)
    std::set<std::pair<int, int>> queued, fired;
    auto enqueue = [&](int ax, int ind) {
        if (fired.count({ax, ind})) return;
        if (queued.insert({ax, ind}).second) queue.push_back({ax, ind});
    };
    for (std::size_t ind = 0; ind < res.abox.size(); ++ind)
        for (std::size_t ax = 0; ax < incs.size(); ++ax)
            enqueue(static_cast<int>(ax), static_cast<int>(ind));

    std::function<void(int, const ConceptPtr&, std::vector<std::string>&)> apply =
        [&](int ind, const ConceptPtr& d, std::vector<std::string>& added) {
            switch (d->kind) {
                case Kind::Top:
                    return;
                case Kind::Bot:
                case Kind::Name:
                    if (res.abox.assertConcept(ind, d)) {
                        added.push_back(render(d) + "(" + res.abox.individuals()[ind] + ")");
                        for (std::size_t ax = 0; ax < incs.size(); ++ax)
                            enqueue(static_cast<int>(ax), ind);
                        // predecessors may now satisfy an LHS
                        for (auto& [r, p] : res.abox.predecessorsOf(ind))
                            for (std::size_t ax = 0; ax < incs.size(); ++ax)
                                enqueue(static_cast<int>(ax), p);
                    }
                    return;
                case Kind::And:
                    for (auto& k : d->kids) apply(ind, k, added);
                    return;
                case Kind::Exists: {
                    int child = res.abox.addIndividual("n" + std::to_string(++anonCounter),
                                                       false, d->kids[0]);
                    res.abox.assertRole(d->name, ind, child);
                    added.push_back(d->name + "(" + res.abox.individuals()[ind] + "," +
                                    res.abox.individuals()[child] + ")");
                    apply(child, d->kids[0], added);
                    for (std::size_t ax = 0; ax < incs.size(); ++ax) {
                        enqueue(static_cast<int>(ax), child);
                        enqueue(static_cast<int>(ax), ind);
                    }
                    return;
                }
                default:
                    throw ContractError("el_chase: non-ELbot right-hand side");
            }
        };

    int stepId = 0;
    while (!queue.empty()) {
        if (res.trace.steps.size() >= stepCap) {
            res.trace.truncated = true;
            break;
        }
        auto [ax, ind] = queue.front();
        queue.pop_front();
        queued.erase({ax, ind});
        const Axiom& a = incs[ax];
        if (!entails(res.abox, a.lhs, ind)) continue; // re-enqueued on later changes
        fired.insert({ax, ind});
        ChaseStep step;
        step.id = ++stepId;
        step.rule = "el";
        step.focus = {res.abox.individuals()[ind]};
        step.trigger = render(a.lhs) + " SubClassOf " + render(a.rhs);
        apply(ind, a.rhs, step.added);
        step.noop = step.added.empty();
        res.trace.steps.push_back(std::move(step));
    }
    return res;
}

// ---------------------------------------------------------------------------
// Special chase (rules 1-7).

namespace {

struct SpecialChase {
    const Ontology& o;
    const SpecialChaseOptions& opts;
    std::shared_ptr<Reasoner> R;
    ConceptSet subMinusSet;
    std::vector<ConceptPtr> subMinusList;
    ChaseResult res;
    std::vector<Axiom> incs;
    int anonCounter = 0;
    int stepId = 0;
    bool capped = false;

    std::deque<std::string> queue;
    std::set<std::string> queued;
    std::set<std::string> fired; // one-shot triggers

    SpecialChase(const Ontology& onto, const SpecialChaseOptions& op)
        : o(onto), opts(op) {
        R = sharedReasoner(o, opts.reasonerCaps);
        subMinusSet = subMinus(o);
        subMinusList.assign(subMinusSet.begin(), subMinusSet.end());
        incs = o.inclusions();
    }

    void enqueue(const std::string& key) {
        if (fired.count(key)) return;
        if (queued.insert(key).second) queue.push_back(key);
    }

    // A disjunction assertion usable as D in Dis^-(O): an Or whose flattened
    // disjuncts are conjunctions over sub^-(O).
    bool isDisMinusShaped(const ConceptPtr& c) {
        if (c->kind != Kind::Or) return false;
        Disjunction d = Disjunction::fromConcept(c, false);
        if (!d.inDisMinus()) return false;
        for (auto& atom : d.atoms())
            if (atom->kind != Kind::Top && !subMinusSet.count(atom)) return false;
        return true;
    }

    // Entailment at an individual depends on its subtree, so any change
    // wakes the whole ancestor chain (the ABox stays a ditree).
    void wake(int ind) {
        wakeLocal(ind);
        for (auto& [r, p] : res.abox.predecessorsOf(ind)) {
            (void)r;
            wake(p);
        }
    }

    void wakeLocal(int ind) {
        for (std::size_t ax = 0; ax < incs.size(); ++ax)
            enqueue("1|" + std::to_string(ax) + "|" + std::to_string(ind));
        for (auto& c : res.abox.assertionsOf(ind)) {
            if (c->kind == Kind::And)
                enqueue("2|" + std::to_string(ind) + "|" + render(c));
            if (c->kind == Kind::Exists)
                enqueue("3|" + std::to_string(ind) + "|" + render(c));
            if (isDisMinusShaped(c)) {
                enqueue("4|" + std::to_string(ind) + "|" + render(c));
                enqueue("6|" + std::to_string(ind));
            }
        }
        for (auto& [r, p] : res.abox.predecessorsOf(ind)) {
            for (auto& c : res.abox.assertionsOf(ind))
                if (isDisMinusShaped(c))
                    enqueue("5|" + std::to_string(p) + "|" + std::to_string(ind) + "|" + r +
                            "|" + render(c));
            enqueue("7|" + std::to_string(p) + "|" + std::to_string(ind) + "|" + r);
        }
        for (auto& [r, t] : res.abox.successorsOf(ind)) {
            for (auto& c : res.abox.assertionsOf(t))
                if (isDisMinusShaped(c))
                    enqueue("5|" + std::to_string(ind) + "|" + std::to_string(t) + "|" + r +
                            "|" + render(c));
            enqueue("7|" + std::to_string(ind) + "|" + std::to_string(t) + "|" + r);
        }
    }

    bool addAssertion(int ind, const ConceptPtr& c, ChaseStep& step) {
        if (!res.abox.assertConcept(ind, c)) return false;
        step.added.push_back("{" + render(c) + "}(" + res.abox.individuals()[ind] + ")");
        wake(ind);
        return true;
    }

    // strongest derivable context at an individual: conjunction of entailed
    // sub^- members
    ConceptPtr strongestContext(int ind) {
        std::vector<ConceptPtr> parts;
        for (auto& m : subMinusList)
            if (m->kind != Kind::Top && entails(res.abox, m, ind)) parts.push_back(m);
        return Concept::conj(std::move(parts));
    }

    void record(ChaseStep step) {
        step.id = ++stepId;
        step.noop = step.added.empty();
        res.trace.steps.push_back(std::move(step));
    }

    void addDisjunctionTargets(int ind, const ConceptPtr& premise, const char* ruleName,
                               const std::string& trigger) {
        // the strongest Dis(O)-consequences of the premise: full and
        // EL-projected semantic disjunctions
        ChaseStep step;
        step.rule = ruleName;
        step.focus = {res.abox.individuals()[ind]};
        step.trigger = trigger;
        Disjunction full = R->semanticDisjunction(premise, false);
        Disjunction el = R->semanticDisjunction(premise, true);
        for (auto* d : {&full, &el}) {
            ConceptPtr c = d->asConcept();
            if (c->kind == Kind::Top) continue;
            addAssertion(ind, c, step);
        }
        record(std::move(step));
    }

    void run(const ConceptPtr& c0) {
        res.abox = ExtendedABox::fromConcept(c0);
        // compound assertions for the tree structure itself are not needed;
        // rule triggers start from the axioms
        for (std::size_t i = 0; i < res.abox.size(); ++i) wake(static_cast<int>(i));

        while (!queue.empty()) {
            if (res.trace.steps.size() >= opts.stepCap) {
                res.trace.truncated = true;
                break;
            }
            std::string key = queue.front();
            queue.pop_front();
            queued.erase(key);
            dispatch(key);
        }
    }

    void dispatch(const std::string& key) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= key.size(); ++i)
            if (i == key.size() || key[i] == '|') {
                parts.push_back(key.substr(start, i - start));
                start = i + 1;
            }
        const std::string& rule = parts[0];

        if (rule == "1") {
            int ax = std::stoi(parts[1]);
            int ind = std::stoi(parts[2]);
            const Axiom& a = incs[ax];
            if (!entails(res.abox, a.lhs, ind)) return;
            std::string fk = "1f|" + parts[1] + "|" + parts[2];
            if (!fired.insert(fk).second) return;
            ChaseStep step;
            step.rule = "1";
            step.focus = {res.abox.individuals()[ind]};
            step.trigger = render(a.lhs) + " SubClassOf " + render(a.rhs);
            ConceptPtr d = dnf(a.rhs, true);
            addAssertion(ind, d, step);
            record(std::move(step));
            return;
        }
        if (rule == "2") {
            int ind = std::stoi(parts[1]);
            ConceptPtr c = parseConcept(parts[2]);
            if (!res.abox.assertionsOf(ind).count(c)) return;
            std::string fk = "2f|" + parts[1] + "|" + parts[2];
            if (!fired.insert(fk).second) return;
            ChaseStep step;
            step.rule = "2";
            step.focus = {res.abox.individuals()[ind]};
            for (auto& k : c->kids) addAssertion(ind, k, step);
            record(std::move(step));
            return;
        }
        if (rule == "3") {
            int ind = std::stoi(parts[1]);
            ConceptPtr c = parseConcept(parts[2]);
            if (!res.abox.assertionsOf(ind).count(c)) return;
            std::string fk = "3f|" + parts[1] + "|" + parts[2];
            if (!fired.insert(fk).second) return;
            ChaseStep step;
            step.rule = "3";
            step.focus = {res.abox.individuals()[ind]};
            int child = res.abox.addIndividual("n" + std::to_string(++anonCounter), false,
                                               c->kids[0]);
            res.abox.assertRole(c->name, ind, child);
            step.added.push_back(c->name + "(" + res.abox.individuals()[ind] + "," +
                                 res.abox.individuals()[child] + ")");
            addAssertion(child, c->kids[0], step);
            wake(child);
            wake(ind);
            record(std::move(step));
            return;
        }
        if (rule == "4") {
            int ind = std::stoi(parts[1]);
            ConceptPtr d1 = parseConcept(parts[2]);
            if (!res.abox.assertionsOf(ind).count(d1)) return;
            // context: strongest entailed sub^- conjunction plus every
            // asserted disjunction (the primed variant additionally sees
            // through disjuncts inside `entails`)
            std::vector<ConceptPtr> ctxs{strongestContext(ind)};
            for (auto& c : res.abox.assertionsOf(ind))
                if (isDisMinusShaped(c) && compare(c, d1) != 0) ctxs.push_back(c);
            for (auto& ctx : ctxs) {
                if (!entails(res.abox, ctx, ind, opts.primeMode)) continue;
                ConceptPtr premise = Concept::conj({d1, ctx});
                std::string fk = "4f|" + parts[1] + "|" + render(premise);
                if (!fired.insert(fk).second) continue;
                addDisjunctionTargets(ind, premise, "4",
                                      render(d1) + " ; " + render(ctx));
            }
            return;
        }
        if (rule == "5") {
            int a = std::stoi(parts[1]);
            int b = std::stoi(parts[2]);
            const std::string& role = parts[3];
            ConceptPtr d1 = parseConcept(parts[4]);
            if (!res.abox.assertionsOf(b).count(d1)) return;
            bool has = false;
            for (auto& [r, t] : res.abox.successorsOf(a))
                if (r == role && t == b) has = true;
            if (!has) return;
            ConceptPtr premise = Concept::exists(role, d1);
            std::string fk = "5f|" + parts[1] + "|" + role + "|" + render(d1);
            if (!fired.insert(fk).second) return;
            addDisjunctionTargets(a, premise, "5", role + "(" + res.abox.individuals()[a] +
                                                       "," + res.abox.individuals()[b] +
                                                       ") ; " + render(d1));
            return;
        }
        if (rule == "6") {
            int ind = std::stoi(parts[1]);
            auto& m = res.abox.meta(ind);
            if (m.original || !m.introducedFor) return;
            bool hasDis = false;
            for (auto& c : res.abox.assertionsOf(ind))
                if (isDisMinusShaped(c)) { hasDis = true; break; }
            if (!hasDis) return;
            std::string fk = "6f|" + parts[1];
            if (!fired.insert(fk).second) return;
            ChaseStep step;
            step.rule = "6";
            step.focus = {res.abox.individuals()[ind]};
            step.trigger = "introduced for " + render(m.introducedFor);
            Disjunction dis = R->semanticDisjunction(m.introducedFor, false);
            ConceptPtr c = dis.asConcept();
            if (c->kind != Kind::Top) addAssertion(ind, c, step);
            res.abox.mark(ind);
            record(std::move(step));
            return;
        }
        if (rule == "7") {
            int a = std::stoi(parts[1]);
            int b = std::stoi(parts[2]);
            const std::string& role = parts[3];
            auto& ma = res.abox.meta(a);
            auto& mb = res.abox.meta(b);
            if (ma.original || !ma.introducedFor) return;
            if (mb.original || !mb.marked || !mb.introducedFor) return;
            Disjunction pulled =
                R->semanticDisjunction(Concept::exists(role, mb.introducedFor), false);
            if (!pulled.inDisMinus()) return; // side condition Dis_O(er.C_b) in Dis^-
            std::string fk = "7f|" + parts[1] + "|" + parts[2] + "|" + role;
            if (!fired.insert(fk).second) return;
            ChaseStep step;
            step.rule = "7";
            step.focus = {res.abox.individuals()[a], res.abox.individuals()[b]};
            step.trigger = "Dis(exists " + role + "." + render(mb.introducedFor) +
                           ") in Dis^-";
            Disjunction dis = R->semanticDisjunction(ma.introducedFor, false);
            ConceptPtr c = dis.asConcept();
            if (c->kind != Kind::Top) addAssertion(a, c, step);
            res.abox.mark(a);
            record(std::move(step));
            return;
        }
    }
};

} // namespace

ChaseResult specialChase(const Ontology& o, const ConceptPtr& c0,
                         const SpecialChaseOptions& opts) {
    if (!fragmentLeq(o.fragment(), Fragment::ELUbot))
        throw ContractError("special chase expects an ELUbot ontology");
    for (auto& ax : o.inclusions())
        if (!fragmentLeq(conceptFragment(ax.lhs), Fragment::ELbot))
            throw ContractError("special chase expects disjunction-free left-hand sides");
    if (!fragmentLeq(conceptFragment(c0), Fragment::EL))
        throw ContractError("special chase starts from an EL concept");
    SpecialChase sc(o, opts);
    sc.run(c0);
    return std::move(sc.res);
}

ExtendedABox parseABoxText(const std::string& text) {
    ExtendedABox a;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        std::string s;
        for (char ch : line) {
            if (ch == '#') break;
            s += ch;
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
        std::size_t i = 0;
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        s = s.substr(i);
        if (s.empty()) continue;
        std::size_t open = s.find('(');
        std::size_t close = s.rfind(')');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw ParseError("expected assertion 'A(a)' or 'r(a,b)'", lineNo, 1);
        std::string head = s.substr(0, open);
        std::string args = s.substr(open + 1, close - open - 1);
        std::size_t comma = args.find(',');
        if (comma == std::string::npos) {
            int ind = a.addIndividual(args, true);
            ConceptPtr c;
            if (head.size() >= 2 && head.front() == '{' && head.back() == '}')
                c = parseConcept(head.substr(1, head.size() - 2));
            else
                c = parseConcept(head);
            a.assertConcept(ind, c);
        } else {
            std::string from = args.substr(0, comma);
            std::string to = args.substr(comma + 1);
            if (head.empty() || !std::isalpha(static_cast<unsigned char>(head[0])))
                throw ParseError("bad role assertion", lineNo, 1);
            int f = a.addIndividual(from, true);
            int t = a.addIndividual(to, true);
            a.assertRole(head, f, t);
        }
    }
    return a;
}

} // namespace dla
