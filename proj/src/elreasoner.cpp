#include "dlapprox/elreasoner.hpp"

#include "dlapprox/errors.hpp"

namespace dla {

ElCompletion::ElCompletion(const Ontology& o) {
    if (!fragmentLeq(o.fragment(), Fragment::ELbot))
        throw ContractError("ElCompletion requires an ELbot ontology, got " +
                            std::string(fragmentName(o.fragment())));
    topId_ = fresh("Top");
    botId_ = fresh("Bottom");
    for (auto& ax : o.inclusions())
        addConjRule({encode(ax.lhs)}, encode(ax.rhs));
}

int ElCompletion::fresh(const std::string& hint) {
    int id = static_cast<int>(nameOf_.size());
    nameOf_.push_back(hint);
    S_.emplace_back();
    outEdges_.emplace_back();
    inEdges_.emplace_back();
    return id;
}

int ElCompletion::probe(const ConceptPtr& c) {
    if (saturated_) throw ContractError("probe after saturation");
    return encode(c);
}

int ElCompletion::encode(const ConceptPtr& c) {
    const std::string key = render(c);
    auto it = encMemo_.find(key);
    if (it != encMemo_.end()) return it->second;
    int id;
    switch (c->kind) {
        case Kind::Top: id = topId_; break;
        case Kind::Bot: id = botId_; break;
        case Kind::Name: id = fresh(c->name); break;
        case Kind::And: {
            id = fresh("[" + key + "]");
            std::vector<int> kids;
            for (auto& k : c->kids) kids.push_back(encode(k));
            addConjRule(kids, id);
            for (int k : kids) addConjRule({id}, k);
            break;
        }
        case Kind::Exists: {
            id = fresh("[" + key + "]");
            int arg = encode(c->kids[0]);
            addExistRule(id, c->name, arg);
            addFillerRule(c->name, arg, id);
            break;
        }
        default:
            throw ContractError("non-ELbot concept in ElCompletion: " + key);
    }
    encMemo_.emplace(key, id);
    return id;
}

void ElCompletion::addConjRule(std::vector<int> premise, int conclusion) {
    int rid = static_cast<int>(conjRules_.size());
    conjRules_.push_back({premise, conclusion});
    for (std::size_t slot = 0; slot < premise.size(); ++slot) {
        int p = premise[slot];
        if (static_cast<std::size_t>(p) >= byPremise_.size()) byPremise_.resize(p + 1);
        byPremise_[p].push_back({rid, static_cast<int>(slot)});
    }
}

void ElCompletion::addExistRule(int lhs, const std::string& role, int filler) {
    if (static_cast<std::size_t>(lhs) >= existRules_.size()) existRules_.resize(lhs + 1);
    existRules_[lhs].push_back({role, filler});
}

void ElCompletion::addFillerRule(const std::string& role, int filler, int conclusion) {
    auto [it, _] = roleIds_.try_emplace(role, static_cast<int>(roleIds_.size()));
    fillerRules_[{it->second, filler}].push_back(conclusion);
}

void ElCompletion::addFact(int x, int a) {
    if (S_[x].insert(a).second) factQueue_.push_back({x, a});
}

void ElCompletion::addEdge(int r, int x, int y) {
    auto& ys = outEdges_[x][r];
    for (int e : ys)
        if (e == y) return;
    ys.push_back(y);
    inEdges_[y][r].push_back(x);
    edgeQueue_.push_back({r, x, y});
}

void ElCompletion::link(int x, const std::string& role, int y) {
    if (saturated_) throw ContractError("link after saturation");
    preLinks_.push_back({x, role, y});
}

void ElCompletion::imply(int x, int y) {
    if (saturated_) throw ContractError("imply after saturation");
    addConjRule({x}, y);
}

void ElCompletion::saturate() {
    if (saturated_) return;
    saturated_ = true;
    byPremise_.resize(nameOf_.size());
    existRules_.resize(nameOf_.size());

    const int n = static_cast<int>(nameOf_.size());
    for (int x = 0; x < n; ++x) {
        addFact(x, x);
        addFact(x, topId_);
    }
    for (auto& [x, role, y] : preLinks_) {
        auto [it, _] = roleIds_.try_emplace(role, static_cast<int>(roleIds_.size()));
        addEdge(it->second, x, y);
    }

    while (!factQueue_.empty() || !edgeQueue_.empty()) {
        if (!factQueue_.empty()) {
            auto [x, a] = factQueue_.back();
            factQueue_.pop_back();
            // conjunction rules with a as premise member
            for (auto& [rid, slot] : byPremise_[a]) {
                (void)slot;
                auto& rule = conjRules_[rid];
                bool all = true;
                for (int p : rule.premise)
                    if (!S_[x].count(p)) { all = false; break; }
                if (all) addFact(x, rule.conclusion);
            }
            // existential rules a [= Er.b
            for (auto& [role, filler] : existRules_[a]) {
                auto it = roleIds_.find(role);
                if (it == roleIds_.end())
                    roleIds_.emplace(role, static_cast<int>(roleIds_.size()));
                addEdge(roleIds_[role], x, filler);
            }
            // filler rules triggered by a appearing at an edge target
            for (auto& [r, xs] : inEdges_[x]) {
                auto frit = fillerRules_.find({r, a});
                if (frit != fillerRules_.end())
                    for (int q : frit->second)
                        for (int src : xs) addFact(src, q);
                if (a == botId_)
                    for (int src : xs) addFact(src, botId_);
            }
        } else {
            auto [r, x, y] = edgeQueue_.back();
            edgeQueue_.pop_back();
            for (int a : std::vector<int>(S_[y].begin(), S_[y].end())) {
                auto fit = fillerRules_.find({r, a});
                if (fit != fillerRules_.end())
                    for (int q : fit->second) addFact(x, q);
            }
            if (S_[y].count(botId_)) addFact(x, botId_);
        }
    }
}

bool ElCompletion::subsumesIds(int c, int d) const {
    if (!saturated_) throw ContractError("query before saturation");
    return S_[c].count(d) || S_[c].count(botId_);
}

bool ElCompletion::inconsistentId(int c) const { return S_[c].count(botId_); }

bool ElCompletion::subsumes(const ConceptPtr& c, const ConceptPtr& d) {
    int ic = probe(c), id = probe(d);
    saturate();
    return subsumesIds(ic, id);
}

bool elSubsumes(const Ontology& o, const ConceptPtr& c, const ConceptPtr& d) {
    if (!fragmentLeq(conceptFragment(c), Fragment::ELbot) ||
        !fragmentLeq(conceptFragment(d), Fragment::ELbot))
        throw ContractError("elSubsumes requires ELbot concepts");
    ElCompletion comp(o);
    return comp.subsumes(c, d);
}

} // namespace dla
