#ifndef DLAPPROX_ELREASONER_HPP
#define DLAPPROX_ELREASONER_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dlapprox/ontology.hpp"

namespace dla {

// Completion-based polynomial subsumption for ELbot ontologies. Concepts are
// structurally named apart (a conservative extension), then the classic
// completion rules saturate subsumer sets S(.) and role links R(r).
// Batch usage: register probes, saturate once, read off any pair.
class ElCompletion {
public:
    explicit ElCompletion(const Ontology& o);

    // Register a probe concept (ELbot). Returns its internal id.
    int probe(const ConceptPtr& c);

    // Pre-saturation role link between two probe nodes (ABox evaluation).
    void link(int x, const std::string& role, int y);

    // Pre-saturation subsumption fact x [= y (ABox concept assertions).
    void imply(int x, int y);

    void saturate();

    bool subsumesIds(int c, int d) const;
    bool inconsistentId(int c) const;

    // One-shot convenience; saturates on demand.
    bool subsumes(const ConceptPtr& c, const ConceptPtr& d);

private:
    int encode(const ConceptPtr& c);
    int fresh(const std::string& hint);
    void addConjRule(std::vector<int> premise, int conclusion);
    void addExistRule(int lhs, const std::string& role, int filler);
    void addFillerRule(const std::string& role, int filler, int conclusion);
    void addFact(int x, int a);
    void addEdge(int r, int x, int y);

    int topId_ = -1;
    int botId_ = -1;
    bool saturated_ = false;

    std::vector<std::string> nameOf_;
    std::unordered_map<std::string, int> encMemo_;

    struct ConjRule { std::vector<int> premise; int conclusion; };
    std::vector<ConjRule> conjRules_;
    std::vector<std::vector<std::pair<int, int>>> byPremise_; // name -> (rule, slot)

    std::map<std::string, int> roleIds_;
    std::vector<std::vector<std::pair<std::string, int>>> existRules_; // lhs -> (role, filler)
    std::map<std::pair<int, int>, std::vector<int>> fillerRules_;      // (role, filler) -> concl

    std::vector<std::unordered_set<int>> S_;
    std::vector<std::map<int, std::vector<int>>> outEdges_; // x -> role -> ys
    std::vector<std::map<int, std::vector<int>>> inEdges_;  // y -> role -> xs
    std::vector<std::pair<int, int>> factQueue_;
    std::vector<std::tuple<int, int, int>> edgeQueue_;
    std::vector<std::tuple<int, std::string, int>> preLinks_;
};

// Polynomial ELbot subsumption (contract: all inputs ELbot).
bool elSubsumes(const Ontology& o, const ConceptPtr& c, const ConceptPtr& d);

} // namespace dla

#endif
