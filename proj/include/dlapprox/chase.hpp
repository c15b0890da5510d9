#ifndef DLAPPROX_CHASE_HPP
#define DLAPPROX_CHASE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dlapprox/ontology.hpp"
#include "dlapprox/reasoner.hpp"

namespace dla {

// Labeled graph of individuals with (possibly compound) concept assertions.
class ExtendedABox {
public:
    struct Meta {
        bool original = true;
        ConceptPtr introducedFor; // set for anonymous individuals
        bool marked = false;
    };

    int addIndividual(const std::string& name, bool original,
                      ConceptPtr introducedFor = nullptr);
    int indexOf(const std::string& name) const; // -1 when absent
    const std::vector<std::string>& individuals() const { return names_; }
    const Meta& meta(int ind) const { return meta_[ind]; }
    void mark(int ind) { meta_[ind].marked = true; }

    bool assertConcept(int ind, const ConceptPtr& c); // true when new
    bool assertRole(const std::string& role, int from, int to);

    const ConceptSet& assertionsOf(int ind) const { return asserts_[ind]; }
    const std::vector<std::pair<std::string, int>>& successorsOf(int ind) const {
        return succ_[ind];
    }
    const std::vector<std::pair<std::string, int>>& predecessorsOf(int ind) const {
        return pred_[ind];
    }
    std::size_t size() const { return names_.size(); }
    std::size_t assertionCount() const;

    // Plain-ABox restriction: drops compound assertions.
    std::vector<std::string> renderLines() const;

    static ExtendedABox fromConcept(const ConceptPtr& c); // ditree A_C, root a0

    // Ditree view: the subtree at `ind` as an EL concept (names + edges only,
    // compound assertions ignored). Requires the ABox to be a ditree.
    ConceptPtr subtreeConcept(int ind) const;

private:
    std::vector<std::string> names_;
    std::map<std::string, int> byName_;
    std::vector<ConceptSet> asserts_;
    std::vector<std::vector<std::pair<std::string, int>>> succ_;
    std::vector<std::vector<std::pair<std::string, int>>> pred_;
    std::vector<Meta> meta_;
};

// The entailment notion between extended ABoxes and ELUbot concepts:
// conjunctions/existentials decompose structurally, a disjunction is
// entailed only when asserted verbatim, Bottom is entailed everywhere once
// asserted anywhere. primeMode additionally lets a disjunction hold when
// one of its disjuncts does.
bool entails(const ExtendedABox& a, const ConceptPtr& c, int ind, bool primeMode = false);
bool entails(const ExtendedABox& a, const ConceptPtr& c, const std::string& ind,
             bool primeMode = false);

struct ChaseStep {
    int id = 0;
    std::string rule;                 // "el" or "1".."7"
    std::vector<std::string> focus;
    std::vector<std::string> added;   // rendered assertions
    std::string trigger;              // axiom or side condition
    bool noop = false;
};

struct ChaseTrace {
    std::vector<ChaseStep> steps;
    bool truncated = false;
    std::string renderText() const;
};

struct ChaseResult {
    ExtendedABox abox;
    ChaseTrace trace;
};

// Standard oblivious ELbot chase (fair FIFO over (axiom, individual)
// triggers; each fires once). Bottom right-hand sides assert Bottom.
ChaseResult elChase(const Ontology& o, const ExtendedABox& start, std::size_t stepCap = 10000);

struct SpecialChaseOptions {
    std::size_t stepCap = 10000;
    bool primeMode = false; // use the primed entailment in rule 4
    ReasonerCaps reasonerCaps;
};

// The deterministic special chase (rules 1-7) for ELUbot ontologies with
// disjunction-free left-hand sides, started on the ditree of an EL concept.
ChaseResult specialChase(const Ontology& o, const ConceptPtr& c0,
                         const SpecialChaseOptions& opts = {});

// ABox text format: lines "A(a)", "r(a,b)", "{concept}(a)".
ExtendedABox parseABoxText(const std::string& text);

} // namespace dla

#endif
