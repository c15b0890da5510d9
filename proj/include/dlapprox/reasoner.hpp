#ifndef DLAPPROX_REASONER_HPP
#define DLAPPROX_REASONER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "dlapprox/bits.hpp"
#include "dlapprox/disjunction.hpp"
#include "dlapprox/ontology.hpp"

namespace dla {

struct ReasonerCaps {
    std::size_t maxAtoms = 20;          // free bits per type (names + restrictions)
    std::size_t maxClosure = 4096;      // closure concepts (<= 2^20 bits total)
    std::size_t maxTypes = 200000;      // enumerated candidate types
    std::size_t subsetBudget = 1u << 22; // satisfiability checks per semantic disjunction
    std::size_t memoCap = 400000;        // probe memo entries before wholesale reset
};

// Type-elimination engine for one ontology. Types are truth assignments over
// the closure (all subconcepts of the ontology plus seeds) that respect the
// boolean structure and every concept inclusion; the successor relation per
// role admits an edge t -> t' iff t' satisfies the value restrictions of t
// and contributes no existential fact t does not claim. After eliminating
// types with unwitnessed restrictions, a concept is satisfiable iff some
// surviving type contains it, and tree models can be read off directly.
class Reasoner {
public:
    Reasoner(const Ontology& o, std::vector<ConceptPtr> seeds = {}, ReasonerCaps caps = {});

    const Ontology& ontology() const { return onto_; }
    std::size_t typeCount() const { return types_.size(); }

    // Exact for any ALC inputs whose subconcepts are in the closure; callers
    // normally go through the static entry points below which reseed when
    // needed.
    bool satisfiableInClosure(const ConceptPtr& c) const;
    bool subsumesInClosure(const ConceptPtr& c, const ConceptPtr& d) const;
    bool inClosure(const ConceptPtr& c) const;

    // Set of surviving types realizable at a point satisfying c while every
    // concept in `avoid` is violated at that point. Fast path for ELUbot
    // probes over the ontology signature; throws FastPathMiss when the probe
    // needs closure extension.
    struct FastPathMiss {};
    struct AvoidSpec;
    Bits satTypes(const ConceptPtr& c);
    Bits satTypesAvoiding(const ConceptPtr& c, const std::vector<ConceptPtr>& avoid);

    // Semantic disjunction Dis_O(c) (elOnly=false) or Dis^EL_O(c)
    // (elOnly=true): one disjunct per subset-minimal realizable exact set of
    // sub^-(O) members at points satisfying c. Empty disjunction iff c is
    // unsatisfiable w.r.t. the ontology.
    Disjunction semanticDisjunction(const ConceptPtr& c, bool elOnly);

    // Every surviving type projected to its sub^-(O) members, minimized.
    const std::vector<ConceptPtr>& subMinusList() const { return subMinusList_; }

    // Types containing closure concept c (helper for analysis/omq).
    Bits typesContaining(const ConceptPtr& c) const;
    // Successor candidates of type t over role r restricted to witnesses of
    // some existential claim of t (used by the finitely-generating check).
    const std::vector<std::string>& roles() const { return roleNames_; }
    Bits witnessSuccessors(std::size_t type, const std::string& role) const;
    bool typeClaims(std::size_t type, const std::string& role) const;
    std::vector<int> existClaimsOf(std::size_t type, const std::string& role) const;
    Bits witnessesFor(std::size_t type, const std::string& role, int claimIdx) const;
    Bits succOf(std::size_t type, const std::string& role) const;
    const Bits& typeBits(std::size_t type) const { return types_[type]; }
    const std::vector<ConceptPtr>& closure() const { return closure_; }
    int closureIndex(const ConceptPtr& c) const;

private:
    void buildClosure(const std::vector<ConceptPtr>& seeds);
    void enumerateTypes();
    void buildEdges();
    void eliminate();

    Bits stAvoidImpl(const ConceptPtr& c, const std::string& dsKey,
                     const std::vector<ConceptPtr>& ds);

    Ontology onto_;
    ReasonerCaps caps_;
    std::vector<Axiom> inclusions_;

    std::vector<ConceptPtr> closure_;         // canonical, children before parents
    std::map<ConceptPtr, int, ConceptLess> closureIdx_;
    std::vector<int> atomIdx_;                // indices of free atoms
    std::vector<std::string> roleNames_;
    std::map<std::string, int> roleIdx_;

    std::vector<Bits> types_;                 // truth bitsets over closure
    std::vector<Bits> cols_;                  // per closure concept: types containing it
    std::vector<std::vector<Bits>> succ_;     // per role: per type: successor type set
    // claims_[r][t] = existential claims (closure indices of the arguments)
    std::vector<std::vector<std::vector<int>>> claims_;
    // antiClaims_[r][t] = arguments D of value restrictions false at t
    std::vector<std::vector<std::vector<int>>> antiClaims_;

    std::vector<int> subMinusIdx_;            // closure indices of sub^- members
    std::vector<bool> subMinusIsEl_;
    std::vector<ConceptPtr> subMinusList_;

    std::unordered_map<std::string, Bits> stMemo_;
    std::unordered_map<std::string, Disjunction> disMemo_;
    mutable std::mutex mu_;
};

// Shared-engine entry points (memoized per ontology). Exact: when a probe
// leaves the ontology closure the engine is rebuilt with the probe seeded.
bool alcSatisfiable(const Ontology& o, const ConceptPtr& c, ReasonerCaps caps = {});
bool alcSubsumes(const Ontology& o, const ConceptPtr& c, const ConceptPtr& d,
                 ReasonerCaps caps = {});
bool alcEquivalent(const Ontology& o, const ConceptPtr& c, const ConceptPtr& d,
                   ReasonerCaps caps = {});
Disjunction semanticDisjunction(const Ontology& o, const ConceptPtr& c, bool elOnly,
                                ReasonerCaps caps = {});

// Shared engine for an ontology (rebuilt when the ontology is not cached).
std::shared_ptr<Reasoner> sharedReasoner(const Ontology& o, ReasonerCaps caps = {});
void clearReasonerCache();

} // namespace dla

#endif
